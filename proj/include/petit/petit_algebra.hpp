#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "petit/skew_poly.hpp"

namespace petit {

/// Element of S_f: coefficients of 1, t, ..., t^(m-1), always of length m.
struct AlgebraElement {
  std::vector<FieldElement> coeffs;

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (size_t i = 0; i < a.coeffs.size(); ++i)
      if (!(a.coeffs[i] == b.coeffs[i])) return false;
    return true;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }
};

/// F-subspace of S_f given by an F-basis.
struct Subspace {
  std::vector<AlgebraElement> basis;
  size_t dim() const { return basis.size(); }
};

/// The unital nonassociative algebra S_f on {g : deg g < m} with
/// multiplication x*y = xy mod_r f. Constructed from any f of degree m >= 2
/// (normalized to monic); sigma = id is rejected.
class PetitAlgebra {
 public:
  PetitAlgebra(const GaloisExtension& ext, const SkewPoly& f);

  const GaloisExtension& extension() const { return ext_; }
  const SkewPoly& f() const { return f_; }
  int m() const { return m_; }
  int dim_over_F() const { return m_ * ext_.sigma_order(); }
  /// Dimension over the prime field (finite) or over Q (quadratic).
  int prime_dim() const { return m_ * ext_.coords_per_element(); }

  // elements
  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement t() const;
  AlgebraElement embed(const FieldElement& a) const;
  AlgebraElement from_poly(const SkewPoly& g) const;  ///< reduces mod_r f
  SkewPoly to_poly(const AlgebraElement& x) const;

  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement neg(const AlgebraElement& x) const;
  AlgebraElement scalar_mul(const FieldElement& a, const AlgebraElement& x) const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  /// [x,y,z] = (xy)z - x(yz)
  AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y,
                            const AlgebraElement& z) const;

  /// Deterministic basis over the prime field (finite) or Q (quadratic).
  std::vector<AlgebraElement> prime_basis() const;

  // finite enumeration
  uint64_t element_count() const;
  AlgebraElement element_at(uint64_t idx) const;

  // structure
  Subspace nucleus_left() const;
  Subspace nucleus_middle() const;
  Subspace nucleus_right() const;
  /// Right nucleus from the membership condition f*g in R*f.
  Subspace nucleus_right_eigen() const;
  Subspace center() const;
  /// Basis of F_0 = {a in K : a commutes with S_f} as a subspace of K.
  /// When the constant coefficient of f is nonzero, F_0 = F is re-verified.
  std::vector<FieldElement> f0_basis() const;
  Subspace image_of_K() const;

  bool is_associative() const;
  bool powers_of_t_associative() const;
  /// Every nonzero left multiplication has full rank (finite backend).
  bool is_division() const;

  // subspace utilities
  bool subspace_equal(const Subspace& a, const Subspace& b) const;
  bool subspace_contains(const Subspace& s, const AlgebraElement& x) const;

  friend bool operator==(const PetitAlgebra& a, const PetitAlgebra& b) {
    return a.ext_ == b.ext_ && a.f_ == b.f_;
  }
  friend bool operator!=(const PetitAlgebra& a, const PetitAlgebra& b) {
    return !(a == b);
  }

 private:
  void check_element(const AlgebraElement& x) const;
  GaloisExtension ext_;
  SkewPoly f_;
  int m_;
};

/// Deterministic order on elements of one algebra (coefficient-wise).
bool canonical_less(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace petit
