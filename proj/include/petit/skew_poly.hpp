#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "petit/field_tower.hpp"

namespace petit {

/// Polynomial in K[t;sigma] with the twist t*a = sigma(a)*t.
///
/// Coefficients are stored constant term first with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector and degree() is nullopt
/// (the -infinity sentinel).
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(const GaloisExtension& ext) : ext_(ext) {}

  static SkewPoly zero(const GaloisExtension& ext) { return SkewPoly(ext); }
  static SkewPoly one(const GaloisExtension& ext);
  static SkewPoly t_power(const GaloisExtension& ext, int k);
  static SkewPoly constant(const FieldElement& a);
  static SkewPoly from_coeffs(const GaloisExtension& ext, std::vector<FieldElement> coeffs);

  const GaloisExtension& extension() const { return ext_; }

  std::optional<int> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;

  /// Coefficient of t^i (zero beyond the degree).
  FieldElement coeff(int i) const;
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  /// Left-scaled to leading coefficient one. S_f is unchanged by this.
  SkewPoly monic() const;

  SkewPoly operator-() const;
  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator*(const FieldElement& a, const SkewPoly& f);
  friend bool operator==(const SkewPoly& a, const SkewPoly& b);
  friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

  /// g = q*f + r with deg r < deg f; the pair is unique.
  static std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& g, const SkewPoly& f);
  /// g = f*q + r with deg r < deg f.
  static std::pair<SkewPoly, SkewPoly> left_divmod(const SkewPoly& g, const SkewPoly& f);

  /// No factorization into factors of positive degree. Finite backend:
  /// exhaustive search over monic right factors. Quadratic backend: degree 2
  /// only, via the right-root criterion.
  bool is_irreducible() const;

  /// Coefficient criterion for R*f being two-sided: every nonzero a_i lies in
  /// F and m = i mod n.
  bool is_invariant() const;

  /// Definitional cross-check on the finite backend: f*u has remainder 0 mod
  /// f for u ranging over a prime-field basis of K together with t.
  bool is_invariant_oracle() const;

  std::string to_string() const;

 private:
  void trim();
  GaloisExtension ext_;
  std::vector<FieldElement> coeffs_;
};

/// All monic degree-m polynomials over a finite extension in canonical order
/// (ascending coefficient codes, constant term least significant).
struct FamilyOptions {
  bool monomial_only = false;     ///< restrict to t^m - a
  bool non_invariant_only = false;
  uint64_t size_bound = 1u << 20;
};
std::vector<SkewPoly> monic_family(const GaloisExtension& ext, int m,
                                   const FamilyOptions& opts = {});

}  // namespace petit
