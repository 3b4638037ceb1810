#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "petit/rational.hpp"

namespace petit {

enum class Backend { finite, quadratic };
enum class BaseField { rationals, gaussian_rationals };

namespace detail {
struct ExtensionRep;
}

class GaloisExtension;

/// Element of a Galois extension K with distinguished automorphism sigma.
///
/// Finite backend: residue class in GF(p)[x]/(modulus), stored as the integer
/// code with base-p digits equal to the coordinates in the power basis of g.
/// Quadratic backend: u + v*sqrt(b) with u, v in the base field.
class FieldElement {
 public:
  FieldElement() = default;

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(int64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Integer code of a finite-backend element.
  uint32_t code() const;
  /// Parts of a quadratic-backend element x = u + v*sqrt(b).
  const Gaussian& quad_u() const;
  const Gaussian& quad_v() const;

  /// GF(p) digits (finite backend), constant coordinate first.
  std::vector<int64_t> prime_coords() const;

  GaloisExtension extension() const;

  std::string to_string() const;

 private:
  friend class GaloisExtension;
  friend bool canonical_less(const FieldElement& a, const FieldElement& b);
  friend struct detail::ExtensionRep;

  struct QuadVal {
    Gaussian u, v;
  };
  std::shared_ptr<const detail::ExtensionRep> rep_;
  uint32_t code_ = 0;
  std::optional<QuadVal> quad_;
};

/// Deterministic total order on elements of one extension.
bool canonical_less(const FieldElement& a, const FieldElement& b);

struct RootOfUnity {
  FieldElement value;
  bool primitive;
};

/// Galois extension K/F with cyclic group generated by sigma of order n.
///
/// Finite backend: K = GF(p^(r*n)) over F = GF(p^r), sigma(x) = x^(p^r);
/// K is modeled as GF(p)[x]/(modulus) with the value-smallest monic
/// irreducible modulus, so element naming is reproducible.
/// Quadratic backend: K = F(sqrt(b)) with F = Q or Q(i), sigma the
/// conjugation sqrt(b) -> -sqrt(b), n = 2.
class GaloisExtension {
 public:
  GaloisExtension() = default;

  static GaloisExtension make_finite_extension(int64_t p, int r, int n);
  static GaloisExtension make_quadratic_extension(BaseField base, const Gaussian& b);

  bool valid() const { return rep_ != nullptr; }
  Backend backend() const;
  bool is_finite() const { return backend() == Backend::finite; }

  // finite backend descriptors
  int64_t p() const;
  int r() const;
  uint32_t size() const;           ///< |K| = p^(r*n)
  uint32_t subfield_size() const;  ///< |F| = p^r
  int prime_degree() const;        ///< r*n = [K : GF(p)]

  // quadratic backend descriptors
  BaseField base_field() const;
  const Gaussian& quad_b() const;

  int sigma_order() const;  ///< n

  // element construction
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(int64_t v) const;
  FieldElement from_code(uint32_t code) const;  ///< finite backend
  FieldElement from_prime_coords(const std::vector<int64_t>& digits) const;
  FieldElement make_quad(const Gaussian& u, const Gaussian& v) const;
  FieldElement from_base(const Gaussian& u) const;
  FieldElement sqrt_b() const;
  /// Finite: class of x (printed as g). Quadratic: sqrt(b). Generates K over
  /// the prime field / base, so sigma^j = id may be tested on it.
  FieldElement generator() const;

  // operations
  FieldElement sigma_pow(int j, const FieldElement& x) const;
  FieldElement norm(const FieldElement& x) const;
  std::vector<FieldElement> kernel_of_norm() const;
  std::vector<RootOfUnity> roots_of_unity_in_F(int64_t s) const;
  FieldElement solve_hilbert90(const FieldElement& k) const;
  bool in_fixed_field(const FieldElement& x, int j = 1) const;

  /// Prime-field basis of F = Fix(sigma) inside K, deterministic order.
  std::vector<FieldElement> fixed_field_basis() const;
  /// Basis of K over F: finite {1, g, ..., g^(n-1)}, quadratic {1, sqrt(b)}.
  std::vector<FieldElement> basis_over_F() const;
  /// Multiplicative order (finite backend, x != 0).
  uint64_t multiplicative_order(const FieldElement& x) const;

  /// Number of prime-field (or rational) coordinates per element.
  int coords_per_element() const;

  /// Structural equality: same backend and defining parameters.
  friend bool operator==(const GaloisExtension& a, const GaloisExtension& b);
  friend bool operator!=(const GaloisExtension& a, const GaloisExtension& b) {
    return !(a == b);
  }

 private:
  friend class FieldElement;
  explicit GaloisExtension(std::shared_ptr<const detail::ExtensionRep> rep)
      : rep_(std::move(rep)) {}
  std::shared_ptr<const detail::ExtensionRep> rep_;
};

}  // namespace petit
