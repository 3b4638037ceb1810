#include "petit/skew_poly.hpp"

#include <sstream>

#include "petit/error.hpp"

namespace petit {

namespace {

void check_same_ext(const SkewPoly& a, const SkewPoly& b) {
  if (a.extension() != b.extension())
    throw InputError("polynomials belong to different extensions");
}

}  // namespace

SkewPoly SkewPoly::one(const GaloisExtension& ext) {
  return constant(ext.one());
}

SkewPoly SkewPoly::t_power(const GaloisExtension& ext, int k) {
  if (k < 0) throw InputError("negative power of t");
  std::vector<FieldElement> c(static_cast<size_t>(k) + 1, ext.zero());
  c.back() = ext.one();
  return from_coeffs(ext, std::move(c));
}

SkewPoly SkewPoly::constant(const FieldElement& a) {
  return from_coeffs(a.extension(), {a});
}

SkewPoly SkewPoly::from_coeffs(const GaloisExtension& ext, std::vector<FieldElement> coeffs) {
  SkewPoly f(ext);
  f.coeffs_ = std::move(coeffs);
  f.trim();
  return f;
}

void SkewPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool SkewPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back().is_one();
}

FieldElement SkewPoly::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return ext_.zero();
  return coeffs_[static_cast<size_t>(i)];
}

SkewPoly SkewPoly::monic() const {
  if (is_zero()) throw InputError("zero polynomial cannot be made monic");
  if (is_monic()) return *this;
  return coeffs_.back().inverse() * *this;
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly out(ext_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
  return out;
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
  check_same_ext(a, b);
  SkewPoly out(a.ext_);
  size_t nsz = std::max(a.coeffs_.size(), b.coeffs_.size());
  out.coeffs_.reserve(nsz);
  for (size_t i = 0; i < nsz; ++i)
    out.coeffs_.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
  out.trim();
  return out;
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
  check_same_ext(a, b);
  const GaloisExtension& E = a.ext_;
  if (a.is_zero() || b.is_zero()) return SkewPoly::zero(E);
  std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, E.zero());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      // (a_i t^i)(b_j t^j) = a_i sigma^i(b_j) t^(i+j)
      c[i + j] = c[i + j] + a.coeffs_[i] * E.sigma_pow(static_cast<int>(i), b.coeffs_[j]);
    }
  }
  return SkewPoly::from_coeffs(E, std::move(c));
}

SkewPoly operator*(const FieldElement& a, const SkewPoly& f) {
  SkewPoly out(f.ext_);
  out.coeffs_.reserve(f.coeffs_.size());
  for (const auto& c : f.coeffs_) out.coeffs_.push_back(a * c);
  out.trim();
  return out;
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
  check_same_ext(a, b);
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

std::pair<SkewPoly, SkewPoly> SkewPoly::right_divmod(const SkewPoly& g, const SkewPoly& f) {
  check_same_ext(g, f);
  if (f.is_zero()) throw InputError("division by the zero polynomial");
  const GaloisExtension& E = g.ext_;
  int df = *f.degree();
  SkewPoly q = SkewPoly::zero(E), r = g;
  FieldElement lead = f.coeffs_.back();
  while (!r.is_zero() && *r.degree() >= df) {
    int shift = *r.degree() - df;
    // c t^shift * lead t^df must cancel the leading term of r
    FieldElement c = r.coeffs_.back() / E.sigma_pow(shift, lead);
    SkewPoly term = c * SkewPoly::t_power(E, shift);
    q = q + term;
    r = r - term * f;
  }
  return {q, r};
}

std::pair<SkewPoly, SkewPoly> SkewPoly::left_divmod(const SkewPoly& g, const SkewPoly& f) {
  check_same_ext(g, f);
  if (f.is_zero()) throw InputError("division by the zero polynomial");
  const GaloisExtension& E = g.ext_;
  int df = *f.degree();
  SkewPoly q = SkewPoly::zero(E), r = g;
  FieldElement lead = f.coeffs_.back();
  while (!r.is_zero() && *r.degree() >= df) {
    int shift = *r.degree() - df;
    // lead t^df * c t^shift = lead sigma^df(c) t^deg(r)
    FieldElement c = E.sigma_pow(-df, r.coeffs_.back() / lead);
    SkewPoly term = c * SkewPoly::t_power(E, shift);
    q = q + term;
    r = r - f * term;
  }
  return {q, r};
}

namespace {

// Right-root test for monic degree-2 polynomials over the quadratic backend.
// A right root x + y*sqrt(b) satisfies a linear condition on the sqrt(b)
// component and a conic on the base component; decidable by exact square
// tests except when f = t^2 - a with a in F (the invariant case).
bool quad_deg2_has_right_root(const SkewPoly& f) {
  const GaloisExtension& E = f.extension();
  bool base_rat = E.base_field() == BaseField::rationals;
  Gaussian b = E.quad_b();
  Gaussian a1u = f.coeff(1).quad_u(), a1v = f.coeff(1).quad_v();
  Gaussian a0u = f.coeff(0).quad_u(), a0v = f.coeff(0).quad_v();

  auto sqrt_in_base = [&](const Gaussian& z) -> std::optional<Gaussian> {
    if (base_rat) {
      if (!z.is_rational()) internal_error("non-rational value over rational base");
      auto s = z.re.sqrt_exact();
      if (!s) return std::nullopt;
      return Gaussian(*s);
    }
    return z.sqrt_exact();
  };
  // A y^2 + B y + C = 0 solvable over the base field?
  auto solvable = [&](const Gaussian& A, const Gaussian& B, const Gaussian& C) {
    if (A.is_zero()) return !B.is_zero() || C.is_zero();
    Gaussian disc = B * B - Gaussian(Rational(4)) * A * C;
    return sqrt_in_base(disc).has_value();
  };

  if (!a1v.is_zero()) {
    // x = alpha*y + beta from the sqrt(b) component
    Gaussian alpha = -(a1u / a1v), beta = -(a0v / a1v);
    Gaussian A = alpha * alpha - b;
    Gaussian B = Gaussian(Rational(2)) * alpha * beta + a1u * alpha + a1v * b;
    Gaussian C = beta * beta + a1u * beta + a0u;
    return solvable(A, B, C);
  }
  if (!a1u.is_zero()) {
    Gaussian y = -(a0v / a1u);
    // x^2 + a1u*x + (a1v*b*y - b*y^2 + a0u) with a1v = 0
    return solvable(Gaussian(Rational(1)), a1u, a0u - b * y * y);
  }
  if (!a0v.is_zero()) return false;  // constant term outside F: no root
  throw UnsupportedError(
      "irreducibility of t^2 - a with a in F reduces to a norm equation and is "
      "not decided on the quadratic backend (the polynomial is invariant)");
}

}  // namespace

bool SkewPoly::is_irreducible() const {
  auto deg = degree();
  if (!deg || *deg < 1) throw InputError("irreducibility requires degree >= 1");
  if (*deg == 1) return true;
  if (ext_.backend() == Backend::quadratic) {
    if (*deg > 2)
      throw UnsupportedError("irreducibility beyond degree 2 is not decided on the "
                             "quadratic backend");
    return !quad_deg2_has_right_root(monic());
  }
  // Exhaustive search for a monic right factor of each degree 1..deg-1.
  uint64_t Q = ext_.size();
  for (int d = 1; d < *deg; ++d) {
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
      count *= Q;
      if (count > (1u << 20))
        throw UnsupportedError("right-factor search space exceeds the desk-scale bound");
    }
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FieldElement> hc;
      hc.reserve(static_cast<size_t>(d) + 1);
      uint64_t v = idx;
      for (int i = 0; i < d; ++i) {
        hc.push_back(ext_.from_code(static_cast<uint32_t>(v % Q)));
        v /= Q;
      }
      hc.push_back(ext_.one());
      SkewPoly h = from_coeffs(ext_, std::move(hc));
      if (right_divmod(*this, h).second.is_zero()) return false;
    }
  }
  return true;
}

bool SkewPoly::is_invariant() const {
  auto deg = degree();
  if (!deg || *deg < 2 || !is_monic())
    throw InputError("invariance test requires a monic polynomial of degree >= 2");
  int m = *deg, n = ext_.sigma_order();
  for (int i = 0; i < m; ++i) {
    FieldElement a = coeff(i);
    if (a.is_zero()) continue;
    if (!ext_.in_fixed_field(a, 1)) return false;
    if ((m - i) % n != 0) return false;  // sigma^m = sigma^i as maps
  }
  return true;
}

bool SkewPoly::is_invariant_oracle() const {
  if (!ext_.is_finite())
    throw UnsupportedError("is_invariant_oracle() requires the finite backend");
  auto deg = degree();
  if (!deg || *deg < 2 || !is_monic())
    throw InputError("invariance test requires a monic polynomial of degree >= 2");
  // R*f is two-sided iff f*u lies in R*f for u in a generating set of R.
  std::vector<SkewPoly> gens;
  uint32_t basis_code = 1;
  for (int i = 0; i < ext_.prime_degree(); ++i) {
    gens.push_back(constant(ext_.from_code(basis_code)));
    basis_code *= static_cast<uint32_t>(ext_.p());
  }
  gens.push_back(t_power(ext_, 1));
  for (const auto& u : gens)
    if (!right_divmod(*this * u, *this).second.is_zero()) return false;
  return true;
}

std::string SkewPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = *degree(); i >= 0; --i) {
    FieldElement c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << "(" << c.to_string() << ")";
      continue;
    }
    if (!c.is_one()) os << "(" << c.to_string() << ")*";
    os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<SkewPoly> monic_family(const GaloisExtension& ext, int m,
                                   const FamilyOptions& opts) {
  if (!ext.is_finite()) throw UnsupportedError("family enumeration requires the finite backend");
  if (m < 2) throw InputError("degree must be at least 2");
  uint64_t Q = ext.size();
  std::vector<SkewPoly> out;
  if (opts.monomial_only) {
    for (uint64_t a = 0; a < Q; ++a) {
      std::vector<FieldElement> c(static_cast<size_t>(m) + 1, ext.zero());
      c[0] = -ext.from_code(static_cast<uint32_t>(a));
      c[static_cast<size_t>(m)] = ext.one();
      SkewPoly f = SkewPoly::from_coeffs(ext, std::move(c));
      if (opts.non_invariant_only && f.is_invariant()) continue;
      out.push_back(std::move(f));
    }
    return out;
  }
  uint64_t count = 1;
  for (int i = 0; i < m; ++i) {
    count *= Q;
    if (count > opts.size_bound)
      throw UnsupportedError("family size exceeds the desk-scale bound");
  }
  for (uint64_t idx = 0; idx < count; ++idx) {
    std::vector<FieldElement> c;
    c.reserve(static_cast<size_t>(m) + 1);
    uint64_t v = idx;
    for (int i = 0; i < m; ++i) {
      c.push_back(ext.from_code(static_cast<uint32_t>(v % Q)));
      v /= Q;
    }
    c.push_back(ext.one());
    SkewPoly f = SkewPoly::from_coeffs(ext, std::move(c));
    if (opts.non_invariant_only && f.is_invariant()) continue;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace petit
