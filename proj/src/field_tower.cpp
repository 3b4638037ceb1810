#include "petit/field_tower.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "petit/error.hpp"
#include "petit/linalg.hpp"

namespace petit {

namespace detail {

namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int64_t> factor_distinct(uint64_t v) {
  std::vector<int64_t> primes;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      primes.push_back(static_cast<int64_t>(d));
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) primes.push_back(static_cast<int64_t>(v));
  return primes;
}

// dense GF(p)[x] helpers used only while constructing the modulus
using PPoly = std::vector<int64_t>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  ptrim(c);
  return c;
}

PPoly pmod(PPoly a, const PPoly& f, int64_t p) {
  ptrim(a);
  FpOps F{p};
  while (a.size() >= f.size()) {
    int64_t factor = F.div(a.back(), f.back());
    size_t shift = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(factor, f[i]));
    ptrim(a);
  }
  return a;
}

bool poly_irreducible(const PPoly& f, int64_t p) {
  size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (size_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= static_cast<uint64_t>(p);
    for (uint64_t tail = 0; tail < count; ++tail) {
      PPoly h(d + 1, 0);
      uint64_t v = tail;
      for (size_t i = 0; i < d; ++i) {
        h[i] = static_cast<int64_t>(v % p);
        v /= p;
      }
      h[d] = 1;
      if (pmod(f, h, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

struct ExtensionRep : std::enable_shared_from_this<ExtensionRep> {
  Backend backend;

  // finite
  int64_t p = 0;
  int r = 0, n = 1;
  int d = 0;        // r*n
  uint32_t Q = 0;   // p^d
  uint32_t q = 0;   // p^r
  std::vector<int64_t> modulus;  // monic, degree d
  std::vector<uint32_t> exp_tab; // exp_tab[k] = gen^k, k < Q-1
  std::vector<uint32_t> log_tab; // log_tab[code], code != 0
  std::vector<uint32_t> frob;    // frob[code] = code^q

  // quadratic
  BaseField base = BaseField::rationals;
  Gaussian b;

  // --- finite element primitives -------------------------------------
  uint32_t fadd(uint32_t a, uint32_t bcode) const {
    uint32_t out = 0, mult = 1;
    for (int i = 0; i < d; ++i) {
      int64_t da = (a / mult) % p, db = (bcode / mult) % p;
      out += static_cast<uint32_t>((da + db) % p) * mult;
      mult *= static_cast<uint32_t>(p);
    }
    return out;
  }
  uint32_t fneg(uint32_t a) const {
    uint32_t out = 0, mult = 1;
    for (int i = 0; i < d; ++i) {
      int64_t da = (a / mult) % p;
      out += static_cast<uint32_t>((p - da) % p) * mult;
      mult *= static_cast<uint32_t>(p);
    }
    return out;
  }
  uint32_t fmul(uint32_t a, uint32_t bcode) const {
    if (a == 0 || bcode == 0) return 0;
    uint64_t s = static_cast<uint64_t>(log_tab[a]) + log_tab[bcode];
    return exp_tab[s % (Q - 1)];
  }
  uint32_t finv(uint32_t a) const {
    if (a == 0) throw InputError("division by zero");
    return exp_tab[(Q - 1 - log_tab[a]) % (Q - 1)];
  }
  uint32_t fpow(uint32_t a, int64_t e) const {
    if (a == 0) {
      if (e > 0) return 0;
      if (e == 0) return 1;
      throw InputError("division by zero");
    }
    int64_t ord = Q - 1;
    int64_t em = ((e % ord) + ord) % ord;
    return exp_tab[(static_cast<uint64_t>(log_tab[a]) * em) % (Q - 1)];
  }
  uint32_t fsigma(uint32_t a) const { return frob[a]; }
  uint32_t fsigma_pow(uint32_t a, int j) const {
    int jm = ((j % n) + n) % n;
    for (int i = 0; i < jm; ++i) a = frob[a];
    return a;
  }
  uint32_t fnorm(uint32_t a) const {
    if (a == 0) return 0;
    uint64_t e = 0, qp = 1;
    for (int l = 0; l < n; ++l) {
      e = (e + qp) % (Q - 1);
      qp = (qp * q) % (Q - 1);
    }
    return exp_tab[(static_cast<uint64_t>(log_tab[a]) * e) % (Q - 1)];
  }

  FieldElement make_fin(uint32_t code) const {
    FieldElement x;
    x.rep_ = shared_from_this();
    x.code_ = code;
    return x;
  }
  FieldElement make_q(const Gaussian& u, const Gaussian& v) const {
    FieldElement x;
    x.rep_ = shared_from_this();
    x.quad_ = FieldElement::QuadVal{u, v};
    return x;
  }

  bool same_as(const ExtensionRep& o) const {
    if (backend != o.backend) return false;
    if (backend == Backend::finite) return p == o.p && r == o.r && n == o.n;
    return base == o.base && b == o.b;
  }

  static const ExtensionRep& of(const FieldElement& x) {
    if (!x.rep_) throw InputError("uninitialized field element");
    return *x.rep_;
  }
  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (a.rep_ == b.rep_) return;
    if (!of(a).same_as(of(b)))
      throw InputError("elements belong to different extensions");
  }
};

namespace {
inline const ExtensionRep& rep_of(const FieldElement& x) { return ExtensionRep::of(x); }
inline void check_same(const FieldElement& a, const FieldElement& b) {
  ExtensionRep::check_same(a, b);
}
}  // namespace
}  // namespace detail

using detail::ExtensionRep;

// --------------------------------------------------------------------------
// FieldElement

bool FieldElement::is_zero() const {
  const auto& R = detail::rep_of(*this);
  if (R.backend == Backend::finite) return code_ == 0;
  return quad_->u.is_zero() && quad_->v.is_zero();
}

bool FieldElement::is_one() const {
  const auto& R = detail::rep_of(*this);
  if (R.backend == Backend::finite) return code_ == 1;
  return quad_->u.is_one() && quad_->v.is_zero();
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  detail::check_same(a, b);
  const auto& R = detail::rep_of(a);
  if (R.backend == Backend::finite) return R.make_fin(R.fadd(a.code_, b.code_));
  return R.make_q(a.quad_->u + b.quad_->u, a.quad_->v + b.quad_->v);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a + (-b);
}

FieldElement FieldElement::operator-() const {
  const auto& R = detail::rep_of(*this);
  if (R.backend == Backend::finite) return R.make_fin(R.fneg(code_));
  return R.make_q(-quad_->u, -quad_->v);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  detail::check_same(a, b);
  const auto& R = detail::rep_of(a);
  if (R.backend == Backend::finite) return R.make_fin(R.fmul(a.code_, b.code_));
  const Gaussian &u1 = a.quad_->u, &v1 = a.quad_->v, &u2 = b.quad_->u, &v2 = b.quad_->v;
  return R.make_q(u1 * u2 + v1 * v2 * R.b, u1 * v2 + v1 * u2);
}

FieldElement FieldElement::inverse() const {
  const auto& R = detail::rep_of(*this);
  if (R.backend == Backend::finite) return R.make_fin(R.finv(code_));
  const Gaussian &u = quad_->u, &v = quad_->v;
  Gaussian nrm = u * u - R.b * v * v;
  if (nrm.is_zero()) throw InputError("division by zero");
  Gaussian ninv = nrm.inverse();
  return R.make_q(u * ninv, -v * ninv);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inverse();
}

FieldElement FieldElement::pow(int64_t e) const {
  const auto& R = detail::rep_of(*this);
  if (R.backend == Backend::finite) return R.make_fin(R.fpow(code_, e));
  if (e == INT64_MIN) throw InputError("exponent out of range");
  FieldElement base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  FieldElement acc = R.make_q(Gaussian(Rational(1)), Gaussian());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = (e > 1) ? base * base : base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  detail::check_same(a, b);
  const auto& R = detail::rep_of(a);
  if (R.backend == Backend::finite) return a.code_ == b.code_;
  return a.quad_->u == b.quad_->u && a.quad_->v == b.quad_->v;
}

uint32_t FieldElement::code() const {
  if (detail::rep_of(*this).backend != Backend::finite)
    throw InputError("code() requires the finite backend");
  return code_;
}

const Gaussian& FieldElement::quad_u() const {
  if (detail::rep_of(*this).backend != Backend::quadratic)
    throw InputError("quad_u() requires the quadratic backend");
  return quad_->u;
}

const Gaussian& FieldElement::quad_v() const {
  if (detail::rep_of(*this).backend != Backend::quadratic)
    throw InputError("quad_v() requires the quadratic backend");
  return quad_->v;
}

std::vector<int64_t> FieldElement::prime_coords() const {
  const auto& R = detail::rep_of(*this);
  if (R.backend != Backend::finite)
    throw InputError("prime_coords() requires the finite backend");
  std::vector<int64_t> out(R.d);
  uint32_t v = code_;
  for (int i = 0; i < R.d; ++i) {
    out[i] = v % R.p;
    v /= static_cast<uint32_t>(R.p);
  }
  return out;
}

GaloisExtension FieldElement::extension() const {
  return GaloisExtension(rep_);
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  detail::check_same(a, b);
  if (detail::rep_of(a).backend == Backend::finite) return a.code_ < b.code_;
  if (a.quad_->u != b.quad_->u) return canonical_less(a.quad_->u, b.quad_->u);
  return canonical_less(a.quad_->v, b.quad_->v);
}

std::string FieldElement::to_string() const {
  const auto& R = detail::rep_of(*this);
  if (R.backend == Backend::finite) {
    if (code_ == 0) return "0";
    auto digits = prime_coords();
    std::ostringstream os;
    bool first = true;
    for (int i = R.d - 1; i >= 0; --i) {
      if (digits[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0) {
        os << digits[i];
        continue;
      }
      if (digits[i] != 1) os << digits[i] << "*";
      os << "g";
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }
  const Gaussian &u = quad_->u, &v = quad_->v;
  if (v.is_zero()) return u.to_string();
  std::string vpart;
  if (v.is_one())
    vpart = "sqrt(b)";
  else if (v == Gaussian(Rational(-1)))
    vpart = "-sqrt(b)";
  else if (v.is_rational())
    vpart = v.re.to_string() + "*sqrt(b)";
  else
    vpart = "(" + v.to_string() + ")*sqrt(b)";
  if (u.is_zero()) return vpart;
  if (vpart[0] == '-') return u.to_string() + vpart;
  return u.to_string() + "+" + vpart;
}

// --------------------------------------------------------------------------
// GaloisExtension

GaloisExtension GaloisExtension::make_finite_extension(int64_t p, int r, int n) {
  if (!detail::is_prime(p)) throw InputError("p must be prime");
  if (r < 1 || n < 1) throw InputError("r and n must be positive");
  long double sz = 1;
  for (int i = 0; i < r * n; ++i) sz *= static_cast<long double>(p);
  if (sz > static_cast<long double>(1u << 20))
    throw InputError("extension too large: p^(r*n) exceeds the 2^20 desk-scale bound");

  auto rep = std::make_shared<ExtensionRep>();
  rep->backend = Backend::finite;
  rep->p = p;
  rep->r = r;
  rep->n = n;
  rep->d = r * n;
  uint32_t Q = 1, q = 1;
  for (int i = 0; i < rep->d; ++i) Q *= static_cast<uint32_t>(p);
  for (int i = 0; i < r; ++i) q *= static_cast<uint32_t>(p);
  rep->Q = Q;
  rep->q = q;

  // value-smallest monic irreducible modulus of degree d over GF(p)
  {
    uint64_t count = 1;
    for (int i = 0; i < rep->d; ++i) count *= static_cast<uint64_t>(p);
    bool found = false;
    for (uint64_t tail = 0; tail < count && !found; ++tail) {
      detail::PPoly f(rep->d + 1, 0);
      uint64_t v = tail;
      for (int i = 0; i < rep->d; ++i) {
        f[i] = static_cast<int64_t>(v % p);
        v /= static_cast<uint64_t>(p);
      }
      f[rep->d] = 1;
      if (detail::poly_irreducible(f, p)) {
        rep->modulus = f;
        found = true;
      }
    }
    if (!found) internal_error("no irreducible modulus found");
  }

  // raw multiplication (used only to bootstrap the tables)
  auto decode = [&](uint32_t c) {
    detail::PPoly a(rep->d);
    for (int i = 0; i < rep->d; ++i) {
      a[i] = c % p;
      c /= static_cast<uint32_t>(p);
    }
    detail::ptrim(a);
    return a;
  };
  auto encode = [&](const detail::PPoly& a) {
    uint32_t c = 0, mult = 1;
    for (size_t i = 0; i < a.size(); ++i) {
      c += static_cast<uint32_t>(a[i]) * mult;
      mult *= static_cast<uint32_t>(p);
    }
    return c;
  };
  auto mul_raw = [&](uint32_t a, uint32_t b) {
    return encode(detail::pmod(detail::pmul(decode(a), decode(b), p), rep->modulus, p));
  };
  auto pow_raw = [&](uint32_t a, uint64_t e) {
    uint32_t acc = 1;
    while (e > 0) {
      if (e & 1) acc = mul_raw(acc, a);
      a = mul_raw(a, a);
      e >>= 1;
    }
    return acc;
  };

  // smallest multiplicative generator of K^x
  uint32_t gen = 0;
  {
    auto primes = detail::factor_distinct(Q - 1);
    for (uint32_t cand = 2; cand < Q && gen == 0; ++cand) {
      bool ok = true;
      for (int64_t pr : primes)
        if (pow_raw(cand, (Q - 1) / static_cast<uint64_t>(pr)) == 1) {
          ok = false;
          break;
        }
      if (ok) gen = cand;
    }
    if (gen == 0 && Q == 2) gen = 1;
    if (gen == 0) internal_error("no multiplicative generator found");
  }

  rep->exp_tab.resize(Q - 1);
  rep->log_tab.assign(Q, 0);
  uint32_t acc = 1;
  for (uint32_t k = 0; k + 1 < Q; ++k) {
    rep->exp_tab[k] = acc;
    rep->log_tab[acc] = k;
    acc = mul_raw(acc, gen);
  }
  if (acc != 1) internal_error("generator order mismatch");

  rep->frob.resize(Q);
  rep->frob[0] = 0;
  for (uint32_t c = 1; c < Q; ++c)
    rep->frob[c] = rep->exp_tab[(static_cast<uint64_t>(rep->log_tab[c]) * q) % (Q - 1)];

  return GaloisExtension(rep);
}

GaloisExtension GaloisExtension::make_quadratic_extension(BaseField base, const Gaussian& b) {
  if (base == BaseField::rationals && !b.is_rational())
    throw InputError("b must be rational for the rationals base");
  if (b.is_zero()) throw InputError("b must be nonzero");
  bool square = (base == BaseField::rationals) ? b.re.is_square()
                                               : b.sqrt_exact().has_value();
  if (square)
    throw InputError("b is a square in the base field: the extension is degenerate");
  auto rep = std::make_shared<ExtensionRep>();
  rep->backend = Backend::quadratic;
  rep->n = 2;
  rep->base = base;
  rep->b = b;
  return GaloisExtension(rep);
}

Backend GaloisExtension::backend() const {
  if (!rep_) throw InputError("uninitialized extension");
  return rep_->backend;
}

int64_t GaloisExtension::p() const { return rep_->p; }
int GaloisExtension::r() const { return rep_->r; }
uint32_t GaloisExtension::size() const { return rep_->Q; }
uint32_t GaloisExtension::subfield_size() const { return rep_->q; }
int GaloisExtension::prime_degree() const { return rep_->d; }
BaseField GaloisExtension::base_field() const { return rep_->base; }
const Gaussian& GaloisExtension::quad_b() const { return rep_->b; }
int GaloisExtension::sigma_order() const { return rep_->n; }

FieldElement GaloisExtension::zero() const {
  if (is_finite()) return rep_->make_fin(0);
  return rep_->make_q(Gaussian(), Gaussian());
}

FieldElement GaloisExtension::one() const { return from_integer(1); }

FieldElement GaloisExtension::from_integer(int64_t v) const {
  if (is_finite()) {
    int64_t m = ((v % rep_->p) + rep_->p) % rep_->p;
    return rep_->make_fin(static_cast<uint32_t>(m));
  }
  return rep_->make_q(Gaussian(Rational(v)), Gaussian());
}

FieldElement GaloisExtension::from_code(uint32_t code) const {
  if (!is_finite()) throw InputError("from_code() requires the finite backend");
  if (code >= rep_->Q) throw InputError("element code out of range");
  return rep_->make_fin(code);
}

FieldElement GaloisExtension::from_prime_coords(const std::vector<int64_t>& digits) const {
  if (!is_finite()) throw InputError("from_prime_coords() requires the finite backend");
  if (static_cast<int>(digits.size()) != rep_->d)
    throw InputError("wrong number of coordinates");
  uint32_t code = 0, mult = 1;
  for (int i = 0; i < rep_->d; ++i) {
    int64_t di = ((digits[i] % rep_->p) + rep_->p) % rep_->p;
    code += static_cast<uint32_t>(di) * mult;
    mult *= static_cast<uint32_t>(rep_->p);
  }
  return rep_->make_fin(code);
}

FieldElement GaloisExtension::make_quad(const Gaussian& u, const Gaussian& v) const {
  if (is_finite()) throw InputError("make_quad() requires the quadratic backend");
  if (rep_->base == BaseField::rationals && (!u.is_rational() || !v.is_rational()))
    throw InputError("coordinates must be rational for the rationals base");
  return rep_->make_q(u, v);
}

FieldElement GaloisExtension::from_base(const Gaussian& u) const {
  return make_quad(u, Gaussian());
}

FieldElement GaloisExtension::sqrt_b() const {
  if (is_finite()) throw InputError("sqrt_b() requires the quadratic backend");
  return rep_->make_q(Gaussian(), Gaussian(Rational(1)));
}

FieldElement GaloisExtension::generator() const {
  if (is_finite()) {
    if (rep_->d == 1) return one();
    return rep_->make_fin(static_cast<uint32_t>(rep_->p));
  }
  return sqrt_b();
}

FieldElement GaloisExtension::sigma_pow(int j, const FieldElement& x) const {
  detail::check_same(x, zero());
  if (is_finite()) return rep_->make_fin(rep_->fsigma_pow(x.code_, j));
  int jm = ((j % 2) + 2) % 2;
  if (jm == 0) return x;
  return rep_->make_q(x.quad_->u, -x.quad_->v);
}

FieldElement GaloisExtension::norm(const FieldElement& x) const {
  detail::check_same(x, zero());
  if (is_finite()) return rep_->make_fin(rep_->fnorm(x.code_));
  const Gaussian &u = x.quad_->u, &v = x.quad_->v;
  return rep_->make_q(u * u - rep_->b * v * v, Gaussian());
}

std::vector<FieldElement> GaloisExtension::kernel_of_norm() const {
  if (!is_finite())
    throw UnsupportedError("kernel_of_norm() is infinite on the quadratic backend");
  std::vector<FieldElement> out;
  for (uint32_t c = 1; c < rep_->Q; ++c)
    if (rep_->fnorm(c) == 1) out.push_back(rep_->make_fin(c));
  uint64_t expected = (rep_->Q - 1ull) / (rep_->q - 1ull);
  if (out.size() != expected)
    internal_error("kernel of norm has unexpected size (norm not surjective?)");
  return out;
}

std::vector<RootOfUnity> GaloisExtension::roots_of_unity_in_F(int64_t s) const {
  if (s < 1) throw InputError("s must be positive");
  std::vector<RootOfUnity> out;
  if (is_finite()) {
    for (uint32_t c = 1; c < rep_->Q; ++c) {
      if (rep_->fsigma(c) != c) continue;
      if (rep_->fpow(c, s) != 1) continue;
      bool prim = multiplicative_order(rep_->make_fin(c)) == static_cast<uint64_t>(s);
      out.push_back({rep_->make_fin(c), prim});
    }
    return out;
  }
  // the only roots of unity in Q are +-1, in Q(i) additionally +-i
  std::vector<std::pair<Gaussian, int>> candidates = {
      {Gaussian(Rational(1)), 1}, {Gaussian(Rational(-1)), 2}};
  if (rep_->base == BaseField::gaussian_rationals) {
    candidates.push_back({Gaussian(Rational(0), Rational(1)), 4});
    candidates.push_back({Gaussian(Rational(0), Rational(-1)), 4});
  }
  for (const auto& [val, ord] : candidates)
    if (s % ord == 0) out.push_back({rep_->make_q(val, Gaussian()), ord == s});
  std::sort(out.begin(), out.end(), [](const RootOfUnity& a, const RootOfUnity& b) {
    return canonical_less(a.value, b.value);
  });
  return out;
}

FieldElement GaloisExtension::solve_hilbert90(const FieldElement& k) const {
  detail::check_same(k, zero());
  if (!(norm(k) == one())) throw InputError("solve_hilbert90 requires N(k) = 1");
  if (is_finite()) {
    for (uint32_t c = 1; c < rep_->Q; ++c)
      if (rep_->fsigma(c) == rep_->fmul(c, k.code_)) return rep_->make_fin(c);
    internal_error("Hilbert 90 witness not found");
  }
  FieldElement c = k.is_one() ? one() : one() + sigma_pow(1, k);
  if (c.is_zero()) c = sqrt_b();  // k = -1
  if (!(sigma_pow(1, c) == c * k)) internal_error("Hilbert 90 witness failed verification");
  return c;
}

bool GaloisExtension::in_fixed_field(const FieldElement& x, int j) const {
  detail::check_same(x, zero());
  return sigma_pow(j, x) == x;
}

std::vector<FieldElement> GaloisExtension::fixed_field_basis() const {
  std::vector<FieldElement> out;
  if (is_finite()) {
    FpOps F{rep_->p};
    RowsOf<FpOps> eqs;
    // sigma(x) - x = 0, unknown x in GF(p) digits
    for (int row = 0; row < rep_->d; ++row) eqs.emplace_back(rep_->d, 0);
    for (int i = 0; i < rep_->d; ++i) {
      uint32_t basis_code = 1;
      for (int k = 0; k < i; ++k) basis_code *= static_cast<uint32_t>(rep_->p);
      auto image = rep_->make_fin(rep_->fsigma(basis_code)).prime_coords();
      for (int row = 0; row < rep_->d; ++row) {
        int64_t delta = (row == i) ? 1 : 0;
        eqs[row][i] = F.sub(image[row], delta);
      }
    }
    for (auto& vec : kernel_basis(F, eqs, rep_->d))
      out.push_back(from_prime_coords(vec));
    return out;
  }
  out.push_back(one());
  if (rep_->base == BaseField::gaussian_rationals)
    out.push_back(from_base(Gaussian(Rational(0), Rational(1))));
  return out;
}

std::vector<FieldElement> GaloisExtension::basis_over_F() const {
  std::vector<FieldElement> out;
  if (is_finite()) {
    FieldElement g = generator(), acc = one();
    for (int j = 0; j < rep_->n; ++j) {
      out.push_back(acc);
      acc = acc * g;
    }
    return out;
  }
  out.push_back(one());
  out.push_back(sqrt_b());
  return out;
}

uint64_t GaloisExtension::multiplicative_order(const FieldElement& x) const {
  if (!is_finite())
    throw UnsupportedError("multiplicative_order() requires the finite backend");
  if (x.code_ == 0) throw InputError("zero has no multiplicative order");
  uint64_t e = rep_->log_tab[x.code_];
  return (rep_->Q - 1ull) / std::gcd<uint64_t>(rep_->Q - 1ull, e);
}

int GaloisExtension::coords_per_element() const {
  if (is_finite()) return rep_->d;
  return rep_->base == BaseField::rationals ? 2 : 4;
}

bool operator==(const GaloisExtension& a, const GaloisExtension& b) {
  if (a.rep_ == b.rep_) return true;
  if (!a.rep_ || !b.rep_) return false;
  return a.rep_->same_as(*b.rep_);
}

}  // namespace petit
