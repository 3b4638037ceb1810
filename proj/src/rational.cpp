#include "petit/rational.hpp"

#include <cmath>
#include <sstream>

namespace petit {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw InputError("rational overflow: value exceeds 64-bit exact range");
  return static_cast<int64_t>(v);
}

std::optional<int64_t> isqrt_exact(int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(v)));
  for (int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
    if (c * c == v) return c;
  return std::nullopt;
}

}  // namespace

Rational Rational::make_reduced(i128 n, i128 d) {
  if (d == 0) throw InputError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

Rational::Rational(int64_t n, int64_t d) { *this = make_reduced(n, d); }

Rational Rational::operator-() const { return make_reduced(-i128(num_), den_); }

Rational Rational::inverse() const {
  if (num_ == 0) throw InputError("division by zero");
  return make_reduced(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make_reduced(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                                i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::make_reduced(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                                i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make_reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InputError("division by zero");
  return Rational::make_reduced(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

Rational Rational::pow(int64_t e) const {
  if (e == INT64_MIN) throw InputError("exponent out of range");
  Rational base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base = (e > 1) ? base * base : base;
    e >>= 1;
  }
  return acc;
}

std::optional<Rational> Rational::sqrt_exact() const {
  auto n = isqrt_exact(num_);
  if (!n) return std::nullopt;
  auto d = isqrt_exact(den_);
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

std::string Rational::to_string() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

Gaussian Gaussian::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw InputError("division by zero");
  return {re / n, -im / n};
}

Gaussian Gaussian::pow(int64_t e) const {
  if (e == INT64_MIN) throw InputError("exponent out of range");
  Gaussian base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Gaussian acc(Rational(1));
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = (e > 1) ? base * base : base;
    e >>= 1;
  }
  return acc;
}

std::optional<Gaussian> Gaussian::sqrt_exact() const {
  if (im.is_zero()) {
    if (auto s = re.sqrt_exact()) return Gaussian(*s);
    if (auto s = (-re).sqrt_exact()) return Gaussian(Rational(0), *s);
    return std::nullopt;
  }
  // (u+vi)^2 = re+im*i forces u^2 = (re + |z|)/2 with |z| = sqrt(re^2+im^2).
  auto mod = norm().sqrt_exact();
  if (!mod) return std::nullopt;
  Rational u2 = (re + *mod) / Rational(2);
  auto u = u2.sqrt_exact();
  if (!u || u->is_zero()) return std::nullopt;
  Rational v = im / (Rational(2) * *u);
  Gaussian root(*u, v);
  if (root * root != *this) return std::nullopt;
  return root;
}

std::string Gaussian::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string istr;
  if (im.is_one())
    istr = "i";
  else if (im == Rational(-1))
    istr = "-i";
  else
    istr = im.to_string() + "*i";
  if (re.is_zero()) return istr;
  if (istr[0] == '-') return re.to_string() + istr;
  return re.to_string() + "+" + istr;
}

bool canonical_less(const Gaussian& a, const Gaussian& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

}  // namespace petit
