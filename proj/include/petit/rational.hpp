#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "petit/error.hpp"

namespace petit {

/// Exact rational number on checked 64-bit words.
///
/// Values are always reduced with a positive denominator. Any intermediate
/// that does not fit into int64 after reduction throws instead of wrapping.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(int64_t n, int64_t d);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational pow(int64_t e) const;

  /// Exact square root, if the value is the square of a rational.
  std::optional<Rational> sqrt_exact() const;
  bool is_square() const { return sqrt_exact().has_value(); }

  std::string to_string() const;

 private:
  static Rational make_reduced(__int128 n, __int128 d);
  int64_t num_;
  int64_t den_;
};

/// Element of Q(i): re + im*i with i^2 = -1.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(r), im(0) {}  // NOLINT: implicit by design
  Gaussian(Rational r, Rational i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_one() const { return re.is_one() && im.is_zero(); }
  bool is_rational() const { return im.is_zero(); }

  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  Gaussian operator-() const { return {-re, -im}; }
  Gaussian inverse() const;

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    return a * b.inverse();
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  Gaussian pow(int64_t e) const;

  /// Exact square root in Q(i), if one exists.
  std::optional<Gaussian> sqrt_exact() const;

  std::string to_string() const;
};

/// Total order used for canonical, reproducible element listings.
inline bool canonical_less(const Rational& a, const Rational& b) { return a < b; }
bool canonical_less(const Gaussian& a, const Gaussian& b);

}  // namespace petit
