#pragma once

#include <cstdint>

#include "petit/petit_algebra.hpp"

namespace petit::testing {

/// Deterministic xorshift64 generator for reproducible property tests.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

  uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  uint64_t below(uint64_t bound) { return next() % bound; }

  FieldElement element(const GaloisExtension& E) {
    return E.from_code(static_cast<uint32_t>(below(E.size())));
  }
  FieldElement nonzero_element(const GaloisExtension& E) {
    return E.from_code(1 + static_cast<uint32_t>(below(E.size() - 1)));
  }
  SkewPoly poly(const GaloisExtension& E, int max_deg) {
    if (max_deg < 0) return SkewPoly::zero(E);
    std::vector<FieldElement> c;
    int deg = static_cast<int>(below(static_cast<uint64_t>(max_deg) + 1));
    for (int i = 0; i <= deg; ++i) c.push_back(element(E));
    return SkewPoly::from_coeffs(E, std::move(c));
  }
  SkewPoly nonzero_poly(const GaloisExtension& E, int max_deg) {
    while (true) {
      SkewPoly f = poly(E, max_deg);
      if (!f.is_zero()) return f;
    }
  }

 private:
  uint64_t state_;
};

inline GaloisExtension gf4() { return GaloisExtension::make_finite_extension(2, 1, 2); }
inline GaloisExtension gf9() { return GaloisExtension::make_finite_extension(3, 1, 2); }
inline GaloisExtension gf8() { return GaloisExtension::make_finite_extension(2, 1, 3); }

}  // namespace petit::testing
