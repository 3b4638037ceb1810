#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "petit/rational.hpp"

namespace petit {

/// Scalar policy for GF(p).
struct FpOps {
  using Scalar = int64_t;
  int64_t p;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  bool is_zero(Scalar a) const { return a == 0; }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p; }
  Scalar sub(Scalar a, Scalar b) const { return ((a - b) % p + p) % p; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p; }
  Scalar neg(Scalar a) const { return (p - a) % p; }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
};

inline FpOps::Scalar FpOps::inv(Scalar a) const {
  a = ((a % p) + p) % p;
  if (a == 0) throw InputError("division by zero in GF(p)");
  // extended Euclid
  int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return ((t % p) + p) % p;
}

/// Scalar policy for exact rationals.
struct RatOps {
  using Scalar = Rational;

  Scalar zero() const { return Rational(0); }
  Scalar one() const { return Rational(1); }
  bool is_zero(const Scalar& a) const { return a.is_zero(); }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar inv(const Scalar& a) const { return a.inverse(); }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
};

template <class Ops>
using RowsOf = std::vector<std::vector<typename Ops::Scalar>>;

/// In-place reduced row echelon form. Returns the rank; zero rows are dropped.
/// RREF is unique, so equal row spaces yield identical results.
template <class Ops>
size_t echelonize(const Ops& F, RowsOf<Ops>& rows) {
  size_t rank = 0;
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && F.is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    auto lead_inv = F.inv(rows[rank][col]);
    for (size_t c = col; c < ncols; ++c) rows[rank][c] = F.mul(rows[rank][c], lead_inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || F.is_zero(rows[r][col])) continue;
      auto factor = rows[r][col];
      for (size_t c = col; c < ncols; ++c)
        rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

template <class Ops>
size_t rank_of(const Ops& F, RowsOf<Ops> rows) {
  return echelonize(F, rows);
}

/// Basis of {x : A x = 0}, rows of `eqs` being the equations. Deterministic:
/// free columns ascending, each basis vector has a 1 in its free column.
template <class Ops>
RowsOf<Ops> kernel_basis(const Ops& F, RowsOf<Ops> eqs, size_t ncols) {
  echelonize(F, eqs);
  std::vector<int> pivot_of_col(ncols, -1);
  for (size_t r = 0; r < eqs.size(); ++r) {
    size_t c = 0;
    while (c < ncols && F.is_zero(eqs[r][c])) ++c;
    if (c < ncols) pivot_of_col[c] = static_cast<int>(r);
  }
  RowsOf<Ops> basis;
  for (size_t free_col = 0; free_col < ncols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<typename Ops::Scalar> v(ncols, F.zero());
    v[free_col] = F.one();
    for (size_t c = 0; c < ncols; ++c) {
      int r = pivot_of_col[c];
      if (r >= 0) v[c] = F.neg(eqs[r][free_col]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Membership of v in the row space of an echelonized matrix.
template <class Ops>
bool in_row_space(const Ops& F, const RowsOf<Ops>& rref,
                  std::vector<typename Ops::Scalar> v) {
  size_t ncols = v.size();
  for (const auto& row : rref) {
    size_t c = 0;
    while (c < ncols && F.is_zero(row[c])) ++c;
    if (c == ncols || F.is_zero(v[c])) continue;
    auto factor = v[c];
    for (size_t k = c; k < ncols; ++k) v[k] = F.sub(v[k], F.mul(factor, row[k]));
  }
  for (const auto& x : v)
    if (!F.is_zero(x)) return false;
  return true;
}

/// Inverse of a square matrix, or nullopt if singular.
template <class Ops>
std::optional<RowsOf<Ops>> invert_matrix(const Ops& F, const RowsOf<Ops>& m) {
  size_t n = m.size();
  RowsOf<Ops> aug(n, std::vector<typename Ops::Scalar>(2 * n, F.zero()));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug[r][c] = m[r][c];
    aug[r][n + r] = F.one();
  }
  if (echelonize(F, aug) != n) return std::nullopt;
  RowsOf<Ops> inv(n, std::vector<typename Ops::Scalar>(n, F.zero()));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
  return inv;
}

template <class Ops>
std::vector<typename Ops::Scalar> mat_vec(const Ops& F, const RowsOf<Ops>& m,
                                          const std::vector<typename Ops::Scalar>& v) {
  std::vector<typename Ops::Scalar> out(m.size(), F.zero());
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c)
      if (!F.is_zero(m[r][c]) && !F.is_zero(v[c]))
        out[r] = F.add(out[r], F.mul(m[r][c], v[c]));
  return out;
}

template <class Ops>
RowsOf<Ops> mat_mul(const Ops& F, const RowsOf<Ops>& a, const RowsOf<Ops>& b) {
  size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
  RowsOf<Ops> out(n, std::vector<typename Ops::Scalar>(mcols, F.zero()));
  for (size_t r = 0; r < n; ++r)
    for (size_t i = 0; i < k; ++i) {
      if (F.is_zero(a[r][i])) continue;
      for (size_t c = 0; c < mcols; ++c)
        out[r][c] = F.add(out[r][c], F.mul(a[r][i], b[i][c]));
    }
  return out;
}

}  // namespace petit
