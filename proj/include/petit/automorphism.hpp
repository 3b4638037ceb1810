#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "petit/linalg.hpp"
#include "petit/petit_algebra.hpp"

namespace petit {

/// Detected group structure with witness indices into the element list.
struct StructureInfo {
  enum class Tag { trivial, cyclic, dicyclic, semidirect, unknown };
  Tag tag = Tag::unknown;
  std::vector<int64_t> params;  ///< cyclic: {r}; dicyclic: {l}; semidirect: {s, n, l}
  std::vector<int> witnesses;

  std::string to_string() const;
};

/// F-algebra automorphism of S_f.
///
/// Structured maps apply tau = sigma^j to coefficients and scale t^i by the
/// twisted prefix product of k; general maps are explicit prime-field
/// matrices produced by the brute-force search.
class AutMap {
 public:
  /// H_{sigma^j, k}; the defining coefficient condition is checked.
  static AutMap structured(const PetitAlgebra& A, int j, const FieldElement& k);
  static AutMap identity(const PetitAlgebra& A);
  static AutMap general(const PetitAlgebra& A, int tau_j, const AlgebraElement& t_image,
                        RowsOf<FpOps> matrix);

  const PetitAlgebra& algebra() const { return algebra_; }
  bool is_structured() const { return structured_; }
  int tau_j() const { return tau_j_; }
  /// Scaling element k (structured maps only).
  const FieldElement& k() const;
  const RowsOf<FpOps>& matrix() const;
  AlgebraElement t_image() const;

  AlgebraElement apply(const AlgebraElement& x) const;
  /// this . other (apply other first).
  AutMap compose(const AutMap& other) const;
  AutMap inverse() const;
  bool is_identity() const;
  /// Action equality (works across the two variants).
  bool same_map(const AutMap& other) const;

 private:
  explicit AutMap(const PetitAlgebra& A) : algebra_(A) {}
  PetitAlgebra algebra_;
  bool structured_ = true;
  int tau_j_ = 0;
  std::optional<FieldElement> k_;
  std::optional<AlgebraElement> t_image_;
  RowsOf<FpOps> matrix_;
};

/// Deterministic order: by (tau_j, canonical order of the image of t).
bool canonical_map_less(const AutMap& a, const AutMap& b);

struct GroupReport {
  std::vector<AutMap> elements;         ///< canonical order, identity included
  std::vector<std::vector<int>> table;  ///< table[i][j] = index of e_i . e_j; empty above cap
  bool complete = false;                ///< true when this is all of Aut_F(S_f)
  std::string note;
  StructureInfo structure;

  size_t order() const { return elements.size(); }
  int index_of(const AutMap& h) const;
};

/// Coefficient condition for H_{sigma^j, k} to be an automorphism of S_f.
bool htk_condition(const PetitAlgebra& A, int j, const FieldElement& k);

/// All H_{tau,k} automorphisms. This is the whole group when n >= m-1,
/// otherwise a subgroup (see the report's `complete` flag and note).
GroupReport enumerate_aut_formula(const PetitAlgebra& A);

struct OracleOptions {
  uint64_t scale_bound = 1u << 16;  ///< max |K|^m candidates
  /// Candidate-scan threads (0 = hardware count). The scan is safe to run in
  /// parallel and the merged report is identical to the sequential one; on
  /// small scans the shared-state refcount traffic outweighs the gain, so the
  /// default stays sequential.
  unsigned workers = 1;
};

/// Independent brute-force enumeration: for each tau in Gal(K/F) and each
/// candidate image of t, keep the induced linear map iff it is multiplicative
/// and bijective. Authoritative full enumeration (finite backend).
GroupReport enumerate_aut_oracle(const PetitAlgebra& A, const OracleOptions& opts = {});

/// Inner automorphism G_c : x -> (c^-1 x) c, realized as H_{id, c^-1 sigma(c)}.
AutMap inner_from_c(const PetitAlgebra& A, const FieldElement& c);

/// {H_{id,k} : N(k) = 1} for f = t^m - a, a in K\F, n = m. Every element is
/// re-verified to be the inner automorphism G_c with c from Hilbert 90.
GroupReport extend_id_subgroup(const PetitAlgebra& A);

/// <H_{id,omega}> for an s-th root of unity omega in F and f supported on
/// powers of t^s.
GroupReport cyclic_subgroup_from_root(const PetitAlgebra& A, const FieldElement& omega);

/// {H_{sigma^j, 1}} for f with all coefficients in F. When n = m is prime,
/// a_0 != 0 and some a_i != 0 (1 <= i < m), this is the full group; that case
/// is cross-checked against the oracle.
GroupReport fixed_coeff_subgroup(const PetitAlgebra& A, bool oracle_cross_check = true,
                                 uint64_t oracle_bound = 1u << 16);

struct QuaternionOptions {
  int j_bound = 24;         ///< search bound for the smallest j with c^j in F
  size_t closure_cap = 256; ///< guard against infinite subgroups
};

/// Subgroup <H_{sigma,k}, G_c> of a quaternion algebra S_f, f = t^2 - lambda
/// sqrt(b) over the quadratic backend, with k sigma(k) = -1. Dicyclic of
/// order 2j for even j, Z/j x|_(j-1) Z/4 of order 4j for odd j; the
/// presentation is verified on the designated witnesses.
GroupReport quaternion_subgroups(const PetitAlgebra& A, const FieldElement& k,
                                 const FieldElement& c, const QuaternionOptions& opts = {});

/// Every automorphism of S_g is one of S_f (see the coefficient-pattern
/// preconditions on the two polynomials).
bool subgroup_inclusion_check(const PetitAlgebra& Ag, const PetitAlgebra& Af);

/// <H_{sigma,l}> of order m^2 for a cyclic algebra f = t^m - a, n = m, when F
/// contains a primitive m-th root of unity omega realized as omega = N(l)
/// with sigma(d) = omega d and sigma(a) = omega a. The searches for d and l
/// are exhaustive on the finite backend; nullopt when no witness exists.
struct OrderM2Witness {
  GroupReport report;
  FieldElement omega, l, d;
};
std::optional<OrderM2Witness> order_m2_subgroup(const PetitAlgebra& A);

/// Closure check, multiplication table and structure detection for a set of
/// automorphisms (or its generated subgroup when from_generators is set).
GroupReport structure_report(std::vector<AutMap> elements, bool from_generators = false,
                             size_t closure_cap = 256);

/// The two built-in nonassociative quaternion examples over Q(i), with every
/// intermediate power checked exactly.
struct QuaternionExample {
  std::string label;
  GaloisExtension ext;
  FieldElement k, c;
  std::vector<FieldElement> c_powers;  ///< c^1 .. c^j
  int j = 0;
  GroupReport report;
};
std::vector<QuaternionExample> run_quaternion_examples();

}  // namespace petit
