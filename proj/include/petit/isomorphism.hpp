#pragma once

#include <optional>
#include <string>
#include <vector>

#include "petit/automorphism.hpp"

namespace petit {

/// Witness (tau = sigma^j, k) for S_f -> S_g.
struct IsoWitness {
  int j;
  FieldElement k;
};

/// Coefficient condition for G_{sigma^j, k} : S_f -> S_g to be an isomorphism.
bool iso_condition(const PetitAlgebra& Af, const PetitAlgebra& Ag, int j,
                   const FieldElement& k);

/// Zero patterns of the two polynomials agree (necessary for isomorphism).
bool zero_patterns_match(const PetitAlgebra& Af, const PetitAlgebra& Ag);

/// Isomorphism S_f -> S_g, either structured (from a witness, verified
/// multiplicative and bijective) or a general matrix from the oracle.
class IsoMap {
 public:
  static IsoMap structured(const PetitAlgebra& from, const PetitAlgebra& to, int j,
                           const FieldElement& k);
  static IsoMap general(const PetitAlgebra& from, const PetitAlgebra& to, int tau_j,
                        const AlgebraElement& t_image, RowsOf<FpOps> matrix);

  const PetitAlgebra& from() const { return from_; }
  const PetitAlgebra& to() const { return to_; }
  bool is_structured() const { return structured_; }
  int tau_j() const { return tau_j_; }
  const FieldElement& k() const;

  AlgebraElement apply(const AlgebraElement& x) const;

 private:
  IsoMap(const PetitAlgebra& f, const PetitAlgebra& t) : from_(f), to_(t) {}
  PetitAlgebra from_, to_;
  bool structured_ = true;
  int tau_j_ = 0;
  std::optional<FieldElement> k_;
  std::optional<AlgebraElement> t_image_;
  RowsOf<FpOps> matrix_;
};

struct FindIsoResult {
  std::optional<IsoWitness> witness;
  bool complete;  ///< search is decisive (n >= m-1)
};

/// Canonical-order scan over (j, k); first witness or none.
FindIsoResult find_isomorphism(const PetitAlgebra& Af, const PetitAlgebra& Ag);

/// Brute-force multiplicative bijection search, same shape as the
/// automorphism oracle.
std::optional<IsoMap> iso_oracle(const PetitAlgebra& Af, const PetitAlgebra& Ag,
                                 const OracleOptions& opts = {});

struct NormObstruction {
  int index;                ///< coefficient index i witnessing the obstruction
  FieldElement norm_ratio;  ///< N(a_i / b_i), outside the (m-i)-th power norms
};

/// Norm-based non-isomorphism certificate, if one exists (finite backend).
std::optional<NormObstruction> norm_obstruction(const PetitAlgebra& Af,
                                                const PetitAlgebra& Ag);

/// Image polynomial of f under the coefficient action of (sigma^j, k):
/// the g with iso_condition(f, g, j, k) true.
SkewPoly coefficient_action(const PetitAlgebra& Af, int j, const FieldElement& k);

struct ClassifyOptions {
  bool monomial_only = false;
  uint64_t family_bound = 1u << 20;
  uint64_t oracle_bound = 1u << 16;
};

struct IsoClass {
  SkewPoly rep;                  ///< lexicographically smallest member
  std::vector<SkewPoly> members;
  size_t aut_order;
};

struct ClassifyReport {
  GaloisExtension ext;
  int m;
  bool monomial_only;
  size_t family_size;
  std::vector<IsoClass> classes;
  std::string mode;  ///< "formula-complete" or "oracle-confirmed"
};

/// Partition of the monic non-invariant degree-m family into isomorphism
/// classes, with an orbit-stabilizer consistency check per class.
ClassifyReport classify(const GaloisExtension& ext, int m, const ClassifyOptions& opts = {});

}  // namespace petit
