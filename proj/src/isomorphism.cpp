#include "petit/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "petit/error.hpp"

namespace petit {

namespace {

void check_pair(const PetitAlgebra& Af, const PetitAlgebra& Ag) {
  if (Af.extension() != Ag.extension())
    throw InputError("algebras live over different extensions");
  if (Af.m() != Ag.m()) throw InputError("degree mismatch");
}

std::vector<FieldElement> suffix_products(const PetitAlgebra& A, const FieldElement& k) {
  const GaloisExtension& E = A.extension();
  int m = A.m();
  std::vector<FieldElement> out(static_cast<size_t>(m), E.one());
  FieldElement acc = E.one();
  for (int i = m - 1; i >= 0; --i) {
    acc = acc * E.sigma_pow(i, k);
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

std::vector<int64_t> elem_fp_coords(const PetitAlgebra&, const AlgebraElement& x) {
  std::vector<int64_t> out;
  for (const auto& c : x.coeffs) {
    auto fc = c.prime_coords();
    out.insert(out.end(), fc.begin(), fc.end());
  }
  return out;
}

AlgebraElement elem_from_fp_coords(const PetitAlgebra& A, const std::vector<int64_t>& v) {
  int per = A.extension().prime_degree();
  AlgebraElement x;
  for (size_t off = 0; off < v.size(); off += static_cast<size_t>(per)) {
    std::vector<int64_t> digits(v.begin() + off, v.begin() + off + per);
    x.coeffs.push_back(A.extension().from_prime_coords(digits));
  }
  return x;
}

}  // namespace

bool iso_condition(const PetitAlgebra& Af, const PetitAlgebra& Ag, int j,
                   const FieldElement& k) {
  check_pair(Af, Ag);
  if (k.is_zero()) throw InputError("k must be nonzero");
  const GaloisExtension& E = Af.extension();
  auto prods = suffix_products(Af, k);
  for (int i = 0; i < Af.m(); ++i) {
    // raw coefficients carry -a_i and -b_i; the sign cancels
    FieldElement a = Af.f().coeff(i), b = Ag.f().coeff(i);
    if (!(E.sigma_pow(j, a) == prods[static_cast<size_t>(i)] * b)) return false;
  }
  return true;
}

bool zero_patterns_match(const PetitAlgebra& Af, const PetitAlgebra& Ag) {
  check_pair(Af, Ag);
  for (int i = 0; i < Af.m(); ++i)
    if (Af.f().coeff(i).is_zero() != Ag.f().coeff(i).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// IsoMap

IsoMap IsoMap::structured(const PetitAlgebra& from, const PetitAlgebra& to, int j,
                          const FieldElement& k) {
  check_pair(from, to);
  int n = from.extension().sigma_order();
  IsoMap g(from, to);
  g.structured_ = true;
  g.tau_j_ = ((j % n) + n) % n;
  g.k_ = k;
  if (!iso_condition(from, to, g.tau_j_, k))
    throw InputError("(j, k) does not satisfy the isomorphism condition");
  // verify multiplicativity and bijectivity on the prime basis
  auto basis = from.prime_basis();
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (!(g.apply(from.multiply(x, y)) == to.multiply(g.apply(x), g.apply(y))))
        internal_error("structured isomorphism is not multiplicative");
  if (from.extension().is_finite()) {
    FpOps F{from.extension().p()};
    RowsOf<FpOps> mat;
    for (const auto& x : basis) mat.push_back(elem_fp_coords(to, g.apply(x)));
    if (rank_of(F, std::move(mat)) != basis.size())
      internal_error("structured isomorphism is not bijective");
  }
  return g;
}

IsoMap IsoMap::general(const PetitAlgebra& from, const PetitAlgebra& to, int tau_j,
                       const AlgebraElement& t_image, RowsOf<FpOps> matrix) {
  IsoMap g(from, to);
  g.structured_ = false;
  int n = from.extension().sigma_order();
  g.tau_j_ = ((tau_j % n) + n) % n;
  g.t_image_ = t_image;
  g.matrix_ = std::move(matrix);
  return g;
}

const FieldElement& IsoMap::k() const {
  if (!structured_) throw InputError("general map has no scaling element k");
  return *k_;
}

AlgebraElement IsoMap::apply(const AlgebraElement& x) const {
  const GaloisExtension& E = from_.extension();
  if (structured_) {
    AlgebraElement out = to_.zero();
    FieldElement prefix = E.one();
    for (int i = 0; i < from_.m(); ++i) {
      if (i > 0) prefix = prefix * E.sigma_pow(i - 1, *k_);
      out.coeffs[static_cast<size_t>(i)] =
          E.sigma_pow(tau_j_, x.coeffs[static_cast<size_t>(i)]) * prefix;
    }
    return out;
  }
  FpOps F{E.p()};
  return elem_from_fp_coords(to_, mat_vec(F, matrix_, elem_fp_coords(from_, x)));
}

// ---------------------------------------------------------------------------

FindIsoResult find_isomorphism(const PetitAlgebra& Af, const PetitAlgebra& Ag) {
  check_pair(Af, Ag);
  const GaloisExtension& E = Af.extension();
  if (!E.is_finite())
    throw UnsupportedError("the isomorphism scan requires the finite backend");
  if (Af.f().is_invariant() || Ag.f().is_invariant())
    throw InputError("isomorphism classification targets non-invariant polynomials");
  int n = E.sigma_order(), m = Af.m();
  FindIsoResult res{std::nullopt, n >= m - 1};
  if (!zero_patterns_match(Af, Ag)) return res;
  for (int j = 0; j < n; ++j)
    for (uint32_t kc = 1; kc < E.size(); ++kc) {
      FieldElement k = E.from_code(kc);
      if (iso_condition(Af, Ag, j, k)) {
        res.witness = IsoWitness{j, k};
        return res;
      }
    }
  return res;
}

std::optional<IsoMap> iso_oracle(const PetitAlgebra& Af, const PetitAlgebra& Ag,
                                 const OracleOptions& opts) {
  check_pair(Af, Ag);
  const GaloisExtension& E = Af.extension();
  if (!E.is_finite()) throw UnsupportedError("the oracle requires the finite backend");
  if (Af.is_associative() || Ag.is_associative())
    throw InputError("the oracle search shape assumes nonassociative algebras");
  uint64_t count = Af.element_count();
  if (count > opts.scale_bound)
    throw UnsupportedError("oracle candidate space exceeds the scale bound");

  int n = E.sigma_order(), m = Af.m();
  FpOps F{E.p()};
  auto basis = Af.prime_basis();
  size_t D = basis.size();

  for (int j = 0; j < n; ++j) {
    for (uint64_t idx = 1; idx < count; ++idx) {
      AlgebraElement u = Ag.element_at(idx);
      std::vector<AlgebraElement> upow{Ag.one()};
      for (int i = 1; i < m; ++i) upow.push_back(Ag.multiply(u, upow.back()));
      // probe on the twist relation
      {
        FieldElement z = E.generator();
        AlgebraElement lhs = Ag.scalar_mul(E.sigma_pow(j, E.sigma_pow(1, z)), u);
        AlgebraElement rhs = Ag.multiply(u, Ag.embed(E.sigma_pow(j, z)));
        if (!(lhs == rhs)) continue;
      }
      // probe on t^m: image of sum a_i t^i (f's reduction) vs u . u^(m-1)
      {
        AlgebraElement lhs = Ag.multiply(u, upow[static_cast<size_t>(m - 1)]);
        AlgebraElement rhs = Ag.zero();
        for (int i = 0; i < m; ++i)
          rhs = Ag.add(rhs, Ag.scalar_mul(E.sigma_pow(j, -Af.f().coeff(i)),
                                          upow[static_cast<size_t>(i)]));
        if (!(lhs == rhs)) continue;
      }

      RowsOf<FpOps> mat(D, std::vector<int64_t>(D, 0));
      std::vector<AlgebraElement> images(D);
      for (size_t bidx = 0; bidx < D; ++bidx) {
        int slot = static_cast<int>(bidx) / E.prime_degree();
        FieldElement z = basis[bidx].coeffs[static_cast<size_t>(slot)];
        AlgebraElement img =
            Ag.multiply(Ag.embed(E.sigma_pow(j, z)), upow[static_cast<size_t>(slot)]);
        images[bidx] = img;
        auto col = elem_fp_coords(Ag, img);
        for (size_t rowi = 0; rowi < D; ++rowi) mat[rowi][bidx] = col[rowi];
      }
      if (rank_of(F, mat) != D) continue;

      auto apply_mat = [&](const AlgebraElement& x) {
        return elem_from_fp_coords(Ag, mat_vec(F, mat, elem_fp_coords(Af, x)));
      };
      bool multiplicative = true;
      for (size_t a = 0; a < D && multiplicative; ++a)
        for (size_t b = 0; b < D; ++b)
          if (!(apply_mat(Af.multiply(basis[a], basis[b])) ==
                Ag.multiply(images[a], images[b]))) {
            multiplicative = false;
            break;
          }
      if (!multiplicative) continue;
      return IsoMap::general(Af, Ag, j, u, std::move(mat));
    }
  }
  return std::nullopt;
}

std::optional<NormObstruction> norm_obstruction(const PetitAlgebra& Af,
                                                const PetitAlgebra& Ag) {
  check_pair(Af, Ag);
  const GaloisExtension& E = Af.extension();
  if (!E.is_finite())
    throw UnsupportedError("norm obstructions are computed on the finite backend");
  int m = Af.m();
  // subgroup of norms in F^x (all of F^x for finite fields, computed honestly)
  std::set<uint32_t> norms;
  for (uint32_t c = 1; c < E.size(); ++c) norms.insert(E.norm(E.from_code(c)).code());
  for (int i = 0; i < m; ++i) {
    FieldElement a = Af.f().coeff(i), b = Ag.f().coeff(i);
    if (a.is_zero() || b.is_zero()) continue;
    FieldElement target = E.norm(a / b);
    bool representable = false;
    for (uint32_t nc : norms)
      if (E.from_code(nc).pow(m - i) == target) {
        representable = true;
        break;
      }
    if (!representable) return NormObstruction{i, target};
  }
  return std::nullopt;
}

SkewPoly coefficient_action(const PetitAlgebra& Af, int j, const FieldElement& k) {
  if (k.is_zero()) throw InputError("k must be nonzero");
  const GaloisExtension& E = Af.extension();
  auto prods = suffix_products(Af, k);
  std::vector<FieldElement> out;
  for (int i = 0; i < Af.m(); ++i)
    out.push_back(E.sigma_pow(j, Af.f().coeff(i)) / prods[static_cast<size_t>(i)]);
  out.push_back(E.one());
  return SkewPoly::from_coeffs(E, std::move(out));
}

ClassifyReport classify(const GaloisExtension& ext, int m, const ClassifyOptions& opts) {
  if (!ext.is_finite()) throw UnsupportedError("classification requires the finite backend");
  FamilyOptions fam;
  fam.monomial_only = opts.monomial_only;
  fam.non_invariant_only = true;
  fam.size_bound = opts.family_bound;
  std::vector<SkewPoly> family = monic_family(ext, m, fam);

  ClassifyReport rep;
  rep.ext = ext;
  rep.m = m;
  rep.monomial_only = opts.monomial_only;
  rep.family_size = family.size();
  int n = ext.sigma_order();
  bool formula_complete = n >= m - 1;
  rep.mode = formula_complete ? "formula-complete" : "oracle-confirmed";

  auto key_of = [&](const SkewPoly& f) {
    std::vector<uint32_t> key;
    for (int i = 0; i < m; ++i) key.push_back(f.coeff(i).code());
    return key;
  };
  std::map<std::vector<uint32_t>, size_t> index_of;
  for (size_t i = 0; i < family.size(); ++i) index_of[key_of(family[i])] = i;

  // orbits of the coefficient action (j, k); family order is canonical, so the
  // first member found is the lexicographically smallest representative
  std::vector<int> class_of(family.size(), -1);
  std::vector<IsoClass> classes;
  for (size_t i = 0; i < family.size(); ++i) {
    if (class_of[i] >= 0) continue;
    int cls = static_cast<int>(classes.size());
    IsoClass c;
    c.rep = family[i];
    PetitAlgebra Ai(ext, family[i]);
    size_t maps_to_rep = 0;
    for (int j = 0; j < n; ++j)
      for (uint32_t kc = 1; kc < ext.size(); ++kc) {
        SkewPoly g = coefficient_action(Ai, j, ext.from_code(kc));
        auto it = index_of.find(key_of(g));
        if (it == index_of.end())
          internal_error("coefficient action left the family");
        if (class_of[it->second] < 0) {
          class_of[it->second] = cls;
          c.members.push_back(family[it->second]);
        }
        if (it->second == i) ++maps_to_rep;
      }
    // orbit-stabilizer: #{(j,k) fixing f} must equal |Aut(S_f)|
    c.aut_order = enumerate_aut_formula(Ai).order();
    if (maps_to_rep != c.aut_order)
      internal_error("orbit-stabilizer mismatch between the action and Aut(S_f)");
    classes.push_back(std::move(c));
  }

  if (!formula_complete) {
    // merge orbit representatives that the oracle still identifies
    for (size_t a = 0; a < classes.size(); ++a)
      for (size_t b = a + 1; b < classes.size(); ++b) {
        PetitAlgebra Aa(ext, classes[a].rep), Ab(ext, classes[b].rep);
        if (iso_oracle(Aa, Ab, {opts.oracle_bound})) {
          for (auto& f : classes[b].members) classes[a].members.push_back(std::move(f));
          classes.erase(classes.begin() + static_cast<long>(b));
          --b;
        }
      }
  }

  size_t total = 0;
  for (auto& c : classes) {
    std::sort(c.members.begin(), c.members.end(), [&](const SkewPoly& x, const SkewPoly& y) {
      return key_of(x) < key_of(y);
    });
    c.rep = c.members.front();
    total += c.members.size();
  }
  if (total != family.size()) internal_error("classes do not partition the family");
  rep.classes = std::move(classes);
  return rep;
}

}  // namespace petit
