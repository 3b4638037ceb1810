#include "petit/json_io.hpp"

#include "petit/error.hpp"
#include "petit/literals.hpp"

namespace petit {

Json field_to_json(const GaloisExtension& ext) {
  Json j;
  if (ext.is_finite()) {
    j["backend"] = "finite";
    j["p"] = ext.p();
    j["r"] = ext.r();
    j["n"] = ext.sigma_order();
  } else {
    j["backend"] = "quadratic";
    j["base"] = ext.base_field() == BaseField::rationals ? "rationals" : "gaussian-rationals";
    j["b"] = ext.quad_b().to_string();
  }
  return j;
}

GaloisExtension field_from_json(const Json& j) {
  std::string backend = j.at("backend").get<std::string>();
  if (backend == "finite")
    return GaloisExtension::make_finite_extension(j.at("p").get<int64_t>(),
                                                  j.at("r").get<int>(), j.at("n").get<int>());
  if (backend == "quadratic") {
    std::string base = j.at("base").get<std::string>();
    BaseField bf;
    if (base == "rationals")
      bf = BaseField::rationals;
    else if (base == "gaussian-rationals")
      bf = BaseField::gaussian_rationals;
    else
      throw InputError("unknown base field: " + base);
    Gaussian b = parse_gaussian(j.at("b").get<std::string>(),
                                bf == BaseField::gaussian_rationals);
    return GaloisExtension::make_quadratic_extension(bf, b);
  }
  throw InputError("unknown backend: " + backend);
}

Json algebra_to_json(const PetitAlgebra& A) {
  Json j;
  j["field"] = field_to_json(A.extension());
  Json coeffs = Json::array();
  for (int i = 0; i < A.m(); ++i) coeffs.push_back(A.f().coeff(i).to_string());
  coeffs.push_back("1");
  j["f"] = coeffs;
  return j;
}

PetitAlgebra algebra_from_json(const Json& j) {
  GaloisExtension ext = field_from_json(j.at("field"));
  std::vector<FieldElement> coeffs;
  for (const auto& lit : j.at("f"))
    coeffs.push_back(parse_field_element(ext, lit.get<std::string>()));
  return PetitAlgebra(ext, SkewPoly::from_coeffs(ext, std::move(coeffs)));
}

namespace {

std::string tag_string(StructureInfo::Tag tag) {
  switch (tag) {
    case StructureInfo::Tag::trivial:
      return "trivial";
    case StructureInfo::Tag::cyclic:
      return "cyclic";
    case StructureInfo::Tag::dicyclic:
      return "dicyclic";
    case StructureInfo::Tag::semidirect:
      return "semidirect";
    case StructureInfo::Tag::unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace

Json group_report_to_json(const GroupReport& rep) {
  Json j;
  j["order"] = rep.order();
  j["complete"] = rep.complete;
  j["note"] = rep.note;
  Json els = Json::array();
  for (const auto& h : rep.elements) {
    Json e;
    if (h.is_structured()) {
      e["tau"] = h.tau_j();
      e["k"] = h.k().to_string();
    } else {
      e["matrix"] = h.matrix();
    }
    els.push_back(std::move(e));
  }
  j["elements"] = els;
  Json s;
  s["tag"] = tag_string(rep.structure.tag);
  s["params"] = rep.structure.params;
  s["witnesses"] = rep.structure.witnesses;
  j["structure"] = s;
  return j;
}

Json classify_report_to_json(const ClassifyReport& rep) {
  Json j;
  Json fam;
  fam["field"] = field_to_json(rep.ext);
  fam["degree"] = rep.m;
  fam["shape"] = rep.monomial_only ? "monomial" : "all";
  fam["size"] = rep.family_size;
  j["family"] = fam;
  Json classes = Json::array();
  auto poly_coeffs = [](const SkewPoly& f) {
    Json out = Json::array();
    int m = *f.degree();
    for (int i = 0; i < m; ++i) out.push_back(f.coeff(i).to_string());
    out.push_back("1");
    return out;
  };
  for (const auto& c : rep.classes) {
    Json jc;
    jc["rep"] = poly_coeffs(c.rep);
    jc["size"] = c.members.size();
    jc["aut_order"] = c.aut_order;
    Json mem = Json::array();
    for (const auto& f : c.members) mem.push_back(poly_coeffs(f));
    jc["members"] = mem;
    classes.push_back(std::move(jc));
  }
  j["classes"] = classes;
  j["mode"] = rep.mode;
  j["note"] = "tau ranges over Gal(K/F) = <sigma>, so tau commutes with sigma";
  return j;
}

}  // namespace petit
