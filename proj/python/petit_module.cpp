#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "petit/error.hpp"
#include "petit/json_io.hpp"
#include "petit/literals.hpp"

namespace py = pybind11;
using namespace petit;

namespace {

GaloisExtension make_field(const std::string& backend, py::kwargs kwargs) {
  if (backend == "finite")
    return GaloisExtension::make_finite_extension(kwargs["p"].cast<int64_t>(),
                                                  kwargs["r"].cast<int>(),
                                                  kwargs["n"].cast<int>());
  if (backend == "quadratic") {
    std::string base = kwargs["base"].cast<std::string>();
    BaseField bf;
    if (base == "rationals")
      bf = BaseField::rationals;
    else if (base == "gaussian-rationals")
      bf = BaseField::gaussian_rationals;
    else
      throw InputError("base must be rationals or gaussian-rationals");
    Gaussian b = parse_gaussian(kwargs["b"].cast<std::string>(),
                                bf == BaseField::gaussian_rationals);
    return GaloisExtension::make_quadratic_extension(bf, b);
  }
  throw InputError("backend must be finite or quadratic");
}

py::dict structure_dict(const StructureInfo& s) {
  py::dict d;
  d["tag"] = s.to_string();
  d["params"] = s.params;
  d["witnesses"] = s.witnesses;
  return d;
}

py::dict group_dict(const GroupReport& rep) {
  py::dict d;
  d["order"] = rep.order();
  d["complete"] = rep.complete;
  d["note"] = rep.note;
  d["structure"] = structure_dict(rep.structure);
  py::list els;
  for (const auto& h : rep.elements) {
    py::dict e;
    e["tau"] = h.tau_j();
    if (h.is_structured()) e["k"] = h.k().to_string();
    els.append(e);
  }
  d["elements"] = els;
  d["json"] = group_report_to_json(rep).dump();
  return d;
}

}  // namespace

PYBIND11_MODULE(petitalg, m) {
  m.doc() = "exact computation with Petit algebras S_f = K[t;sigma]/K[t;sigma]f";

  py::register_exception<InputError>(m, "InputError");
  py::register_exception<InternalError>(m, "InternalCheckError");

  py::class_<FieldElement>(m, "FieldElement")
      .def("__str__", &FieldElement::to_string)
      .def("__repr__", &FieldElement::to_string)
      .def("__eq__", [](const FieldElement& a, const FieldElement& b) { return a == b; })
      .def("__add__", [](const FieldElement& a, const FieldElement& b) { return a + b; })
      .def("__sub__", [](const FieldElement& a, const FieldElement& b) { return a - b; })
      .def("__mul__", [](const FieldElement& a, const FieldElement& b) { return a * b; })
      .def("__truediv__", [](const FieldElement& a, const FieldElement& b) { return a / b; })
      .def("__pow__", [](const FieldElement& a, int64_t e) { return a.pow(e); })
      .def("is_zero", &FieldElement::is_zero);

  py::class_<GaloisExtension>(m, "GaloisExtension")
      .def("sigma_order", &GaloisExtension::sigma_order)
      .def("element", [](const GaloisExtension& E, const std::string& lit) {
        return parse_field_element(E, lit);
      })
      .def("sigma", [](const GaloisExtension& E, const FieldElement& x, int j) {
        return E.sigma_pow(j, x);
      }, py::arg("x"), py::arg("j") = 1)
      .def("norm", &GaloisExtension::norm)
      .def("kernel_of_norm_size",
           [](const GaloisExtension& E) { return E.kernel_of_norm().size(); })
      .def("solve_hilbert90", &GaloisExtension::solve_hilbert90)
      .def("in_fixed_field", &GaloisExtension::in_fixed_field, py::arg("x"), py::arg("j") = 1)
      .def("descriptor", [](const GaloisExtension& E) { return field_to_json(E).dump(); });

  py::class_<PetitAlgebra>(m, "PetitAlgebra")
      .def("degree", &PetitAlgebra::m)
      .def("dim_over_F", &PetitAlgebra::dim_over_F)
      .def("f", [](const PetitAlgebra& A) { return A.f().to_string(); })
      .def("is_associative", &PetitAlgebra::is_associative)
      .def("is_division", &PetitAlgebra::is_division)
      .def("is_invariant", [](const PetitAlgebra& A) { return A.f().is_invariant(); })
      .def("is_irreducible", [](const PetitAlgebra& A) { return A.f().is_irreducible(); })
      .def("nucleus_dims", [](const PetitAlgebra& A) {
        return py::make_tuple(A.nucleus_left().dim(), A.nucleus_middle().dim(),
                              A.nucleus_right().dim());
      });

  m.def("field", &make_field, py::arg("backend"),
        "field('finite', p=2, r=1, n=2) or field('quadratic', base='gaussian-rationals', b='-3')");
  m.def("algebra", [](const GaloisExtension& E, const std::string& f) {
    return PetitAlgebra(E, parse_skew_poly(E, f));
  });
  m.def("automorphism_group", [](const PetitAlgebra& A, bool oracle) {
    GroupReport rep = oracle ? enumerate_aut_oracle(A) : enumerate_aut_formula(A);
    return group_dict(rep);
  }, py::arg("A"), py::arg("oracle") = false);
  m.def("quaternion_subgroup",
        [](const PetitAlgebra& A, const std::string& k, const std::string& c) {
          const GaloisExtension& E = A.extension();
          return group_dict(
              quaternion_subgroups(A, parse_field_element(E, k), parse_field_element(E, c)));
        });
  m.def("find_isomorphism", [](const PetitAlgebra& Af, const PetitAlgebra& Ag) {
    FindIsoResult res = find_isomorphism(Af, Ag);
    py::dict d;
    d["complete"] = res.complete;
    if (res.witness) {
      d["tau"] = res.witness->j;
      d["k"] = res.witness->k.to_string();
    }
    d["found"] = res.witness.has_value();
    return d;
  });
  m.def("classify", [](const GaloisExtension& E, int m, bool monomial_only) {
    ClassifyOptions opts;
    opts.monomial_only = monomial_only;
    return classify_report_to_json(classify(E, m, opts)).dump();
  }, py::arg("E"), py::arg("m"), py::arg("monomial_only") = false);
  m.def("worked_examples", [] {
    py::list out;
    for (const auto& ex : run_quaternion_examples()) {
      py::dict d;
      d["label"] = ex.label;
      d["j"] = ex.j;
      py::list powers;
      for (const auto& p : ex.c_powers) powers.append(p.to_string());
      d["c_powers"] = powers;
      d["group"] = group_dict(ex.report);
      out.append(d);
    }
    return out;
  });
}
