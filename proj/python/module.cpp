#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heckenil/suites.hpp"

namespace py = pybind11;
using namespace heckenil;

namespace {

py::object json_to_py(const json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

py::object degree_to_py(const DegreeValue& d) {
  if (d.is_neg_inf()) return py::none();
  return py::int_(d.value());
}

FormTag tag_from_string(const std::string& name) {
  if (name == "eta_product") return FormTag::EtaProduct;
  if (name == "delta") return FormTag::Delta;
  if (name == "d_delta") return FormTag::DDelta;
  if (name == "e2") return FormTag::E2;
  if (name == "e4") return FormTag::E4;
  if (name == "e6") return FormTag::E6;
  if (name == "e2n") return FormTag::E2N;
  if (name == "theta") return FormTag::ThetaBig;
  if (name == "f") return FormTag::FForm;
  if (name == "a") return FormTag::AForm;
  if (name == "g") return FormTag::GForm;
  if (name == "p") return FormTag::PForm;
  throw std::invalid_argument("unknown form tag: " + name);
}

BasisTag basis_arg(const std::string& space, uint32_t p) {
  auto tag = basis_from_name(space, p);
  if (!tag) throw std::invalid_argument("unknown space '" + space + "' for p");
  return *tag;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for nilpotency indices of Hecke operators on modular forms mod p";

  py::class_<QSeries>(m, "QSeries")
      .def_readonly("p", &QSeries::p)
      .def_property_readonly("precision", &QSeries::precision)
      .def_property_readonly("weight",
                             [](const QSeries& s) -> py::object {
                               if (s.weight) return py::int_(*s.weight);
                               return py::none();
                             })
      .def("at", &QSeries::at)
      .def("coeffs", [](const QSeries& s) { return s.c; })
      .def("is_zero", &QSeries::is_zero)
      .def("__repr__", [](const QSeries& s) {
        return "<QSeries mod " + std::to_string(s.p) + ", precision " +
               std::to_string(s.precision()) + ">";
      });

  py::class_<PolyRep>(m, "PolyRep")
      .def_property_readonly("coeffs", [](const PolyRep& P) { return P.coeffs; })
      .def_property_readonly("degree", [](const PolyRep& P) { return degree_to_py(P.degree); })
      .def_property_readonly("space", [](const PolyRep& P) { return std::string(basis_name(P.basis)); })
      .def("is_zero", &PolyRep::is_zero);

  m.def("euler_product", &euler_product, py::arg("delta"), py::arg("p"), py::arg("n"));
  m.def("kronecker", &kronecker, py::arg("d"), py::arg("n"));
  m.def(
      "named_form",
      [](const std::string& tag, uint32_t p, int64_t N, int64_t delta, int64_t e, int64_t level) {
        return named_form(NamedForm{tag_from_string(tag), delta, e, level}, p, N);
      },
      py::arg("tag"), py::arg("p"), py::arg("n"), py::arg("delta") = 0, py::arg("e") = 0,
      py::arg("level") = 0);
  m.def(
      "theta_expansion",
      [](const std::string& kind, uint32_t p, int64_t N, int64_t scale) {
        ThetaKind k = kind == "eta" ? ThetaKind::Eta
                      : kind == "eta3" ? ThetaKind::Eta3
                                       : ThetaKind::SqSum;
        return theta_expansion(k, p, N, scale);
      },
      py::arg("kind"), py::arg("p"), py::arg("n"), py::arg("scale") = 1);
  m.def("mul", &heckenil::mul);
  m.def("power", [](const QSeries& f, uint64_t e) { return heckenil::pow(f, e); });
  m.def("add", &heckenil::add);
  m.def("sub", &heckenil::sub);
  m.def("theta_op", &heckenil::theta_op);
  m.def("truncate", [](const QSeries& f, int64_t N) { return heckenil::truncate(f, N); });
  m.def("substitute", [](const QSeries& f, int64_t mm) { return heckenil::substitute(f, mm); });
  m.def("inverse", &heckenil::inverse);

  m.def(
      "hecke_t",
      [](const QSeries& f, uint32_t ell, py::object weight, bool modified) {
        HeckeSpec spec{ell, std::nullopt, modified};
        if (!weight.is_none()) spec.weight = weight.cast<int64_t>();
        return hecke_T(f, spec);
      },
      py::arg("f"), py::arg("ell"), py::arg("weight") = py::none(), py::arg("modified") = false);
  m.def("u_op", &u_op, py::arg("f"), py::arg("m"));

  m.def(
      "to_poly",
      [](const QSeries& f, const std::string& space, int64_t d, int64_t slack) {
        return to_poly(f, basis_arg(space, f.p), d, slack);
      },
      py::arg("f"), py::arg("space"), py::arg("d"), py::arg("slack") = 16);
  m.def("expand", &expand, py::arg("poly"), py::arg("n"));
  m.def("hecke_on_poly", &hecke_on_poly, py::arg("poly"), py::arg("ell"), py::arg("modified"),
        py::arg("slack") = 16);
  m.def("f_basis_element", &f_basis_element, py::arg("i"), py::arg("j"));
  m.def("rho_projection", &rho_projection, py::arg("f"), py::arg("i"));

  m.def(
      "nilpotency_index",
      [](int64_t k, uint32_t p, uint32_t ell, const std::string& space, bool modified,
         int64_t slack) {
        NilSpec spec{p, ell, basis_arg(space, p).kind, modified, slack, 0};
        return json_to_py(nilpotency_index(k, spec).to_json());
      },
      py::arg("k"), py::arg("p"), py::arg("ell"), py::arg("space") = "delta",
      py::arg("modified") = true, py::arg("slack") = 16);
  m.def(
      "degree_lower",
      [](int64_t k, uint32_t p, uint32_t ell, const std::string& space) {
        NilSpec spec{p, ell, basis_arg(space, p).kind, true, 16, 0};
        return degree_to_py(degree_lower(k, spec));
      },
      py::arg("k"), py::arg("p"), py::arg("ell"), py::arg("space") = "delta");
  m.def("ns_formula", &ns_formula, py::arg("k"));
  m.def(
      "thm13_bound",
      [](uint32_t p, uint32_t ell, int64_t k, const std::string& space, bool refine) {
        return thm13_bound(p, ell, k, basis_arg(space, p == 2 ? 3 : p).kind, refine);
      },
      py::arg("p"), py::arg("ell"), py::arg("k"), py::arg("space") = "delta",
      py::arg("refine") = false);

  py::class_<SIndexCalculator>(m, "SIndex")
      .def(py::init([](const std::string& variant, int64_t max_k) {
             ConjVariant v;
             if (variant == "s19") v = ConjVariant::s19_prime();
             else if (variant == "s29") v = ConjVariant::s29_double();
             else if (variant == "s3_7") v = ConjVariant::s_triple(7);
             else if (variant == "s3_11") v = ConjVariant::s_triple(11);
             else throw std::invalid_argument("variant: s19 | s29 | s3_7 | s3_11");
             return new SIndexCalculator(v, max_k);
           }),
           py::arg("variant"), py::arg("max_k"))
      .def("s_index", &SIndexCalculator::s_index)
      .def("modified_degree",
           [](SIndexCalculator& c, int64_t k) { return degree_to_py(c.modified_degree(k)); })
      .def("raw_degree",
           [](SIndexCalculator& c, int64_t k) { return degree_to_py(c.raw_degree(k)); });

  m.def("tcore_series", &tcore_series, py::arg("t"), py::arg("p"), py::arg("n"));
  m.def("power_partition_series", &power_partition_series, py::arg("r"), py::arg("n"),
        py::arg("p"));
  m.def("brute_force_tcore", &brute_force_tcore, py::arg("t"), py::arg("n"));

  m.def(
      "run_suite",
      [](const std::string& name, int64_t kmax, int64_t n_max, int64_t precision, int workers) {
        SuiteOptions opt;
        opt.kmax = kmax;
        opt.n_max = n_max;
        opt.precision = precision;
        opt.workers = workers;
        return json_to_py(run_suite(name, opt).to_json());
      },
      py::arg("name"), py::arg("kmax") = 0, py::arg("n_max") = 0, py::arg("precision") = 0,
      py::arg("workers") = 1);
  m.def("suite_names", &suite_names);
}
