#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccc/families.hpp"
#include "ccc/graph.hpp"
#include "ccc/predictions.hpp"
#include "ccc/presentation.hpp"
#include "ccc/zagreb.hpp"

namespace py = pybind11;
using namespace ccc;

namespace {

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict report_dict(const ZagrebReport& r) { return to_py(r.to_json()); }

std::vector<std::pair<long long, long long>> decomp_parts(const FiniteGroup& g) {
  auto d = detect_clique_union(ccc_graph(g));
  if (!d) throw std::runtime_error("CCC graph is not a union of cliques");
  return d->parts;
}

}  // namespace

PYBIND11_MODULE(pyccc, m) {
  m.doc() = "Commuting conjugacy class graphs and Zagreb indices";

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def("element_order", &FiniteGroup::element_order)
      .def("mul", py::overload_cast<int, int>(&FiniteGroup::mul, py::const_))
      .def_property_readonly("center_order",
                             [](const FiniteGroup& g) {
                               return conjugacy_data(g).center.size();
                             })
      .def_property_readonly("class_sizes",
                             [](const FiniteGroup& g) {
                               return conjugacy_data(g).class_size_multiset();
                             })
      .def_property_readonly("structure",
                             [](const FiniteGroup& g) {
                               return recognize_structure(g).to_string();
                             })
      .def_property_readonly("commuting_probability",
                             [](const FiniteGroup& g) {
                               Rat r = commuting_probability(g);
                               return py::module_::import("fractions")
                                   .attr("Fraction")(r.str());
                             })
      .def("to_json", [](const FiniteGroup& g) { return to_py(g.to_json()); })
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("build_family", [](const std::string& s) {
    return build_family(FamilySpec::parse(s));
  });
  m.def("build_aux", [](const std::string& s) { return build_aux(AuxSpec::parse(s)); });
  m.def(
      "enumerate_presentation",
      [](const std::string& text, int limit) {
        Presentation p = Presentation::parse(text);
        return limit > 0 ? coset_enumerate(p, limit) : coset_enumerate(p);
      },
      py::arg("text"), py::arg("limit") = 0);

  m.def("ccc_decomposition", &decomp_parts,
        "CCC clique decomposition as (multiplicity, size) pairs");
  m.def("ccc_decomposition_str", [](const FiniteGroup& g) {
    auto d = detect_clique_union(ccc_graph(g));
    if (!d) throw std::runtime_error("CCC graph is not a union of cliques");
    return d->to_string();
  });
  m.def("ccc_dot", [](const FiniteGroup& g) { return export_dot(ccc_graph(g)); });

  m.def("zagreb_report", [](const FiniteGroup& g) {
    return report_dict(zagreb_report(ccc_graph(g)));
  });
  m.def("report_decomposition", [](const std::string& text) {
    return report_dict(report_from_decomposition(CliqueDecomposition::parse(text)));
  });
  m.def("report_graph", [](const std::string& expr) {
    return report_dict(zagreb_report(parse_graph_expr(expr)));
  });

  m.def("predicted", [](const std::string& spec) {
    PredictedStructure ps = predicted_decomposition(FamilySpec::parse(spec));
    py::dict d;
    d["case_label"] = ps.case_label;
    d["decomposition"] = ps.decomposition.to_string();
    d["m1"] = py::int_(py::str(ps.closed_m1.str()));
    d["m2"] = py::int_(py::str(ps.closed_m2.str()));
    d["expected_equality"] = ps.expected_equality;
    return d;
  });
  m.def("verify_family", [](const std::string& spec) {
    return to_py(verify_family(FamilySpec::parse(spec)).to_json());
  });
  m.def("verify_group", [](const FiniteGroup& g) {
    return to_py(verify_group(g, quotient_prediction(infer_quotient_case(g))).to_json());
  });

  py::register_exception<InvalidParams>(m, "InvalidParams", PyExc_ValueError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
  py::register_exception<DivisibilityError>(m, "DivisibilityError", PyExc_ValueError);
}
