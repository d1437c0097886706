#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcskit/arrangement.hpp"
#include "lcskit/holonomy.hpp"
#include "lcskit/presentation.hpp"
#include "lcskit/ranks.hpp"
#include "lcskit/relgraph.hpp"

namespace py = pybind11;

namespace {

py::object big(const lcskit::BigInt& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

lcskit::Presentation parse(const std::string& text, bool strict) {
    return lcskit::parse_presentation(text, strict);
}

py::dict validate_text(const std::string& text, bool strict) {
    auto p = parse(text, strict);
    auto rep = lcskit::validate(p);
    py::list violations;
    for (const auto& v : rep.violations) violations.append(v.message);
    py::dict out;
    out["ok"] = rep.ok();
    out["violations"] = violations;
    out["conjugation_free"] = rep.ok() && lcskit::is_conjugation_free(p);
    out["generators"] = p.n;
    out["relations"] = p.relations.size();
    return out;
}

py::dict graph_summary(const std::string& text, bool strict) {
    auto g = lcskit::build_graph(parse(text, strict));
    py::dict out;
    out["vertices"] = g.vertex_count();
    out["edges"] = g.edge_count();
    out["beta"] = lcskit::betti(g);
    out["cycle_separated"] = lcskit::is_cycle_separated(g);
    out["cf_graph"] = lcskit::is_conjugation_free_graph(g);
    out["report"] = lcskit::graph_report(g);
    return out;
}

py::list phi_table(const std::string& text, int max_k, bool assume_decomposable, bool strict) {
    auto p = parse(text, strict);
    auto table = lcskit::phi_formula(lcskit::incidence_of(p), max_k, assume_decomposable);
    py::list out;
    for (const auto& [k, v] : table.phi) out.append(big(v));
    return out;
}

py::dict holonomy(const std::string& text, bool strict) {
    auto p = parse(text, strict);
    auto rep = lcskit::holonomy_report(lcskit::incidence_of(p), p.n);
    py::dict out;
    out["phi2"] = big(rep.phi2);
    out["phi3"] = big(rep.phi3);
    out["dimL2"] = big(rep.dim_l2);
    out["dimL3"] = big(rep.dim_l3);
    out["relator_rank_deg2"] = rep.relator_rank_deg2;
    out["ideal_rank_deg3"] = rep.ideal_rank_deg3;
    return out;
}

py::tuple lcs_check(const std::string& text, int max_k, bool assume_decomposable, bool strict) {
    auto p = parse(text, strict);
    auto chk = lcskit::lcs_series_check(lcskit::incidence_of(p), max_k, assume_decomposable);
    return py::make_tuple(chk.ok, chk.first_diff);
}

std::string realize_text(const std::string& text, bool strict) {
    auto p = parse(text, strict);
    return lcskit::write_arrangement(lcskit::realize(lcskit::build_graph(p), p.n));
}

std::string lattice_report_text(const std::string& arrangement_text, bool allow_parallel) {
    auto arr = lcskit::parse_arrangement(arrangement_text);
    return lcskit::lattice_report(lcskit::lattice(arr, allow_parallel));
}

py::dict round_trip(const std::string& text, bool strict) {
    auto rep = lcskit::round_trip_check(parse(text, strict));
    py::dict out;
    out["ok"] = rep.ok();
    out["graphs_match"] = rep.graphs_match;
    out["census_match"] = rep.census_match;
    out["incidence_match"] = rep.coverage_match;
    out["detail"] = rep.detail;
    return out;
}

}  // namespace

PYBIND11_MODULE(_lcskit, m) {
    m.doc() = "Lower central series ranks of cyclic-related groups and line arrangements";

    py::register_exception<lcskit::ParseError>(m, "PresentationParseError", PyExc_ValueError);
    py::register_exception<lcskit::HypothesisError>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<lcskit::ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    m.def("validate", &validate_text, py::arg("text"), py::arg("strict") = false);
    m.def("canonical", [](const std::string& text, bool strict) {
              return lcskit::serialize(parse(text, strict));
          },
          py::arg("text"), py::arg("strict") = false);
    m.def("graph_summary", &graph_summary, py::arg("text"), py::arg("strict") = false);
    m.def("witt", [](int k, int n) { return big(lcskit::witt(k, n)); }, py::arg("k"),
          py::arg("n"));
    m.def("phi_table", &phi_table, py::arg("text"), py::arg("max_k") = 6,
          py::arg("assume_decomposable") = false, py::arg("strict") = false);
    m.def("phi2_combinatorial", [](const std::string& text, bool strict) {
              return big(lcskit::phi2_combinatorial(lcskit::incidence_of(parse(text, strict))));
          },
          py::arg("text"), py::arg("strict") = false);
    m.def("b2", [](const std::string& text, bool strict) {
              return big(lcskit::b2(lcskit::incidence_of(parse(text, strict))));
          },
          py::arg("text"), py::arg("strict") = false);
    m.def("lcs_check", &lcs_check, py::arg("text"), py::arg("max_k") = 8,
          py::arg("assume_decomposable") = false, py::arg("strict") = false);
    m.def("holonomy", &holonomy, py::arg("text"), py::arg("strict") = false);
    m.def("realize", &realize_text, py::arg("text"), py::arg("strict") = false);
    m.def("lattice_report", &lattice_report_text, py::arg("arrangement_text"),
          py::arg("allow_parallel") = false);
    m.def("round_trip", &round_trip, py::arg("text"), py::arg("strict") = false);
}
