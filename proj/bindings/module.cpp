#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "imcol/algorithms.hpp"
#include "imcol/coloring.hpp"
#include "imcol/errors.hpp"
#include "imcol/gadgets.hpp"
#include "imcol/graph.hpp"
#include "imcol/oracle.hpp"
#include "imcol/preassignment.hpp"

namespace py = pybind11;
using namespace imcol;

namespace {

Multigraph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.push_back(Edge{u, v});
    return Multigraph(n, std::move(edges));
}

std::vector<std::pair<int, int>> edge_pairs(const Multigraph& g) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Interval and continuous edge colorings of multigraphs";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init<>())
        .def(py::init(&make_graph), py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Multigraph::vertex_count)
        .def_property_readonly("edge_count", &Multigraph::edge_count)
        .def_property_readonly("edges", &edge_pairs)
        .def("degree", &Multigraph::degree, py::arg("v"))
        .def("max_degree", &Multigraph::max_degree)
        .def("other_endpoint", &Multigraph::other_endpoint, py::arg("e"), py::arg("v"))
        .def("incident",
             [](const Multigraph& g, VertexId v) {
                 const auto span = g.incident(v);
                 return std::vector<EdgeId>(span.begin(), span.end());
             },
             py::arg("v"))
        .def("is_connected", &Multigraph::is_connected)
        .def("is_triangle_free", &Multigraph::is_triangle_free)
        .def("is_simple", &Multigraph::is_simple)
        .def("is_regular", &Multigraph::is_regular)
        .def(py::self == py::self)
        .def("__repr__", [](const Multigraph& g) {
            return "Multigraph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<Bipartition>(m, "Bipartition")
        .def(py::init<>())
        .def(py::init<std::vector<int>>(), py::arg("parts"))
        .def_static("prefix", &Bipartition::prefix, py::arg("vertex_count"), py::arg("k"))
        .def_property_readonly("vertex_count", &Bipartition::vertex_count)
        .def("part", &Bipartition::part, py::arg("v"))
        .def("part_vertices", &Bipartition::part_vertices, py::arg("which"))
        .def("prefix_size", &Bipartition::prefix_size)
        .def("check_against", &Bipartition::check_against, py::arg("g"))
        .def(py::self == py::self);

    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init<>())
        .def(py::init<std::vector<int>>(), py::arg("colors"))
        .def_property_readonly("colors", &EdgeColoring::colors)
        .def("color", &EdgeColoring::color, py::arg("e"))
        .def("min_color", &EdgeColoring::min_color)
        .def("max_color", &EdgeColoring::max_color)
        .def(py::self == py::self)
        .def("__repr__", [](const EdgeColoring& c) {
            std::string out = "EdgeColoring([";
            for (size_t i = 0; i < c.colors().size(); ++i) {
                if (i > 0) out += ", ";
                out += std::to_string(c.colors()[i]);
            }
            return out + "])";
        });

    py::class_<VertexSet>(m, "VertexSet")
        .def(py::init<>())
        .def(py::init<std::vector<VertexId>>(), py::arg("members"))
        .def_static("all", &VertexSet::all, py::arg("g"))
        .def_static("part", &VertexSet::part, py::arg("bip"), py::arg("which"))
        .def("contains", &VertexSet::contains, py::arg("v"))
        .def_property_readonly("members", &VertexSet::members);

    py::class_<Preassignment>(m, "Preassignment")
        .def(py::init<>())
        .def("set", &Preassignment::set, py::arg("v"), py::arg("colors"))
        .def("constrained", &Preassignment::constrained, py::arg("v"))
        .def("colors_of", &Preassignment::colors_of, py::arg("v"))
        .def("constrained_vertices", &Preassignment::constrained_vertices)
        .def(py::self == py::self);

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("vertex", &Spectrum::vertex)
        .def_readonly("colors", &Spectrum::colors)
        .def("is_consecutive", &Spectrum::is_consecutive);

    m.def("spectrum", &spectrum, py::arg("g"), py::arg("c"), py::arg("v"));
    m.def("is_proper", &is_proper, py::arg("g"), py::arg("c"));
    m.def("is_interval_on", &is_interval_on, py::arg("g"), py::arg("c"), py::arg("r"),
          py::arg("t"));
    m.def("is_continuous_on", &is_continuous_on, py::arg("g"), py::arg("c"), py::arg("r"),
          py::arg("t"));
    m.def("normalize_shift", &normalize_shift, py::arg("c"));
    m.def("interval_closure_check", &interval_closure_check, py::arg("g"), py::arg("c"));
    m.def("kempe_swap", &kempe_swap, py::arg("g"), py::arg("c"), py::arg("start"), py::arg("j"),
          py::arg("k"));

    py::class_<ParsedGraph>(m, "ParsedGraph")
        .def_readonly("graph", &ParsedGraph::graph)
        .def_readonly("bipartition", &ParsedGraph::bipartition);
    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); },
          py::arg("text"));
    m.def("serialize_graph", &serialize_graph, py::arg("g"),
          py::arg("bip") = std::optional<Bipartition>{});

    py::class_<ParsedColoring>(m, "ParsedColoring")
        .def_readonly("coloring", &ParsedColoring::coloring)
        .def_readonly("t", &ParsedColoring::t);
    m.def("parse_coloring", [](const std::string& text) { return parse_coloring(text); },
          py::arg("text"));
    m.def("serialize_coloring", &serialize_coloring, py::arg("c"), py::arg("t"));

    m.def("parse_preassignment",
          [](const std::string& text) { return parse_preassignment(text); }, py::arg("text"));
    m.def("serialize_preassignment", &serialize_preassignment, py::arg("pre"));

    auto orc = m.def_submodule("oracle", "Exhaustive small-instance searches");

    py::class_<oracle::SearchLimits>(orc, "SearchLimits")
        .def(py::init<>())
        .def_readwrite("node_cap", &oracle::SearchLimits::node_cap)
        .def_readwrite("max_edges", &oracle::SearchLimits::max_edges)
        .def_readwrite("ignore_edge_guard", &oracle::SearchLimits::ignore_edge_guard)
        .def_readwrite("jobs", &oracle::SearchLimits::jobs);

    py::class_<oracle::OracleResult>(orc, "OracleResult")
        .def_readonly("exists", &oracle::OracleResult::exists)
        .def_readonly("capped", &oracle::OracleResult::capped)
        .def_readonly("witness", &oracle::OracleResult::witness)
        .def_readonly("nodes_explored", &oracle::OracleResult::nodes_explored);

    py::class_<oracle::IntervalStats>(orc, "IntervalStats")
        .def_readonly("w", &oracle::IntervalStats::w)
        .def_readonly("W", &oracle::IntervalStats::W)
        .def_readonly("w_witness", &oracle::IntervalStats::w_witness)
        .def_readonly("W_witness", &oracle::IntervalStats::W_witness)
        .def_readonly("capped", &oracle::IntervalStats::capped)
        .def_readonly("nodes_explored", &oracle::IntervalStats::nodes_explored);

    py::class_<oracle::MembershipResult>(orc, "MembershipResult")
        .def_readonly("member", &oracle::MembershipResult::member)
        .def_readonly("capped", &oracle::MembershipResult::capped)
        .def_readonly("t", &oracle::MembershipResult::t)
        .def_readonly("witness", &oracle::MembershipResult::witness);

    py::class_<oracle::ChromaticIndexResult>(orc, "ChromaticIndexResult")
        .def_readonly("value", &oracle::ChromaticIndexResult::value)
        .def_readonly("witness", &oracle::ChromaticIndexResult::witness)
        .def_readonly("capped", &oracle::ChromaticIndexResult::capped);

    orc.def("solve_interval_on", &oracle::solve_interval_on, py::arg("g"), py::arg("r"),
            py::arg("t"), py::arg("limits") = oracle::SearchLimits{});
    orc.def("solve_continuous_on", &oracle::solve_continuous_on, py::arg("g"), py::arg("r"),
            py::arg("t"), py::arg("limits") = oracle::SearchLimits{});
    orc.def("solve_proper", &oracle::solve_proper, py::arg("g"), py::arg("t"),
            py::arg("limits") = oracle::SearchLimits{});
    orc.def("solve_list_edge_coloring", &oracle::solve_list_edge_coloring, py::arg("g"),
            py::arg("bip"), py::arg("pre"), py::arg("limits") = oracle::SearchLimits{});
    orc.def("solve_fixed_class_sizes", &oracle::solve_fixed_class_sizes, py::arg("g"),
            py::arg("sizes"), py::arg("limits") = oracle::SearchLimits{});
    orc.def("interval_stats", &oracle::interval_stats, py::arg("g"), py::arg("r"),
            py::arg("limits") = oracle::SearchLimits{});
    orc.def("interval_membership", &oracle::interval_membership, py::arg("g"),
            py::arg("limits") = oracle::SearchLimits{});
    orc.def("chromatic_index", &oracle::chromatic_index, py::arg("g"),
            py::arg("limits") = oracle::SearchLimits{});
    orc.def("enumerate_bipartite_multigraphs", &oracle::enumerate_bipartite_multigraphs,
            py::arg("max_n1"), py::arg("max_n2"), py::arg("max_m"), py::arg("visit"));
    orc.def("enumerate_multigraphs", &oracle::enumerate_multigraphs, py::arg("max_n"),
            py::arg("max_m"), py::arg("max_multiplicity"), py::arg("visit"));
    orc.def("sample_bipartite_multigraph", &oracle::sample_bipartite_multigraph, py::arg("n1"),
            py::arg("n2"), py::arg("m"), py::arg("seed"));

    m.def("compress_to_delta", &compress_to_delta, py::arg("g"), py::arg("c"));
    m.def("regular_step_down", &regular_step_down, py::arg("g"), py::arg("c"), py::arg("t"));
    m.def("sequential_max_coloring", &sequential_max_coloring, py::arg("g"), py::arg("bip"));
    m.def("continuous_on_part", &continuous_on_part, py::arg("g"), py::arg("bip"));

    py::class_<StepUpCase> step_case(m, "StepUpCase");
    py::enum_<StepUpCase::Tag>(step_case, "Tag")
        .value("RecolorDuplicate", StepUpCase::Tag::RecolorDuplicate)
        .value("RotateThenRecolor", StepUpCase::Tag::RotateThenRecolor)
        .value("DeleteAndRecurse", StepUpCase::Tag::DeleteAndRecurse);
    step_case.def_readonly("tag", &StepUpCase::tag)
        .def_readonly("x1", &StepUpCase::x1)
        .def_readonly("e1", &StepUpCase::e1)
        .def_readonly("s", &StepUpCase::s);
    m.def("classify_step_up", &classify_step_up, py::arg("g"), py::arg("bip"), py::arg("c"),
          py::arg("t"));

    py::class_<StepUpReport>(m, "StepUpReport")
        .def_readonly("oracle_fallbacks", &StepUpReport::oracle_fallbacks)
        .def_readonly("notes", &StepUpReport::notes);
    m.def("interval_step_up",
          [](const Multigraph& g, const Bipartition& bip, const EdgeColoring& c, int t) {
              StepUpReport report;
              EdgeColoring raised = interval_step_up(g, bip, c, t, &report);
              return std::make_pair(std::move(raised), std::move(report));
          },
          py::arg("g"), py::arg("bip"), py::arg("c"), py::arg("t"));

    py::class_<RealizeOutcome>(m, "RealizeOutcome")
        .def_readonly("coloring", &RealizeOutcome::coloring)
        .def_readonly("w1", &RealizeOutcome::w1)
        .def_readonly("capped", &RealizeOutcome::capped)
        .def_readonly("oracle_fallbacks", &RealizeOutcome::oracle_fallbacks);
    m.def("realize_spectrum", &realize_spectrum, py::arg("g"), py::arg("bip"), py::arg("t"),
          py::arg("limits") = oracle::SearchLimits{});

    py::class_<TraceOrigin> trace_origin(m, "TraceOrigin");
    py::enum_<TraceOrigin::Kind>(trace_origin, "Kind")
        .value("Original", TraceOrigin::Kind::Original)
        .value("Copy", TraceOrigin::Kind::Copy)
        .value("PendantFirst", TraceOrigin::Kind::PendantFirst)
        .value("PendantSecond", TraceOrigin::Kind::PendantSecond);
    trace_origin.def_readonly("kind", &TraceOrigin::kind)
        .def_readonly("ref", &TraceOrigin::ref);

    py::class_<ReductionOutput>(m, "ReductionOutput")
        .def_readonly("g1", &ReductionOutput::g1)
        .def_readonly("bip1", &ReductionOutput::bip1)
        .def_readonly("sets1", &ReductionOutput::sets1)
        .def_readonly("g", &ReductionOutput::g)
        .def_readonly("bip", &ReductionOutput::bip)
        .def_readonly("trace", &ReductionOutput::trace);
    m.def("build_reduction", &build_reduction, py::arg("h"), py::arg("bip_h"), py::arg("pre"));
    m.def("class_size_vector", &class_size_vector, py::arg("g"), py::arg("bip"));
    m.def("serialize_trace", &serialize_trace, py::arg("trace"));

    py::class_<EquivalenceReport>(m, "EquivalenceReport")
        .def_readonly("list_form", &EquivalenceReport::list_form)
        .def_readonly("constrained_form", &EquivalenceReport::constrained_form)
        .def_readonly("continuous_all_form", &EquivalenceReport::continuous_all_form)
        .def_readonly("continuous_part_form", &EquivalenceReport::continuous_part_form)
        .def_readonly("class_size_form", &EquivalenceReport::class_size_form)
        .def_readonly("inconclusive", &EquivalenceReport::inconclusive)
        .def_readonly("agree", &EquivalenceReport::agree);
    m.def("verify_equivalences", &verify_equivalences, py::arg("h"), py::arg("bip_h"),
          py::arg("pre"), py::arg("limits") = oracle::SearchLimits{});
}
