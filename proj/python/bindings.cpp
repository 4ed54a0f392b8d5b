// Python bindings for the core operations. Edges cross the boundary as
// (src, dst) tuples; orientation results come back as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modec/digraph.hpp"
#include "modec/errors.hpp"
#include "modec/io.hpp"
#include "modec/mdtree.hpp"
#include "modec/oracle.hpp"
#include "modec/orient.hpp"
#include "modec/permrep.hpp"
#include "modec/reduce.hpp"

namespace py = pybind11;
using namespace modec;

namespace {

using PyEdge = std::pair<VertexId, VertexId>;

std::vector<PyEdge> to_pairs(const std::vector<Edge>& edges) {
    std::vector<PyEdge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.src, e.dst);
    return out;
}

std::vector<Edge> to_edges(const std::vector<PyEdge>& pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (const PyEdge& p : pairs) out.push_back({p.first, p.second});
    return out;
}

py::object orientation_or_none(const std::optional<EdgeOrientation>& o) {
    if (!o) return py::none();
    return py::cast(to_pairs(o->edges));
}

py::object failure_or_none(const std::optional<OrientationFailure>& f, const Digraph& g) {
    if (!f) return py::none();
    return py::cast(describe(*f, g));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "modular decomposition of digraphs via transitive closures";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<CyclicInputError>(m, "CyclicInputError", base);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init([](std::size_t n, const std::vector<PyEdge>& edges,
                         std::vector<std::string> labels) {
                 return Digraph(n, to_edges(edges), std::move(labels));
             }),
             py::arg("n"), py::arg("edges") = std::vector<PyEdge>{},
             py::arg("labels") = std::vector<std::string>{})
        .def("vertex_count", &Digraph::vertex_count)
        .def("edge_count", &Digraph::edge_count)
        .def("edges", [](const Digraph& g) { return to_pairs(g.edges()); })
        .def("has_edge", &Digraph::has_edge, py::arg("a"), py::arg("b"))
        .def("successors",
             [](const Digraph& g, VertexId v) {
                 auto s = g.successors(v);
                 return std::vector<VertexId>(s.begin(), s.end());
             },
             py::arg("v"))
        .def("label", &Digraph::label, py::arg("v"))
        .def("labels", &Digraph::labels)
        .def("vertex_by_label", &Digraph::vertex_by_label, py::arg("label"))
        .def("__eq__",
             [](const Digraph& a, const Digraph& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const Digraph& g) {
            return "<Digraph " + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges>";
        });

    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("serialize_edge_list", &serialize_edge_list, py::arg("g"));

    m.def("transitive_closure", &transitive_closure, py::arg("g"));
    m.def("transitive_reduction", &transitive_reduction, py::arg("g"));
    m.def("undirected_closure", &undirected_closure, py::arg("g"));
    m.def("complement", &complement, py::arg("g"));
    m.def("undirected_complement", &undirected_complement, py::arg("g"));
    m.def("inverse", [](const Digraph& g) { return inverse(g); }, py::arg("g"));
    m.def("induced_subgraph", &induced_subgraph, py::arg("g"), py::arg("vertices"));
    m.def("is_transitive", &is_transitive, py::arg("g"));
    m.def("is_acyclic", &is_acyclic, py::arg("g"));
    m.def("is_oriented", &is_oriented, py::arg("g"));
    m.def("is_undirected", &is_undirected, py::arg("g"));
    m.def("scc_contract",
          [](const Digraph& g) {
              auto [q, p] = scc_contract(g);
              return std::make_pair(std::move(q), p.blocks);
          },
          py::arg("g"));

    m.def("is_module", &is_module, py::arg("g"), py::arg("module"));
    m.def("all_modules", &all_modules, py::arg("g"),
          py::arg("bound") = kDefaultOracleBound);
    m.def("strong_modules", &strong_modules, py::arg("g"),
          py::arg("bound") = kDefaultOracleBound);
    m.def("quotient",
          [](const Digraph& g, std::vector<std::vector<VertexId>> blocks) {
              return quotient(g, Partition::over(g.vertex_count(), std::move(blocks)));
          },
          py::arg("g"), py::arg("blocks"));
    m.def("module_kind",
          [](const Digraph& g, const ModuleSet& module, std::size_t bound) {
              return to_string(module_kind(g, module, bound));
          },
          py::arg("g"), py::arg("module"), py::arg("bound") = kDefaultOracleBound);
    m.def("minimal_strong_superset", &minimal_strong_superset, py::arg("g"),
          py::arg("module"), py::arg("bound") = kDefaultOracleBound);

    py::class_<MDNode>(m, "MDNode")
        .def_property_readonly("kind",
                               [](const MDNode& n) { return to_string(n.kind); })
        .def_readonly("vertex", &MDNode::vertex)
        .def_readonly("children", &MDNode::children)
        .def_readonly("vertex_set", &MDNode::vertex_set);

    py::class_<MDTree>(m, "MDTree")
        .def("node_count", &MDTree::node_count)
        .def("node", &MDTree::node, py::arg("i"), py::return_value_policy::copy)
        .def("root", &MDTree::root)
        .def("empty", &MDTree::empty)
        .def("leaf_count", &MDTree::leaf_count)
        .def("labels", &MDTree::labels)
        .def("__eq__", [](const MDTree& a, const MDTree& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const MDTree& t) { return "<MDTree " + to_text(t) + ">"; });

    m.def("decompose_digraph", &decompose_digraph, py::arg("g"));
    m.def("decompose_undirected", &decompose_undirected, py::arg("ug"));
    m.def("decompose_transitive_dag", &decompose_transitive_dag, py::arg("g"));
    m.def("decompose_via_reduction", &decompose_via_reduction, py::arg("g"),
          py::arg("pre_reduce") = false);
    m.def("child_quotient", &child_quotient, py::arg("g"), py::arg("tree"),
          py::arg("node"));
    m.def("prune", &prune, py::arg("tree"));
    m.def("to_text", &to_text, py::arg("tree"));
    m.def("to_structured", &to_structured, py::arg("tree"));
    m.def("to_dot", [](const Digraph& g) { return to_dot(g); }, py::arg("g"));
    m.def("to_dot", [](const MDTree& t) { return to_dot(t); }, py::arg("tree"));

    py::class_<MergeStep>(m, "MergeStep")
        .def_property_readonly("rule",
                               [](const MergeStep& s) { return to_string(s.rule); })
        .def_readonly("a", &MergeStep::a)
        .def_readonly("b", &MergeStep::b)
        .def_readonly("merged", &MergeStep::merged)
        .def_readonly("a_vertices", &MergeStep::a_vertices)
        .def_readonly("b_vertices", &MergeStep::b_vertices)
        .def("__repr__", [](const MergeStep& s) {
            return "<MergeStep " + to_string(s.rule) + " " + std::to_string(s.a) + " " +
                   std::to_string(s.b) + " -> " + std::to_string(s.merged) + ">";
        });

    py::class_<Kernel>(m, "Kernel")
        .def_readonly("graph", &Kernel::graph)
        .def_readonly("fragments", &Kernel::fragments)
        .def_readonly("merge_log", &Kernel::merge_log);

    m.def("reduce",
          [](const Digraph& g, std::optional<std::uint64_t> shuffle_seed,
             bool check_exclusivity) {
              ReduceOptions opts;
              opts.shuffle_seed = shuffle_seed;
              opts.check_exclusivity = check_exclusivity;
              return reduce(g, opts);
          },
          py::arg("g"), py::arg("shuffle_seed") = std::nullopt,
          py::arg("check_exclusivity") = false);
    m.def("seq_applicable", &seq_applicable, py::arg("g"), py::arg("a"), py::arg("b"));
    m.def("par_applicable", &par_applicable, py::arg("g"), py::arg("a"), py::arg("b"));

    m.def("gamma",
          [](const Digraph& ug, PyEdge e1, PyEdge e2) {
              return gamma(ug, {e1.first, e1.second}, {e2.first, e2.second});
          },
          py::arg("ug"), py::arg("e1"), py::arg("e2"));
    m.def("implication_classes",
          [](const Digraph& ug) {
              std::vector<std::vector<PyEdge>> out;
              for (const auto& cls : implication_classes(ug)) out.push_back(to_pairs(cls));
              return out;
          },
          py::arg("ug"));
    m.def("transitive_orientation",
          [](const Digraph& ug) {
              OrientationResult r = transitive_orientation(ug);
              py::dict d;
              d["ok"] = r.ok();
              d["orientation"] = orientation_or_none(r.orientation);
              d["failure"] = failure_or_none(r.failure, ug);
              return d;
          },
          py::arg("ug"));
    m.def("orient_complement",
          [](const Digraph& g) {
              ComplementOrientationResult r = orient_complement(g);
              py::dict d;
              d["ok"] = r.ok();
              d["orientation"] = orientation_or_none(r.orientation);
              d["source"] = to_string(r.source);
              d["failure"] = failure_or_none(r.failure, g);
              return d;
          },
          py::arg("g"));

    py::class_<PermRep>(m, "PermRep")
        .def_property_readonly("l1",
                               [](const PermRep& p) { return p.l1.sequence; })
        .def_property_readonly("l2",
                               [](const PermRep& p) { return p.l2.sequence; })
        .def_readonly("labels", &PermRep::labels);

    m.def("build_permrep", &build_permrep, py::arg("g"));
    m.def("reachable", &reachable, py::arg("rep"), py::arg("u"), py::arg("v"));
}
