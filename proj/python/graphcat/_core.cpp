// Python bindings for the main operations: standard objects, functors,
// (co)limits, exponentials, hom search, and the law checks.

#include <graphcat/dot.hpp>
#include <graphcat/interchange.hpp>
#include <graphcat/laws.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace graphcat;

namespace {

FiniteSet set_from_labels(const std::vector<std::string>& labels) {
    std::vector<Atom> atoms;
    atoms.reserve(labels.size());
    for (const auto& l : labels) atoms.push_back(Atom::leaf(l));
    return FiniteSet::of(std::move(atoms));
}

Quiver quiver_from_json(const std::string& text) {
    Document doc = parse_document(text);
    if (auto* q = std::get_if<Quiver>(&doc)) return *q;
    throw ParseError("expected a quiver document");
}

Hypergraph hypergraph_from_json(const std::string& text) {
    Document doc = parse_document(text);
    if (auto* h = std::get_if<Hypergraph>(&doc)) return *h;
    throw ParseError("expected a hypergraph document");
}

IncidenceHypergraph incidence_from_json(const std::string& text) {
    Document doc = parse_document(text);
    if (auto* g = std::get_if<IncidenceHypergraph>(&doc)) return *g;
    throw ParseError("expected an incidence document");
}

Category category_arg(const std::string& name) {
    auto cat = category_from_string(name);
    if (!cat) throw ParseError("unknown category '" + name + "'");
    return *cat;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite categories of graphs, hypergraphs, and incidence structures";

    py::register_exception<BoundError>(m, "BoundError");
    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<Quiver>(m, "Quiver")
        .def_static("from_json", &quiver_from_json)
        .def("to_json", [](const Quiver& q) { return serialize(q); })
        .def("to_dot", [](const Quiver& q) { return emit_dot(q); })
        .def_property_readonly("num_vertices", [](const Quiver& q) { return q.vertices().size(); })
        .def_property_readonly("num_edges", [](const Quiver& q) { return q.edges().size(); })
        .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; })
        .def("__repr__", [](const Quiver& q) {
            return "Quiver(" + std::to_string(q.vertices().size()) + " vertices, " +
                   std::to_string(q.edges().size()) + " edges)";
        });

    py::class_<Hypergraph>(m, "Hypergraph")
        .def_static("from_json", &hypergraph_from_json)
        .def("to_json", [](const Hypergraph& g) { return serialize(g); })
        .def("to_dot", [](const Hypergraph& g) { return emit_dot(g); })
        .def_property_readonly("num_vertices",
                               [](const Hypergraph& g) { return g.vertices().size(); })
        .def_property_readonly("num_edges", [](const Hypergraph& g) { return g.edges().size(); })
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& g) {
            return "Hypergraph(" + std::to_string(g.vertices().size()) + " vertices, " +
                   std::to_string(g.edges().size()) + " edges)";
        });

    py::class_<IncidenceHypergraph>(m, "IncidenceHypergraph")
        .def_static("from_json", &incidence_from_json)
        .def("to_json", [](const IncidenceHypergraph& g) { return serialize(g); })
        .def("to_dot",
             [](const IncidenceHypergraph& g, const std::string& view) {
                 if (view == "plain") return emit_dot(g, DotView::Plain);
                 if (view == "bipartite") return emit_dot(g, DotView::Bipartite);
                 if (view == "incidence_matrix") return emit_dot(g, DotView::IncidenceMatrix);
                 throw ParseError("unknown view '" + view + "'");
             },
             py::arg("view") = "plain")
        .def_property_readonly("num_vertices",
                               [](const IncidenceHypergraph& g) { return g.vertices().size(); })
        .def_property_readonly("num_edges",
                               [](const IncidenceHypergraph& g) { return g.edges().size(); })
        .def_property_readonly("num_incidences",
                               [](const IncidenceHypergraph& g) { return g.incidences().size(); })
        .def("__eq__", [](const IncidenceHypergraph& a,
                          const IncidenceHypergraph& b) { return a == b; })
        .def("__repr__", [](const IncidenceHypergraph& g) {
            return "IncidenceHypergraph(" + std::to_string(g.vertices().size()) + " vertices, " +
                   std::to_string(g.edges().size()) + " edges, " +
                   std::to_string(g.incidences().size()) + " incidences)";
        });

    py::class_<LawReport>(m, "LawReport")
        .def_readonly("law_name", &LawReport::law_name)
        .def_readonly("instance", &LawReport::instance)
        .def_property_readonly("verdict",
                               [](const LawReport& r) { return to_string(r.verdict); })
        .def_readonly("evidence", &LawReport::evidence)
        .def("ok", &LawReport::ok)
        .def("to_json", [](const LawReport& r) { return serialize(r); })
        .def("__repr__", [](const LawReport& r) {
            return "LawReport(" + r.law_name + ": " + to_string(r.verdict) + ")";
        });

    // standard objects
    m.def("make_quiver",
          [](const std::string& kind, const std::vector<std::string>& labels) {
              if (kind == "vertex_star")
                  return standard_quiver(StandardQuiver::VertexStar, set_from_labels(labels));
              if (kind == "vertex_diamond")
                  return standard_quiver(StandardQuiver::VertexDiamond, set_from_labels(labels));
              if (kind == "edge_star")
                  return standard_quiver(StandardQuiver::EdgeStar, set_from_labels(labels));
              if (kind == "edge_diamond")
                  return standard_quiver(StandardQuiver::EdgeDiamond, set_from_labels(labels));
              if (kind == "terminal") return standard_quiver(StandardQuiver::Terminal);
              if (kind == "path1") return standard_quiver(StandardQuiver::Path1);
              throw ParseError("unknown standard quiver '" + kind + "'");
          },
          py::arg("kind"), py::arg("labels") = std::vector<std::string>{});
    m.def("make_hypergraph",
          [](const std::string& kind, const std::vector<std::string>& labels) {
              if (kind == "vertex_star")
                  return standard_hypergraph(StandardHypergraph::VertexStar,
                                             set_from_labels(labels));
              if (kind == "vertex_diamond")
                  return standard_hypergraph(StandardHypergraph::VertexDiamond,
                                             set_from_labels(labels));
              if (kind == "edge_star")
                  return standard_hypergraph(StandardHypergraph::EdgeStar, set_from_labels(labels));
              if (kind == "k_edge")
                  return standard_hypergraph(StandardHypergraph::KEdge, set_from_labels(labels));
              if (kind == "terminal") return standard_hypergraph(StandardHypergraph::Terminal);
              if (kind == "generator_GS")
                  return standard_hypergraph(StandardHypergraph::GeneratorGS,
                                             set_from_labels(labels));
              throw ParseError("unknown standard hypergraph '" + kind + "'");
          },
          py::arg("kind"), py::arg("labels") = std::vector<std::string>{});
    m.def("make_incidence",
          [](const std::string& kind, const std::vector<std::string>& labels) {
              if (kind == "v_star")
                  return standard_incidence(StandardIncidence::VStar, set_from_labels(labels));
              if (kind == "v_diamond")
                  return standard_incidence(StandardIncidence::VDiamond, set_from_labels(labels));
              if (kind == "e_star")
                  return standard_incidence(StandardIncidence::EStar, set_from_labels(labels));
              if (kind == "e_diamond")
                  return standard_incidence(StandardIncidence::EDiamond, set_from_labels(labels));
              if (kind == "i_star")
                  return standard_incidence(StandardIncidence::IStar, set_from_labels(labels));
              if (kind == "i_diamond")
                  return standard_incidence(StandardIncidence::IDiamond, set_from_labels(labels));
              if (kind == "terminal") return standard_incidence(StandardIncidence::Terminal);
              throw ParseError("unknown standard incidence hypergraph '" + kind + "'");
          },
          py::arg("kind"), py::arg("labels") = std::vector<std::string>{});

    // limits, colimits, exponentials
    m.def("quiver_product",
          [](const Quiver& a, const Quiver& b) { return quiver_product(a, b).object; });
    m.def("quiver_coproduct",
          [](const Quiver& a, const Quiver& b) { return quiver_coproduct(a, b).object; });
    m.def("hyper_product",
          [](const Hypergraph& a, const Hypergraph& b) { return hyper_product(a, b).object; });
    m.def("hyper_coproduct",
          [](const Hypergraph& a, const Hypergraph& b) { return hyper_coproduct(a, b).object; });
    m.def("inc_product", [](const IncidenceHypergraph& a, const IncidenceHypergraph& b) {
        return inc_product(a, b).object;
    });
    m.def("inc_coproduct", [](const IncidenceHypergraph& a, const IncidenceHypergraph& b) {
        return inc_coproduct(a, b).object;
    });
    m.def("quiver_exponential",
          [](const Quiver& q, const Quiver& r) { return quiver_exponential(q, r).power; },
          py::arg("base"), py::arg("target"), "the exponential target^base");
    m.def("classical_digraph_exponential", [](const Quiver& q, const Quiver& r) {
        return classical_digraph_exponential(q, r);
    });
    m.def("inc_exponential", [](const IncidenceHypergraph& g, const IncidenceHypergraph& h) {
        return inc_exponential(g, h).power;
    });

    // hom search
    m.def("quiver_hom_count", &quiver_hom_count);
    m.def("hyper_hom_count", &hyper_hom_count);
    m.def("incidence_hom_count", &incidence_hom_count);
    m.def("quiver_iso",
          [](const Quiver& a, const Quiver& b) { return quiver_iso(a, b).has_value(); });
    m.def("hyper_iso",
          [](const Hypergraph& a, const Hypergraph& b) { return hyper_iso(a, b).has_value(); });
    m.def("incidence_iso", [](const IncidenceHypergraph& a, const IncidenceHypergraph& b) {
        return incidence_iso(a, b).has_value();
    });

    // functors
    m.def("upsilon", [](const Quiver& q) { return upsilon(q); });
    m.def("upsilon_diamond", [](const IncidenceHypergraph& g) { return upsilon_diamond(g); });
    m.def("upsilon_star", [](const IncidenceHypergraph& g) { return upsilon_star(g); });
    m.def("incidence_forming", [](const Hypergraph& g) { return incidence_forming(g); });
    m.def("forget_incidence", [](const IncidenceHypergraph& g) { return forget_incidence(g); });
    m.def("deletion", [](const Hypergraph& h) { return del(h).multigraph.carrier(); });
    m.def("underlying", [](const Quiver& q) { return underlying(q).carrier(); });
    m.def("assoc_digraph",
          [](const Hypergraph& g) { return assoc_digraph(MultigraphView(g)).digraph; });
    m.def("explosion", [](const Hypergraph& g) { return explosion(MultigraphView(g)).carrier(); });
    m.def("loading", [](const Hypergraph& g) { return loading(g).object; });
    m.def("partial_morphism_representer",
          [](const Hypergraph& g) { return partial_morphism_representer(g).object; });

    // checks
    m.def("counterexample_names", &counterexample_names);
    m.def("adjunction_names", &adjunction_names);
    m.def("run_counterexample",
          [](const std::string& name) { return run_counterexample(name); });
    m.def("check_adjunction", [](const std::string& name) { return check_adjunction(name); });
    m.def("frobenius", [](const std::string& name) { return frobenius(name); });
    m.def("check_updiaup", [](const Quiver& q) { return check_updiaup(q); });
    m.def("check_currying",
          [](const std::string& cat) { return check_currying_bijections(category_arg(cat)); });
    m.def("check_universal_property", [](const std::string& kind, const std::string& cat) {
        auto up = universal_property_from_string(kind);
        if (!up) throw ParseError("unknown universal property '" + kind + "'");
        return check_universal_property(*up, category_arg(cat));
    });
}
