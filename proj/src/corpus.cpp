#include <graphcat/corpus.hpp>

namespace graphcat {

namespace {

Quiver two_vertex_quiver(std::vector<std::pair<std::string, std::pair<std::string, std::string>>>
                             edges) {
    FiniteSet v = FiniteSet::of_leaves({"a", "b"});
    std::vector<Atom> names;
    std::vector<std::pair<Atom, Atom>> srcs, tgts;
    for (const auto& [name, ends] : edges) {
        Atom e = Atom::leaf(name);
        names.push_back(e);
        srcs.emplace_back(e, Atom::leaf(ends.first));
        tgts.emplace_back(e, Atom::leaf(ends.second));
    }
    FiniteSet es = FiniteSet::of(names);
    Atom src_map = Atom::mapping(srcs);
    Atom tgt_map = Atom::mapping(tgts);
    return Quiver(v, es, FiniteFunction::from_mapping_atom(es, v, src_map),
                  FiniteFunction::from_mapping_atom(es, v, tgt_map));
}

Hypergraph small_hypergraph(std::initializer_list<std::string_view> vertices,
                            std::vector<std::pair<std::string, std::vector<std::string>>> edges) {
    FiniteSet v = FiniteSet::of_leaves(vertices);
    std::vector<Atom> names;
    std::vector<std::pair<Atom, Atom>> endpoints;
    for (const auto& [name, ends] : edges) {
        Atom e = Atom::leaf(name);
        names.push_back(e);
        std::vector<Atom> subset;
        for (const auto& w : ends) subset.push_back(Atom::leaf(w));
        endpoints.emplace_back(e, Atom::subset(std::move(subset)));
    }
    FiniteSet es = FiniteSet::of(names);
    Atom eps = Atom::mapping(endpoints);
    return Hypergraph::from_map(v, es, [&](const Atom& e) { return eps.apply(e); });
}

Corpus build_corpus() {
    Corpus c;

    FiniteSet one = FiniteSet::one_to(1);
    FiniteSet two = FiniteSet::one_to(2);

    c.quivers = {
        {"empty", quiver_initial()},
        {"vertex", standard_quiver(StandardQuiver::VertexDiamond, one)},
        {"p1", corpus_p1()},
        {"loop", corpus_loop()},
        {"loops2", standard_quiver(StandardQuiver::EdgeStar, two)},
        {"parallel2", two_vertex_quiver({{"e", {"a", "b"}}, {"f", {"a", "b"}}})},
        {"cycle2", two_vertex_quiver({{"e", {"a", "b"}}, {"f", {"b", "a"}}})},
    };

    c.hypergraphs = {
        {"empty", hyper_initial()},
        {"vertex", standard_hypergraph(StandardHypergraph::VertexDiamond, one)},
        {"e0", corpus_k_edge(0)},
        {"e1", corpus_k_edge(1)},
        {"p1", corpus_path1()},
        {"vstar1", standard_hypergraph(StandardHypergraph::VertexStar,
                                       FiniteSet::of_leaves({"a"}))},
        {"terminal", hyper_terminal()},
        {"mixed2", small_hypergraph({"a", "b"}, {{"e", {"a"}}, {"f", {"a", "b"}}})},
    };

    c.multigraphs = {
        {"vertex", MultigraphView(standard_hypergraph(StandardHypergraph::VertexDiamond, one))},
        {"loop1", MultigraphView(corpus_k_edge(1))},
        {"p1", MultigraphView(corpus_path1())},
        {"p1_plus_vertex",
         MultigraphView(small_hypergraph({"u", "v", "w"}, {{"e", {"v", "w"}}}))},
        {"path2",
         MultigraphView(small_hypergraph({"a", "b", "c"}, {{"e", {"a", "b"}}, {"f", {"b", "c"}}}))},
        {"parallel",
         MultigraphView(small_hypergraph({"a", "b"}, {{"e", {"a", "b"}}, {"f", {"a", "b"}}}))},
    };

    c.incidence_hypergraphs = {
        {"empty", inc_initial()},
        {"v", standard_incidence(StandardIncidence::VDiamond, one)},
        {"e", standard_incidence(StandardIncidence::EDiamond, one)},
        {"i1", inc_terminal()},
        {"up_p1", upsilon(corpus_p1())},
        {"idia2", standard_incidence(StandardIncidence::IDiamond, two)},
        {"istar2", standard_incidence(StandardIncidence::IStar, two)},
        {"vstar2", standard_incidence(StandardIncidence::VStar, FiniteSet::of_leaves({"a", "b"}))},
        {"estar2", standard_incidence(StandardIncidence::EStar, FiniteSet::of_leaves({"a", "b"}))},
    };

    return c;
}

} // namespace

const Corpus& default_corpus() {
    static const Corpus corpus = build_corpus();
    return corpus;
}

Quiver corpus_p1() { return standard_quiver(StandardQuiver::Path1); }

Quiver corpus_loop() { return standard_quiver(StandardQuiver::Terminal); }

Hypergraph corpus_path1() {
    return standard_hypergraph(StandardHypergraph::KEdge, FiniteSet::of_leaves({"v", "w"}));
}

Hypergraph corpus_k_edge(std::size_t k) {
    std::vector<Atom> vertices;
    for (std::size_t i = 1; i <= k; ++i) vertices.push_back(Atom::leaf("v" + std::to_string(i)));
    return standard_hypergraph(StandardHypergraph::KEdge, FiniteSet::of(std::move(vertices)));
}

} // namespace graphcat
