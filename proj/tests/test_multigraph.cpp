#include <doctest.h>

#include <graphcat/corpus.hpp>
#include <graphcat/errors.hpp>
#include <graphcat/multigraph.hpp>

using namespace graphcat;

TEST_CASE("the multigraph view enforces edge sizes") {
    CHECK_NOTHROW(MultigraphView(corpus_path1()));
    CHECK_THROWS_AS(MultigraphView(corpus_k_edge(0)), ValidationError);
    CHECK_THROWS_AS(MultigraphView(corpus_k_edge(4)), ValidationError);
}

TEST_CASE("deletion keeps only small edges") {
    Deletion d4 = del(corpus_k_edge(4));
    CHECK(d4.multigraph.carrier().vertices().size() == 4);
    CHECK(d4.multigraph.carrier().edges().empty());

    Deletion d1 = del(corpus_k_edge(1));
    CHECK(d1.multigraph.carrier() == corpus_k_edge(1));

    Deletion dp = del(hyper_product(corpus_path1(), corpus_path1()).object);
    CHECK(dp.multigraph.carrier().edges().size() == 2);
}

TEST_CASE("del_factor is the unique factorization through the inclusion") {
    MultigraphView p1(corpus_path1());
    Hypergraph target = hyper_terminal();
    for (const auto& phi : hyper_homs(p1.carrier(), target)) {
        HyperMorphism hat = del_factor(MultigraphView(p1.carrier()), phi);
        Deletion d = del(target);
        CHECK(compose(d.inclusion, hat) == phi);
        std::size_t count = 0;
        for (const auto& cand : hyper_homs(p1.carrier(), d.multigraph.carrier()))
            if (compose(d.inclusion, cand) == phi) ++count;
        CHECK(count == 1);
    }
}

TEST_CASE("the underlying multigraph of a quiver") {
    MultigraphView up1 = underlying(corpus_p1());
    CHECK(up1.carrier().edges().size() == 1);
    CHECK(up1.carrier().endpoints(up1.carrier().edges().elements()[0]).parts().size() == 2);

    MultigraphView uloop = underlying(corpus_loop());
    CHECK(uloop.carrier().vertices().size() == 1);
    CHECK(uloop.carrier().endpoints(uloop.carrier().edges().elements()[0]).parts().size() == 1);

    MultigraphView uprod = underlying(quiver_product(corpus_p1(), corpus_p1()).object);
    CHECK(uprod.carrier().vertices().size() == 4);
    CHECK(uprod.carrier().edges().size() == 1);
}

TEST_CASE("the associated digraph doubles 2-edges and loops 1-edges") {
    AssociatedDigraph d2 = assoc_digraph(MultigraphView(corpus_path1()));
    CHECK(d2.digraph.edges().size() == 2);

    AssociatedDigraph d1 = assoc_digraph(MultigraphView(corpus_k_edge(1)));
    CHECK(d1.digraph.edges().size() == 1);
    const Atom& loop = d1.digraph.edges().elements()[0];
    CHECK(d1.digraph.src()(loop) == d1.digraph.tgt()(loop));

    // D(P1) then underlying: two parallel undirected edges
    MultigraphView back = underlying(d2.digraph);
    CHECK(back.carrier().edges().size() == 2);
    for (const Atom& e : back.carrier().edges())
        CHECK(back.carrier().endpoints(e).parts().size() == 2);
}

TEST_CASE("theta drops direction data and is epic") {
    for (const auto& [name, g] : default_corpus().multigraphs) {
        AssociatedDigraph assoc = assoc_digraph(g);
        INFO(name);
        CHECK(classify_morphism(assoc.theta).epi);
    }
    // U D is not the identity: the path gains a parallel edge
    AssociatedDigraph assoc = assoc_digraph(MultigraphView(corpus_path1()));
    CHECK(!hyper_iso(underlying(assoc.digraph).carrier(), corpus_path1()).has_value());
}

TEST_CASE("assoc_factor is the unique factorization through theta") {
    Quiver p1 = corpus_p1();
    MultigraphView target(corpus_path1());
    MultigraphView up1 = underlying(p1);
    AssociatedDigraph assoc = assoc_digraph(target);
    for (const auto& phi : hyper_homs(up1.carrier(), target.carrier())) {
        QuiverMorphism hat = assoc_factor(p1, target, phi);
        CHECK(compose(assoc.theta, underlying_on_morphisms(hat)) == phi);
        std::size_t count = 0;
        for (const auto& cand : quiver_homs(p1, assoc.digraph))
            if (compose(assoc.theta, underlying_on_morphisms(cand)) == phi) ++count;
        CHECK(count == 1);
    }
}

TEST_CASE("explosion separates edges and keeps isolated vertices") {
    MultigraphView p1(corpus_path1());
    MultigraphView x1 = explosion(p1);
    CHECK(x1.carrier().vertices().size() == 2);
    CHECK(x1.carrier().edges().size() == 1);

    Hypergraph with_isolated =
        Hypergraph(FiniteSet::of_leaves({"u", "v", "w"}), FiniteSet::of_leaves({"e"}),
                   {Atom::parse("{v,w}")});
    MultigraphView x2 = explosion(MultigraphView(with_isolated));
    CHECK(x2.carrier().vertices().size() == 3);
    CHECK(x2.carrier().edges().size() == 1);

    MultigraphView vertex_only(standard_hypergraph(StandardHypergraph::VertexDiamond,
                                                   FiniteSet::of_leaves({"a", "b"})));
    MultigraphView x3 = explosion(vertex_only);
    CHECK(hyper_iso(x3.carrier(), vertex_only.carrier()).has_value());
}

TEST_CASE("projective covers are coessential epimorphisms") {
    for (const auto& [name, g] : default_corpus().multigraphs) {
        HyperMorphism p = projective_cover(g);
        MorphismFlags flags = classify_morphism(p);
        INFO(name);
        CHECK(flags.epi);
        CHECK(flags.coessential_epi);
        CHECK(p.edge_map().is_bijective());
        CHECK(is_projective_multigraph(MultigraphView(p.dom())));
    }
}

TEST_CASE("a 1-loop explodes onto a folded path") {
    MultigraphView loop(corpus_k_edge(1));
    HyperMorphism p = projective_cover(loop);
    CHECK(p.dom().vertices().size() == 2);
    CHECK(p.edge_map().is_bijective());
    CHECK(classify_morphism(p).coessential_epi);
}

TEST_CASE("projectivity matches the structural characterization by iso search") {
    for (const auto& [name, g] : default_corpus().multigraphs) {
        bool structural = is_projective_multigraph(g);
        // compare against U(V_diamond(S) + E_diamond(T)) for all small S, T
        bool matched = false;
        for (std::size_t s = 0; s <= 4 && !matched; ++s)
            for (std::size_t t = 0; t <= 3 && !matched; ++t) {
                Quiver iso_part = standard_quiver(StandardQuiver::VertexDiamond,
                                                  FiniteSet::one_to(s));
                Quiver path_part = standard_quiver(StandardQuiver::EdgeDiamond,
                                                   FiniteSet::one_to(t));
                MultigraphView candidate =
                    underlying(quiver_coproduct(iso_part, path_part).object);
                if (hyper_iso(candidate.carrier(), g.carrier()).has_value()) matched = true;
            }
        INFO(name);
        CHECK(structural == matched);
    }
}

TEST_CASE("multigraph envelopes through deletion") {
    MultigraphEnvelopes env = m_envelopes(MultigraphView(corpus_path1()));
    CHECK(env.injective_envelope.carrier().edges().size() == 3);
    CHECK(compose(del(loading(corpus_path1()).object).inclusion, env.envelope_embedding) ==
          loading(corpus_path1()).embedding);

    MultigraphView point(standard_hypergraph(StandardHypergraph::VertexDiamond,
                                             FiniteSet::of_leaves({"v"})));
    MultigraphEnvelopes env_point = m_envelopes(point);
    CHECK(env_point.injective_envelope.carrier().edges().size() == 1);

    // a multigraph with every 1- and 2-subset already hit stays put
    Hypergraph complete(FiniteSet::of_leaves({"a", "b"}),
                        FiniteSet::of_leaves({"ea", "eab", "eb"}),
                        {Atom::parse("{a}"), Atom::parse("{a,b}"), Atom::parse("{b}")});
    MultigraphEnvelopes env_complete = m_envelopes(MultigraphView(complete));
    CHECK(hyper_iso(env_complete.injective_envelope.carrier(), complete).has_value());
}

TEST_CASE("envelope edge counts for the path") {
    MultigraphEnvelopes env = m_envelopes(MultigraphView(corpus_path1()));
    // Del of the partial morphism representer keeps the original edge and
    // the five small subsets of the three representer vertices
    std::size_t small = 0;
    PartialMorphismRepresenter rep = partial_morphism_representer(corpus_path1());
    for (const Atom& e : rep.object.edges()) {
        std::size_t n = rep.object.endpoints(e).parts().size();
        if (n >= 1 && n <= 2) ++small;
    }
    CHECK(env.partial_morphism_representer.carrier().edges().size() == small);
}
