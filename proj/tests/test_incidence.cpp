#include <doctest.h>

#include <graphcat/corpus.hpp>
#include <graphcat/errors.hpp>
#include <graphcat/incidence.hpp>

#include <set>

using namespace graphcat;

namespace {

// Brute-force hom oracle for R: all triples of carrier maps, both squares
// checked directly.
std::size_t brute_force_hom_count(const IncidenceHypergraph& g, const IncidenceHypergraph& h) {
    std::size_t count = 0;
    for (const Atom& fv : all_functions(g.vertices(), h.vertices()))
        for (const Atom& fe : all_functions(g.edges(), h.edges()))
            for (const Atom& fi : all_functions(g.incidences(), h.incidences())) {
                bool ok = true;
                for (const Atom& i : g.incidences()) {
                    if (h.port()(fi.apply(i)) != fv.apply(g.port()(i)) ||
                        h.att()(fi.apply(i)) != fe.apply(g.att()(i))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) ++count;
            }
    return count;
}

} // namespace

TEST_CASE("standard incidence hypergraphs") {
    IncidenceHypergraph istar = standard_incidence(StandardIncidence::IStar,
                                                   FiniteSet::of_leaves({"p", "q"}));
    CHECK(istar.vertices().size() == 1);
    CHECK(istar.edges().size() == 1);
    CHECK(istar.incidences().size() == 2);

    IncidenceHypergraph idia = standard_incidence(StandardIncidence::IDiamond,
                                                  FiniteSet::one_to(1));
    CHECK(idia.vertices().size() == 1);
    CHECK(idia.edges().size() == 1);
    CHECK(idia.incidences().size() == 1);

    IncidenceHypergraph edia = standard_incidence(StandardIncidence::EDiamond,
                                                  FiniteSet::of_leaves({"a", "b"}));
    CHECK(edia.vertices().empty());
    CHECK(edia.edges().size() == 2);
    CHECK(edia.incidences().empty());
}

TEST_CASE("hom enumeration matches the brute-force oracle on the corpus") {
    const auto& corpus = default_corpus().incidence_hypergraphs;
    for (const auto& [na, a] : corpus)
        for (const auto& [nb, b] : corpus) {
            INFO(na, " -> ", nb);
            CHECK(incidence_hom_count(a, b) == brute_force_hom_count(a, b));
        }
}

TEST_CASE("hom counts for the canonical instances") {
    Quiver p1 = corpus_p1();
    CHECK(incidence_hom_count(upsilon(p1), upsilon(p1)) == 4);
    CHECK(brute_force_hom_count(upsilon(p1), upsilon(p1)) == 4);

    for (const auto& [name, g] : default_corpus().incidence_hypergraphs) {
        INFO(name);
        CHECK(incidence_hom_count(g, inc_terminal()) == 1);
    }

    IncidenceHypergraph istar2 = standard_incidence(StandardIncidence::IStar,
                                                    FiniteSet::one_to(2));
    IncidenceHypergraph idia1 = standard_incidence(StandardIncidence::IDiamond,
                                                   FiniteSet::one_to(1));
    CHECK(incidence_hom_count(istar2, idia1) == 1);
}

TEST_CASE("incidence limits") {
    Hypergraph p1h = corpus_path1();
    IncidenceHypergraph ip1 = incidence_forming(p1h);
    IncidenceSpan prod = inc_product(ip1, ip1);
    CHECK(prod.object.vertices().size() == 4);
    CHECK(prod.object.edges().size() == 1);
    CHECK(prod.object.incidences().size() == 4);

    for (const auto& [name, g] : default_corpus().incidence_hypergraphs) {
        INFO(name);
        CHECK(incidence_iso(inc_product(g, inc_terminal()).object, g).has_value());
    }
}

TEST_CASE("incidence product universal property") {
    IncidenceHypergraph i1 = inc_terminal();
    IncidenceHypergraph idia2 = standard_incidence(StandardIncidence::IDiamond,
                                                   FiniteSet::one_to(2));
    IncidenceSpan prod = inc_product(idia2, i1);
    for (const auto& rho1 : incidence_homs(i1, idia2))
        for (const auto& rho2 : incidence_homs(i1, i1)) {
            IncidenceMorphism m = inc_product_mediator(prod, rho1, rho2);
            CHECK(compose(prod.legs[0], m) == rho1);
            CHECK(compose(prod.legs[1], m) == rho2);
        }
}

TEST_CASE("upsilon converts edges to incidences") {
    Quiver p1 = corpus_p1();
    IncidenceHypergraph up = upsilon(p1);
    CHECK(up.vertices().size() == 2);
    CHECK(up.edges().size() == 2);
    CHECK(up.incidences().size() == 1);

    CHECK(incidence_iso(upsilon(corpus_loop()),
                        standard_incidence(StandardIncidence::IDiamond, FiniteSet::one_to(1)))
              .has_value());
}

TEST_CASE("upsilon is faithful on corpus parallel pairs") {
    const auto& corpus = default_corpus().quivers;
    for (const auto& [na, a] : corpus)
        for (const auto& [nb, b] : corpus) {
            auto homs = quiver_homs(a, b);
            for (std::size_t i = 0; i < homs.size(); ++i)
                for (std::size_t j = i + 1; j < homs.size(); ++j) {
                    INFO(na, " -> ", nb);
                    CHECK(upsilon_on_morphisms(homs[i]).serialize() !=
                          upsilon_on_morphisms(homs[j]).serialize());
                }
        }
}

TEST_CASE("the bipartite incidence digraph") {
    IncidenceHypergraph istar = standard_incidence(StandardIncidence::IStar,
                                                   FiniteSet::of_leaves({"p"}));
    CHECK(quiver_iso(upsilon_diamond(istar), corpus_p1()).has_value());

    IncidenceHypergraph edia = standard_incidence(StandardIncidence::EDiamond,
                                                  FiniteSet::of_leaves({"a", "b"}));
    Quiver bip = upsilon_diamond(edia);
    CHECK(bip.vertices().size() == 2);
    CHECK(bip.edges().empty());
}

TEST_CASE("the incidence-matrix quiver") {
    IncidenceHypergraph istar = standard_incidence(StandardIncidence::IStar,
                                                   FiniteSet::of_leaves({"p"}));
    Quiver star = upsilon_star(istar);
    CHECK(star.vertices().size() == 1);
    CHECK(star.edges().size() == 1);
    CHECK(quiver_iso(star, corpus_loop()).has_value());

    // directed loops correspond exactly to incidences
    for (const auto& [name, g] : default_corpus().incidence_hypergraphs) {
        Quiver q = upsilon_star(g);
        std::size_t loops = 0;
        for (const Atom& e : q.edges())
            if (q.src()(e) == q.tgt()(e)) ++loops;
        INFO(name);
        CHECK(loops == g.incidences().size());
    }
}

TEST_CASE("upsilon star of upsilon is the path exponential") {
    Quiver p1 = corpus_p1();
    Quiver star = upsilon_star(upsilon(p1));
    CHECK(star.vertices().size() == 4);
    CHECK(star.edges().size() == 4);
}

TEST_CASE("the incidence-forming functor") {
    IncidenceHypergraph ip1 = incidence_forming(corpus_path1());
    CHECK(ip1.vertices().size() == 2);
    CHECK(ip1.edges().size() == 1);
    CHECK(ip1.incidences().size() == 2);

    CHECK(incidence_forming(corpus_k_edge(0)).incidences().empty());
    CHECK(incidence_forming(corpus_k_edge(4)).incidences().size() == 4);
}

TEST_CASE("forgetting incidences undoes incidence forming exactly") {
    for (const auto& [name, g] : default_corpus().hypergraphs) {
        INFO(name);
        CHECK(forget_incidence(incidence_forming(g)) == g);
    }
    IncidenceHypergraph istar2 = standard_incidence(StandardIncidence::IStar,
                                                    FiniteSet::one_to(2));
    Hypergraph collapsed = forget_incidence(istar2);
    CHECK(collapsed.edges().size() == 1);
    CHECK(collapsed.endpoints(collapsed.edges().elements()[0]).parts().size() == 1);
}

TEST_CASE("incidence exponential of the upsilon path with itself") {
    IncidenceHypergraph up = upsilon(corpus_p1());
    IncidenceExponential exp = inc_exponential(up, up);
    CHECK(exp.power.vertices().size() == 4);
    CHECK(exp.power.edges().size() == 4);
    CHECK(exp.power.incidences().size() == 4);
}

TEST_CASE("exponential incidences are exactly the serialized hom-set") {
    const auto& corpus = default_corpus().incidence_hypergraphs;
    for (const auto& [ng, g] : corpus)
        for (const auto& [nh, h] : corpus) {
            IncidenceExponential exp = inc_exponential(g, h);
            auto homs = incidence_homs(g, h);
            INFO(ng, " ^ ", nh);
            REQUIRE(exp.power.incidences().size() == homs.size());
            for (const auto& m : homs) CHECK(exp.power.incidences().contains(m.serialize()));
        }
}

TEST_CASE("unit and terminal exponents") {
    IncidenceHypergraph i1 = inc_terminal();
    for (const auto& [name, g] : default_corpus().incidence_hypergraphs) {
        INFO(name);
        CHECK(incidence_iso(inc_exponential(i1, g).power, g).has_value());
        CHECK(incidence_iso(inc_exponential(g, i1).power, i1).has_value());
    }
}

TEST_CASE("incidence curry round trips and triangle identity") {
    IncidenceHypergraph up = upsilon(corpus_p1());
    IncidenceHypergraph k = standard_incidence(StandardIncidence::IDiamond, FiniteSet::one_to(1));
    IncidenceSpan prod = inc_product(up, k);
    for (const auto& psi : incidence_homs(prod.object, up)) {
        IncidenceMorphism hat = inc_curry(up, k, psi);
        CHECK(inc_uncurry(up, up, hat).serialize() == psi.serialize());
    }
    IncidenceExponential exp = inc_exponential(up, up);
    IncidenceMorphism hat = inc_curry(up, exp.power, exp.eval);
    CHECK(hat.serialize() == identity_morphism(exp.power).serialize());
}

TEST_CASE("currying with the terminal object picks out global elements") {
    IncidenceHypergraph up = upsilon(corpus_p1());
    IncidenceHypergraph i1 = inc_terminal();
    IncidenceSpan prod = inc_product(up, i1);
    auto direct = incidence_homs(prod.object, up);
    CHECK(direct.size() == incidence_hom_count(up, up));
    for (const auto& psi : direct) {
        IncidenceMorphism hat = inc_curry(up, i1, psi);
        // the single incidence of I1 names a hom-set member
        Atom chosen = hat.incidence_map()(i1.incidences().elements()[0]);
        CHECK(inc_exponential(up, up).power.incidences().contains(chosen));
    }
}

TEST_CASE("hom-count identities of the evaluation adjunctions") {
    const auto& corpus = default_corpus().incidence_hypergraphs;
    for (std::size_t n = 0; n <= 2; ++n) {
        FiniteSet x = FiniteSet::one_to(n);
        for (const auto& [name, g] : corpus) {
            INFO(name, " with |X| = ", n);
            CHECK(incidence_hom_count(standard_incidence(StandardIncidence::IDiamond, x), g) ==
                  checked_power(g.incidences().size(), n, 100000));
            CHECK(incidence_hom_count(standard_incidence(StandardIncidence::VDiamond, x), g) ==
                  checked_power(g.vertices().size(), n, 100000));
            CHECK(incidence_hom_count(g, standard_incidence(StandardIncidence::IStar, x)) ==
                  checked_power(n, g.incidences().size(), 100000));
        }
    }
}
