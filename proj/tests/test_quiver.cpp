#include <doctest.h>

#include <graphcat/corpus.hpp>
#include <graphcat/errors.hpp>
#include <graphcat/incidence.hpp>
#include <graphcat/quiver.hpp>

#include <random>
#include <set>

using namespace graphcat;

namespace {

// Independent oracle: check every (vertex map, edge map) combination
// directly against the commuting squares, no pruning, no shared code with
// the search kernel.
std::size_t brute_force_hom_count(const Quiver& q, const Quiver& r) {
    std::size_t count = 0;
    FiniteSet vmaps = all_functions(q.vertices(), r.vertices());
    FiniteSet emaps = all_functions(q.edges(), r.edges());
    for (const Atom& fv : vmaps)
        for (const Atom& fe : emaps) {
            bool ok = true;
            for (const Atom& e : q.edges()) {
                if (r.src()(fe.apply(e)) != fv.apply(q.src()(e)) ||
                    r.tgt()(fe.apply(e)) != fv.apply(q.tgt()(e))) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++count;
        }
    return count;
}

} // namespace

TEST_CASE("standard quivers") {
    Quiver star = standard_quiver(StandardQuiver::VertexStar, FiniteSet::of_leaves({"a", "b"}));
    CHECK(star.vertices().size() == 2);
    CHECK(star.edges().size() == 4);

    Quiver p1 = corpus_p1();
    CHECK(p1.vertices().size() == 2);
    CHECK(p1.edges().size() == 1);

    Quiver loops = standard_quiver(StandardQuiver::EdgeStar, FiniteSet::of_leaves({"e", "f"}));
    CHECK(loops.vertices().size() == 1);
    CHECK(loops.edges().size() == 2);
    CHECK(loops.src()(Atom::leaf("e")) == loops.tgt()(Atom::leaf("e")));
}

TEST_CASE("hom counts for the canonical instances") {
    Quiver p1 = corpus_p1();
    Quiver loop = corpus_loop();
    CHECK(quiver_hom_count(p1, loop) == 1);
    CHECK(quiver_hom_count(loop, p1) == 0);

    Quiver star2 = standard_quiver(StandardQuiver::VertexStar, FiniteSet::of_leaves({"a", "b"}));
    CHECK(brute_force_hom_count(p1, star2) == 4);
    CHECK(quiver_hom_count(p1, star2) == 4);
}

TEST_CASE("hom enumeration matches the brute-force oracle on the corpus") {
    const auto& corpus = default_corpus().quivers;
    for (const auto& [na, a] : corpus)
        for (const auto& [nb, b] : corpus) {
            INFO(na, " -> ", nb);
            CHECK(quiver_hom_count(a, b) == brute_force_hom_count(a, b));
        }
}

TEST_CASE("hom lists are stable, distinct, and valid") {
    Quiver p1 = corpus_p1();
    Quiver star2 = standard_quiver(StandardQuiver::VertexStar, FiniteSet::of_leaves({"a", "b"}));
    auto homs = quiver_homs(p1, star2);
    REQUIRE(homs.size() == 4);
    std::set<std::string> keys;
    for (const auto& m : homs) keys.insert(m.serialize().text());
    CHECK(keys.size() == 4);
    CHECK(*keys.begin() == homs.front().serialize().text());
}

TEST_CASE("hom counts are invariant under relabeling") {
    std::mt19937 rng(20240817);
    const auto& corpus = default_corpus().quivers;
    for (const auto& [name, q] : corpus) {
        // a deterministic "random" bijective relabel
        std::vector<Atom> vnames, enames;
        for (std::size_t i = 0; i < q.vertices().size(); ++i)
            vnames.push_back(Atom::leaf("rv" + std::to_string(rng() % 1000) + "_" +
                                        std::to_string(i)));
        for (std::size_t i = 0; i < q.edges().size(); ++i)
            enames.push_back(Atom::leaf("re" + std::to_string(rng() % 1000) + "_" +
                                        std::to_string(i)));
        FiniteFunction vb = FiniteFunction::from_values(q.vertices(), FiniteSet::of(vnames),
                                                        vnames);
        FiniteFunction eb = FiniteFunction::from_values(q.edges(), FiniteSet::of(enames), enames);
        Quiver relabeled = relabel(q, vb, eb);
        Quiver p1 = corpus_p1();
        CHECK(quiver_hom_count(p1, q) == quiver_hom_count(p1, relabeled));
        CHECK(quiver_hom_count(q, p1) == quiver_hom_count(relabeled, p1));
        CHECK(quiver_iso(q, relabeled).has_value());
    }
}

TEST_CASE("composition is associative over enumerated hom-sets") {
    Quiver p1 = corpus_p1();
    Quiver star2 = standard_quiver(StandardQuiver::VertexStar, FiniteSet::of_leaves({"a", "b"}));
    Quiver loop = corpus_loop();
    auto fs = quiver_homs(p1, star2);
    auto gs = quiver_homs(star2, loop);
    for (const auto& f : fs)
        for (const auto& g : gs) {
            CHECK(compose(g, compose(identity_morphism(star2), f)) ==
                  compose(compose(g, identity_morphism(star2)), f));
            CHECK(compose(identity_morphism(loop), compose(g, f)) == compose(g, f));
        }
}

TEST_CASE("quiver product of the directed path with itself") {
    Quiver p1 = corpus_p1();
    QuiverSpan prod = quiver_product(p1, p1);
    CHECK(prod.object.vertices().size() == 4);
    CHECK(prod.object.edges().size() == 1);
}

TEST_CASE("product with the terminal quiver is the identity up to iso") {
    for (const auto& [name, q] : default_corpus().quivers) {
        QuiverSpan prod = quiver_product(q, quiver_terminal());
        INFO(name);
        CHECK(quiver_iso(prod.object, q).has_value());
    }
}

TEST_CASE("equalizer of an identical pair is the domain") {
    Quiver p1 = corpus_p1();
    Quiver star2 = standard_quiver(StandardQuiver::VertexStar, FiniteSet::of_leaves({"a", "b"}));
    auto homs = quiver_homs(p1, star2);
    QuiverSpan eq = quiver_equalizer(homs.front(), homs.front());
    CHECK(eq.object == p1);
}

TEST_CASE("quiver colimits") {
    Quiver p1 = corpus_p1();
    QuiverSpan co = quiver_coproduct(p1, p1);
    CHECK(co.object.vertices().size() == 4);
    CHECK(co.object.edges().size() == 2);

    auto homs = quiver_homs(p1, p1);
    REQUIRE(!homs.empty());
    QuiverSpan ce = quiver_coequalizer(homs.front(), homs.front());
    CHECK(quiver_iso(ce.object, p1).has_value());
}

TEST_CASE("product mediator is the unique cone factorization") {
    Quiver p1 = corpus_p1();
    Quiver loop = corpus_loop();
    QuiverSpan prod = quiver_product(p1, loop);
    for (const auto& rho1 : quiver_homs(p1, p1))
        for (const auto& rho2 : quiver_homs(p1, loop)) {
            QuiverMorphism m = quiver_product_mediator(prod, rho1, rho2);
            CHECK(compose(prod.legs[0], m) == rho1);
            CHECK(compose(prod.legs[1], m) == rho2);
            std::size_t count = 0;
            for (const auto& cand : quiver_homs(p1, prod.object))
                if (compose(prod.legs[0], cand) == rho1 && compose(prod.legs[1], cand) == rho2)
                    ++count;
            CHECK(count == 1);
        }
}

TEST_CASE("the quiver exponential of the path with itself") {
    Quiver p1 = corpus_p1();
    QuiverExponential exp = quiver_exponential(p1, p1);
    CHECK(exp.power.vertices().size() == 4);
    CHECK(exp.power.edges().size() == 4);

    // expected edges, read as indices into the sorted vertex
    // functions f1..f4: {(f1,f2),(f1,f4),(f2,f2),(f2,f4)}
    std::set<std::pair<std::size_t, std::size_t>> pattern;
    for (const Atom& e : exp.power.edges())
        pattern.emplace(exp.power.vertices().index_of(exp.power.src()(e)) + 1,
                        exp.power.vertices().index_of(exp.power.tgt()(e)) + 1);
    std::set<std::pair<std::size_t, std::size_t>> expected{{1, 2}, {1, 4}, {2, 2}, {2, 4}};
    CHECK(pattern == expected);
}

TEST_CASE("exponential with an isolated-vertex exponent") {
    // E(R^Q) for Q a single vertex counts all morphisms Upsilon(point) ->
    // Upsilon(R): both carrier maps are free, so |V(R)|^2 edges.
    Quiver point = standard_quiver(StandardQuiver::VertexDiamond, FiniteSet::one_to(1));
    for (const auto& [name, r] : default_corpus().quivers) {
        QuiverExponential exp = quiver_exponential(point, r);
        INFO(name);
        std::size_t expected = incidence_hom_count(upsilon(point), upsilon(r));
        CHECK(expected == r.vertices().size() * r.vertices().size());
        CHECK(exp.power.edges().size() == expected);
        CHECK(exp.power.vertices().size() == r.vertices().size());
    }
}

TEST_CASE("the terminal quiver absorbs exponentials") {
    for (const auto& [name, q] : default_corpus().quivers) {
        QuiverExponential exp = quiver_exponential(q, corpus_loop());
        INFO(name);
        CHECK(quiver_iso(exp.power, corpus_loop()).has_value());
    }
}

TEST_CASE("currying: hom-set bijection frozen by the oracle") {
    Quiver p1 = corpus_p1();
    QuiverSpan prod = quiver_product(p1, p1);
    QuiverExponential exp = quiver_exponential(p1, p1);
    std::size_t direct = brute_force_hom_count(prod.object, p1);
    std::size_t transposed = brute_force_hom_count(p1, exp.power);
    CHECK(direct == 4);
    CHECK(transposed == 4);
    CHECK(quiver_hom_count(prod.object, p1) == direct);
    CHECK(quiver_hom_count(p1, exp.power) == transposed);
}

TEST_CASE("curry and uncurry are mutually inverse") {
    Quiver p1 = corpus_p1();
    Quiver loop = corpus_loop();
    QuiverSpan prod = quiver_product(p1, loop);
    for (const auto& psi : quiver_homs(prod.object, p1)) {
        QuiverMorphism hat = quiver_curry(p1, loop, psi);
        CHECK(quiver_uncurry(p1, p1, hat).serialize() == psi.serialize());
    }
    QuiverExponential exp = quiver_exponential(p1, p1);
    for (const auto& chi : quiver_homs(loop, exp.power)) {
        QuiverMorphism expanded = quiver_uncurry(p1, p1, chi);
        CHECK(quiver_curry(p1, loop, expanded).serialize() == chi.serialize());
    }
}

TEST_CASE("curry triangle identity") {
    Quiver p1 = corpus_p1();
    QuiverExponential exp = quiver_exponential(p1, p1);
    QuiverMorphism hat = quiver_curry(p1, exp.power, exp.eval);
    CHECK(hat.serialize() == identity_morphism(exp.power).serialize());
}

TEST_CASE("curry rejects foreign domains") {
    Quiver p1 = corpus_p1();
    CHECK_THROWS_AS(quiver_curry(p1, p1, identity_morphism(p1)), ValidationError);
}

TEST_CASE("classical digraph exponential") {
    Quiver p1 = corpus_p1();
    Quiver classical = classical_digraph_exponential(p1, p1);
    CHECK(classical.vertices().size() == 4);
    CHECK(classical.edges().size() == 4);
    QuiverExponential exp = quiver_exponential(p1, p1);
    CHECK(quiver_iso(classical, exp.power).has_value());

    Quiver loop_exp = classical_digraph_exponential(p1, corpus_loop());
    CHECK(loop_exp.vertices().size() == 1);
    CHECK(loop_exp.edges().size() == 1);

    Quiver point = standard_quiver(StandardQuiver::VertexDiamond, FiniteSet::of_leaves({"x"}));
    Quiver complete = classical_digraph_exponential(point, p1);
    CHECK(complete.vertices().size() == 2);
    CHECK(complete.edges().size() == 4); // complete digraph on V(R)
}

TEST_CASE("both exponentials agree on simple corpus digraphs") {
    const auto& corpus = default_corpus().quivers;
    auto is_simple = [](const Quiver& q) {
        std::set<std::string> arcs;
        for (const Atom& e : q.edges())
            if (!arcs.insert(Atom::pair(q.src()(e), q.tgt()(e)).text()).second) return false;
        return true;
    };
    for (const auto& [nq, q] : corpus)
        for (const auto& [nr, r] : corpus) {
            if (!is_simple(q) || !is_simple(r)) continue;
            INFO(nq, " ^ ", nr);
            Quiver classical = classical_digraph_exponential(q, r);
            QuiverExponential exp = quiver_exponential(q, r);
            CHECK(quiver_iso(classical, exp.power).has_value());
        }
}
