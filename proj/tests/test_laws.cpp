#include <doctest.h>

#include <graphcat/errors.hpp>
#include <graphcat/laws.hpp>

using namespace graphcat;

TEST_CASE("all seven counterexamples produce witnesses") {
    for (const std::string& name : counterexample_names()) {
        LawReport report = run_counterexample(name);
        INFO(name);
        for (const auto& line : report.evidence) INFO(line);
        CHECK(report.verdict == Verdict::WitnessFound);
    }
}

TEST_CASE("topos_fail reports the expected counts") {
    LawReport report = run_counterexample("topos_fail");
    REQUIRE(report.verdict == Verdict::WitnessFound);
    CHECK(report.evidence[0] == "|E(P1 x P1)| = 7");
    CHECK(report.evidence[1] == "|E(P1)|^2 = 1");
    CHECK(report.evidence[2] == "|E(K)| = 7");
    CHECK(report.evidence[3] == "|E(P1 x H)| = 1");
}

TEST_CASE("Ibad reports the expected counts") {
    LawReport product = run_counterexample("Ibad_product");
    REQUIRE(product.verdict == Verdict::WitnessFound);
    CHECK(product.evidence[0] == "|E(I(P1 x P1))| = 7");
    CHECK(product.evidence[1] == "|E(I(P1) x I(P1))| = 1");
    CHECK(product.evidence[2] == "|I(I(P1 x P1))| = 20");
    CHECK(product.evidence[3] == "|I(I(P1) x I(P1))| = 4");

    LawReport coeq = run_counterexample("Ibad_coequalizer");
    REQUIRE(coeq.verdict == Verdict::WitnessFound);
    CHECK(coeq.evidence[0] == "|I(J)| = 2");
    CHECK(coeq.evidence[1] == "|I(I(H))| = 1");
}

TEST_CASE("all registered adjunctions pass") {
    for (const std::string& name : adjunction_names()) {
        LawReport report = check_adjunction(name);
        INFO(name);
        for (const auto& line : report.evidence) INFO(line);
        CHECK(report.verdict == Verdict::Holds);
    }
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_AS(check_adjunction("nonsense"), ValidationError);
    CHECK_THROWS_AS(run_counterexample("nonsense"), ValidationError);
    CHECK_THROWS_AS(frobenius("nonsense"), ValidationError);
}

TEST_CASE("Frobenius verdicts on the canonical instances") {
    CHECK(frobenius("phi_V").verdict == Verdict::Holds);
    CHECK(frobenius("phi_E").verdict == Verdict::Holds);
    CHECK(frobenius("phi_upsilon").verdict == Verdict::Holds);
    LawReport phi_i = frobenius("phi_I");
    CHECK(phi_i.verdict == Verdict::WitnessFound);
    bool has_collision = false;
    for (const auto& line : phi_i.evidence)
        if (line.find("collapses") != std::string::npos) has_collision = true;
    CHECK(has_collision);
}

TEST_CASE("Frobenius morphisms on further instances") {
    for (const auto& [name, g] : default_corpus().incidence_hypergraphs) {
        INFO(name);
        CHECK(frobenius_phi_v(g, FiniteSet::one_to(2)).verdict == Verdict::Holds);
        CHECK(frobenius_phi_e(g, FiniteSet::one_to(2)).verdict == Verdict::Holds);
    }
    for (const auto& [name, q] : default_corpus().quivers) {
        INFO(name);
        CHECK(frobenius_phi_upsilon(q, upsilon(corpus_p1())).verdict == Verdict::Holds);
    }
}

TEST_CASE("separators from the generator families") {
    // quiver pair differing on a vertex: separated by the isolated vertex
    Quiver vertex = standard_quiver(StandardQuiver::VertexDiamond, FiniteSet::one_to(1));
    std::vector<Quiver> q_family{vertex, corpus_p1()};
    Quiver two = standard_quiver(StandardQuiver::VertexDiamond, FiniteSet::one_to(2));
    auto homs = quiver_homs(two, two);
    REQUIRE(homs.size() == 4);
    auto hit = find_separator(q_family, homs[0], homs[1]);
    REQUIRE(hit.has_value());
    CHECK(hit->first == 0);
    CHECK(compose(homs[0], hit->second).serialize() != compose(homs[1], hit->second).serialize());

    // incidence pair differing only on an incidence: separated by the 1-edge
    IncidenceHypergraph istar2 = standard_incidence(StandardIncidence::IStar,
                                                    FiniteSet::one_to(2));
    std::vector<IncidenceHypergraph> r_family{
        standard_incidence(StandardIncidence::VDiamond, FiniteSet::one_to(1)),
        standard_incidence(StandardIncidence::EDiamond, FiniteSet::one_to(1)),
        standard_incidence(StandardIncidence::IDiamond, FiniteSet::one_to(1))};
    auto inc_homs = incidence_homs(istar2, istar2);
    REQUIRE(inc_homs.size() == 4);
    auto inc_hit = find_separator(r_family, inc_homs[0], inc_homs[1]);
    REQUIRE(inc_hit.has_value());
    CHECK(inc_hit->first == 2);

    // equal pairs admit no separator
    CHECK(!find_separator(q_family, homs[0], homs[0]).has_value());
}

TEST_CASE("separators exist for every distinct corpus parallel pair") {
    std::vector<Quiver> q_family{standard_quiver(StandardQuiver::VertexDiamond,
                                                 FiniteSet::one_to(1)),
                                 corpus_p1()};
    const auto& corpus = default_corpus().quivers;
    for (const auto& [na, a] : corpus)
        for (const auto& [nb, b] : corpus) {
            auto homs = quiver_homs(a, b);
            for (std::size_t i = 0; i < homs.size(); ++i)
                for (std::size_t j = i + 1; j < homs.size(); ++j) {
                    INFO(na, " => ", nb);
                    CHECK(find_separator(q_family, homs[i], homs[j]).has_value());
                }
        }

    std::vector<IncidenceHypergraph> r_family{
        standard_incidence(StandardIncidence::VDiamond, FiniteSet::one_to(1)),
        standard_incidence(StandardIncidence::EDiamond, FiniteSet::one_to(1)),
        standard_incidence(StandardIncidence::IDiamond, FiniteSet::one_to(1))};
    const auto& rcorpus = default_corpus().incidence_hypergraphs;
    for (const auto& [na, a] : rcorpus)
        for (const auto& [nb, b] : rcorpus) {
            auto homs = incidence_homs(a, b);
            for (std::size_t i = 0; i < homs.size(); ++i)
                for (std::size_t j = i + 1; j < homs.size(); ++j) {
                    INFO(na, " => ", nb);
                    CHECK(find_separator(r_family, homs[i], homs[j]).has_value());
                }
        }
}

TEST_CASE("the upsilon isomorphisms hold on canonical instances") {
    LawReport loop_report = check_updiaup(corpus_loop());
    for (const auto& line : loop_report.evidence) INFO(line);
    CHECK(loop_report.verdict == Verdict::Holds);

    LawReport p1_report = check_updiaup(corpus_p1());
    CHECK(p1_report.verdict == Verdict::Holds);

    LawReport empty_report = check_updiaup(quiver_initial());
    CHECK(empty_report.verdict == Verdict::Holds);
}

TEST_CASE("universal property spot checks") {
    CHECK(check_universal_property(UniversalProperty::Terminal, Category::Q).ok());
    CHECK(check_universal_property(UniversalProperty::Terminal, Category::H).ok());
    CHECK(check_universal_property(UniversalProperty::Terminal, Category::M).ok());
    CHECK(check_universal_property(UniversalProperty::Terminal, Category::R).ok());
    CHECK_THROWS_AS(check_universal_property(UniversalProperty::Exponential, Category::H),
                    ValidationError);
    CHECK_THROWS_AS(check_universal_property(UniversalProperty::Classifier, Category::Q),
                    ValidationError);
}

TEST_CASE("law reports are deterministic") {
    for (const std::string& name : counterexample_names()) {
        LawReport a = run_counterexample(name);
        LawReport b = run_counterexample(name);
        CHECK(a.law_name == b.law_name);
        CHECK(a.instance == b.instance);
        CHECK(to_string(a.verdict) == to_string(b.verdict));
        CHECK(a.evidence == b.evidence);
    }
}
