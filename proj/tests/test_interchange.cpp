#include <doctest.h>

#include <graphcat/corpus.hpp>
#include <graphcat/dot.hpp>
#include <graphcat/errors.hpp>
#include <graphcat/interchange.hpp>

using namespace graphcat;

TEST_CASE("documents round trip losslessly") {
    Quiver p1 = corpus_p1();
    std::string text = serialize(p1);
    Document doc = parse_document(text);
    REQUIRE(std::holds_alternative<Quiver>(doc));
    CHECK(std::get<Quiver>(doc) == p1);
    CHECK(serialize(std::get<Quiver>(doc)) == text);

    Hypergraph h = hyper_terminal();
    Document hdoc = parse_document(serialize(h));
    REQUIRE(std::holds_alternative<Hypergraph>(hdoc));
    CHECK(std::get<Hypergraph>(hdoc) == h);

    IncidenceHypergraph up = upsilon(p1);
    Document idoc = parse_document(serialize(up));
    REQUIRE(std::holds_alternative<IncidenceHypergraph>(idoc));
    CHECK(std::get<IncidenceHypergraph>(idoc) == up);
}

TEST_CASE("exotic atoms survive the round trip with identical order") {
    QuiverExponential exp = quiver_exponential(corpus_p1(), corpus_p1());
    Document doc = parse_document(serialize(exp.power));
    REQUIRE(std::holds_alternative<Quiver>(doc));
    CHECK(std::get<Quiver>(doc) == exp.power);
    CHECK(std::get<Quiver>(doc).vertices().elements() == exp.power.vertices().elements());
}

TEST_CASE("morphism documents validate their squares") {
    Quiver p1 = corpus_p1();
    auto homs = quiver_homs(p1, corpus_loop());
    REQUIRE(!homs.empty());
    std::string text = serialize(homs.front());
    Document doc = parse_document(text);
    REQUIRE(std::holds_alternative<QuiverMorphism>(doc));
    CHECK(std::get<QuiverMorphism>(doc) == homs.front());

    // break the square: retarget an edge image
    std::string broken = text;
    auto pos = broken.find("\"edge_map\"");
    REQUIRE(pos != std::string::npos);
    // loop quiver has edge "1"; remap the path edge to nothing sensible by
    // duplicating the vertex map in its place
    Quiver two_loops = standard_quiver(StandardQuiver::EdgeStar, FiniteSet::one_to(2));
    auto loop_homs = quiver_homs(corpus_loop(), two_loops);
    REQUIRE(loop_homs.size() == 2);

    // hand-crafted broken document: vertex map hits the wrong vertex
    std::string bad = R"({
  "kind": "morphism",
  "category": "Q",
  "dom": {"kind": "quiver", "vertices": ["a", "b"],
          "edges": [{"name": "e", "src": "a", "tgt": "b"}]},
  "cod": {"kind": "quiver", "vertices": ["x", "y"],
          "edges": [{"name": "f", "src": "x", "tgt": "y"}]},
  "vertex_map": {"a": "y", "b": "y"},
  "edge_map": {"e": "f"}
})";
    CHECK_THROWS_AS(parse_document(bad), ParseError);
}

TEST_CASE("unknown fields and carriers are rejected") {
    CHECK_THROWS_AS(parse_document(R"({"kind":"quiver","vertices":[],"edges":[],"extra":1})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"kind":"nonsense"})"), ParseError);
    CHECK_THROWS_AS(
        parse_document(
            R"({"kind":"hypergraph","vertices":["a"],"edges":[{"name":"e","endpoints":["z"]}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_document(
            R"({"kind":"incidence","vertices":["a"],"edges":[],"incidences":[{"name":"i","vertex":"a","edge":"missing"}]})"),
        ParseError);
}

TEST_CASE("reports serialize deterministically") {
    LawReport report{"law", "instance", Verdict::WitnessFound, {"first", "second"}};
    std::string once = serialize(report);
    std::string twice = serialize(report);
    CHECK(once == twice);
    Document doc = parse_document(once);
    REQUIRE(std::holds_alternative<LawReport>(doc));
    CHECK(serialize(std::get<LawReport>(doc)) == once);
}

TEST_CASE("dot output for quivers") {
    std::string plain = emit_dot(corpus_p1());
    CHECK(plain.find("digraph {") == 0);
    CHECK(plain.find("->") != std::string::npos);
    CHECK(emit_dot(corpus_p1()) == plain);

    std::string empty = emit_dot(quiver_initial());
    CHECK(empty == "digraph {\n}\n");
}

TEST_CASE("dot output for the bipartite view") {
    IncidenceHypergraph up = upsilon(corpus_p1());
    std::string bip = emit_dot(up, DotView::Bipartite);
    CHECK(bip.find("rank=same") != std::string::npos);

    // tagged quivers render directly, untagged ones are rejected
    CHECK_NOTHROW(emit_dot(upsilon_diamond(up), DotView::Bipartite));
    CHECK_THROWS_AS(emit_dot(corpus_loop(), DotView::Bipartite), ValidationError);
}

TEST_CASE("dot output for the incidence-matrix view") {
    IncidenceHypergraph istar = standard_incidence(StandardIncidence::IStar,
                                                   FiniteSet::of_leaves({"p"}));
    std::string dot = emit_dot(istar, DotView::IncidenceMatrix);
    // a single vertex with a self-loop
    CHECK(dot.find("digraph {") == 0);
    CHECK(dot.find("-> ") != std::string::npos);
    CHECK_THROWS_AS(emit_dot(corpus_path1(), DotView::Bipartite), ValidationError);
}

TEST_CASE("hypergraph dot uses boxes for edges") {
    std::string dot = emit_dot(corpus_path1());
    CHECK(dot.find("graph {") == 0);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("shape=circle") != std::string::npos);
}
