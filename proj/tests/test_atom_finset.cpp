#include <doctest.h>

#include <graphcat/errors.hpp>
#include <graphcat/finset.hpp>

using namespace graphcat;

TEST_CASE("atom canonical text and parsing") {
    Atom tagged = Atom::tag(0, Atom::leaf("a"));
    CHECK(tagged.text() == "(0,a)");
    CHECK(Atom::subset({Atom::leaf("b"), Atom::leaf("a"), Atom::leaf("b")}).text() == "{a,b}");
    Atom fn = Atom::mapping({{Atom::leaf("y"), Atom::leaf("u")}, {Atom::leaf("x"), Atom::leaf("v")}});
    CHECK(fn.text() == "[x:v,y:u]");
    CHECK(fn.apply(Atom::leaf("x")) == Atom::leaf("v"));

    for (const char* text : {"(0,a)", "{a,b}", "[x:v,y:u]", "()", "{}", "((a,b),{c})"}) {
        Atom parsed = Atom::parse(text);
        CHECK(parsed.text() == text);
    }

    // escaping keeps the grammar unambiguous
    Atom weird = Atom::leaf("a,b{c}");
    Atom reparsed = Atom::parse(weird.text());
    CHECK(reparsed == weird);
    CHECK(reparsed.leaf_value() == "a,b{c}");

    CHECK_THROWS_AS(Atom::parse("(a"), ParseError);
    CHECK_THROWS_AS(Atom::parse("a)b"), ParseError);
    CHECK_THROWS_AS(Atom::leaf(""), ValidationError);
}

TEST_CASE("finite sets order stably and reject duplicates") {
    FiniteSet s = FiniteSet::of_leaves({"w", "v"});
    CHECK(s.elements()[0] == Atom::leaf("v"));
    CHECK(s.index_of(Atom::leaf("w")) == 1);
    CHECK_THROWS_AS(FiniteSet::of({Atom::leaf("a"), Atom::leaf("a")}), ValidationError);
}

TEST_CASE("product sets") {
    FiniteSet ab = FiniteSet::of_leaves({"a", "b"});
    FiniteSet x = FiniteSet::of_leaves({"x"});
    ProductSet p = product_set({ab, x});
    CHECK(p.carrier.size() == 2);
    CHECK(p.carrier.contains(Atom::parse("(a,x)")));
    CHECK(p.carrier.contains(Atom::parse("(b,x)")));
    CHECK(p.projections[0](Atom::parse("(a,x)")) == Atom::leaf("a"));

    ProductSet empty = product_set({});
    CHECK(empty.carrier.size() == 1);
    CHECK(empty.carrier.contains(Atom::parse("()")));

    FiniteSet vw = FiniteSet::of_leaves({"v", "w"});
    CHECK(product_set({vw, vw}).carrier.size() == 4);
}

TEST_CASE("coproduct sets tag their parts") {
    FiniteSet a = FiniteSet::of_leaves({"a"});
    CoproductSet c = coproduct_set({a, a});
    CHECK(c.carrier.size() == 2);
    CHECK(c.carrier.contains(Atom::parse("(0,a)")));
    CHECK(c.carrier.contains(Atom::parse("(1,a)")));

    CoproductSet mixed = coproduct_set({FiniteSet(), FiniteSet::of_leaves({"x"})});
    CHECK(mixed.carrier.size() == 1);
    CHECK(mixed.carrier.contains(Atom::parse("(1,x)")));

    CoproductSet single = coproduct_set({FiniteSet::of_leaves({"a", "b"})});
    CHECK(single.carrier.size() == 2);
}

TEST_CASE("coequalizer merges the paired values") {
    FiniteSet dom = FiniteSet::of_leaves({"0"});
    FiniteSet cod = FiniteSet::of_leaves({"v", "w"});
    FiniteFunction f = FiniteFunction::constant(dom, cod, Atom::leaf("v"));
    FiniteFunction g = FiniteFunction::constant(dom, cod, Atom::leaf("w"));
    SetCoequalizer c = coequalize_set(f, g);
    CHECK(c.classes.size() == 1);
    CHECK(c.classes.contains(Atom::leaf("v"))); // least atom representative
    CHECK(c.projection(Atom::leaf("w")) == Atom::leaf("v"));

    SetCoequalizer same = coequalize_set(f, f);
    CHECK(same.classes.size() == 2);

    FiniteFunction none = FiniteFunction::empty_into(cod);
    SetCoequalizer empty = coequalize_set(none, none);
    CHECK(empty.classes.size() == 2);

    FiniteFunction other = FiniteFunction::constant(FiniteSet::of_leaves({"1"}), cod,
                                                    Atom::leaf("v"));
    CHECK_THROWS_AS(coequalize_set(f, other), ValidationError);
}

TEST_CASE("coequalizer universal property by enumeration") {
    // q coforks the pair and every cofork factors through it exactly once
    FiniteSet dom = FiniteSet::of_leaves({"0", "1"});
    FiniteSet cod = FiniteSet::of_leaves({"a", "b", "c"});
    FiniteFunction f = FiniteFunction::from_map(dom, cod, [](const Atom& x) {
        return x == Atom::leaf("0") ? Atom::leaf("a") : Atom::leaf("b");
    });
    FiniteFunction g = FiniteFunction::from_map(dom, cod, [](const Atom& x) {
        return x == Atom::leaf("0") ? Atom::leaf("b") : Atom::leaf("c");
    });
    SetCoequalizer c = coequalize_set(f, g);
    CHECK(compose(c.projection, f) == compose(c.projection, g));

    FiniteSet target = FiniteSet::of_leaves({"s", "t"});
    for (const Atom& h_atom : all_functions(cod, target)) {
        FiniteFunction h = FiniteFunction::from_mapping_atom(cod, target, h_atom);
        bool coforks = compose(h, f) == compose(h, g);
        std::size_t factorizations = 0;
        for (const Atom& m_atom : all_functions(c.classes, target)) {
            FiniteFunction m = FiniteFunction::from_mapping_atom(c.classes, target, m_atom);
            if (compose(m, c.projection) == h) ++factorizations;
        }
        CHECK(factorizations == (coforks ? 1u : 0u));
    }
}

TEST_CASE("powerset and images") {
    FiniteSet v = FiniteSet::of_leaves({"v"});
    CHECK(powerset(v).size() == 2);
    CHECK(powerset(FiniteSet()).size() == 1);
    CHECK(powerset(FiniteSet::of_leaves({"v", "w"})).size() == 4);

    Bounds tight;
    tight.powerset_max_elements = 1;
    CHECK_THROWS_AS(powerset(FiniteSet::of_leaves({"a", "b"}), tight), BoundError);

    FiniteSet vw = FiniteSet::of_leaves({"v", "w"});
    FiniteSet u = FiniteSet::of_leaves({"u"});
    FiniteFunction collapse = FiniteFunction::constant(vw, u, Atom::leaf("u"));
    CHECK(image_of(collapse, Atom::parse("{v,w}")) == Atom::parse("{u}"));
    CHECK(image_of(FiniteFunction::identity(vw), Atom::parse("{w}")) == Atom::parse("{w}"));
    CHECK_THROWS_AS(image_of(collapse, Atom::parse("{z}")), ValidationError);
}

TEST_CASE("function spaces") {
    FiniteSet xy = FiniteSet::of_leaves({"x", "y"});
    FiniteSet uv = FiniteSet::of_leaves({"u", "v"});
    FiniteSet fns = all_functions(xy, uv);
    CHECK(fns.size() == 4);
    CHECK(fns.elements()[0].text() == "[x:u,y:u]");

    CHECK(all_functions(FiniteSet(), uv).size() == 1);
    CHECK(all_functions(xy, FiniteSet()).size() == 0);

    Bounds tight;
    tight.function_space_max = 3;
    CHECK_THROWS_AS(all_functions(xy, uv, tight), BoundError);
}

TEST_CASE("composition is associative with identity units") {
    FiniteSet a = FiniteSet::of_leaves({"1", "2"});
    FiniteSet b = FiniteSet::of_leaves({"p", "q", "r"});
    FiniteSet c = FiniteSet::of_leaves({"z"});
    FiniteFunction f = FiniteFunction::from_map(a, b, [](const Atom& x) {
        return x == Atom::leaf("1") ? Atom::leaf("q") : Atom::leaf("r");
    });
    FiniteFunction g = FiniteFunction::constant(b, c, Atom::leaf("z"));
    FiniteFunction h = FiniteFunction::identity(c);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    CHECK(compose(f, FiniteFunction::identity(a)) == f);
    CHECK(compose(FiniteFunction::identity(b), f) == f);
}

TEST_CASE("stable order survives serialization") {
    FiniteSet s = FiniteSet::of({Atom::parse("(1,b)"), Atom::leaf("z"), Atom::parse("{q}")});
    std::vector<Atom> reparsed;
    for (const Atom& a : s) reparsed.push_back(Atom::parse(a.text()));
    CHECK(FiniteSet::of(reparsed) == s);
    CHECK(FiniteSet::of(reparsed).elements() == s.elements());
}
