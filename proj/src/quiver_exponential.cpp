#include <graphcat/incidence.hpp>
#include <graphcat/quiver.hpp>

#include <graphcat/errors.hpp>

namespace graphcat {

QuiverExponential quiver_exponential(const Quiver& q, const Quiver& r, const Bounds& bounds) {
    FiniteSet vertex_functions = all_functions(q.vertices(), r.vertices(), bounds);

    // E(R^Q) = R(Upsilon(Q), Upsilon(R)); both carrier maps of such a
    // morphism are functions V(Q) -> V(R), giving source and target.
    std::vector<IncidenceMorphism> homs = incidence_homs(upsilon(q), upsilon(r), bounds);
    std::vector<Atom> edges;
    edges.reserve(homs.size());
    for (const IncidenceMorphism& m : homs) edges.push_back(m.serialize());
    FiniteSet edge_set = FiniteSet::of(std::move(edges));

    Quiver power(vertex_functions, edge_set,
                 FiniteFunction::from_map(edge_set, vertex_functions,
                                          [](const Atom& m) { return m.parts()[0]; }),
                 FiniteFunction::from_map(edge_set, vertex_functions,
                                          [](const Atom& m) { return m.parts()[1]; }));

    QuiverSpan dom = quiver_product(q, power);
    QuiverMorphism eval(
        dom.object, r,
        FiniteFunction::from_map(dom.object.vertices(), r.vertices(),
                                 [](const Atom& t) { return t.parts()[1].apply(t.parts()[0]); }),
        FiniteFunction::from_map(dom.object.edges(), r.edges(), [](const Atom& t) {
            return t.parts()[1].parts()[2].apply(t.parts()[0]);
        }));
    return {std::move(power), std::move(eval)};
}

QuiverMorphism quiver_curry(const Quiver& q, const Quiver& k, const QuiverMorphism& psi,
                            const Bounds& bounds) {
    QuiverSpan dom = quiver_product(q, k);
    if (psi.dom() != dom.object)
        throw ValidationError("quiver_curry: the morphism's domain is not the constructed product");
    const Quiver& r = psi.cod();
    QuiverExponential exp = quiver_exponential(q, r, bounds);
    IncidenceHypergraph uq = upsilon(q);
    IncidenceHypergraph ur = upsilon(r);

    auto vertex_slice = [&](const Atom& w) {
        std::vector<std::pair<Atom, Atom>> entries;
        for (const Atom& v : q.vertices())
            entries.emplace_back(v, psi.vertex_map()(Atom::pair(v, w)));
        return Atom::mapping(std::move(entries));
    };
    FiniteFunction fv = FiniteFunction::from_map(k.vertices(), exp.power.vertices(), vertex_slice);
    FiniteFunction fe = FiniteFunction::from_map(k.edges(), exp.power.edges(), [&](const Atom& j) {
        IncidenceMorphism slice(
            uq, ur,
            FiniteFunction::from_map(q.vertices(), r.vertices(),
                                     [&](const Atom& v) {
                                         return psi.vertex_map()(Atom::pair(v, k.src()(j)));
                                     }),
            FiniteFunction::from_map(q.vertices(), r.vertices(),
                                     [&](const Atom& v) {
                                         return psi.vertex_map()(Atom::pair(v, k.tgt()(j)));
                                     }),
            FiniteFunction::from_map(q.edges(), r.edges(), [&](const Atom& e) {
                return psi.edge_map()(Atom::pair(e, j));
            }));
        return slice.serialize();
    });
    return QuiverMorphism(k, exp.power, std::move(fv), std::move(fe));
}

QuiverMorphism quiver_uncurry(const Quiver& q, const Quiver& r, const QuiverMorphism& transpose) {
    const Quiver& k = transpose.dom();
    QuiverSpan dom = quiver_product(q, k);
    return QuiverMorphism(
        dom.object, r,
        FiniteFunction::from_map(dom.object.vertices(), r.vertices(),
                                 [&](const Atom& t) {
                                     return transpose.vertex_map()(t.parts()[1]).apply(t.parts()[0]);
                                 }),
        FiniteFunction::from_map(dom.object.edges(), r.edges(), [&](const Atom& t) {
            return transpose.edge_map()(t.parts()[1]).parts()[2].apply(t.parts()[0]);
        }));
}

} // namespace graphcat
