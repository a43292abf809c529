#include <graphcat/multigraph.hpp>

#include <graphcat/errors.hpp>

#include <map>
#include <string>

namespace graphcat {

MultigraphView::MultigraphView(Hypergraph carrier) : carrier_(std::move(carrier)) {
    for (const Atom& e : carrier_.edges()) {
        std::size_t n = carrier_.endpoints(e).parts().size();
        if (n < 1 || n > 2)
            throw ValidationError("multigraph: edge " + e.text() + " has " + std::to_string(n) +
                                  " endpoints");
    }
}

Deletion del(const Hypergraph& h) {
    std::vector<Atom> kept;
    for (const Atom& e : h.edges()) {
        std::size_t n = h.endpoints(e).parts().size();
        if (n >= 1 && n <= 2) kept.push_back(e);
    }
    FiniteSet edges = FiniteSet::of(std::move(kept));
    Hypergraph carrier = Hypergraph::from_map(h.vertices(), edges,
                                              [&](const Atom& e) { return h.endpoints(e); });
    HyperMorphism inclusion(
        carrier, h, FiniteFunction::identity(h.vertices()),
        FiniteFunction::from_map(edges, h.edges(), [](const Atom& e) { return e; }));
    return {MultigraphView(std::move(carrier)), std::move(inclusion)};
}

HyperMorphism del_on_morphisms(const HyperMorphism& phi) {
    Deletion d = del(phi.dom());
    Deletion c = del(phi.cod());
    const Hypergraph& dom = d.multigraph.carrier();
    const Hypergraph& cod = c.multigraph.carrier();
    return HyperMorphism(dom, cod,
                         FiniteFunction::from_map(dom.vertices(), cod.vertices(),
                                                  [&](const Atom& v) { return phi.vertex_map()(v); }),
                         FiniteFunction::from_map(dom.edges(), cod.edges(),
                                                  [&](const Atom& e) { return phi.edge_map()(e); }));
}

HyperMorphism del_factor(const MultigraphView& g, const HyperMorphism& phi) {
    if (phi.dom() != g.carrier())
        throw ValidationError("del_factor: morphism must start at the given multigraph");
    Deletion d = del(phi.cod());
    const Hypergraph& cod = d.multigraph.carrier();
    return HyperMorphism(g.carrier(), cod,
                         FiniteFunction::from_map(g.carrier().vertices(), cod.vertices(),
                                                  [&](const Atom& v) { return phi.vertex_map()(v); }),
                         FiniteFunction::from_map(g.carrier().edges(), cod.edges(),
                                                  [&](const Atom& e) { return phi.edge_map()(e); }));
}

MultigraphView underlying(const Quiver& q) {
    Hypergraph carrier = Hypergraph::from_map(q.vertices(), q.edges(), [&](const Atom& e) {
        return Atom::subset({q.src()(e), q.tgt()(e)});
    });
    return MultigraphView(std::move(carrier));
}

HyperMorphism underlying_on_morphisms(const QuiverMorphism& phi) {
    return HyperMorphism(underlying(phi.dom()).carrier(), underlying(phi.cod()).carrier(),
                         phi.vertex_map(), phi.edge_map());
}

AssociatedDigraph assoc_digraph(const MultigraphView& g) {
    const Hypergraph& h = g.carrier();
    std::vector<Atom> arcs;
    for (const Atom& e : h.edges()) {
        const auto& parts = h.endpoints(e).parts();
        if (parts.size() == 1) {
            arcs.push_back(Atom::tuple({e, parts[0], parts[0]}));
        } else {
            arcs.push_back(Atom::tuple({e, parts[0], parts[1]}));
            arcs.push_back(Atom::tuple({e, parts[1], parts[0]}));
        }
    }
    FiniteSet arc_set = FiniteSet::of(std::move(arcs));
    Quiver digraph(h.vertices(), arc_set,
                   FiniteFunction::from_map(arc_set, h.vertices(),
                                            [](const Atom& a) { return a.parts()[1]; }),
                   FiniteFunction::from_map(arc_set, h.vertices(),
                                            [](const Atom& a) { return a.parts()[2]; }));
    HyperMorphism theta(underlying(digraph).carrier(), h,
                        FiniteFunction::identity(h.vertices()),
                        FiniteFunction::from_map(arc_set, h.edges(),
                                                 [](const Atom& a) { return a.parts()[0]; }));
    return {std::move(digraph), std::move(theta)};
}

QuiverMorphism assoc_on_morphisms(const HyperMorphism& phi) {
    AssociatedDigraph dom = assoc_digraph(MultigraphView(phi.dom()));
    AssociatedDigraph cod = assoc_digraph(MultigraphView(phi.cod()));
    return QuiverMorphism(
        dom.digraph, cod.digraph, phi.vertex_map(),
        FiniteFunction::from_map(dom.digraph.edges(), cod.digraph.edges(), [&](const Atom& a) {
            return Atom::tuple({phi.edge_map()(a.parts()[0]), phi.vertex_map()(a.parts()[1]),
                                phi.vertex_map()(a.parts()[2])});
        }));
}

QuiverMorphism assoc_factor(const Quiver& q, const MultigraphView& g, const HyperMorphism& phi) {
    if (phi.dom() != underlying(q).carrier())
        throw ValidationError("assoc_factor: morphism must start at U of the given quiver");
    if (phi.cod() != g.carrier())
        throw ValidationError("assoc_factor: morphism must land in the given multigraph");
    AssociatedDigraph assoc = assoc_digraph(g);
    return QuiverMorphism(
        q, assoc.digraph, phi.vertex_map(),
        FiniteFunction::from_map(q.edges(), assoc.digraph.edges(), [&](const Atom& e) {
            return Atom::tuple({phi.edge_map()(e), phi.vertex_map()(q.src()(e)),
                                phi.vertex_map()(q.tgt()(e))});
        }));
}

MultigraphView explosion(const MultigraphView& g) {
    Quiver isolated = standard_quiver(StandardQuiver::VertexDiamond,
                                      isolated_vertices(g.carrier()));
    Quiver paths = standard_quiver(StandardQuiver::EdgeDiamond, g.carrier().edges());
    return underlying(quiver_coproduct(isolated, paths).object);
}

HyperMorphism projective_cover(const MultigraphView& g) {
    const Hypergraph& h = g.carrier();
    MultigraphView x = explosion(g);
    const Hypergraph& xc = x.carrier();
    // vertices: (0, v) for isolated v; (1, (0, e)) and (1, (1, e)) for the
    // endpoints of the exploded edge e, oriented least endpoint first
    FiniteFunction fv =
        FiniteFunction::from_map(xc.vertices(), h.vertices(), [&](const Atom& v) {
            if (v.parts()[0] == Atom::number(0)) return v.parts()[1];
            const Atom& inner = v.parts()[1];
            const auto& parts = h.endpoints(inner.parts()[1]).parts();
            if (parts.size() == 1) return parts[0];
            return inner.parts()[0] == Atom::number(0) ? parts[0] : parts[1];
        });
    FiniteFunction fe = FiniteFunction::from_map(
        xc.edges(), h.edges(), [](const Atom& e) { return e.parts()[1]; });
    return HyperMorphism(xc, h, std::move(fv), std::move(fe));
}

bool is_projective_multigraph(const MultigraphView& g) {
    const Hypergraph& h = g.carrier();
    std::map<std::string, std::size_t> uses;
    for (const Atom& e : h.edges()) {
        const auto& parts = h.endpoints(e).parts();
        if (parts.size() != 2) return false;
        for (const Atom& v : parts)
            if (++uses[v.text()] > 1) return false;
    }
    return true;
}

MultigraphEnvelopes m_envelopes(const MultigraphView& g, const Bounds& bounds) {
    Loading loaded = loading(g.carrier(), bounds);
    Deletion env = del(loaded.object);
    HyperMorphism env_embed = del_factor(g, loaded.embedding);

    PartialMorphismRepresenter rep = partial_morphism_representer(g.carrier(), bounds);
    Deletion rep_del = del(rep.object);
    HyperMorphism rep_embed = del_factor(g, rep.unit);

    return {std::move(env.multigraph), std::move(env_embed), std::move(rep_del.multigraph),
            std::move(rep_embed)};
}

} // namespace graphcat
