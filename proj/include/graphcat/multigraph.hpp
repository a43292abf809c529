#pragma once

#include <graphcat/quiver.hpp>
#include <graphcat/set_system.hpp>

namespace graphcat {

/// A set-system hypergraph every edge of which has one or two endpoints.
/// Wraps the carrier so the full hypergraph machinery applies verbatim;
/// the multigraph invariant is asserted at wrap time.
class MultigraphView {
public:
    explicit MultigraphView(Hypergraph carrier);
    const Hypergraph& carrier() const { return carrier_; }

private:
    Hypergraph carrier_;
};

struct Deletion {
    MultigraphView multigraph;
    HyperMorphism inclusion; ///< j : Del(H) -> H
};
/// Keep only the edges of size 1 or 2.
Deletion del(const Hypergraph& h);
/// Del on morphisms (edge sizes are preserved by morphisms).
HyperMorphism del_on_morphisms(const HyperMorphism& phi);
/// Unique factorization of phi : G -> H through the inclusion of Del(H),
/// for a multigraph G.
HyperMorphism del_factor(const MultigraphView& g, const HyperMorphism& phi);

/// U : endpoints of each quiver edge become an unordered 1- or 2-edge.
MultigraphView underlying(const Quiver& q);
HyperMorphism underlying_on_morphisms(const QuiverMorphism& phi);

struct AssociatedDigraph {
    Quiver digraph;      ///< 2-edges become directed 2-cycles, 1-edges loops
    HyperMorphism theta; ///< U(D(G)) -> G, dropping the direction data
};
AssociatedDigraph assoc_digraph(const MultigraphView& g);
QuiverMorphism assoc_on_morphisms(const HyperMorphism& phi);
/// Unique factorization of phi : U(Q) -> G through theta.
QuiverMorphism assoc_factor(const Quiver& q, const MultigraphView& g, const HyperMorphism& phi);

/// Disjoint union of the isolated vertices of G with one fresh 1-path per
/// edge; projective by construction.
MultigraphView explosion(const MultigraphView& g);
/// Coessential epimorphism X(G) -> G; the orientation of each exploded
/// edge is fixed deterministically (least endpoint becomes the source).
HyperMorphism projective_cover(const MultigraphView& g);

/// Structural characterization of projectivity in the multigraph
/// subcategory: a disjoint union of isolated vertices and 1-paths.
bool is_projective_multigraph(const MultigraphView& g);

struct MultigraphEnvelopes {
    MultigraphView injective_envelope; ///< Del of the loading
    HyperMorphism envelope_embedding;
    MultigraphView partial_morphism_representer; ///< Del of G~
    HyperMorphism representer_embedding;
};
MultigraphEnvelopes m_envelopes(const MultigraphView& g, const Bounds& bounds = {});

} // namespace graphcat
