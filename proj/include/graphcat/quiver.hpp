#pragma once

#include <graphcat/finset.hpp>

#include <optional>
#include <vector>

namespace graphcat {

/// An object of the functor category Set^E: two carriers with source and
/// target maps from edges to vertices.
class Quiver {
public:
    Quiver() : Quiver(FiniteSet(), FiniteSet(),
                      FiniteFunction::empty_into(FiniteSet()),
                      FiniteFunction::empty_into(FiniteSet())) {}
    Quiver(FiniteSet vertices, FiniteSet edges, FiniteFunction src, FiniteFunction tgt);

    const FiniteSet& vertices() const { return vertices_; }
    const FiniteSet& edges() const { return edges_; }
    const FiniteFunction& src() const { return src_; }
    const FiniteFunction& tgt() const { return tgt_; }

    bool operator==(const Quiver& other) const;
    bool operator!=(const Quiver& other) const { return !(*this == other); }

private:
    FiniteSet vertices_, edges_;
    FiniteFunction src_, tgt_;
};

/// A pair of carrier maps making both source and target squares commute.
class QuiverMorphism {
public:
    QuiverMorphism(Quiver dom, Quiver cod, FiniteFunction vertex_map, FiniteFunction edge_map);

    const Quiver& dom() const { return dom_; }
    const Quiver& cod() const { return cod_; }
    const FiniteFunction& vertex_map() const { return vertex_map_; }
    const FiniteFunction& edge_map() const { return edge_map_; }

    bool is_mono() const { return vertex_map_.is_injective() && edge_map_.is_injective(); }
    bool is_epi() const { return vertex_map_.is_surjective() && edge_map_.is_surjective(); }
    bool is_iso() const { return vertex_map_.is_bijective() && edge_map_.is_bijective(); }

    /// Canonical serialization (vertex mapping, edge mapping).
    Atom serialize() const;

    bool operator==(const QuiverMorphism& other) const;
    bool operator!=(const QuiverMorphism& other) const { return !(*this == other); }

private:
    Quiver dom_, cod_;
    FiniteFunction vertex_map_, edge_map_;
};

QuiverMorphism identity_morphism(const Quiver& q);
QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f);

enum class StandardQuiver {
    VertexStar,    ///< complete digraph on X (all ordered pairs)
    VertexDiamond, ///< isolated vertices
    EdgeStar,      ///< bouquet of |X| directed loops at one vertex
    EdgeDiamond,   ///< |X| disjoint directed 1-paths
    Terminal,      ///< one vertex with one loop
    Path1,         ///< single directed 1-path
};

Quiver standard_quiver(StandardQuiver kind, const FiniteSet& x = FiniteSet());

/// Hom-set enumeration in stable (lexicographic) order.
std::vector<QuiverMorphism> quiver_homs(const Quiver& q, const Quiver& r, const Bounds& bounds = {});
std::size_t quiver_hom_count(const Quiver& q, const Quiver& r);
std::optional<QuiverMorphism> quiver_first_hom(const Quiver& q, const Quiver& r);
/// First isomorphism in stable order, if any; uses degree-profile pruning.
std::optional<QuiverMorphism> quiver_iso(const Quiver& q, const Quiver& r);

struct QuiverSpan {
    Quiver object;
    std::vector<QuiverMorphism> legs;
};

QuiverSpan quiver_product(const Quiver& a, const Quiver& b);
QuiverSpan quiver_equalizer(const QuiverMorphism& f, const QuiverMorphism& g);
Quiver quiver_terminal();
QuiverSpan quiver_coproduct(const Quiver& a, const Quiver& b);
QuiverSpan quiver_coequalizer(const QuiverMorphism& f, const QuiverMorphism& g);
Quiver quiver_initial();

/// Unique mediating morphism into a binary product for the cone (rho1, rho2).
QuiverMorphism quiver_product_mediator(const QuiverSpan& product, const QuiverMorphism& rho1,
                                       const QuiverMorphism& rho2);

/// The product functor on morphisms: a x f : A x dom(f) -> A x cod(f),
/// where both products are the constructed ones.
QuiverMorphism quiver_product_on_morphisms(const Quiver& a, const QuiverMorphism& f);

/// Apply a bijective vertex/edge relabeling, yielding an isomorphic copy.
Quiver relabel(const Quiver& q, const FiniteFunction& vertex_bij, const FiniteFunction& edge_bij);

struct QuiverExponential {
    Quiver power;        ///< R^Q
    QuiverMorphism eval; ///< Q x R^Q -> R
};

/// The exponential object R^Q: vertices are all functions V(Q) -> V(R) and
/// edges are all incidence-hypergraph morphisms Upsilon(Q) -> Upsilon(R),
/// serialized as atoms; source and target are the vertex and edge parts.
QuiverExponential quiver_exponential(const Quiver& q, const Quiver& r, const Bounds& bounds = {});

/// Unique transpose of psi : Q x K -> R along the evaluation morphism;
/// psi's domain must be the constructed product of q and k.
QuiverMorphism quiver_curry(const Quiver& q, const Quiver& k, const QuiverMorphism& psi,
                            const Bounds& bounds = {});

/// Inverse of quiver_curry: recover Q x K -> R from K -> R^Q.
QuiverMorphism quiver_uncurry(const Quiver& q, const Quiver& r, const QuiverMorphism& transpose);

/// The exponential of simple digraphs: edge (f,g) present when every edge
/// e of q has (f(src e), g(tgt e)) an edge of r; parallel edges of the
/// inputs are collapsed by their endpoint pair first.
Quiver classical_digraph_exponential(const Quiver& q, const Quiver& r, const Bounds& bounds = {});

} // namespace graphcat
