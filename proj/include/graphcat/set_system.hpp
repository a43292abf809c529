#pragma once

#include <graphcat/finset.hpp>

#include <optional>
#include <vector>

namespace graphcat {

/// An object of the comma category (id_Set | P): vertices, edges, and an
/// endpoint assignment sending each edge to a subset of the vertices.
/// Empty edges and empty carriers are legal.
class Hypergraph {
public:
    Hypergraph() = default;
    /// endpoint atoms are subset atoms aligned with the edge order.
    Hypergraph(FiniteSet vertices, FiniteSet edges, std::vector<Atom> endpoints);
    static Hypergraph from_map(FiniteSet vertices, FiniteSet edges,
                               const std::function<Atom(const Atom&)>& endpoints);

    const FiniteSet& vertices() const { return vertices_; }
    const FiniteSet& edges() const { return edges_; }
    const Atom& endpoints(const Atom& edge) const { return endpoints_[edges_.index_of(edge)]; }
    const std::vector<Atom>& endpoint_values() const { return endpoints_; }

    bool operator==(const Hypergraph& other) const;
    bool operator!=(const Hypergraph& other) const { return !(*this == other); }

private:
    FiniteSet vertices_, edges_;
    std::vector<Atom> endpoints_;
};

/// Vertex and edge maps with the image-compatibility condition: the
/// endpoint set of the image edge equals the image of the endpoint set.
class HyperMorphism {
public:
    HyperMorphism(Hypergraph dom, Hypergraph cod, FiniteFunction vertex_map,
                  FiniteFunction edge_map);

    const Hypergraph& dom() const { return dom_; }
    const Hypergraph& cod() const { return cod_; }
    const FiniteFunction& vertex_map() const { return vertex_map_; }
    const FiniteFunction& edge_map() const { return edge_map_; }

    Atom serialize() const;

    bool operator==(const HyperMorphism& other) const;
    bool operator!=(const HyperMorphism& other) const { return !(*this == other); }

private:
    Hypergraph dom_, cod_;
    FiniteFunction vertex_map_, edge_map_;
};

HyperMorphism identity_morphism(const Hypergraph& g);
HyperMorphism compose(const HyperMorphism& g, const HyperMorphism& f);

enum class StandardHypergraph {
    VertexStar,    ///< one edge per subset of X (simplicial complete)
    VertexDiamond, ///< isolated vertices
    EdgeStar,      ///< bouquet of 1-edges and 0-edges over one vertex
    KEdge,         ///< a single edge whose endpoint set is all of X
    Terminal,      ///< one vertex, one 1-edge, one 0-edge
    GeneratorGS,   ///< the generator G_S: a single edge covering X
};

Hypergraph standard_hypergraph(StandardHypergraph kind, const FiniteSet& x = FiniteSet(),
                               const Bounds& bounds = {});

std::vector<HyperMorphism> hyper_homs(const Hypergraph& g, const Hypergraph& h,
                                      const Bounds& bounds = {});
std::size_t hyper_hom_count(const Hypergraph& g, const Hypergraph& h);
std::optional<HyperMorphism> hyper_first_hom(const Hypergraph& g, const Hypergraph& h);
std::optional<HyperMorphism> hyper_iso(const Hypergraph& g, const Hypergraph& h);

struct HyperSpan {
    Hypergraph object;
    std::vector<HyperMorphism> legs;
};

/// Binary product: vertices are pairs and an edge is a pair (A, (e1,e2))
/// of a subset atom A of the product vertex set together with an edge
/// tuple, subject to the coloring condition that A projects onto each
/// factor's endpoint set; endpoints of (A, (e1,e2)) are A itself.
HyperSpan hyper_product(const Hypergraph& a, const Hypergraph& b, const Bounds& bounds = {});
HyperSpan hyper_equalizer(const HyperMorphism& f, const HyperMorphism& g);
/// Pullback of f : A -> C, g : B -> C, derived as the equalizer of the two
/// composites out of the product; legs point at A and B.
HyperSpan hyper_pullback(const HyperMorphism& f, const HyperMorphism& g,
                         const Bounds& bounds = {});
Hypergraph hyper_terminal();
HyperSpan hyper_coproduct(const Hypergraph& a, const Hypergraph& b);
HyperSpan hyper_coequalizer(const HyperMorphism& f, const HyperMorphism& g);
Hypergraph hyper_initial();

HyperMorphism hyper_product_mediator(const HyperSpan& product, const HyperMorphism& rho1,
                                     const HyperMorphism& rho2);
/// The product functor a x f on morphisms.
HyperMorphism hyper_product_on_morphisms(const Hypergraph& a, const HyperMorphism& f,
                                         const Bounds& bounds = {});

Hypergraph relabel(const Hypergraph& g, const FiniteFunction& vertex_bij,
                   const FiniteFunction& edge_bij);

/// Unique factorization of an edge labeling through the bouquet E*(X):
/// an edge lands in the 0-block or 1-block according to emptiness of its
/// endpoint set.
HyperMorphism factor_through_edge_star(const Hypergraph& g, const FiniteFunction& xi);

struct PartialMorphismRepresenter {
    Hypergraph object;  ///< G~ with a fresh vertex and an edge per subset
    HyperMorphism unit; ///< monic eta : G -> G~
};
PartialMorphismRepresenter partial_morphism_representer(const Hypergraph& g,
                                                        const Bounds& bounds = {});

/// The characteristic map K -> G~ of a partial morphism (phi : H >-> K,
/// psi : H -> G); phi must be monic.
HyperMorphism classify_partial_morphism(const HyperMorphism& phi, const HyperMorphism& psi,
                                        const Bounds& bounds = {});

struct Loading {
    Hypergraph object;       ///< injective envelope: one new edge per unhit subset
    HyperMorphism embedding; ///< essential mono j : G -> L(G)
};
Loading loading(const Hypergraph& g, const Bounds& bounds = {});

struct MorphismFlags {
    bool mono = false;
    bool epi = false;
    bool essential_mono = false;
    bool coessential_epi = false;
};
/// Finite characterizations: mono/epi componentwise; essential and
/// coessential via the endpoint-fiber conditions.
MorphismFlags classify_morphism(const HyperMorphism& phi);

struct ObjectFlags {
    bool injective = false;  ///< nonempty vertices and every subset hit
    bool projective = false; ///< every edge empty
    bool multigraph = false; ///< every edge has 1 or 2 endpoints
};
ObjectFlags classify_object(const Hypergraph& g, const Bounds& bounds = {});

/// All vertices adjacent to v (sharing an edge with it, including v itself
/// whenever v lies in some edge).
FiniteSet neighborhood(const Hypergraph& g, const Atom& v);
FiniteSet isolated_vertices(const Hypergraph& g);

} // namespace graphcat
