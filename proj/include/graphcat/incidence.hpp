#pragma once

#include <graphcat/quiver.hpp>
#include <graphcat/set_system.hpp>

#include <optional>
#include <vector>

namespace graphcat {

/// An object of Set^D: vertices, edges, and a separate incidence carrier
/// with a port map into the vertices and an attachment map into the edges.
/// Isolated vertices (no ports) and loose edges (no attachments) are legal.
class IncidenceHypergraph {
public:
    IncidenceHypergraph()
        : IncidenceHypergraph(FiniteSet(), FiniteSet(), FiniteSet(),
                              FiniteFunction::empty_into(FiniteSet()),
                              FiniteFunction::empty_into(FiniteSet())) {}
    IncidenceHypergraph(FiniteSet vertices, FiniteSet edges, FiniteSet incidences,
                        FiniteFunction port, FiniteFunction att);

    const FiniteSet& vertices() const { return vertices_; }
    const FiniteSet& edges() const { return edges_; }
    const FiniteSet& incidences() const { return incidences_; }
    const FiniteFunction& port() const { return port_; }
    const FiniteFunction& att() const { return att_; }

    bool operator==(const IncidenceHypergraph& other) const;
    bool operator!=(const IncidenceHypergraph& other) const { return !(*this == other); }

private:
    FiniteSet vertices_, edges_, incidences_;
    FiniteFunction port_, att_;
};

/// Three carrier maps making the port and attachment squares commute.
class IncidenceMorphism {
public:
    IncidenceMorphism(IncidenceHypergraph dom, IncidenceHypergraph cod, FiniteFunction vertex_map,
                      FiniteFunction edge_map, FiniteFunction incidence_map);

    const IncidenceHypergraph& dom() const { return dom_; }
    const IncidenceHypergraph& cod() const { return cod_; }
    const FiniteFunction& vertex_map() const { return vertex_map_; }
    const FiniteFunction& edge_map() const { return edge_map_; }
    const FiniteFunction& incidence_map() const { return incidence_map_; }

    bool is_iso() const {
        return vertex_map_.is_bijective() && edge_map_.is_bijective() &&
               incidence_map_.is_bijective();
    }

    /// Canonical serialization (vertex mapping, edge mapping, incidence
    /// mapping); these atoms are the incidences of exponential objects.
    Atom serialize() const;

    bool operator==(const IncidenceMorphism& other) const;
    bool operator!=(const IncidenceMorphism& other) const { return !(*this == other); }

private:
    IncidenceHypergraph dom_, cod_;
    FiniteFunction vertex_map_, edge_map_, incidence_map_;
};

IncidenceMorphism identity_morphism(const IncidenceHypergraph& g);
IncidenceMorphism compose(const IncidenceMorphism& g, const IncidenceMorphism& f);

enum class StandardIncidence {
    VStar,    ///< bouquet of 1-vertices on a single edge
    VDiamond, ///< isolated vertices
    EStar,    ///< bouquet of 1-edges at a single vertex
    EDiamond, ///< loose 0-edges
    IStar,    ///< |X| parallel incidences between one vertex and one edge
    IDiamond, ///< disjoint copies of a 1-edge
    Terminal, ///< the 1-edge I1
};

IncidenceHypergraph standard_incidence(StandardIncidence kind, const FiniteSet& x = FiniteSet());

std::vector<IncidenceMorphism> incidence_homs(const IncidenceHypergraph& g,
                                              const IncidenceHypergraph& h,
                                              const Bounds& bounds = {});
std::size_t incidence_hom_count(const IncidenceHypergraph& g, const IncidenceHypergraph& h);
std::optional<IncidenceMorphism> incidence_first_hom(const IncidenceHypergraph& g,
                                                     const IncidenceHypergraph& h);
std::optional<IncidenceMorphism> incidence_iso(const IncidenceHypergraph& g,
                                               const IncidenceHypergraph& h);

struct IncidenceSpan {
    IncidenceHypergraph object;
    std::vector<IncidenceMorphism> legs;
};

IncidenceSpan inc_product(const IncidenceHypergraph& a, const IncidenceHypergraph& b);
IncidenceSpan inc_equalizer(const IncidenceMorphism& f, const IncidenceMorphism& g);
IncidenceHypergraph inc_terminal();
IncidenceSpan inc_coproduct(const IncidenceHypergraph& a, const IncidenceHypergraph& b);
IncidenceSpan inc_coequalizer(const IncidenceMorphism& f, const IncidenceMorphism& g);
IncidenceHypergraph inc_initial();

IncidenceMorphism inc_product_mediator(const IncidenceSpan& product, const IncidenceMorphism& rho1,
                                       const IncidenceMorphism& rho2);
IncidenceMorphism inc_product_on_morphisms(const IncidenceHypergraph& a,
                                           const IncidenceMorphism& f);

IncidenceHypergraph relabel(const IncidenceHypergraph& g, const FiniteFunction& vertex_bij,
                            const FiniteFunction& edge_bij, const FiniteFunction& incidence_bij);

/// Upsilon : directed edges become incidences; the vertex set is duplicated
/// as both the vertex and the edge carrier.
IncidenceHypergraph upsilon(const Quiver& q);
IncidenceMorphism upsilon_on_morphisms(const QuiverMorphism& phi);

/// Left adjoint of Upsilon: the bipartite incidence digraph.  Vertex-side
/// atoms are tagged 0 and edge-side atoms tagged 1.
Quiver upsilon_diamond(const IncidenceHypergraph& g);
QuiverMorphism upsilon_diamond_on_morphisms(const IncidenceMorphism& phi);

/// Right adjoint of Upsilon: the looped incidence-matrix quiver on
/// V x E with one edge (v,i,e) per vertex/incidence/edge triple.
Quiver upsilon_star(const IncidenceHypergraph& g, const Bounds& bounds = {});
QuiverMorphism upsilon_star_on_morphisms(const IncidenceMorphism& phi, const Bounds& bounds = {});

/// The incidence-forming functor from set-system hypergraphs: one
/// incidence (v,e) for every v in the endpoint set of e.
IncidenceHypergraph incidence_forming(const Hypergraph& g);
IncidenceMorphism incidence_forming_on_morphisms(const HyperMorphism& phi);

/// Object-level inverse of incidence_forming; not functorial, so there is
/// deliberately no morphism action.
Hypergraph forget_incidence(const IncidenceHypergraph& g);

struct IncidenceExponential {
    IncidenceHypergraph power; ///< H^G
    IncidenceMorphism eval;    ///< G x H^G -> H
};

/// Vertices and edges of H^G are the full function spaces; incidences are
/// the serialized members of the hom-set R(G,H), with port and attachment
/// reading off the vertex and edge components.
IncidenceExponential inc_exponential(const IncidenceHypergraph& g, const IncidenceHypergraph& h,
                                     const Bounds& bounds = {});

/// Unique transpose of psi : G x K -> H along the evaluation morphism.
IncidenceMorphism inc_curry(const IncidenceHypergraph& g, const IncidenceHypergraph& k,
                            const IncidenceMorphism& psi, const Bounds& bounds = {});

/// Recover G x K -> H from the transpose K -> H^G.
IncidenceMorphism inc_uncurry(const IncidenceHypergraph& g, const IncidenceHypergraph& h,
                              const IncidenceMorphism& transpose);

} // namespace graphcat
