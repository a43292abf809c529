#include <graphcat/set_system.hpp>

#include <graphcat/errors.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace graphcat {

namespace {

Atom image_subset(const FiniteFunction& f, const Atom& subset) {
    std::vector<Atom> mapped;
    mapped.reserve(subset.parts().size());
    for (const Atom& v : subset.parts()) mapped.push_back(f(v));
    return Atom::subset(std::move(mapped));
}

} // namespace

Hypergraph::Hypergraph(FiniteSet vertices, FiniteSet edges, std::vector<Atom> endpoints)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), endpoints_(std::move(endpoints)) {
    if (endpoints_.size() != edges_.size())
        throw ValidationError("hypergraph: endpoint list does not match the edge set");
    for (const Atom& subset : endpoints_) {
        if (subset.kind() != Atom::Kind::Subset)
            throw ValidationError("hypergraph: endpoint atom is not a subset: " + subset.text());
        for (const Atom& v : subset.parts())
            if (!vertices_.contains(v))
                throw ValidationError("hypergraph: edge over unknown vertex " + v.text());
    }
}

Hypergraph Hypergraph::from_map(FiniteSet vertices, FiniteSet edges,
                                const std::function<Atom(const Atom&)>& endpoints) {
    std::vector<Atom> values;
    values.reserve(edges.size());
    for (const Atom& e : edges) values.push_back(endpoints(e));
    return Hypergraph(std::move(vertices), std::move(edges), std::move(values));
}

bool Hypergraph::operator==(const Hypergraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ &&
           endpoints_ == other.endpoints_;
}

HyperMorphism::HyperMorphism(Hypergraph dom, Hypergraph cod, FiniteFunction vertex_map,
                             FiniteFunction edge_map)
    : dom_(std::move(dom)), cod_(std::move(cod)), vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
    if (vertex_map_.dom() != dom_.vertices() || vertex_map_.cod() != cod_.vertices() ||
        edge_map_.dom() != dom_.edges() || edge_map_.cod() != cod_.edges())
        throw ValidationError("hypergraph morphism: carrier maps do not match dom/cod");
    for (const Atom& e : dom_.edges())
        if (cod_.endpoints(edge_map_(e)) != image_subset(vertex_map_, dom_.endpoints(e)))
            throw ValidationError("hypergraph morphism: endpoint square fails at edge " + e.text());
}

Atom HyperMorphism::serialize() const {
    return Atom::pair(vertex_map_.as_mapping_atom(), edge_map_.as_mapping_atom());
}

bool HyperMorphism::operator==(const HyperMorphism& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && vertex_map_ == other.vertex_map_ &&
           edge_map_ == other.edge_map_;
}

HyperMorphism identity_morphism(const Hypergraph& g) {
    return HyperMorphism(g, g, FiniteFunction::identity(g.vertices()),
                         FiniteFunction::identity(g.edges()));
}

HyperMorphism compose(const HyperMorphism& g, const HyperMorphism& f) {
    if (f.cod() != g.dom()) throw ValidationError("hypergraph morphisms do not compose");
    return HyperMorphism(f.dom(), g.cod(), compose(g.vertex_map(), f.vertex_map()),
                         compose(g.edge_map(), f.edge_map()));
}

Hypergraph standard_hypergraph(StandardHypergraph kind, const FiniteSet& x,
                               const Bounds& bounds) {
    switch (kind) {
    case StandardHypergraph::VertexStar: {
        FiniteSet subsets = powerset(x, bounds);
        return Hypergraph::from_map(x, subsets, [](const Atom& s) { return s; });
    }
    case StandardHypergraph::VertexDiamond:
        return Hypergraph(x, FiniteSet(), {});
    case StandardHypergraph::EdgeStar: {
        FiniteSet one = FiniteSet::one_to(1);
        std::vector<Atom> edges;
        for (const Atom& a : x) {
            edges.push_back(Atom::tag(0, a));
            edges.push_back(Atom::tag(1, a));
        }
        FiniteSet edge_set = FiniteSet::of(std::move(edges));
        return Hypergraph::from_map(one, edge_set, [&](const Atom& e) {
            return e.parts()[0] == Atom::number(0) ? Atom::subset({})
                                                   : Atom::subset({Atom::number(1)});
        });
    }
    case StandardHypergraph::KEdge:
        return Hypergraph(x, FiniteSet::of_leaves({"e"}), {x.as_subset_atom()});
    case StandardHypergraph::Terminal: {
        FiniteSet v = FiniteSet::of_leaves({"v"});
        FiniteSet edges = FiniteSet::of_leaves({"e0", "e1"});
        return Hypergraph(v, edges, {Atom::subset({}), Atom::subset({Atom::leaf("v")})});
    }
    case StandardHypergraph::GeneratorGS:
        return Hypergraph(x, FiniteSet::one_to(1), {x.as_subset_atom()});
    }
    throw ValidationError("unknown standard hypergraph kind");
}

namespace {

class HyperHomSearch {
public:
    HyperHomSearch(const Hypergraph& g, const Hypergraph& h, bool iso_only)
        : g_(g), h_(h), iso_(iso_only) {
        for (const Atom& e : h_.edges()) by_endpoints_[h_.endpoints(e).text()].push_back(e);
        edges_ready_at_.resize(g_.vertices().size());
        for (const Atom& e : g_.edges()) {
            const auto& parts = g_.endpoints(e).parts();
            if (parts.empty()) {
                empty_edges_.push_back(e);
            } else {
                std::size_t last = 0;
                for (const Atom& v : parts)
                    last = std::max(last, g_.vertices().index_of(v));
                edges_ready_at_[last].push_back(e);
            }
        }
        if (iso_) {
            profiles_g_ = vertex_profiles(g_);
            profiles_h_ = vertex_profiles(h_);
        }
    }

    void enumerate(const std::function<bool(std::vector<Atom>, std::vector<Atom>)>& visit) {
        if (!start()) return;
        visit_ = &visit;
        counting_ = false;
        assign_vertex(0);
        visit_ = nullptr;
    }

    std::size_t count() {
        if (!start()) return 0;
        counting_ = true;
        total_ = 0;
        assign_vertex(0);
        return total_;
    }

private:
    const Hypergraph& g_;
    const Hypergraph& h_;
    bool iso_;
    std::map<std::string, std::vector<Atom>> by_endpoints_;
    std::vector<std::vector<Atom>> edges_ready_at_;
    std::vector<Atom> empty_edges_;
    std::vector<std::size_t> profiles_g_, profiles_h_;

    std::vector<Atom> fv_;
    std::vector<bool> used_vertex_;
    const std::function<bool(std::vector<Atom>, std::vector<Atom>)>* visit_ = nullptr;
    bool counting_ = false;
    bool stop_ = false;
    std::size_t total_ = 0;

    static std::vector<std::size_t> vertex_profiles(const Hypergraph& g) {
        std::vector<std::size_t> prof(g.vertices().size(), 0);
        for (const Atom& e : g.edges())
            for (const Atom& v : g.endpoints(e).parts()) prof[g.vertices().index_of(v)]++;
        return prof;
    }

    bool start() {
        stop_ = false;
        if (iso_ && (g_.vertices().size() != h_.vertices().size() ||
                     g_.edges().size() != h_.edges().size()))
            return false;
        // edges with empty endpoint sets can only land on empty edges
        if (!empty_edges_.empty() &&
            by_endpoints_.find(Atom::subset({}).text()) == by_endpoints_.end())
            return false;
        fv_.assign(g_.vertices().size(), Atom());
        used_vertex_.assign(h_.vertices().size(), false);
        return true;
    }

    std::vector<Atom> candidates(const Atom& e) const {
        std::vector<Atom> mapped;
        for (const Atom& v : g_.endpoints(e).parts()) mapped.push_back(fv_[g_.vertices().index_of(v)]);
        auto it = by_endpoints_.find(Atom::subset(std::move(mapped)).text());
        return it == by_endpoints_.end() ? std::vector<Atom>{} : it->second;
    }

    void assign_vertex(std::size_t i) {
        if (stop_) return;
        if (i == g_.vertices().size()) {
            expand_edges();
            return;
        }
        for (std::size_t j = 0; j < h_.vertices().size(); ++j) {
            if (iso_) {
                if (used_vertex_[j]) continue;
                if (profiles_g_[i] != profiles_h_[j]) continue;
            }
            fv_[i] = h_.vertices().elements()[j];
            bool feasible = true;
            for (const Atom& e : edges_ready_at_[i])
                if (candidates(e).empty()) {
                    feasible = false;
                    break;
                }
            if (feasible) {
                if (iso_) used_vertex_[j] = true;
                assign_vertex(i + 1);
                if (iso_) used_vertex_[j] = false;
                if (stop_) return;
            }
        }
    }

    void expand_edges() {
        const auto& edges = g_.edges().elements();
        std::vector<std::vector<Atom>> cand(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            cand[i] = candidates(edges[i]);
            if (cand[i].empty()) return;
        }
        if (counting_ && !iso_) {
            std::size_t prod = 1;
            for (const auto& c : cand) prod *= c.size();
            total_ += prod;
            return;
        }
        std::vector<Atom> fe(edges.size());
        std::vector<bool> used_edge(h_.edges().size(), false);
        choose_edge(0, cand, fe, used_edge);
    }

    void choose_edge(std::size_t i, const std::vector<std::vector<Atom>>& cand,
                     std::vector<Atom>& fe, std::vector<bool>& used_edge) {
        if (stop_) return;
        if (i == cand.size()) {
            if (counting_) {
                ++total_;
            } else if (!(*visit_)(fv_, fe)) {
                stop_ = true;
            }
            return;
        }
        for (const Atom& c : cand[i]) {
            std::size_t idx = h_.edges().index_of(c);
            if (iso_) {
                if (used_edge[idx]) continue;
                used_edge[idx] = true;
            }
            fe[i] = c;
            choose_edge(i + 1, cand, fe, used_edge);
            if (iso_) used_edge[idx] = false;
            if (stop_) return;
        }
    }
};

HyperMorphism build_hom(const Hypergraph& g, const Hypergraph& h, std::vector<Atom> fv,
                        std::vector<Atom> fe) {
    return HyperMorphism(g, h,
                         FiniteFunction::from_values(g.vertices(), h.vertices(), std::move(fv)),
                         FiniteFunction::from_values(g.edges(), h.edges(), std::move(fe)));
}

} // namespace

std::vector<HyperMorphism> hyper_homs(const Hypergraph& g, const Hypergraph& h,
                                      const Bounds& bounds) {
    std::size_t n = hyper_hom_count(g, h);
    if (n > bounds.hom_enumeration_max)
        throw BoundError("hom-set of size " + std::to_string(n) +
                         " exceeds the configured enumeration bound of " +
                         std::to_string(bounds.hom_enumeration_max));
    std::vector<HyperMorphism> homs;
    homs.reserve(n);
    HyperHomSearch(g, h, false).enumerate([&](std::vector<Atom> fv, std::vector<Atom> fe) {
        homs.push_back(build_hom(g, h, std::move(fv), std::move(fe)));
        return true;
    });
    return homs;
}

std::size_t hyper_hom_count(const Hypergraph& g, const Hypergraph& h) {
    return HyperHomSearch(g, h, false).count();
}

std::optional<HyperMorphism> hyper_first_hom(const Hypergraph& g, const Hypergraph& h) {
    std::optional<HyperMorphism> result;
    HyperHomSearch(g, h, false).enumerate([&](std::vector<Atom> fv, std::vector<Atom> fe) {
        result = build_hom(g, h, std::move(fv), std::move(fe));
        return false;
    });
    return result;
}

std::optional<HyperMorphism> hyper_iso(const Hypergraph& g, const Hypergraph& h) {
    std::optional<HyperMorphism> result;
    HyperHomSearch(g, h, true).enumerate([&](std::vector<Atom> fv, std::vector<Atom> fe) {
        result = build_hom(g, h, std::move(fv), std::move(fe));
        return false;
    });
    return result;
}

HyperSpan hyper_product(const Hypergraph& a, const Hypergraph& b, const Bounds& bounds) {
    ProductSet v = product_set({a.vertices(), b.vertices()});
    FiniteSet subsets = powerset(v.carrier, bounds);

    std::vector<Atom> edges;
    for (const Atom& subset : subsets) {
        Atom image_a = image_of(v.projections[0], subset);
        Atom image_b = image_of(v.projections[1], subset);
        for (const Atom& ea : a.edges()) {
            if (a.endpoints(ea) != image_a) continue;
            for (const Atom& eb : b.edges()) {
                if (b.endpoints(eb) != image_b) continue;
                edges.push_back(Atom::pair(subset, Atom::pair(ea, eb)));
            }
        }
    }
    FiniteSet edge_set = FiniteSet::of(std::move(edges));
    Hypergraph object = Hypergraph::from_map(v.carrier, edge_set,
                                             [](const Atom& e) { return e.parts()[0]; });
    auto leg = [&](std::size_t i, const Hypergraph& target) {
        return HyperMorphism(object, target, v.projections[i],
                             FiniteFunction::from_map(edge_set, target.edges(), [&](const Atom& e) {
                                 return e.parts()[1].parts()[i];
                             }));
    };
    HyperSpan span;
    span.legs.push_back(leg(0, a));
    span.legs.push_back(leg(1, b));
    span.object = std::move(object);
    return span;
}

HyperSpan hyper_equalizer(const HyperMorphism& f, const HyperMorphism& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw ValidationError("equalizer requires a parallel pair");
    const Hypergraph& a = f.dom();
    std::vector<Atom> vs;
    for (const Atom& v : a.vertices())
        if (f.vertex_map()(v) == g.vertex_map()(v)) vs.push_back(v);
    FiniteSet v_eq = FiniteSet::of(std::move(vs));
    std::vector<Atom> es;
    for (const Atom& e : a.edges()) {
        if (f.edge_map()(e) != g.edge_map()(e)) continue;
        bool inside = true;
        for (const Atom& v : a.endpoints(e).parts())
            if (!v_eq.contains(v)) {
                inside = false;
                break;
            }
        if (inside) es.push_back(e);
    }
    FiniteSet e_eq = FiniteSet::of(std::move(es));
    Hypergraph object = Hypergraph::from_map(v_eq, e_eq,
                                             [&](const Atom& e) { return a.endpoints(e); });
    HyperSpan span;
    span.legs.push_back(HyperMorphism(
        object, a,
        FiniteFunction::from_map(v_eq, a.vertices(), [](const Atom& v) { return v; }),
        FiniteFunction::from_map(e_eq, a.edges(), [](const Atom& e) { return e; })));
    span.object = std::move(object);
    return span;
}

HyperSpan hyper_pullback(const HyperMorphism& f, const HyperMorphism& g, const Bounds& bounds) {
    if (f.cod() != g.cod()) throw ValidationError("pullback requires a common codomain");
    HyperSpan prod = hyper_product(f.dom(), g.dom(), bounds);
    HyperSpan eq = hyper_equalizer(compose(f, prod.legs[0]), compose(g, prod.legs[1]));
    HyperSpan span;
    span.legs.push_back(compose(prod.legs[0], eq.legs[0]));
    span.legs.push_back(compose(prod.legs[1], eq.legs[0]));
    span.object = eq.object;
    return span;
}

Hypergraph hyper_terminal() { return standard_hypergraph(StandardHypergraph::Terminal); }

HyperSpan hyper_coproduct(const Hypergraph& a, const Hypergraph& b) {
    CoproductSet v = coproduct_set({a.vertices(), b.vertices()});
    CoproductSet e = coproduct_set({a.edges(), b.edges()});
    Hypergraph object = Hypergraph::from_map(v.carrier, e.carrier, [&](const Atom& edge) {
        std::size_t part = edge.parts()[0] == Atom::number(0) ? 0 : 1;
        const Hypergraph& src = part == 0 ? a : b;
        std::vector<Atom> tagged;
        for (const Atom& w : src.endpoints(edge.parts()[1]).parts())
            tagged.push_back(Atom::tag(part, w));
        return Atom::subset(std::move(tagged));
    });
    HyperSpan span;
    span.legs.push_back(HyperMorphism(a, object, v.injections[0], e.injections[0]));
    span.legs.push_back(HyperMorphism(b, object, v.injections[1], e.injections[1]));
    span.object = std::move(object);
    return span;
}

HyperSpan hyper_coequalizer(const HyperMorphism& f, const HyperMorphism& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw ValidationError("coequalizer requires a parallel pair");
    const Hypergraph& b = f.cod();
    SetCoequalizer qv = coequalize_set(f.vertex_map(), g.vertex_map());
    SetCoequalizer qe = coequalize_set(f.edge_map(), g.edge_map());
    // endpoint sets descend to classes; assert representative independence
    std::vector<Atom> endpoint_values(qe.classes.size());
    std::vector<bool> seen(qe.classes.size(), false);
    for (const Atom& e : b.edges()) {
        std::size_t cls = qe.classes.index_of(qe.projection(e));
        Atom image = image_subset(qv.projection, b.endpoints(e));
        if (!seen[cls]) {
            seen[cls] = true;
            endpoint_values[cls] = image;
        } else if (endpoint_values[cls] != image) {
            throw ValidationError(
                "coequalizer: endpoint sets disagree across an edge class (inputs not parallel?)");
        }
    }
    Hypergraph object(qv.classes, qe.classes, std::move(endpoint_values));
    HyperSpan span;
    span.legs.push_back(HyperMorphism(b, object, qv.projection, qe.projection));
    span.object = std::move(object);
    return span;
}

Hypergraph hyper_initial() { return Hypergraph(); }

HyperMorphism hyper_product_mediator(const HyperSpan& product, const HyperMorphism& rho1,
                                     const HyperMorphism& rho2) {
    if (rho1.dom() != rho2.dom()) throw ValidationError("cone legs must share a domain");
    const Hypergraph& h = rho1.dom();
    const Hypergraph& p = product.object;
    FiniteFunction fv = FiniteFunction::from_map(h.vertices(), p.vertices(), [&](const Atom& v) {
        return Atom::pair(rho1.vertex_map()(v), rho2.vertex_map()(v));
    });
    FiniteFunction fe = FiniteFunction::from_map(h.edges(), p.edges(), [&](const Atom& e) {
        Atom colored = image_subset(fv, h.endpoints(e));
        return Atom::pair(colored, Atom::pair(rho1.edge_map()(e), rho2.edge_map()(e)));
    });
    return HyperMorphism(h, p, std::move(fv), std::move(fe));
}

HyperMorphism hyper_product_on_morphisms(const Hypergraph& a, const HyperMorphism& f,
                                         const Bounds& bounds) {
    HyperSpan dom = hyper_product(a, f.dom(), bounds);
    HyperSpan cod = hyper_product(a, f.cod(), bounds);
    return hyper_product_mediator(cod, dom.legs[0], compose(f, dom.legs[1]));
}

Hypergraph relabel(const Hypergraph& g, const FiniteFunction& vertex_bij,
                   const FiniteFunction& edge_bij) {
    if (!vertex_bij.is_bijective() || !edge_bij.is_bijective())
        throw ValidationError("relabel requires bijections");
    if (vertex_bij.dom() != g.vertices() || edge_bij.dom() != g.edges())
        throw ValidationError("relabel maps must start at the hypergraph's carriers");
    std::map<std::string, Atom> endpoints_of;
    for (const Atom& e : g.edges())
        endpoints_of.emplace(edge_bij(e).text(), image_subset(vertex_bij, g.endpoints(e)));
    return Hypergraph::from_map(vertex_bij.cod(), edge_bij.cod(),
                                [&](const Atom& e) { return endpoints_of.at(e.text()); });
}

HyperMorphism factor_through_edge_star(const Hypergraph& g, const FiniteFunction& xi) {
    if (xi.dom() != g.edges())
        throw ValidationError("edge labeling must be defined on the edge set");
    Hypergraph star = standard_hypergraph(StandardHypergraph::EdgeStar, xi.cod());
    FiniteFunction fe = FiniteFunction::from_map(g.edges(), star.edges(), [&](const Atom& e) {
        return Atom::tag(g.endpoints(e).parts().empty() ? 0 : 1, xi(e));
    });
    FiniteFunction fv = FiniteFunction::constant(g.vertices(), star.vertices(), Atom::number(1));
    return HyperMorphism(g, star, std::move(fv), std::move(fe));
}

PartialMorphismRepresenter partial_morphism_representer(const Hypergraph& g,
                                                        const Bounds& bounds) {
    Atom false_vertex = Atom::tag(0, Atom::number(0));
    std::vector<Atom> vertices{false_vertex};
    for (const Atom& v : g.vertices()) vertices.push_back(Atom::tag(1, v));
    FiniteSet v_new = FiniteSet::of(std::move(vertices));

    std::vector<Atom> edges;
    for (const Atom& e : g.edges()) edges.push_back(Atom::tag(1, e));
    for (const Atom& s : powerset(v_new, bounds)) edges.push_back(Atom::tag(0, s));
    FiniteSet e_new = FiniteSet::of(std::move(edges));

    Hypergraph object = Hypergraph::from_map(v_new, e_new, [&](const Atom& e) {
        if (e.parts()[0] == Atom::number(0)) return e.parts()[1];
        std::vector<Atom> tagged;
        for (const Atom& v : g.endpoints(e.parts()[1]).parts())
            tagged.push_back(Atom::tag(1, v));
        return Atom::subset(std::move(tagged));
    });
    HyperMorphism unit(
        g, object,
        FiniteFunction::from_map(g.vertices(), v_new, [](const Atom& v) { return Atom::tag(1, v); }),
        FiniteFunction::from_map(g.edges(), e_new, [](const Atom& e) { return Atom::tag(1, e); }));
    return {std::move(object), std::move(unit)};
}

HyperMorphism classify_partial_morphism(const HyperMorphism& phi, const HyperMorphism& psi,
                                        const Bounds& bounds) {
    if (phi.dom() != psi.dom())
        throw ValidationError("partial morphism legs must share a domain");
    if (!phi.vertex_map().is_injective() || !phi.edge_map().is_injective())
        throw ValidationError("classify_partial_morphism requires a monic first leg");
    const Hypergraph& h = phi.dom();
    const Hypergraph& k = phi.cod();
    const Hypergraph& g = psi.cod();
    PartialMorphismRepresenter rep = partial_morphism_representer(g, bounds);

    std::map<std::string, Atom> vertex_preimage, edge_preimage;
    for (const Atom& w : h.vertices()) vertex_preimage.emplace(phi.vertex_map()(w).text(), w);
    for (const Atom& f : h.edges()) edge_preimage.emplace(phi.edge_map()(f).text(), f);

    Atom false_vertex = Atom::tag(0, Atom::number(0));
    FiniteFunction fv =
        FiniteFunction::from_map(k.vertices(), rep.object.vertices(), [&](const Atom& v) {
            auto it = vertex_preimage.find(v.text());
            if (it == vertex_preimage.end()) return false_vertex;
            return Atom::tag(1, psi.vertex_map()(it->second));
        });
    FiniteFunction fe =
        FiniteFunction::from_map(k.edges(), rep.object.edges(), [&](const Atom& e) {
            auto it = edge_preimage.find(e.text());
            if (it != edge_preimage.end()) return Atom::tag(1, psi.edge_map()(it->second));
            return Atom::tag(0, image_subset(fv, k.endpoints(e)));
        });
    return HyperMorphism(k, rep.object, std::move(fv), std::move(fe));
}

Loading loading(const Hypergraph& g, const Bounds& bounds) {
    FiniteSet v_new = g.vertices().empty() ? FiniteSet::of({Atom::number(0)}) : g.vertices();

    std::set<std::string> hit;
    for (const Atom& s : g.endpoint_values()) hit.insert(s.text());

    std::vector<Atom> edges;
    for (const Atom& e : g.edges()) edges.push_back(Atom::tag(1, e));
    for (const Atom& s : powerset(v_new, bounds))
        if (hit.find(s.text()) == hit.end()) edges.push_back(Atom::tag(0, s));
    FiniteSet e_new = FiniteSet::of(std::move(edges));

    Hypergraph object = Hypergraph::from_map(v_new, e_new, [&](const Atom& e) {
        return e.parts()[0] == Atom::number(0) ? e.parts()[1] : g.endpoints(e.parts()[1]);
    });
    HyperMorphism embedding(
        g, object, FiniteFunction::from_map(g.vertices(), v_new, [](const Atom& v) { return v; }),
        FiniteFunction::from_map(g.edges(), e_new, [](const Atom& e) { return Atom::tag(1, e); }));
    return {std::move(object), std::move(embedding)};
}

MorphismFlags classify_morphism(const HyperMorphism& phi) {
    MorphismFlags flags;
    flags.mono = phi.vertex_map().is_injective() && phi.edge_map().is_injective();
    flags.epi = phi.vertex_map().is_surjective() && phi.edge_map().is_surjective();

    const Hypergraph& g = phi.dom();
    const Hypergraph& h = phi.cod();

    if (flags.mono) {
        bool essential = true;
        if (!g.vertices().empty()) {
            if (!phi.vertex_map().is_bijective()) essential = false;
        } else if (h.vertices().size() > 1) {
            essential = false;
        }
        // fibers of the endpoint maps must correspond over phi
        if (essential) {
            std::map<std::string, std::vector<Atom>> fibers_g, fibers_h;
            for (const Atom& e : g.edges()) fibers_g[g.endpoints(e).text()].push_back(e);
            for (const Atom& f : h.edges()) fibers_h[h.endpoints(f).text()].push_back(f);
            for (const auto& [text, fiber] : fibers_g) {
                Atom s = Atom::parse(text);
                std::vector<Atom> mapped;
                for (const Atom& e : fiber) mapped.push_back(phi.edge_map()(e));
                std::sort(mapped.begin(), mapped.end());
                Atom image = image_subset(phi.vertex_map(), s);
                auto it = fibers_h.find(image.text());
                std::vector<Atom> target = it == fibers_h.end() ? std::vector<Atom>{} : it->second;
                std::sort(target.begin(), target.end());
                if (mapped != target) {
                    essential = false;
                    break;
                }
            }
            if (essential) {
                std::set<std::string> image_endpoints;
                for (const Atom& e : g.edges())
                    image_endpoints.insert(h.endpoints(phi.edge_map()(e)).text());
                for (const auto& [text, fiber] : fibers_h)
                    if (image_endpoints.find(text) == image_endpoints.end() && fiber.size() > 1) {
                        essential = false;
                        break;
                    }
            }
        }
        flags.essential_mono = essential;
    }

    if (flags.epi) {
        bool coessential = phi.edge_map().is_bijective();
        if (coessential) {
            FiniteSet isol_g = isolated_vertices(g);
            FiniteSet isol_h = isolated_vertices(h);
            for (const Atom& v : isol_g)
                if (!isol_h.contains(phi.vertex_map()(v))) {
                    coessential = false;
                    break;
                }
            if (coessential) {
                for (const Atom& w : isol_h) {
                    std::size_t preimages = 0;
                    for (const Atom& v : isol_g)
                        if (phi.vertex_map()(v) == w) ++preimages;
                    if (preimages != 1) {
                        coessential = false;
                        break;
                    }
                }
            }
        }
        flags.coessential_epi = coessential;
    }
    return flags;
}

ObjectFlags classify_object(const Hypergraph& g, const Bounds& bounds) {
    ObjectFlags flags;
    flags.projective = true;
    flags.multigraph = true;
    for (const Atom& s : g.endpoint_values()) {
        std::size_t n = s.parts().size();
        if (n != 0) flags.projective = false;
        if (n < 1 || n > 2) flags.multigraph = false;
    }
    if (!g.vertices().empty()) {
        std::set<std::string> hit;
        for (const Atom& s : g.endpoint_values()) hit.insert(s.text());
        flags.injective = true;
        for (const Atom& s : powerset(g.vertices(), bounds))
            if (hit.find(s.text()) == hit.end()) {
                flags.injective = false;
                break;
            }
    }
    return flags;
}

FiniteSet neighborhood(const Hypergraph& g, const Atom& v) {
    if (!g.vertices().contains(v))
        throw ValidationError("neighborhood of a vertex outside the carrier: " + v.text());
    std::vector<Atom> adjacent;
    for (const Atom& e : g.edges()) {
        const auto& parts = g.endpoints(e).parts();
        if (std::find(parts.begin(), parts.end(), v) == parts.end()) continue;
        for (const Atom& w : parts) adjacent.push_back(w);
    }
    std::sort(adjacent.begin(), adjacent.end());
    adjacent.erase(std::unique(adjacent.begin(), adjacent.end()), adjacent.end());
    return FiniteSet::of(std::move(adjacent));
}

FiniteSet isolated_vertices(const Hypergraph& g) {
    std::set<std::string> covered;
    for (const Atom& s : g.endpoint_values())
        for (const Atom& v : s.parts()) covered.insert(v.text());
    std::vector<Atom> isolated;
    for (const Atom& v : g.vertices())
        if (covered.find(v.text()) == covered.end()) isolated.push_back(v);
    return FiniteSet::of(std::move(isolated));
}

} // namespace graphcat
