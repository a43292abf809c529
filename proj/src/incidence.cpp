#include <graphcat/incidence.hpp>

#include <graphcat/errors.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace graphcat {

IncidenceHypergraph::IncidenceHypergraph(FiniteSet vertices, FiniteSet edges, FiniteSet incidences,
                                         FiniteFunction port, FiniteFunction att)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), incidences_(std::move(incidences)),
      port_(std::move(port)), att_(std::move(att)) {
    if (port_.dom() != incidences_ || att_.dom() != incidences_)
        throw ValidationError("incidence hypergraph: port/att must be defined on the incidences");
    if (port_.cod() != vertices_)
        throw ValidationError("incidence hypergraph: port must land in the vertex set");
    if (att_.cod() != edges_)
        throw ValidationError("incidence hypergraph: att must land in the edge set");
}

bool IncidenceHypergraph::operator==(const IncidenceHypergraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ &&
           incidences_ == other.incidences_ && port_ == other.port_ && att_ == other.att_;
}

IncidenceMorphism::IncidenceMorphism(IncidenceHypergraph dom, IncidenceHypergraph cod,
                                     FiniteFunction vertex_map, FiniteFunction edge_map,
                                     FiniteFunction incidence_map)
    : dom_(std::move(dom)), cod_(std::move(cod)), vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)), incidence_map_(std::move(incidence_map)) {
    if (vertex_map_.dom() != dom_.vertices() || vertex_map_.cod() != cod_.vertices() ||
        edge_map_.dom() != dom_.edges() || edge_map_.cod() != cod_.edges() ||
        incidence_map_.dom() != dom_.incidences() || incidence_map_.cod() != cod_.incidences())
        throw ValidationError("incidence morphism: carrier maps do not match dom/cod");
    for (const Atom& i : dom_.incidences()) {
        if (cod_.port()(incidence_map_(i)) != vertex_map_(dom_.port()(i)))
            throw ValidationError("incidence morphism: port square fails at incidence " + i.text());
        if (cod_.att()(incidence_map_(i)) != edge_map_(dom_.att()(i)))
            throw ValidationError("incidence morphism: attachment square fails at incidence " +
                                  i.text());
    }
}

Atom IncidenceMorphism::serialize() const {
    return Atom::tuple({vertex_map_.as_mapping_atom(), edge_map_.as_mapping_atom(),
                        incidence_map_.as_mapping_atom()});
}

bool IncidenceMorphism::operator==(const IncidenceMorphism& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && vertex_map_ == other.vertex_map_ &&
           edge_map_ == other.edge_map_ && incidence_map_ == other.incidence_map_;
}

IncidenceMorphism identity_morphism(const IncidenceHypergraph& g) {
    return IncidenceMorphism(g, g, FiniteFunction::identity(g.vertices()),
                             FiniteFunction::identity(g.edges()),
                             FiniteFunction::identity(g.incidences()));
}

IncidenceMorphism compose(const IncidenceMorphism& g, const IncidenceMorphism& f) {
    if (f.cod() != g.dom()) throw ValidationError("incidence morphisms do not compose");
    return IncidenceMorphism(f.dom(), g.cod(), compose(g.vertex_map(), f.vertex_map()),
                             compose(g.edge_map(), f.edge_map()),
                             compose(g.incidence_map(), f.incidence_map()));
}

IncidenceHypergraph standard_incidence(StandardIncidence kind, const FiniteSet& x) {
    FiniteSet one = FiniteSet::one_to(1);
    switch (kind) {
    case StandardIncidence::VStar: {
        ProductSet inc = product_set({x, one});
        return IncidenceHypergraph(x, one, inc.carrier, inc.projections[0], inc.projections[1]);
    }
    case StandardIncidence::VDiamond:
        return IncidenceHypergraph(x, FiniteSet(), FiniteSet(), FiniteFunction::empty_into(x),
                                   FiniteFunction::empty_into(FiniteSet()));
    case StandardIncidence::EStar: {
        ProductSet inc = product_set({one, x});
        return IncidenceHypergraph(one, x, inc.carrier, inc.projections[0], inc.projections[1]);
    }
    case StandardIncidence::EDiamond:
        return IncidenceHypergraph(FiniteSet(), x, FiniteSet(),
                                   FiniteFunction::empty_into(FiniteSet()),
                                   FiniteFunction::empty_into(x));
    case StandardIncidence::IStar:
        return IncidenceHypergraph(one, one, x,
                                   FiniteFunction::constant(x, one, Atom::number(1)),
                                   FiniteFunction::constant(x, one, Atom::number(1)));
    case StandardIncidence::IDiamond:
        return IncidenceHypergraph(x, x, x, FiniteFunction::identity(x),
                                   FiniteFunction::identity(x));
    case StandardIncidence::Terminal:
        return standard_incidence(StandardIncidence::IStar, one);
    }
    throw ValidationError("unknown standard incidence kind");
}

namespace {

// Vertex maps, then edge maps, then independent per-incidence candidate
// choices keyed by the (port image, attachment image) pair.
class IncidenceHomSearch {
public:
    IncidenceHomSearch(const IncidenceHypergraph& g, const IncidenceHypergraph& h, bool iso_only)
        : g_(g), h_(h), iso_(iso_only) {
        for (const Atom& i : h_.incidences()) {
            by_pair_[Atom::pair(h_.port()(i), h_.att()(i)).text()].push_back(i);
            port_support_.insert(h_.port()(i).text());
        }
        ready_at_vertex_.resize(g_.vertices().size());
        ready_at_edge_.resize(g_.edges().size());
        for (const Atom& i : g_.incidences()) {
            ready_at_vertex_[g_.vertices().index_of(g_.port()(i))].push_back(i);
            ready_at_edge_[g_.edges().index_of(g_.att()(i))].push_back(i);
        }
        if (iso_) {
            ports_g_.assign(g_.vertices().size(), 0);
            atts_g_.assign(g_.edges().size(), 0);
            for (const Atom& i : g_.incidences()) {
                ports_g_[g_.vertices().index_of(g_.port()(i))]++;
                atts_g_[g_.edges().index_of(g_.att()(i))]++;
            }
            ports_h_.assign(h_.vertices().size(), 0);
            atts_h_.assign(h_.edges().size(), 0);
            for (const Atom& i : h_.incidences()) {
                ports_h_[h_.vertices().index_of(h_.port()(i))]++;
                atts_h_[h_.edges().index_of(h_.att()(i))]++;
            }
        }
    }

    void enumerate(
        const std::function<bool(std::vector<Atom>, std::vector<Atom>, std::vector<Atom>)>& visit) {
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
    const IncidenceHypergraph& g_;
    const IncidenceHypergraph& h_;
    bool iso_;
    std::map<std::string, std::vector<Atom>> by_pair_;
    std::set<std::string> port_support_;
    std::vector<std::vector<Atom>> ready_at_vertex_, ready_at_edge_;
    std::vector<std::size_t> ports_g_, ports_h_, atts_g_, atts_h_;

    std::vector<Atom> fv_, fe_;
    std::vector<bool> used_vertex_, used_edge_;
    const std::function<bool(std::vector<Atom>, std::vector<Atom>, std::vector<Atom>)>* visit_ =
        nullptr;
    bool counting_ = false;
    bool stop_ = false;
    std::size_t total_ = 0;

    bool start() {
        stop_ = false;
        if (iso_ && (g_.vertices().size() != h_.vertices().size() ||
                     g_.edges().size() != h_.edges().size() ||
                     g_.incidences().size() != h_.incidences().size()))
            return false;
        fv_.assign(g_.vertices().size(), Atom());
        fe_.assign(g_.edges().size(), Atom());
        used_vertex_.assign(h_.vertices().size(), false);
        used_edge_.assign(h_.edges().size(), false);
        return true;
    }

    void assign_vertex(std::size_t i) {
        if (stop_) return;
        if (i == g_.vertices().size()) {
            assign_edge(0);
            return;
        }
        for (std::size_t j = 0; j < h_.vertices().size(); ++j) {
            if (iso_) {
                if (used_vertex_[j]) continue;
                if (ports_g_[i] != ports_h_[j]) continue;
            }
            const Atom& w = h_.vertices().elements()[j];
            // every incidence ported here needs some codomain incidence at w
            if (!ready_at_vertex_[i].empty() &&
                port_support_.find(w.text()) == port_support_.end())
                continue;
            fv_[i] = w;
            if (iso_) used_vertex_[j] = true;
            assign_vertex(i + 1);
            if (iso_) used_vertex_[j] = false;
            if (stop_) return;
        }
    }

    std::vector<Atom> candidates(const Atom& i) const {
        Atom key = Atom::pair(fv_[g_.vertices().index_of(g_.port()(i))],
                              fe_[g_.edges().index_of(g_.att()(i))]);
        auto it = by_pair_.find(key.text());
        return it == by_pair_.end() ? std::vector<Atom>{} : it->second;
    }

    void assign_edge(std::size_t i) {
        if (stop_) return;
        if (i == g_.edges().size()) {
            expand_incidences();
            return;
        }
        for (std::size_t j = 0; j < h_.edges().size(); ++j) {
            if (iso_) {
                if (used_edge_[j]) continue;
                if (atts_g_[i] != atts_h_[j]) continue;
            }
            fe_[i] = h_.edges().elements()[j];
            bool feasible = true;
            for (const Atom& inc : ready_at_edge_[i])
                if (candidates(inc).empty()) {
                    feasible = false;
                    break;
                }
            if (feasible) {
                if (iso_) used_edge_[j] = true;
                assign_edge(i + 1);
                if (iso_) used_edge_[j] = false;
                if (stop_) return;
            }
        }
    }

    void expand_incidences() {
        const auto& incs = g_.incidences().elements();
        std::vector<std::vector<Atom>> cand(incs.size());
        for (std::size_t i = 0; i < incs.size(); ++i) {
            cand[i] = candidates(incs[i]);
            if (cand[i].empty()) return;
        }
        if (counting_ && !iso_) {
            std::size_t prod = 1;
            for (const auto& c : cand) prod *= c.size();
            total_ += prod;
            return;
        }
        std::vector<Atom> fi(incs.size());
        std::vector<bool> used(h_.incidences().size(), false);
        choose_incidence(0, cand, fi, used);
    }

    void choose_incidence(std::size_t i, const std::vector<std::vector<Atom>>& cand,
                          std::vector<Atom>& fi, std::vector<bool>& used) {
        if (stop_) return;
        if (i == cand.size()) {
            if (counting_) {
                ++total_;
            } else if (!(*visit_)(fv_, fe_, fi)) {
                stop_ = true;
            }
            return;
        }
        for (const Atom& c : cand[i]) {
            std::size_t idx = h_.incidences().index_of(c);
            if (iso_) {
                if (used[idx]) continue;
                used[idx] = true;
            }
            fi[i] = c;
            choose_incidence(i + 1, cand, fi, used);
            if (iso_) used[idx] = false;
            if (stop_) return;
        }
    }
};

IncidenceMorphism build_hom(const IncidenceHypergraph& g, const IncidenceHypergraph& h,
                            std::vector<Atom> fv, std::vector<Atom> fe, std::vector<Atom> fi) {
    return IncidenceMorphism(
        g, h, FiniteFunction::from_values(g.vertices(), h.vertices(), std::move(fv)),
        FiniteFunction::from_values(g.edges(), h.edges(), std::move(fe)),
        FiniteFunction::from_values(g.incidences(), h.incidences(), std::move(fi)));
}

} // namespace

std::vector<IncidenceMorphism> incidence_homs(const IncidenceHypergraph& g,
                                              const IncidenceHypergraph& h, const Bounds& bounds) {
    std::size_t n = incidence_hom_count(g, h);
    if (n > bounds.hom_enumeration_max)
        throw BoundError("hom-set of size " + std::to_string(n) +
                         " exceeds the configured enumeration bound of " +
                         std::to_string(bounds.hom_enumeration_max));
    std::vector<IncidenceMorphism> homs;
    homs.reserve(n);
    IncidenceHomSearch(g, h, false)
        .enumerate([&](std::vector<Atom> fv, std::vector<Atom> fe, std::vector<Atom> fi) {
            homs.push_back(build_hom(g, h, std::move(fv), std::move(fe), std::move(fi)));
            return true;
        });
    return homs;
}

std::size_t incidence_hom_count(const IncidenceHypergraph& g, const IncidenceHypergraph& h) {
    return IncidenceHomSearch(g, h, false).count();
}

std::optional<IncidenceMorphism> incidence_first_hom(const IncidenceHypergraph& g,
                                                     const IncidenceHypergraph& h) {
    std::optional<IncidenceMorphism> result;
    IncidenceHomSearch(g, h, false)
        .enumerate([&](std::vector<Atom> fv, std::vector<Atom> fe, std::vector<Atom> fi) {
            result = build_hom(g, h, std::move(fv), std::move(fe), std::move(fi));
            return false;
        });
    return result;
}

std::optional<IncidenceMorphism> incidence_iso(const IncidenceHypergraph& g,
                                               const IncidenceHypergraph& h) {
    std::optional<IncidenceMorphism> result;
    IncidenceHomSearch(g, h, true)
        .enumerate([&](std::vector<Atom> fv, std::vector<Atom> fe, std::vector<Atom> fi) {
            result = build_hom(g, h, std::move(fv), std::move(fe), std::move(fi));
            return false;
        });
    return result;
}

IncidenceSpan inc_product(const IncidenceHypergraph& a, const IncidenceHypergraph& b) {
    ProductSet v = product_set({a.vertices(), b.vertices()});
    ProductSet e = product_set({a.edges(), b.edges()});
    ProductSet i = product_set({a.incidences(), b.incidences()});
    auto comp = [&](const FiniteFunction& fa, const FiniteFunction& fb, const FiniteSet& cod) {
        return FiniteFunction::from_map(i.carrier, cod, [&](const Atom& t) {
            return Atom::pair(fa(t.parts()[0]), fb(t.parts()[1]));
        });
    };
    IncidenceHypergraph object(v.carrier, e.carrier, i.carrier,
                               comp(a.port(), b.port(), v.carrier),
                               comp(a.att(), b.att(), e.carrier));
    IncidenceSpan span;
    span.legs.push_back(IncidenceMorphism(object, a, v.projections[0], e.projections[0],
                                          i.projections[0]));
    span.legs.push_back(IncidenceMorphism(object, b, v.projections[1], e.projections[1],
                                          i.projections[1]));
    span.object = std::move(object);
    return span;
}

IncidenceSpan inc_equalizer(const IncidenceMorphism& f, const IncidenceMorphism& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw ValidationError("equalizer requires a parallel pair");
    const IncidenceHypergraph& a = f.dom();
    auto agree = [](const FiniteFunction& p, const FiniteFunction& q) {
        std::vector<Atom> kept;
        for (const Atom& x : p.dom())
            if (p(x) == q(x)) kept.push_back(x);
        return FiniteSet::of(std::move(kept));
    };
    FiniteSet v_eq = agree(f.vertex_map(), g.vertex_map());
    FiniteSet e_eq = agree(f.edge_map(), g.edge_map());
    FiniteSet i_eq = agree(f.incidence_map(), g.incidence_map());
    IncidenceHypergraph object(
        v_eq, e_eq, i_eq,
        FiniteFunction::from_map(i_eq, v_eq, [&](const Atom& i) { return a.port()(i); }),
        FiniteFunction::from_map(i_eq, e_eq, [&](const Atom& i) { return a.att()(i); }));
    IncidenceSpan span;
    span.legs.push_back(IncidenceMorphism(
        object, a, FiniteFunction::from_map(v_eq, a.vertices(), [](const Atom& v) { return v; }),
        FiniteFunction::from_map(e_eq, a.edges(), [](const Atom& e) { return e; }),
        FiniteFunction::from_map(i_eq, a.incidences(), [](const Atom& i) { return i; })));
    span.object = std::move(object);
    return span;
}

IncidenceHypergraph inc_terminal() { return standard_incidence(StandardIncidence::Terminal); }

IncidenceSpan inc_coproduct(const IncidenceHypergraph& a, const IncidenceHypergraph& b) {
    CoproductSet v = coproduct_set({a.vertices(), b.vertices()});
    CoproductSet e = coproduct_set({a.edges(), b.edges()});
    CoproductSet i = coproduct_set({a.incidences(), b.incidences()});
    auto comp = [&](const FiniteFunction& fa, const FiniteFunction& fb, const FiniteSet& cod) {
        return FiniteFunction::from_map(i.carrier, cod, [&](const Atom& t) {
            const Atom& raw = t.parts()[1];
            return t.parts()[0] == Atom::number(0) ? Atom::tag(0, fa(raw)) : Atom::tag(1, fb(raw));
        });
    };
    IncidenceHypergraph object(v.carrier, e.carrier, i.carrier,
                               comp(a.port(), b.port(), v.carrier),
                               comp(a.att(), b.att(), e.carrier));
    IncidenceSpan span;
    span.legs.push_back(
        IncidenceMorphism(a, object, v.injections[0], e.injections[0], i.injections[0]));
    span.legs.push_back(
        IncidenceMorphism(b, object, v.injections[1], e.injections[1], i.injections[1]));
    span.object = std::move(object);
    return span;
}

IncidenceSpan inc_coequalizer(const IncidenceMorphism& f, const IncidenceMorphism& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw ValidationError("coequalizer requires a parallel pair");
    const IncidenceHypergraph& b = f.cod();
    SetCoequalizer qv = coequalize_set(f.vertex_map(), g.vertex_map());
    SetCoequalizer qe = coequalize_set(f.edge_map(), g.edge_map());
    SetCoequalizer qi = coequalize_set(f.incidence_map(), g.incidence_map());

    std::vector<Atom> port_values(qi.classes.size()), att_values(qi.classes.size());
    std::vector<bool> seen(qi.classes.size(), false);
    for (const Atom& i : b.incidences()) {
        std::size_t cls = qi.classes.index_of(qi.projection(i));
        Atom p = qv.projection(b.port()(i));
        Atom t = qe.projection(b.att()(i));
        if (!seen[cls]) {
            seen[cls] = true;
            port_values[cls] = p;
            att_values[cls] = t;
        } else if (port_values[cls] != p || att_values[cls] != t) {
            throw ValidationError("coequalizer: port/att disagree across an incidence class");
        }
    }
    IncidenceHypergraph object(
        qv.classes, qe.classes, qi.classes,
        FiniteFunction::from_values(qi.classes, qv.classes, std::move(port_values)),
        FiniteFunction::from_values(qi.classes, qe.classes, std::move(att_values)));
    IncidenceSpan span;
    span.legs.push_back(IncidenceMorphism(b, object, qv.projection, qe.projection, qi.projection));
    span.object = std::move(object);
    return span;
}

IncidenceHypergraph inc_initial() { return IncidenceHypergraph(); }

IncidenceMorphism inc_product_mediator(const IncidenceSpan& product, const IncidenceMorphism& rho1,
                                       const IncidenceMorphism& rho2) {
    if (rho1.dom() != rho2.dom()) throw ValidationError("cone legs must share a domain");
    const IncidenceHypergraph& h = rho1.dom();
    const IncidenceHypergraph& p = product.object;
    auto pair_up = [](const FiniteFunction& f1, const FiniteFunction& f2, const FiniteSet& dom,
                      const FiniteSet& cod) {
        return FiniteFunction::from_map(dom, cod,
                                        [&](const Atom& a) { return Atom::pair(f1(a), f2(a)); });
    };
    return IncidenceMorphism(
        h, p, pair_up(rho1.vertex_map(), rho2.vertex_map(), h.vertices(), p.vertices()),
        pair_up(rho1.edge_map(), rho2.edge_map(), h.edges(), p.edges()),
        pair_up(rho1.incidence_map(), rho2.incidence_map(), h.incidences(), p.incidences()));
}

IncidenceMorphism inc_product_on_morphisms(const IncidenceHypergraph& a,
                                           const IncidenceMorphism& f) {
    IncidenceSpan dom = inc_product(a, f.dom());
    IncidenceSpan cod = inc_product(a, f.cod());
    return inc_product_mediator(cod, dom.legs[0], compose(f, dom.legs[1]));
}

IncidenceHypergraph relabel(const IncidenceHypergraph& g, const FiniteFunction& vertex_bij,
                            const FiniteFunction& edge_bij, const FiniteFunction& incidence_bij) {
    if (!vertex_bij.is_bijective() || !edge_bij.is_bijective() || !incidence_bij.is_bijective())
        throw ValidationError("relabel requires bijections");
    if (vertex_bij.dom() != g.vertices() || edge_bij.dom() != g.edges() ||
        incidence_bij.dom() != g.incidences())
        throw ValidationError("relabel maps must start at the carriers");
    std::map<std::string, Atom> port_of, att_of;
    for (const Atom& i : g.incidences()) {
        port_of.emplace(incidence_bij(i).text(), vertex_bij(g.port()(i)));
        att_of.emplace(incidence_bij(i).text(), edge_bij(g.att()(i)));
    }
    return IncidenceHypergraph(
        vertex_bij.cod(), edge_bij.cod(), incidence_bij.cod(),
        FiniteFunction::from_map(incidence_bij.cod(), vertex_bij.cod(),
                                 [&](const Atom& i) { return port_of.at(i.text()); }),
        FiniteFunction::from_map(incidence_bij.cod(), edge_bij.cod(),
                                 [&](const Atom& i) { return att_of.at(i.text()); }));
}

IncidenceHypergraph upsilon(const Quiver& q) {
    return IncidenceHypergraph(q.vertices(), q.vertices(), q.edges(), q.src(), q.tgt());
}

IncidenceMorphism upsilon_on_morphisms(const QuiverMorphism& phi) {
    return IncidenceMorphism(upsilon(phi.dom()), upsilon(phi.cod()), phi.vertex_map(),
                             phi.vertex_map(), phi.edge_map());
}

Quiver upsilon_diamond(const IncidenceHypergraph& g) {
    CoproductSet v = coproduct_set({g.vertices(), g.edges()});
    return Quiver(v.carrier, g.incidences(),
                  FiniteFunction::from_map(g.incidences(), v.carrier,
                                           [&](const Atom& i) { return Atom::tag(0, g.port()(i)); }),
                  FiniteFunction::from_map(g.incidences(), v.carrier,
                                           [&](const Atom& i) { return Atom::tag(1, g.att()(i)); }));
}

QuiverMorphism upsilon_diamond_on_morphisms(const IncidenceMorphism& phi) {
    Quiver dom = upsilon_diamond(phi.dom());
    Quiver cod = upsilon_diamond(phi.cod());
    FiniteFunction fv = FiniteFunction::from_map(dom.vertices(), cod.vertices(), [&](const Atom& t) {
        return t.parts()[0] == Atom::number(0) ? Atom::tag(0, phi.vertex_map()(t.parts()[1]))
                                               : Atom::tag(1, phi.edge_map()(t.parts()[1]));
    });
    return QuiverMorphism(dom, cod, std::move(fv), phi.incidence_map());
}

Quiver upsilon_star(const IncidenceHypergraph& g, const Bounds& bounds) {
    std::size_t size = g.vertices().size() * g.incidences().size() * g.edges().size();
    if (size > bounds.incidence_matrix_max)
        throw BoundError("incidence-matrix quiver with " + std::to_string(size) +
                         " edges exceeds the configured bound of " +
                         std::to_string(bounds.incidence_matrix_max));
    ProductSet v = product_set({g.vertices(), g.edges()});
    ProductSet e = product_set({g.vertices(), g.incidences(), g.edges()});
    return Quiver(v.carrier, e.carrier,
                  FiniteFunction::from_map(e.carrier, v.carrier,
                                           [&](const Atom& t) {
                                               return Atom::pair(g.port()(t.parts()[1]),
                                                                 t.parts()[2]);
                                           }),
                  FiniteFunction::from_map(e.carrier, v.carrier, [&](const Atom& t) {
                      return Atom::pair(t.parts()[0], g.att()(t.parts()[1]));
                  }));
}

QuiverMorphism upsilon_star_on_morphisms(const IncidenceMorphism& phi, const Bounds& bounds) {
    Quiver dom = upsilon_star(phi.dom(), bounds);
    Quiver cod = upsilon_star(phi.cod(), bounds);
    return QuiverMorphism(
        dom, cod,
        FiniteFunction::from_map(dom.vertices(), cod.vertices(),
                                 [&](const Atom& t) {
                                     return Atom::pair(phi.vertex_map()(t.parts()[0]),
                                                       phi.edge_map()(t.parts()[1]));
                                 }),
        FiniteFunction::from_map(dom.edges(), cod.edges(), [&](const Atom& t) {
            return Atom::tuple({phi.vertex_map()(t.parts()[0]),
                                phi.incidence_map()(t.parts()[1]),
                                phi.edge_map()(t.parts()[2])});
        }));
}

IncidenceHypergraph incidence_forming(const Hypergraph& g) {
    std::vector<Atom> incidences;
    for (const Atom& e : g.edges())
        for (const Atom& v : g.endpoints(e).parts()) incidences.push_back(Atom::pair(v, e));
    FiniteSet inc = FiniteSet::of(std::move(incidences));
    return IncidenceHypergraph(
        g.vertices(), g.edges(), inc,
        FiniteFunction::from_map(inc, g.vertices(), [](const Atom& i) { return i.parts()[0]; }),
        FiniteFunction::from_map(inc, g.edges(), [](const Atom& i) { return i.parts()[1]; }));
}

IncidenceMorphism incidence_forming_on_morphisms(const HyperMorphism& phi) {
    IncidenceHypergraph dom = incidence_forming(phi.dom());
    IncidenceHypergraph cod = incidence_forming(phi.cod());
    return IncidenceMorphism(
        dom, cod, phi.vertex_map(), phi.edge_map(),
        FiniteFunction::from_map(dom.incidences(), cod.incidences(), [&](const Atom& i) {
            return Atom::pair(phi.vertex_map()(i.parts()[0]), phi.edge_map()(i.parts()[1]));
        }));
}

Hypergraph forget_incidence(const IncidenceHypergraph& g) {
    return Hypergraph::from_map(g.vertices(), g.edges(), [&](const Atom& e) {
        std::vector<Atom> endpoints;
        for (const Atom& i : g.incidences())
            if (g.att()(i) == e) endpoints.push_back(g.port()(i));
        return Atom::subset(std::move(endpoints));
    });
}

IncidenceExponential inc_exponential(const IncidenceHypergraph& g, const IncidenceHypergraph& h,
                                     const Bounds& bounds) {
    FiniteSet vertex_functions = all_functions(g.vertices(), h.vertices(), bounds);
    FiniteSet edge_functions = all_functions(g.edges(), h.edges(), bounds);

    std::vector<IncidenceMorphism> homs = incidence_homs(g, h, bounds);
    std::vector<Atom> incidences;
    incidences.reserve(homs.size());
    for (const IncidenceMorphism& m : homs) incidences.push_back(m.serialize());
    FiniteSet inc = FiniteSet::of(std::move(incidences));

    IncidenceHypergraph power(
        vertex_functions, edge_functions, inc,
        FiniteFunction::from_map(inc, vertex_functions,
                                 [](const Atom& m) { return m.parts()[0]; }),
        FiniteFunction::from_map(inc, edge_functions,
                                 [](const Atom& m) { return m.parts()[1]; }));

    IncidenceSpan dom = inc_product(g, power);
    IncidenceMorphism eval(
        dom.object, h,
        FiniteFunction::from_map(dom.object.vertices(), h.vertices(),
                                 [](const Atom& t) { return t.parts()[1].apply(t.parts()[0]); }),
        FiniteFunction::from_map(dom.object.edges(), h.edges(),
                                 [](const Atom& t) { return t.parts()[1].apply(t.parts()[0]); }),
        FiniteFunction::from_map(dom.object.incidences(), h.incidences(), [](const Atom& t) {
            return t.parts()[1].parts()[2].apply(t.parts()[0]);
        }));
    return {std::move(power), std::move(eval)};
}

IncidenceMorphism inc_curry(const IncidenceHypergraph& g, const IncidenceHypergraph& k,
                            const IncidenceMorphism& psi, const Bounds& bounds) {
    IncidenceSpan dom = inc_product(g, k);
    if (psi.dom() != dom.object)
        throw ValidationError("inc_curry: the morphism's domain is not the constructed product");
    const IncidenceHypergraph& h = psi.cod();
    IncidenceExponential exp = inc_exponential(g, h, bounds);

    FiniteFunction fv =
        FiniteFunction::from_map(k.vertices(), exp.power.vertices(), [&](const Atom& w) {
            std::vector<std::pair<Atom, Atom>> entries;
            for (const Atom& v : g.vertices())
                entries.emplace_back(v, psi.vertex_map()(Atom::pair(v, w)));
            return Atom::mapping(std::move(entries));
        });
    FiniteFunction fe = FiniteFunction::from_map(k.edges(), exp.power.edges(), [&](const Atom& f) {
        std::vector<std::pair<Atom, Atom>> entries;
        for (const Atom& e : g.edges()) entries.emplace_back(e, psi.edge_map()(Atom::pair(e, f)));
        return Atom::mapping(std::move(entries));
    });
    FiniteFunction fi =
        FiniteFunction::from_map(k.incidences(), exp.power.incidences(), [&](const Atom& j) {
            IncidenceMorphism slice(
                g, h,
                FiniteFunction::from_map(g.vertices(), h.vertices(),
                                         [&](const Atom& v) {
                                             return psi.vertex_map()(
                                                 Atom::pair(v, k.port()(j)));
                                         }),
                FiniteFunction::from_map(g.edges(), h.edges(),
                                         [&](const Atom& e) {
                                             return psi.edge_map()(Atom::pair(e, k.att()(j)));
                                         }),
                FiniteFunction::from_map(g.incidences(), h.incidences(), [&](const Atom& i) {
                    return psi.incidence_map()(Atom::pair(i, j));
                }));
            return slice.serialize();
        });
    return IncidenceMorphism(k, exp.power, std::move(fv), std::move(fe), std::move(fi));
}

IncidenceMorphism inc_uncurry(const IncidenceHypergraph& g, const IncidenceHypergraph& h,
                              const IncidenceMorphism& transpose) {
    const IncidenceHypergraph& k = transpose.dom();
    IncidenceSpan dom = inc_product(g, k);
    return IncidenceMorphism(
        dom.object, h,
        FiniteFunction::from_map(dom.object.vertices(), h.vertices(),
                                 [&](const Atom& t) {
                                     return transpose.vertex_map()(t.parts()[1]).apply(t.parts()[0]);
                                 }),
        FiniteFunction::from_map(dom.object.edges(), h.edges(),
                                 [&](const Atom& t) {
                                     return transpose.edge_map()(t.parts()[1]).apply(t.parts()[0]);
                                 }),
        FiniteFunction::from_map(dom.object.incidences(), h.incidences(), [&](const Atom& t) {
            return transpose.incidence_map()(t.parts()[1]).parts()[2].apply(t.parts()[0]);
        }));
}

} // namespace graphcat
