#include <graphcat/quiver.hpp>

#include <graphcat/errors.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace graphcat {

Quiver::Quiver(FiniteSet vertices, FiniteSet edges, FiniteFunction src, FiniteFunction tgt)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), src_(std::move(src)),
      tgt_(std::move(tgt)) {
    if (src_.dom() != edges_ || tgt_.dom() != edges_)
        throw ValidationError("quiver: src/tgt must be defined on the edge set");
    if (src_.cod() != vertices_ || tgt_.cod() != vertices_)
        throw ValidationError("quiver: src/tgt must land in the vertex set");
}

bool Quiver::operator==(const Quiver& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ && src_ == other.src_ &&
           tgt_ == other.tgt_;
}

QuiverMorphism::QuiverMorphism(Quiver dom, Quiver cod, FiniteFunction vertex_map,
                               FiniteFunction edge_map)
    : dom_(std::move(dom)), cod_(std::move(cod)), vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
    if (vertex_map_.dom() != dom_.vertices() || vertex_map_.cod() != cod_.vertices() ||
        edge_map_.dom() != dom_.edges() || edge_map_.cod() != cod_.edges())
        throw ValidationError("quiver morphism: carrier maps do not match dom/cod");
    for (const Atom& e : dom_.edges()) {
        if (cod_.src()(edge_map_(e)) != vertex_map_(dom_.src()(e)))
            throw ValidationError("quiver morphism: source square fails at edge " + e.text());
        if (cod_.tgt()(edge_map_(e)) != vertex_map_(dom_.tgt()(e)))
            throw ValidationError("quiver morphism: target square fails at edge " + e.text());
    }
}

Atom QuiverMorphism::serialize() const {
    return Atom::pair(vertex_map_.as_mapping_atom(), edge_map_.as_mapping_atom());
}

bool QuiverMorphism::operator==(const QuiverMorphism& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && vertex_map_ == other.vertex_map_ &&
           edge_map_ == other.edge_map_;
}

QuiverMorphism identity_morphism(const Quiver& q) {
    return QuiverMorphism(q, q, FiniteFunction::identity(q.vertices()),
                          FiniteFunction::identity(q.edges()));
}

QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f) {
    if (f.cod() != g.dom()) throw ValidationError("quiver morphisms do not compose");
    return QuiverMorphism(f.dom(), g.cod(), compose(g.vertex_map(), f.vertex_map()),
                          compose(g.edge_map(), f.edge_map()));
}

Quiver standard_quiver(StandardQuiver kind, const FiniteSet& x) {
    switch (kind) {
    case StandardQuiver::VertexStar: {
        ProductSet pairs = product_set({x, x});
        return Quiver(x, pairs.carrier, pairs.projections[0], pairs.projections[1]);
    }
    case StandardQuiver::VertexDiamond:
        return Quiver(x, FiniteSet(), FiniteFunction::empty_into(x),
                      FiniteFunction::empty_into(x));
    case StandardQuiver::EdgeStar: {
        FiniteSet one = FiniteSet::one_to(1);
        return Quiver(one, x, FiniteFunction::constant(x, one, Atom::number(1)),
                      FiniteFunction::constant(x, one, Atom::number(1)));
    }
    case StandardQuiver::EdgeDiamond: {
        std::vector<Atom> vertices;
        for (const Atom& a : x) {
            vertices.push_back(Atom::tag(0, a));
            vertices.push_back(Atom::tag(1, a));
        }
        FiniteSet v = FiniteSet::of(std::move(vertices));
        return Quiver(v, x,
                      FiniteFunction::from_map(x, v, [](const Atom& a) { return Atom::tag(0, a); }),
                      FiniteFunction::from_map(x, v, [](const Atom& a) { return Atom::tag(1, a); }));
    }
    case StandardQuiver::Terminal:
        return standard_quiver(StandardQuiver::EdgeStar, FiniteSet::one_to(1));
    case StandardQuiver::Path1:
        return standard_quiver(StandardQuiver::EdgeDiamond, FiniteSet::one_to(1));
    }
    throw ValidationError("unknown standard quiver kind");
}

namespace {

// Backtracking over vertex images with forward checking of edge feasibility;
// edge images factor into independent per-edge candidate choices once all
// endpoints are assigned.
class QuiverHomSearch {
public:
    QuiverHomSearch(const Quiver& q, const Quiver& r, bool iso_only)
        : q_(q), r_(r), iso_(iso_only) {
        for (const Atom& e : r_.edges())
            by_endpoints_[Atom::pair(r_.src()(e), r_.tgt()(e)).text()].push_back(e);
        const auto& vs = q_.vertices().elements();
        edges_ready_at_.resize(vs.size());
        for (const Atom& e : q_.edges()) {
            std::size_t s = q_.vertices().index_of(q_.src()(e));
            std::size_t t = q_.vertices().index_of(q_.tgt()(e));
            edges_ready_at_[std::max(s, t)].push_back(e);
        }
        if (iso_) {
            profiles_q_ = degree_profiles(q_);
            profiles_r_ = degree_profiles(r_);
        }
    }

    // Visit every hom in stable order; the visitor returns false to stop.
    void enumerate(const std::function<bool(std::vector<Atom>, std::vector<Atom>)>& visit) {
        if (iso_ && (q_.vertices().size() != r_.vertices().size() ||
                     q_.edges().size() != r_.edges().size()))
            return;
        stop_ = false;
        fv_.assign(q_.vertices().size(), Atom());
        used_vertex_.assign(r_.vertices().size(), false);
        visit_ = &visit;
        counting_ = false;
        assign_vertex(0);
        visit_ = nullptr;
    }

    std::size_t count() {
        if (iso_ && (q_.vertices().size() != r_.vertices().size() ||
                     q_.edges().size() != r_.edges().size()))
            return 0;
        stop_ = false;
        fv_.assign(q_.vertices().size(), Atom());
        used_vertex_.assign(r_.vertices().size(), false);
        counting_ = true;
        total_ = 0;
        assign_vertex(0);
        return total_;
    }

private:
    const Quiver& q_;
    const Quiver& r_;
    bool iso_;
    std::map<std::string, std::vector<Atom>> by_endpoints_;
    std::vector<std::vector<Atom>> edges_ready_at_;
    std::vector<std::pair<std::size_t, std::size_t>> profiles_q_, profiles_r_;

    std::vector<Atom> fv_;
    std::vector<bool> used_vertex_;
    const std::function<bool(std::vector<Atom>, std::vector<Atom>)>* visit_ = nullptr;
    bool counting_ = false;
    bool stop_ = false;
    std::size_t total_ = 0;

    static std::vector<std::pair<std::size_t, std::size_t>> degree_profiles(const Quiver& q) {
        std::vector<std::pair<std::size_t, std::size_t>> prof(q.vertices().size(), {0, 0});
        for (const Atom& e : q.edges()) {
            prof[q.vertices().index_of(q.src()(e))].first++;
            prof[q.vertices().index_of(q.tgt()(e))].second++;
        }
        return prof;
    }

    std::vector<Atom> candidates(const Atom& e) const {
        Atom key = Atom::pair(fv_[q_.vertices().index_of(q_.src()(e))],
                              fv_[q_.vertices().index_of(q_.tgt()(e))]);
        auto it = by_endpoints_.find(key.text());
        return it == by_endpoints_.end() ? std::vector<Atom>{} : it->second;
    }

    void assign_vertex(std::size_t i) {
        if (stop_) return;
        if (i == q_.vertices().size()) {
            expand_edges();
            return;
        }
        for (std::size_t j = 0; j < r_.vertices().size(); ++j) {
            if (iso_) {
                if (used_vertex_[j]) continue;
                if (profiles_q_[i] != profiles_r_[j]) continue;
            }
            fv_[i] = r_.vertices().elements()[j];
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
        const auto& edges = q_.edges().elements();
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
        std::vector<bool> used_edge(r_.edges().size(), false);
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
            std::size_t idx = r_.edges().index_of(c);
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

QuiverMorphism build_hom(const Quiver& q, const Quiver& r, std::vector<Atom> fv,
                         std::vector<Atom> fe) {
    return QuiverMorphism(q, r,
                          FiniteFunction::from_values(q.vertices(), r.vertices(), std::move(fv)),
                          FiniteFunction::from_values(q.edges(), r.edges(), std::move(fe)));
}

} // namespace

std::vector<QuiverMorphism> quiver_homs(const Quiver& q, const Quiver& r, const Bounds& bounds) {
    std::size_t n = quiver_hom_count(q, r);
    if (n > bounds.hom_enumeration_max)
        throw BoundError("hom-set of size " + std::to_string(n) +
                         " exceeds the configured enumeration bound of " +
                         std::to_string(bounds.hom_enumeration_max));
    std::vector<QuiverMorphism> homs;
    homs.reserve(n);
    QuiverHomSearch(q, r, false).enumerate([&](std::vector<Atom> fv, std::vector<Atom> fe) {
        homs.push_back(build_hom(q, r, std::move(fv), std::move(fe)));
        return true;
    });
    return homs;
}

std::size_t quiver_hom_count(const Quiver& q, const Quiver& r) {
    return QuiverHomSearch(q, r, false).count();
}

std::optional<QuiverMorphism> quiver_first_hom(const Quiver& q, const Quiver& r) {
    std::optional<QuiverMorphism> result;
    QuiverHomSearch(q, r, false).enumerate([&](std::vector<Atom> fv, std::vector<Atom> fe) {
        result = build_hom(q, r, std::move(fv), std::move(fe));
        return false;
    });
    return result;
}

std::optional<QuiverMorphism> quiver_iso(const Quiver& q, const Quiver& r) {
    std::optional<QuiverMorphism> result;
    QuiverHomSearch(q, r, true).enumerate([&](std::vector<Atom> fv, std::vector<Atom> fe) {
        result = build_hom(q, r, std::move(fv), std::move(fe));
        return false;
    });
    return result;
}

QuiverSpan quiver_product(const Quiver& a, const Quiver& b) {
    ProductSet v = product_set({a.vertices(), b.vertices()});
    ProductSet e = product_set({a.edges(), b.edges()});
    auto comp = [&](const FiniteFunction& fa, const FiniteFunction& fb) {
        return FiniteFunction::from_map(e.carrier, v.carrier, [&](const Atom& t) {
            return Atom::pair(fa(t.parts()[0]), fb(t.parts()[1]));
        });
    };
    Quiver object(v.carrier, e.carrier, comp(a.src(), b.src()), comp(a.tgt(), b.tgt()));
    QuiverSpan span;
    span.legs.push_back(QuiverMorphism(object, a, v.projections[0], e.projections[0]));
    span.legs.push_back(QuiverMorphism(object, b, v.projections[1], e.projections[1]));
    span.object = std::move(object);
    return span;
}

QuiverSpan quiver_equalizer(const QuiverMorphism& f, const QuiverMorphism& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw ValidationError("equalizer requires a parallel pair");
    const Quiver& a = f.dom();
    std::vector<Atom> vs, es;
    for (const Atom& v : a.vertices())
        if (f.vertex_map()(v) == g.vertex_map()(v)) vs.push_back(v);
    for (const Atom& e : a.edges())
        if (f.edge_map()(e) == g.edge_map()(e)) es.push_back(e);
    FiniteSet v_eq = FiniteSet::of(std::move(vs));
    FiniteSet e_eq = FiniteSet::of(std::move(es));
    Quiver object(v_eq, e_eq,
                  FiniteFunction::from_map(e_eq, v_eq, [&](const Atom& e) { return a.src()(e); }),
                  FiniteFunction::from_map(e_eq, v_eq, [&](const Atom& e) { return a.tgt()(e); }));
    QuiverSpan span;
    span.legs.push_back(QuiverMorphism(object, a,
                                       FiniteFunction::from_map(v_eq, a.vertices(),
                                                                [](const Atom& v) { return v; }),
                                       FiniteFunction::from_map(e_eq, a.edges(),
                                                                [](const Atom& e) { return e; })));
    span.object = std::move(object);
    return span;
}

Quiver quiver_terminal() { return standard_quiver(StandardQuiver::Terminal); }

QuiverSpan quiver_coproduct(const Quiver& a, const Quiver& b) {
    CoproductSet v = coproduct_set({a.vertices(), b.vertices()});
    CoproductSet e = coproduct_set({a.edges(), b.edges()});
    auto comp = [&](const FiniteFunction& fa, const FiniteFunction& fb) {
        return FiniteFunction::from_map(e.carrier, v.carrier, [&](const Atom& t) {
            const Atom& raw = t.parts()[1];
            return t.parts()[0] == Atom::number(0) ? Atom::tag(0, fa(raw)) : Atom::tag(1, fb(raw));
        });
    };
    Quiver object(v.carrier, e.carrier, comp(a.src(), b.src()), comp(a.tgt(), b.tgt()));
    QuiverSpan span;
    span.legs.push_back(QuiverMorphism(a, object, v.injections[0], e.injections[0]));
    span.legs.push_back(QuiverMorphism(b, object, v.injections[1], e.injections[1]));
    span.object = std::move(object);
    return span;
}

QuiverSpan quiver_coequalizer(const QuiverMorphism& f, const QuiverMorphism& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw ValidationError("coequalizer requires a parallel pair");
    const Quiver& b = f.cod();
    SetCoequalizer qv = coequalize_set(f.vertex_map(), g.vertex_map());
    SetCoequalizer qe = coequalize_set(f.edge_map(), g.edge_map());
    // src/tgt descend to classes; verify representative independence.
    std::vector<Atom> src_values(qe.classes.size()), tgt_values(qe.classes.size());
    std::vector<bool> seen(qe.classes.size(), false);
    for (const Atom& e : b.edges()) {
        std::size_t cls = qe.classes.index_of(qe.projection(e));
        Atom s = qv.projection(b.src()(e));
        Atom t = qv.projection(b.tgt()(e));
        if (!seen[cls]) {
            seen[cls] = true;
            src_values[cls] = s;
            tgt_values[cls] = t;
        } else if (src_values[cls] != s || tgt_values[cls] != t) {
            throw ValidationError("coequalizer: src/tgt disagree across an edge class");
        }
    }
    Quiver object(qv.classes, qe.classes,
                  FiniteFunction::from_values(qe.classes, qv.classes, std::move(src_values)),
                  FiniteFunction::from_values(qe.classes, qv.classes, std::move(tgt_values)));
    QuiverSpan span;
    span.legs.push_back(QuiverMorphism(b, object, qv.projection, qe.projection));
    span.object = std::move(object);
    return span;
}

Quiver quiver_initial() { return Quiver(); }

QuiverMorphism quiver_product_mediator(const QuiverSpan& product, const QuiverMorphism& rho1,
                                       const QuiverMorphism& rho2) {
    if (rho1.dom() != rho2.dom()) throw ValidationError("cone legs must share a domain");
    const Quiver& h = rho1.dom();
    const Quiver& p = product.object;
    auto pair_up = [](const FiniteFunction& f1, const FiniteFunction& f2, const FiniteSet& dom,
                      const FiniteSet& cod) {
        return FiniteFunction::from_map(dom, cod,
                                        [&](const Atom& a) { return Atom::pair(f1(a), f2(a)); });
    };
    return QuiverMorphism(h, p,
                          pair_up(rho1.vertex_map(), rho2.vertex_map(), h.vertices(), p.vertices()),
                          pair_up(rho1.edge_map(), rho2.edge_map(), h.edges(), p.edges()));
}

QuiverMorphism quiver_product_on_morphisms(const Quiver& a, const QuiverMorphism& f) {
    QuiverSpan dom = quiver_product(a, f.dom());
    QuiverSpan cod = quiver_product(a, f.cod());
    auto map_component = [&](const FiniteSet& d, const FiniteSet& c, const FiniteFunction& g) {
        return FiniteFunction::from_map(d, c, [&](const Atom& t) {
            return Atom::pair(t.parts()[0], g(t.parts()[1]));
        });
    };
    return QuiverMorphism(dom.object, cod.object,
                          map_component(dom.object.vertices(), cod.object.vertices(),
                                        f.vertex_map()),
                          map_component(dom.object.edges(), cod.object.edges(), f.edge_map()));
}

Quiver relabel(const Quiver& q, const FiniteFunction& vertex_bij, const FiniteFunction& edge_bij) {
    if (!vertex_bij.is_bijective() || !edge_bij.is_bijective())
        throw ValidationError("relabel requires bijections");
    if (vertex_bij.dom() != q.vertices() || edge_bij.dom() != q.edges())
        throw ValidationError("relabel maps must start at the quiver's carriers");
    std::map<std::string, Atom> src_of, tgt_of;
    for (const Atom& e : q.edges()) {
        src_of.emplace(edge_bij(e).text(), vertex_bij(q.src()(e)));
        tgt_of.emplace(edge_bij(e).text(), vertex_bij(q.tgt()(e)));
    }
    return Quiver(vertex_bij.cod(), edge_bij.cod(),
                  FiniteFunction::from_map(edge_bij.cod(), vertex_bij.cod(),
                                           [&](const Atom& e) { return src_of.at(e.text()); }),
                  FiniteFunction::from_map(edge_bij.cod(), vertex_bij.cod(),
                                           [&](const Atom& e) { return tgt_of.at(e.text()); }));
}

Quiver classical_digraph_exponential(const Quiver& q, const Quiver& r, const Bounds& bounds) {
    FiniteSet functions = all_functions(q.vertices(), r.vertices(), bounds);
    // collapse parallel edges to endpoint pairs
    std::vector<Atom> r_pairs;
    for (const Atom& e : r.edges()) r_pairs.push_back(Atom::pair(r.src()(e), r.tgt()(e)));
    FiniteSet r_arcs = FiniteSet::of([&] {
        std::sort(r_pairs.begin(), r_pairs.end());
        r_pairs.erase(std::unique(r_pairs.begin(), r_pairs.end()), r_pairs.end());
        return r_pairs;
    }());

    std::vector<Atom> edges;
    for (const Atom& f : functions)
        for (const Atom& g : functions) {
            bool ok = true;
            for (const Atom& e : q.edges()) {
                Atom image = Atom::pair(f.apply(q.src()(e)), g.apply(q.tgt()(e)));
                if (!r_arcs.contains(image)) {
                    ok = false;
                    break;
                }
            }
            if (ok) edges.push_back(Atom::pair(f, g));
        }
    FiniteSet edge_set = FiniteSet::of(std::move(edges));
    return Quiver(functions, edge_set,
                  FiniteFunction::from_map(edge_set, functions,
                                           [](const Atom& e) { return e.parts()[0]; }),
                  FiniteFunction::from_map(edge_set, functions,
                                           [](const Atom& e) { return e.parts()[1]; }));
}

} // namespace graphcat
