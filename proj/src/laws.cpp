#include <graphcat/laws.hpp>

#include <graphcat/errors.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace graphcat {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::WitnessFound: return "witness_found";
    }
    return "fails";
}

std::string to_string(Category c) {
    switch (c) {
    case Category::Q: return "Q";
    case Category::H: return "H";
    case Category::M: return "M";
    case Category::R: return "R";
    }
    return "?";
}

std::optional<Category> category_from_string(const std::string& name) {
    if (name == "Q" || name == "q") return Category::Q;
    if (name == "H" || name == "h") return Category::H;
    if (name == "M" || name == "m") return Category::M;
    if (name == "R" || name == "r") return Category::R;
    return std::nullopt;
}

std::optional<UniversalProperty> universal_property_from_string(const std::string& name) {
    if (name == "product") return UniversalProperty::Product;
    if (name == "coproduct") return UniversalProperty::Coproduct;
    if (name == "equalizer") return UniversalProperty::Equalizer;
    if (name == "coequalizer") return UniversalProperty::Coequalizer;
    if (name == "exponential") return UniversalProperty::Exponential;
    if (name == "terminal") return UniversalProperty::Terminal;
    if (name == "classifier") return UniversalProperty::Classifier;
    return std::nullopt;
}

namespace {

// ----- categorical operations, one struct per category -----------------

struct QOps {
    using Obj = Quiver;
    using Mor = QuiverMorphism;
    static std::vector<Mor> homs(const Obj& a, const Obj& b) { return quiver_homs(a, b); }
    static Mor comp(const Mor& g, const Mor& f) { return compose(g, f); }
    static std::string key(const Mor& m) { return m.serialize().text(); }
};

struct HOps {
    using Obj = Hypergraph;
    using Mor = HyperMorphism;
    static std::vector<Mor> homs(const Obj& a, const Obj& b) { return hyper_homs(a, b); }
    static Mor comp(const Mor& g, const Mor& f) { return compose(g, f); }
    static std::string key(const Mor& m) { return m.serialize().text(); }
};

// The multigraph category is a full subcategory of H.
struct MOps {
    using Obj = MultigraphView;
    using Mor = HyperMorphism;
    static std::vector<Mor> homs(const Obj& a, const Obj& b) {
        return hyper_homs(a.carrier(), b.carrier());
    }
    static Mor comp(const Mor& g, const Mor& f) { return compose(g, f); }
    static std::string key(const Mor& m) { return m.serialize().text(); }
};

struct ROps {
    using Obj = IncidenceHypergraph;
    using Mor = IncidenceMorphism;
    static std::vector<Mor> homs(const Obj& a, const Obj& b) { return incidence_homs(a, b); }
    static Mor comp(const Mor& g, const Mor& f) { return compose(g, f); }
    static std::string key(const Mor& m) { return m.serialize().text(); }
};

struct SetOps {
    using Obj = FiniteSet;
    using Mor = FiniteFunction;
    static std::vector<Mor> homs(const Obj& a, const Obj& b) {
        std::vector<Mor> result;
        for (const Atom& m : all_functions(a, b))
            result.push_back(FiniteFunction::from_mapping_atom(a, b, m));
        return result;
    }
    static Mor comp(const Mor& g, const Mor& f) { return compose(g, f); }
    static std::string key(const Mor& m) { return m.as_mapping_atom().text(); }
};

std::string count_note(const std::string& what, std::size_t n) {
    return what + " = " + std::to_string(n);
}

// ----- generic universal-property checks --------------------------------

// The map Hom(H,P) -> Hom(H,A) x Hom(H,B), m |-> (p1 m, p2 m) must be a
// bijection; injectivity plus matching cardinalities gives existence and
// uniqueness of mediators for every cone at once.
template <typename Ops>
std::optional<std::string>
product_up(const typename Ops::Obj& p, const typename Ops::Mor& p1, const typename Ops::Mor& p2,
           const typename Ops::Obj& a, const typename Ops::Obj& b, const typename Ops::Obj& apex) {
    auto into_p = Ops::homs(apex, p);
    std::size_t cones = Ops::homs(apex, a).size() * Ops::homs(apex, b).size();
    if (into_p.size() != cones)
        return "mediator count " + std::to_string(into_p.size()) + " differs from cone count " +
               std::to_string(cones);
    std::set<std::string> seen;
    for (const auto& m : into_p) {
        std::string k = Ops::key(Ops::comp(p1, m)) + "|" + Ops::key(Ops::comp(p2, m));
        if (!seen.insert(k).second) return "two mediators induce the same cone " + k;
    }
    return std::nullopt;
}

template <typename Ops>
std::optional<std::string>
coproduct_up(const typename Ops::Obj& c, const typename Ops::Mor& i1, const typename Ops::Mor& i2,
             const typename Ops::Obj& a, const typename Ops::Obj& b,
             const typename Ops::Obj& apex) {
    auto from_c = Ops::homs(c, apex);
    std::size_t cocones = Ops::homs(a, apex).size() * Ops::homs(b, apex).size();
    if (from_c.size() != cocones)
        return "mediator count " + std::to_string(from_c.size()) +
               " differs from cocone count " + std::to_string(cocones);
    std::set<std::string> seen;
    for (const auto& m : from_c) {
        std::string k = Ops::key(Ops::comp(m, i1)) + "|" + Ops::key(Ops::comp(m, i2));
        if (!seen.insert(k).second) return "two mediators induce the same cocone " + k;
    }
    return std::nullopt;
}

template <typename Ops>
std::optional<std::string>
equalizer_up(const typename Ops::Obj& e, const typename Ops::Mor& incl,
             const typename Ops::Obj& a, const typename Ops::Mor& f, const typename Ops::Mor& g,
             const typename Ops::Obj& apex) {
    std::set<std::string> forks;
    for (const auto& h : Ops::homs(apex, a))
        if (Ops::key(Ops::comp(f, h)) == Ops::key(Ops::comp(g, h))) forks.insert(Ops::key(h));
    auto into_e = Ops::homs(apex, e);
    if (into_e.size() != forks.size())
        return "mediator count " + std::to_string(into_e.size()) + " differs from fork count " +
               std::to_string(forks.size());
    std::set<std::string> seen;
    for (const auto& m : into_e) {
        std::string k = Ops::key(Ops::comp(incl, m));
        if (forks.find(k) == forks.end()) return "factored morphism is not a fork: " + k;
        if (!seen.insert(k).second) return "two mediators for the same fork " + k;
    }
    return std::nullopt;
}

template <typename Ops>
std::optional<std::string>
coequalizer_up(const typename Ops::Obj& c, const typename Ops::Mor& proj,
               const typename Ops::Obj& b, const typename Ops::Mor& f, const typename Ops::Mor& g,
               const typename Ops::Obj& apex) {
    if (Ops::key(Ops::comp(proj, f)) != Ops::key(Ops::comp(proj, g)))
        return "projection does not cofork the pair";
    std::set<std::string> coforks;
    for (const auto& h : Ops::homs(b, apex))
        if (Ops::key(Ops::comp(h, f)) == Ops::key(Ops::comp(h, g))) coforks.insert(Ops::key(h));
    auto from_c = Ops::homs(c, apex);
    if (from_c.size() != coforks.size())
        return "mediator count " + std::to_string(from_c.size()) +
               " differs from cofork count " + std::to_string(coforks.size());
    std::set<std::string> seen;
    for (const auto& m : from_c) {
        std::string k = Ops::key(Ops::comp(m, proj));
        if (coforks.find(k) == coforks.end()) return "factored morphism is not a cofork: " + k;
        if (!seen.insert(k).second) return "two mediators for the same cofork " + k;
    }
    return std::nullopt;
}

// ----- corpus slices -----------------------------------------------------

std::vector<std::pair<std::string, Quiver>> quiver_samples(std::size_t n) {
    const auto& all = default_corpus().quivers;
    return {all.begin(), all.begin() + std::min(n, all.size())};
}

std::vector<std::pair<std::string, Hypergraph>> hypergraph_samples(std::size_t n) {
    const auto& all = default_corpus().hypergraphs;
    return {all.begin(), all.begin() + std::min(n, all.size())};
}

std::vector<std::pair<std::string, MultigraphView>> multigraph_samples(std::size_t n) {
    const auto& all = default_corpus().multigraphs;
    return {all.begin(), all.begin() + std::min(n, all.size())};
}

std::vector<std::pair<std::string, IncidenceHypergraph>> incidence_samples(std::size_t n) {
    const auto& all = default_corpus().incidence_hypergraphs;
    return {all.begin(), all.begin() + std::min(n, all.size())};
}

std::vector<std::pair<std::string, FiniteSet>> set_samples() {
    return {{"0", FiniteSet()}, {"1", FiniteSet::one_to(1)}, {"2", FiniteSet::one_to(2)}};
}

} // namespace

// ----- universal properties over the corpus ------------------------------

namespace {

template <typename Ops, typename Samples, typename ProductFn>
LawReport run_product_check(const std::string& cat, const Samples& samples,
                            const ProductFn& make_product) {
    LawReport report{"universal_property.product", "category " + cat + ", corpus pairs",
                     Verdict::Holds, {}};
    std::size_t checked = 0;
    for (const auto& [na, a] : samples)
        for (const auto& [nb, b] : samples) {
            auto span = make_product(a, b);
            for (const auto& [nh, h] : samples) {
                auto bad = product_up<Ops>(span.first, span.second[0], span.second[1], a, b, h);
                ++checked;
                if (bad) {
                    report.verdict = Verdict::Fails;
                    report.evidence.push_back("(" + na + " x " + nb + ", apex " + nh + "): " + *bad);
                    return report;
                }
            }
        }
    report.evidence.push_back(count_note("cone families checked", checked));
    return report;
}

template <typename Ops, typename Samples, typename CoproductFn>
LawReport run_coproduct_check(const std::string& cat, const Samples& samples,
                              const CoproductFn& make_coproduct) {
    LawReport report{"universal_property.coproduct", "category " + cat + ", corpus pairs",
                     Verdict::Holds, {}};
    std::size_t checked = 0;
    for (const auto& [na, a] : samples)
        for (const auto& [nb, b] : samples) {
            auto span = make_coproduct(a, b);
            for (const auto& [nh, h] : samples) {
                auto bad = coproduct_up<Ops>(span.first, span.second[0], span.second[1], a, b, h);
                ++checked;
                if (bad) {
                    report.verdict = Verdict::Fails;
                    report.evidence.push_back("(" + na + " + " + nb + ", apex " + nh + "): " + *bad);
                    return report;
                }
            }
        }
    report.evidence.push_back(count_note("cocone families checked", checked));
    return report;
}

template <typename Ops, typename Samples, typename EqualizerFn>
LawReport run_equalizer_check(const std::string& cat, const Samples& samples,
                              const EqualizerFn& make_equalizer, bool dual) {
    std::string name = dual ? "universal_property.coequalizer" : "universal_property.equalizer";
    LawReport report{name, "category " + cat + ", corpus parallel pairs", Verdict::Holds, {}};
    std::size_t checked = 0;
    for (const auto& [na, a] : samples)
        for (const auto& [nb, b] : samples) {
            auto homs = Ops::homs(a, b);
            if (homs.empty()) continue;
            // a few parallel pairs, including an equal one
            std::vector<std::pair<typename Ops::Mor, typename Ops::Mor>> pairs;
            pairs.emplace_back(homs.front(), homs.front());
            if (homs.size() > 1) {
                pairs.emplace_back(homs.front(), homs.back());
                pairs.emplace_back(homs[homs.size() / 2], homs.front());
            }
            for (const auto& [f, g] : pairs) {
                auto span = make_equalizer(f, g);
                for (const auto& [nh, h] : samples) {
                    auto bad = dual ? coequalizer_up<Ops>(span.first, span.second[0], b, f, g, h)
                                    : equalizer_up<Ops>(span.first, span.second[0], a, f, g, h);
                    ++checked;
                    if (bad) {
                        report.verdict = Verdict::Fails;
                        report.evidence.push_back("(" + na + " => " + nb + ", apex " + nh +
                                                  "): " + *bad);
                        return report;
                    }
                }
            }
        }
    report.evidence.push_back(count_note("fork families checked", checked));
    return report;
}

template <typename Ops, typename Samples>
LawReport run_terminal_check(const std::string& cat, const Samples& samples,
                             const typename Ops::Obj& terminal) {
    LawReport report{"universal_property.terminal", "category " + cat, Verdict::Holds, {}};
    for (const auto& [name, g] : samples) {
        std::size_t n = Ops::homs(g, terminal).size();
        if (n != 1) {
            report.verdict = Verdict::Fails;
            report.evidence.push_back("object " + name + " has " + std::to_string(n) +
                                      " morphisms into the terminal object");
            return report;
        }
    }
    report.evidence.push_back(count_note("objects checked", samples.size()));
    return report;
}

// exponential transposition m |-> eval o (base x m) must be a bijection
// Hom(K, R^Q) -> Hom(Q x K, R)
std::optional<std::string> quiver_exponential_up(const Quiver& q, const Quiver& k, const Quiver& r,
                                                 const Bounds& bounds) {
    QuiverExponential exp = quiver_exponential(q, r, bounds);
    QuiverSpan qk = quiver_product(q, k);
    auto direct = quiver_homs(qk.object, r, bounds);
    auto transposed = quiver_homs(k, exp.power, bounds);
    if (direct.size() != transposed.size())
        return "hom-set sizes differ: " + std::to_string(direct.size()) + " vs " +
               std::to_string(transposed.size());
    std::set<std::string> direct_keys;
    for (const auto& m : direct) direct_keys.insert(QOps::key(m));
    std::set<std::string> seen;
    for (const auto& m : transposed) {
        QuiverMorphism expanded = compose(exp.eval, quiver_product_on_morphisms(q, m));
        std::string key = QOps::key(expanded);
        if (direct_keys.find(key) == direct_keys.end()) return "uncurried morphism is not a hom";
        if (!seen.insert(key).second) return "two transposes with the same uncurrying";
    }
    for (const auto& psi : direct) {
        QuiverMorphism hat = quiver_curry(q, k, psi, bounds);
        if (QOps::key(quiver_uncurry(q, r, hat)) != QOps::key(psi))
            return "curry/uncurry round trip failed";
    }
    return std::nullopt;
}

std::optional<std::string> incidence_exponential_up(const IncidenceHypergraph& g,
                                                    const IncidenceHypergraph& k,
                                                    const IncidenceHypergraph& h,
                                                    const Bounds& bounds) {
    IncidenceExponential exp = inc_exponential(g, h, bounds);
    IncidenceSpan gk = inc_product(g, k);
    auto direct = incidence_homs(gk.object, h, bounds);
    auto transposed = incidence_homs(k, exp.power, bounds);
    if (direct.size() != transposed.size())
        return "hom-set sizes differ: " + std::to_string(direct.size()) + " vs " +
               std::to_string(transposed.size());
    std::set<std::string> direct_keys;
    for (const auto& m : direct) direct_keys.insert(ROps::key(m));
    std::set<std::string> seen;
    for (const auto& m : transposed) {
        IncidenceMorphism expanded = compose(exp.eval, inc_product_on_morphisms(g, m));
        std::string key = ROps::key(expanded);
        if (direct_keys.find(key) == direct_keys.end()) return "uncurried morphism is not a hom";
        if (!seen.insert(key).second) return "two transposes with the same uncurrying";
    }
    for (const auto& psi : direct) {
        IncidenceMorphism hat = inc_curry(g, k, psi, bounds);
        if (ROps::key(inc_uncurry(g, h, hat)) != ROps::key(psi))
            return "curry/uncurry round trip failed";
    }
    return std::nullopt;
}

LawReport run_classifier_check(const Bounds& bounds) {
    LawReport report{"universal_property.classifier", "category H, corpus monomorphisms",
                     Verdict::Holds, {}};
    Hypergraph terminal = hyper_terminal();
    PartialMorphismRepresenter omega = partial_morphism_representer(terminal, bounds);
    auto samples = hypergraph_samples(8);
    std::size_t monos_checked = 0;
    for (const auto& [nh, h] : samples) {
        auto to_terminal = hyper_homs(h, terminal, bounds);
        if (to_terminal.size() != 1) {
            report.verdict = Verdict::Fails;
            report.evidence.push_back("object " + nh + " lacks a unique map to the terminal");
            return report;
        }
        const HyperMorphism& psi = to_terminal.front();
        for (const auto& [nk, k] : samples) {
            for (const auto& phi : hyper_homs(h, k, bounds)) {
                MorphismFlags flags = classify_morphism(phi);
                if (!flags.mono) continue;
                ++monos_checked;
                HyperMorphism chi = classify_partial_morphism(phi, psi, bounds);
                if (!pullback_recovers(chi, omega.unit, phi, psi, bounds)) {
                    report.verdict = Verdict::Fails;
                    report.evidence.push_back("mono " + nh + " >-> " + nk +
                                              ": classifying map does not recover the subobject");
                    return report;
                }
                std::size_t classifying = 0;
                for (const auto& cand : hyper_homs(k, omega.object, bounds))
                    if (pullback_recovers(cand, omega.unit, phi, psi, bounds)) ++classifying;
                if (classifying != 1) {
                    report.verdict = Verdict::Fails;
                    report.evidence.push_back("mono " + nh + " >-> " + nk + ": " +
                                              std::to_string(classifying) + " classifying maps");
                    return report;
                }
            }
        }
    }
    report.evidence.push_back(count_note("monomorphisms classified", monos_checked));
    return report;
}

} // namespace

LawReport check_universal_property(UniversalProperty kind, Category cat, const Bounds& bounds) {
    auto q_samples = quiver_samples(5);
    auto h_samples = hypergraph_samples(6);
    auto m_samples = multigraph_samples(5);
    auto r_samples = incidence_samples(6);

    switch (kind) {
    case UniversalProperty::Product:
        switch (cat) {
        case Category::Q:
            return run_product_check<QOps>("Q", q_samples, [](const Quiver& a, const Quiver& b) {
                QuiverSpan s = quiver_product(a, b);
                return std::make_pair(s.object, s.legs);
            });
        case Category::H:
            return run_product_check<HOps>(
                "H", h_samples, [&](const Hypergraph& a, const Hypergraph& b) {
                    HyperSpan s = hyper_product(a, b, bounds);
                    return std::make_pair(s.object, s.legs);
                });
        case Category::M:
            return run_product_check<MOps>(
                "M", m_samples, [&](const MultigraphView& a, const MultigraphView& b) {
                    HyperSpan s = hyper_product(a.carrier(), b.carrier(), bounds);
                    Deletion d = del(s.object);
                    std::vector<HyperMorphism> legs{compose(s.legs[0], d.inclusion),
                                                    compose(s.legs[1], d.inclusion)};
                    return std::make_pair(d.multigraph, legs);
                });
        case Category::R:
            return run_product_check<ROps>(
                "R", r_samples, [](const IncidenceHypergraph& a, const IncidenceHypergraph& b) {
                    IncidenceSpan s = inc_product(a, b);
                    return std::make_pair(s.object, s.legs);
                });
        }
        break;
    case UniversalProperty::Coproduct:
        switch (cat) {
        case Category::Q:
            return run_coproduct_check<QOps>("Q", q_samples, [](const Quiver& a, const Quiver& b) {
                QuiverSpan s = quiver_coproduct(a, b);
                return std::make_pair(s.object, s.legs);
            });
        case Category::H:
            return run_coproduct_check<HOps>("H", h_samples,
                                             [](const Hypergraph& a, const Hypergraph& b) {
                                                 HyperSpan s = hyper_coproduct(a, b);
                                                 return std::make_pair(s.object, s.legs);
                                             });
        case Category::M:
            return run_coproduct_check<MOps>(
                "M", m_samples, [](const MultigraphView& a, const MultigraphView& b) {
                    HyperSpan s = hyper_coproduct(a.carrier(), b.carrier());
                    return std::make_pair(MultigraphView(s.object), s.legs);
                });
        case Category::R:
            return run_coproduct_check<ROps>(
                "R", r_samples, [](const IncidenceHypergraph& a, const IncidenceHypergraph& b) {
                    IncidenceSpan s = inc_coproduct(a, b);
                    return std::make_pair(s.object, s.legs);
                });
        }
        break;
    case UniversalProperty::Equalizer:
    case UniversalProperty::Coequalizer: {
        bool dual = kind == UniversalProperty::Coequalizer;
        switch (cat) {
        case Category::Q:
            return run_equalizer_check<QOps>(
                "Q", q_samples,
                [&](const QuiverMorphism& f, const QuiverMorphism& g) {
                    QuiverSpan s = dual ? quiver_coequalizer(f, g) : quiver_equalizer(f, g);
                    return std::make_pair(s.object, s.legs);
                },
                dual);
        case Category::H:
            return run_equalizer_check<HOps>(
                "H", h_samples,
                [&](const HyperMorphism& f, const HyperMorphism& g) {
                    HyperSpan s = dual ? hyper_coequalizer(f, g) : hyper_equalizer(f, g);
                    return std::make_pair(s.object, s.legs);
                },
                dual);
        case Category::M:
            return run_equalizer_check<MOps>(
                "M", m_samples,
                [&](const HyperMorphism& f, const HyperMorphism& g) {
                    HyperSpan s = dual ? hyper_coequalizer(f, g) : hyper_equalizer(f, g);
                    return std::make_pair(MultigraphView(s.object), s.legs);
                },
                dual);
        case Category::R:
            return run_equalizer_check<ROps>(
                "R", r_samples,
                [&](const IncidenceMorphism& f, const IncidenceMorphism& g) {
                    IncidenceSpan s = dual ? inc_coequalizer(f, g) : inc_equalizer(f, g);
                    return std::make_pair(s.object, s.legs);
                },
                dual);
        }
        break;
    }
    case UniversalProperty::Terminal:
        switch (cat) {
        case Category::Q:
            return run_terminal_check<QOps>("Q", q_samples, quiver_terminal());
        case Category::H:
            return run_terminal_check<HOps>("H", h_samples, hyper_terminal());
        case Category::M:
            return run_terminal_check<MOps>("M", m_samples,
                                            del(hyper_terminal()).multigraph);
        case Category::R:
            return run_terminal_check<ROps>("R", r_samples, inc_terminal());
        }
        break;
    case UniversalProperty::Exponential:
        switch (cat) {
        case Category::Q: {
            LawReport report{"universal_property.exponential", "category Q, corpus triples",
                             Verdict::Holds, {}};
            std::size_t checked = 0;
            for (const auto& [nq, q] : q_samples)
                for (const auto& [nk, k] : q_samples)
                    for (const auto& [nr, r] : q_samples) {
                        auto bad = quiver_exponential_up(q, k, r, bounds);
                        ++checked;
                        if (bad) {
                            report.verdict = Verdict::Fails;
                            report.evidence.push_back("(" + nq + "," + nk + "," + nr + "): " +
                                                      *bad);
                            return report;
                        }
                    }
            report.evidence.push_back(count_note("triples checked", checked));
            return report;
        }
        case Category::R: {
            LawReport report{"universal_property.exponential", "category R, corpus triples",
                             Verdict::Holds, {}};
            std::size_t checked = 0;
            for (const auto& [ng, g] : r_samples)
                for (const auto& [nk, k] : r_samples)
                    for (const auto& [nh, h] : r_samples) {
                        auto bad = incidence_exponential_up(g, k, h, bounds);
                        ++checked;
                        if (bad) {
                            report.verdict = Verdict::Fails;
                            report.evidence.push_back("(" + ng + "," + nk + "," + nh + "): " +
                                                      *bad);
                            return report;
                        }
                    }
            report.evidence.push_back(count_note("triples checked", checked));
            return report;
        }
        default:
            throw ValidationError("exponentials exist only in categories Q and R");
        }
    case UniversalProperty::Classifier:
        if (cat != Category::H)
            throw ValidationError("the classifier check is implemented for category H");
        return run_classifier_check(bounds);
    }
    throw ValidationError("unknown universal property check");
}

LawReport check_currying_bijections(Category cat, const Bounds& bounds) {
    if (cat == Category::Q) {
        LawReport report{"currying.Q", "all corpus triples", Verdict::Holds, {}};
        const auto& corpus = default_corpus().quivers;
        std::size_t checked = 0;
        for (const auto& [nq, q] : corpus)
            for (const auto& [nk, k] : corpus)
                for (const auto& [nr, r] : corpus) {
                    auto bad = quiver_exponential_up(q, k, r, bounds);
                    ++checked;
                    if (bad) {
                        report.verdict = Verdict::Fails;
                        report.evidence.push_back("(" + nq + "," + nk + "," + nr + "): " + *bad);
                        return report;
                    }
                }
        report.evidence.push_back(count_note("triples checked", checked));
        return report;
    }
    if (cat == Category::R) {
        LawReport report{"currying.R", "all corpus triples", Verdict::Holds, {}};
        const auto& corpus = default_corpus().incidence_hypergraphs;
        std::size_t checked = 0;
        for (const auto& [ng, g] : corpus)
            for (const auto& [nk, k] : corpus)
                for (const auto& [nh, h] : corpus) {
                    auto bad = incidence_exponential_up(g, k, h, bounds);
                    ++checked;
                    if (bad) {
                        report.verdict = Verdict::Fails;
                        report.evidence.push_back("(" + ng + "," + nk + "," + nh + "): " + *bad);
                        return report;
                    }
                }
        report.evidence.push_back(count_note("triples checked", checked));
        return report;
    }
    throw ValidationError("currying bijections exist only in categories Q and R");
}

// ----- pullback recovery --------------------------------------------------

std::optional<HyperMorphism> pullback_recovers(const HyperMorphism& chi, const HyperMorphism& eta,
                                               const HyperMorphism& phi, const HyperMorphism& psi,
                                               const Bounds& bounds) {
    if (phi.dom() != psi.dom() || chi.dom() != phi.cod() || eta.dom() != psi.cod() ||
        chi.cod() != eta.cod())
        throw ValidationError("pullback_recovers: mismatched span");
    const Hypergraph& h = phi.dom();
    HyperSpan pb = hyper_pullback(chi, eta, bounds);
    if (pb.object.vertices().size() != h.vertices().size() ||
        pb.object.edges().size() != h.edges().size())
        return std::nullopt;
    try {
        HyperMorphism iota = hyper_product_mediator(
            HyperSpan{pb.object, {pb.legs[0], pb.legs[1]}}, phi, psi);
        // mediator into the pullback carrier: vertex/edge atoms must exist
        if (!iota.vertex_map().is_bijective() || !iota.edge_map().is_bijective())
            return std::nullopt;
        if (compose(pb.legs[0], iota) != phi || compose(pb.legs[1], iota) != psi)
            return std::nullopt;
        return iota;
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

// ----- adjunction registry ------------------------------------------------

namespace {

template <typename LOps, typename ROps>
struct Adjunction {
    using LObj = typename LOps::Obj;
    using LMor = typename LOps::Mor;
    using RObj = typename ROps::Obj;
    using RMor = typename ROps::Mor;

    std::string label;
    std::function<RObj(const LObj&)> left_functor;         // F on objects
    std::function<RMor(const LMor&)> left_functor_mor;     // F on morphisms
    std::function<LObj(const RObj&)> right_functor;        // G on objects
    std::function<LMor(const RMor&)> right_functor_mor;    // G on morphisms
    // Hom(F X, Y) -> Hom(X, G Y) and back
    std::function<LMor(const LObj&, const RObj&, const RMor&)> transpose;
    std::function<RMor(const LObj&, const RObj&, const LMor&)> transpose_back;
};

template <typename LOps, typename ROps>
std::optional<std::string>
verify_adjunction(const Adjunction<LOps, ROps>& adj,
                  const std::vector<std::pair<std::string, typename LOps::Obj>>& lefts,
                  const std::vector<std::pair<std::string, typename ROps::Obj>>& rights,
                  std::vector<std::string>& evidence) {
    std::size_t pairs = 0, total = 0;
    for (const auto& [nx, x] : lefts) {
        for (const auto& [ny, y] : rights) {
            auto direct = ROps::homs(adj.left_functor(x), y);
            auto indirect = LOps::homs(x, adj.right_functor(y));
            if (direct.size() != indirect.size())
                return adj.label + " at (" + nx + "," + ny + "): hom counts " +
                       std::to_string(direct.size()) + " vs " + std::to_string(indirect.size());
            std::set<std::string> indirect_keys;
            for (const auto& m : indirect) indirect_keys.insert(LOps::key(m));
            std::set<std::string> seen;
            for (const auto& m : direct) {
                auto t = adj.transpose(x, y, m);
                std::string k = LOps::key(t);
                if (indirect_keys.find(k) == indirect_keys.end())
                    return adj.label + " at (" + nx + "," + ny + "): transpose leaves the hom-set";
                if (!seen.insert(k).second)
                    return adj.label + " at (" + nx + "," + ny + "): transpose is not injective";
                if (ROps::key(adj.transpose_back(x, y, t)) != ROps::key(m))
                    return adj.label + " at (" + nx + "," + ny + "): round trip failed";
            }
            ++pairs;
            total += direct.size();
        }
    }

    // naturality squares on sampled morphisms
    std::size_t squares = 0;
    for (std::size_t xi = 0; xi < lefts.size() && squares < 24; ++xi) {
        for (std::size_t xj = 0; xj < lefts.size() && squares < 24; ++xj) {
            const auto& [nx, x] = lefts[xi];
            const auto& [nx2, x2] = lefts[xj];
            auto alphas = LOps::homs(x2, x);
            if (alphas.empty()) continue;
            for (const auto& [ny, y] : rights) {
                auto direct = ROps::homs(adj.left_functor(x), y);
                if (direct.empty()) continue;
                const auto& alpha = alphas.front();
                const auto& phi = direct.front();
                auto lhs = adj.transpose(x2, y, ROps::comp(phi, adj.left_functor_mor(alpha)));
                auto rhs = LOps::comp(adj.transpose(x, y, phi), alpha);
                if (LOps::key(lhs) != LOps::key(rhs))
                    return adj.label + ": naturality in the left variable fails at (" + nx2 +
                           "->" + nx + "," + ny + ")";
                ++squares;
            }
        }
    }
    for (std::size_t yi = 0; yi < rights.size() && squares < 48; ++yi) {
        for (std::size_t yj = 0; yj < rights.size() && squares < 48; ++yj) {
            const auto& [ny, y] = rights[yi];
            const auto& [ny2, y2] = rights[yj];
            auto betas = ROps::homs(y, y2);
            if (betas.empty()) continue;
            for (const auto& [nx, x] : lefts) {
                auto direct = ROps::homs(adj.left_functor(x), y);
                if (direct.empty()) continue;
                const auto& beta = betas.front();
                const auto& phi = direct.front();
                auto lhs = adj.transpose(x, y2, ROps::comp(beta, phi));
                auto rhs = LOps::comp(adj.right_functor_mor(beta), adj.transpose(x, y, phi));
                if (LOps::key(lhs) != LOps::key(rhs))
                    return adj.label + ": naturality in the right variable fails at (" + nx + "," +
                           ny + "->" + ny2 + ")";
                ++squares;
            }
        }
    }
    evidence.push_back(adj.label + ": " + std::to_string(pairs) + " object pairs, " +
                       std::to_string(total) + " transposed morphisms, " +
                       std::to_string(squares) + " naturality squares");
    return std::nullopt;
}

} // namespace

std::vector<std::string> adjunction_names() {
    return {"q_vertex", "q_edge",      "h_vertex", "h_edge",     "del",
            "assoc",    "r_vertex",    "r_edge",   "r_incidence", "upsilon"};
}

LawReport check_adjunction(const std::string& name, const Bounds& bounds) {
    (void)bounds;
    LawReport report{"adjunction." + name, "default corpus samples", Verdict::Holds, {}};
    auto sets = set_samples();
    auto quivers = quiver_samples(5);
    auto hypers = hypergraph_samples(6);
    auto multis = multigraph_samples(5);
    auto incs = incidence_samples(6);

    auto fail = [&](const std::string& why) {
        report.verdict = Verdict::Fails;
        report.evidence.push_back(why);
        return report;
    };

    if (name == "q_vertex") {
        // V_diamond -| V
        Adjunction<SetOps, QOps> lower{
            "Vq_diamond -| Vq",
            [](const FiniteSet& x) { return standard_quiver(StandardQuiver::VertexDiamond, x); },
            [](const FiniteFunction& a) {
                return QuiverMorphism(standard_quiver(StandardQuiver::VertexDiamond, a.dom()),
                                      standard_quiver(StandardQuiver::VertexDiamond, a.cod()), a,
                                      FiniteFunction::empty_into(FiniteSet()));
            },
            [](const Quiver& q) { return q.vertices(); },
            [](const QuiverMorphism& b) { return b.vertex_map(); },
            [](const FiniteSet&, const Quiver&, const QuiverMorphism& m) {
                return m.vertex_map();
            },
            [](const FiniteSet& x, const Quiver& q, const FiniteFunction& f) {
                return QuiverMorphism(standard_quiver(StandardQuiver::VertexDiamond, x), q, f,
                                      FiniteFunction::empty_into(q.edges()));
            }};
        if (auto bad = verify_adjunction(lower, sets, quivers, report.evidence)) return fail(*bad);
        // V -| V_star
        Adjunction<QOps, SetOps> upper{
            "Vq -| Vq_star",
            [](const Quiver& q) { return q.vertices(); },
            [](const QuiverMorphism& a) { return a.vertex_map(); },
            [](const FiniteSet& y) { return standard_quiver(StandardQuiver::VertexStar, y); },
            [](const FiniteFunction& b) {
                Quiver dom = standard_quiver(StandardQuiver::VertexStar, b.dom());
                Quiver cod = standard_quiver(StandardQuiver::VertexStar, b.cod());
                return QuiverMorphism(
                    dom, cod, b,
                    FiniteFunction::from_map(dom.edges(), cod.edges(), [&](const Atom& e) {
                        return Atom::pair(b(e.parts()[0]), b(e.parts()[1]));
                    }));
            },
            [](const Quiver& q, const FiniteSet& y, const FiniteFunction& f) {
                Quiver star = standard_quiver(StandardQuiver::VertexStar, y);
                return QuiverMorphism(
                    q, star, f,
                    FiniteFunction::from_map(q.edges(), star.edges(), [&](const Atom& e) {
                        return Atom::pair(f(q.src()(e)), f(q.tgt()(e)));
                    }));
            },
            [](const Quiver&, const FiniteSet&, const QuiverMorphism& m) {
                return m.vertex_map();
            }};
        if (auto bad = verify_adjunction(upper, quivers, sets, report.evidence)) return fail(*bad);
        return report;
    }

    if (name == "q_edge") {
        Adjunction<SetOps, QOps> lower{
            "Eq_diamond -| Eq",
            [](const FiniteSet& x) { return standard_quiver(StandardQuiver::EdgeDiamond, x); },
            [](const FiniteFunction& a) {
                Quiver dom = standard_quiver(StandardQuiver::EdgeDiamond, a.dom());
                Quiver cod = standard_quiver(StandardQuiver::EdgeDiamond, a.cod());
                return QuiverMorphism(
                    dom, cod,
                    FiniteFunction::from_map(dom.vertices(), cod.vertices(),
                                             [&](const Atom& v) {
                                                 return Atom::pair(v.parts()[0],
                                                                   a(v.parts()[1]));
                                             }),
                    a);
            },
            [](const Quiver& q) { return q.edges(); },
            [](const QuiverMorphism& b) { return b.edge_map(); },
            [](const FiniteSet&, const Quiver&, const QuiverMorphism& m) { return m.edge_map(); },
            [](const FiniteSet& x, const Quiver& q, const FiniteFunction& f) {
                Quiver dom = standard_quiver(StandardQuiver::EdgeDiamond, x);
                return QuiverMorphism(
                    dom, q,
                    FiniteFunction::from_map(dom.vertices(), q.vertices(),
                                             [&](const Atom& v) {
                                                 const Atom& e = f(v.parts()[1]);
                                                 return v.parts()[0] == Atom::number(0)
                                                            ? q.src()(e)
                                                            : q.tgt()(e);
                                             }),
                    f);
            }};
        if (auto bad = verify_adjunction(lower, sets, quivers, report.evidence)) return fail(*bad);
        Adjunction<QOps, SetOps> upper{
            "Eq -| Eq_star",
            [](const Quiver& q) { return q.edges(); },
            [](const QuiverMorphism& a) { return a.edge_map(); },
            [](const FiniteSet& y) { return standard_quiver(StandardQuiver::EdgeStar, y); },
            [](const FiniteFunction& b) {
                Quiver dom = standard_quiver(StandardQuiver::EdgeStar, b.dom());
                Quiver cod = standard_quiver(StandardQuiver::EdgeStar, b.cod());
                return QuiverMorphism(dom, cod, FiniteFunction::identity(dom.vertices()), b);
            },
            [](const Quiver& q, const FiniteSet& y, const FiniteFunction& f) {
                Quiver star = standard_quiver(StandardQuiver::EdgeStar, y);
                return QuiverMorphism(
                    q, star,
                    FiniteFunction::constant(q.vertices(), star.vertices(), Atom::number(1)), f);
            },
            [](const Quiver&, const FiniteSet&, const QuiverMorphism& m) { return m.edge_map(); }};
        if (auto bad = verify_adjunction(upper, quivers, sets, report.evidence)) return fail(*bad);
        return report;
    }

    if (name == "h_vertex") {
        Adjunction<SetOps, HOps> lower{
            "V_diamond -| V",
            [](const FiniteSet& x) {
                return standard_hypergraph(StandardHypergraph::VertexDiamond, x);
            },
            [](const FiniteFunction& a) {
                return HyperMorphism(
                    standard_hypergraph(StandardHypergraph::VertexDiamond, a.dom()),
                    standard_hypergraph(StandardHypergraph::VertexDiamond, a.cod()), a,
                    FiniteFunction::empty_into(FiniteSet()));
            },
            [](const Hypergraph& g) { return g.vertices(); },
            [](const HyperMorphism& b) { return b.vertex_map(); },
            [](const FiniteSet&, const Hypergraph&, const HyperMorphism& m) {
                return m.vertex_map();
            },
            [](const FiniteSet& x, const Hypergraph& g, const FiniteFunction& f) {
                return HyperMorphism(standard_hypergraph(StandardHypergraph::VertexDiamond, x), g,
                                     f, FiniteFunction::empty_into(g.edges()));
            }};
        if (auto bad = verify_adjunction(lower, sets, hypers, report.evidence)) return fail(*bad);
        Adjunction<HOps, SetOps> upper{
            "V -| V_star",
            [](const Hypergraph& g) { return g.vertices(); },
            [](const HyperMorphism& a) { return a.vertex_map(); },
            [](const FiniteSet& y) { return standard_hypergraph(StandardHypergraph::VertexStar, y); },
            [](const FiniteFunction& b) {
                Hypergraph dom = standard_hypergraph(StandardHypergraph::VertexStar, b.dom());
                Hypergraph cod = standard_hypergraph(StandardHypergraph::VertexStar, b.cod());
                return HyperMorphism(dom, cod, b,
                                     FiniteFunction::from_map(dom.edges(), cod.edges(),
                                                              [&](const Atom& s) {
                                                                  return image_of(b, s);
                                                              }));
            },
            [](const Hypergraph& g, const FiniteSet& y, const FiniteFunction& f) {
                Hypergraph star = standard_hypergraph(StandardHypergraph::VertexStar, y);
                return HyperMorphism(g, star, f,
                                     FiniteFunction::from_map(g.edges(), star.edges(),
                                                              [&](const Atom& e) {
                                                                  return image_of(f,
                                                                                  g.endpoints(e));
                                                              }));
            },
            [](const Hypergraph&, const FiniteSet&, const HyperMorphism& m) {
                return m.vertex_map();
            }};
        if (auto bad = verify_adjunction(upper, hypers, sets, report.evidence)) return fail(*bad);
        return report;
    }

    if (name == "h_edge") {
        Adjunction<HOps, SetOps> upper{
            "E -| E_star",
            [](const Hypergraph& g) { return g.edges(); },
            [](const HyperMorphism& a) { return a.edge_map(); },
            [](const FiniteSet& y) { return standard_hypergraph(StandardHypergraph::EdgeStar, y); },
            [](const FiniteFunction& b) {
                Hypergraph dom = standard_hypergraph(StandardHypergraph::EdgeStar, b.dom());
                Hypergraph cod = standard_hypergraph(StandardHypergraph::EdgeStar, b.cod());
                return HyperMorphism(dom, cod, FiniteFunction::identity(dom.vertices()),
                                     FiniteFunction::from_map(dom.edges(), cod.edges(),
                                                              [&](const Atom& e) {
                                                                  return Atom::pair(
                                                                      e.parts()[0],
                                                                      b(e.parts()[1]));
                                                              }));
            },
            [](const Hypergraph& g, const FiniteSet&, const FiniteFunction& f) {
                return factor_through_edge_star(g, f);
            },
            // zeta after the edge part: (n, x) |-> x
            [](const Hypergraph&, const FiniteSet& y, const HyperMorphism& m) {
                return FiniteFunction::from_map(m.dom().edges(), y, [&](const Atom& e) {
                    return m.edge_map()(e).parts()[1];
                });
            }};
        if (auto bad = verify_adjunction(upper, hypers, sets, report.evidence)) return fail(*bad);
        return report;
    }

    if (name == "del") {
        Adjunction<MOps, HOps> adj{
            "N -| Del",
            [](const MultigraphView& g) { return g.carrier(); },
            [](const HyperMorphism& a) { return a; },
            [](const Hypergraph& h) { return del(h).multigraph; },
            [](const HyperMorphism& b) { return del_on_morphisms(b); },
            [](const MultigraphView& g, const Hypergraph&, const HyperMorphism& m) {
                return del_factor(g, m);
            },
            [](const MultigraphView&, const Hypergraph& h, const HyperMorphism& m) {
                return compose(del(h).inclusion, m);
            }};
        if (auto bad = verify_adjunction(adj, multis, hypers, report.evidence)) return fail(*bad);
        return report;
    }

    if (name == "assoc") {
        Adjunction<QOps, MOps> adj{
            "U -| D",
            [](const Quiver& q) { return underlying(q); },
            [](const QuiverMorphism& a) { return underlying_on_morphisms(a); },
            [](const MultigraphView& g) { return assoc_digraph(g).digraph; },
            [](const HyperMorphism& b) { return assoc_on_morphisms(b); },
            [](const Quiver& q, const MultigraphView& g, const HyperMorphism& m) {
                return assoc_factor(q, g, m);
            },
            [](const Quiver&, const MultigraphView& g, const QuiverMorphism& m) {
                return compose(assoc_digraph(g).theta, underlying_on_morphisms(m));
            }};
        if (auto bad = verify_adjunction(adj, quivers, multis, report.evidence)) return fail(*bad);
        return report;
    }

    if (name == "r_vertex") {
        Adjunction<SetOps, ROps> lower{
            "Vr_diamond -| Vr",
            [](const FiniteSet& x) { return standard_incidence(StandardIncidence::VDiamond, x); },
            [](const FiniteFunction& a) {
                return IncidenceMorphism(standard_incidence(StandardIncidence::VDiamond, a.dom()),
                                         standard_incidence(StandardIncidence::VDiamond, a.cod()),
                                         a, FiniteFunction::empty_into(FiniteSet()),
                                         FiniteFunction::empty_into(FiniteSet()));
            },
            [](const IncidenceHypergraph& g) { return g.vertices(); },
            [](const IncidenceMorphism& b) { return b.vertex_map(); },
            [](const FiniteSet&, const IncidenceHypergraph&, const IncidenceMorphism& m) {
                return m.vertex_map();
            },
            [](const FiniteSet& x, const IncidenceHypergraph& g, const FiniteFunction& f) {
                return IncidenceMorphism(standard_incidence(StandardIncidence::VDiamond, x), g, f,
                                         FiniteFunction::empty_into(g.edges()),
                                         FiniteFunction::empty_into(g.incidences()));
            }};
        if (auto bad = verify_adjunction(lower, sets, incs, report.evidence)) return fail(*bad);
        Adjunction<ROps, SetOps> upper{
            "Vr -| Vr_star",
            [](const IncidenceHypergraph& g) { return g.vertices(); },
            [](const IncidenceMorphism& a) { return a.vertex_map(); },
            [](const FiniteSet& y) { return standard_incidence(StandardIncidence::VStar, y); },
            [](const FiniteFunction& b) {
                IncidenceHypergraph dom = standard_incidence(StandardIncidence::VStar, b.dom());
                IncidenceHypergraph cod = standard_incidence(StandardIncidence::VStar, b.cod());
                return IncidenceMorphism(
                    dom, cod, b, FiniteFunction::identity(dom.edges()),
                    FiniteFunction::from_map(dom.incidences(), cod.incidences(),
                                             [&](const Atom& i) {
                                                 return Atom::pair(b(i.parts()[0]),
                                                                   Atom::number(1));
                                             }));
            },
            [](const IncidenceHypergraph& g, const FiniteSet& y, const FiniteFunction& f) {
                IncidenceHypergraph star = standard_incidence(StandardIncidence::VStar, y);
                return IncidenceMorphism(
                    g, star, f,
                    FiniteFunction::constant(g.edges(), star.edges(), Atom::number(1)),
                    FiniteFunction::from_map(g.incidences(), star.incidences(),
                                             [&](const Atom& i) {
                                                 return Atom::pair(f(g.port()(i)),
                                                                   Atom::number(1));
                                             }));
            },
            [](const IncidenceHypergraph&, const FiniteSet&, const IncidenceMorphism& m) {
                return m.vertex_map();
            }};
        if (auto bad = verify_adjunction(upper, incs, sets, report.evidence)) return fail(*bad);
        return report;
    }

    if (name == "r_edge") {
        Adjunction<SetOps, ROps> lower{
            "Er_diamond -| Er",
            [](const FiniteSet& x) { return standard_incidence(StandardIncidence::EDiamond, x); },
            [](const FiniteFunction& a) {
                return IncidenceMorphism(standard_incidence(StandardIncidence::EDiamond, a.dom()),
                                         standard_incidence(StandardIncidence::EDiamond, a.cod()),
                                         FiniteFunction::empty_into(FiniteSet()), a,
                                         FiniteFunction::empty_into(FiniteSet()));
            },
            [](const IncidenceHypergraph& g) { return g.edges(); },
            [](const IncidenceMorphism& b) { return b.edge_map(); },
            [](const FiniteSet&, const IncidenceHypergraph&, const IncidenceMorphism& m) {
                return m.edge_map();
            },
            [](const FiniteSet& x, const IncidenceHypergraph& g, const FiniteFunction& f) {
                return IncidenceMorphism(standard_incidence(StandardIncidence::EDiamond, x), g,
                                         FiniteFunction::empty_into(g.vertices()), f,
                                         FiniteFunction::empty_into(g.incidences()));
            }};
        if (auto bad = verify_adjunction(lower, sets, incs, report.evidence)) return fail(*bad);
        Adjunction<ROps, SetOps> upper{
            "Er -| Er_star",
            [](const IncidenceHypergraph& g) { return g.edges(); },
            [](const IncidenceMorphism& a) { return a.edge_map(); },
            [](const FiniteSet& y) { return standard_incidence(StandardIncidence::EStar, y); },
            [](const FiniteFunction& b) {
                IncidenceHypergraph dom = standard_incidence(StandardIncidence::EStar, b.dom());
                IncidenceHypergraph cod = standard_incidence(StandardIncidence::EStar, b.cod());
                return IncidenceMorphism(
                    dom, cod, FiniteFunction::identity(dom.vertices()), b,
                    FiniteFunction::from_map(dom.incidences(), cod.incidences(),
                                             [&](const Atom& i) {
                                                 return Atom::pair(Atom::number(1),
                                                                   b(i.parts()[1]));
                                             }));
            },
            [](const IncidenceHypergraph& g, const FiniteSet& y, const FiniteFunction& f) {
                IncidenceHypergraph star = standard_incidence(StandardIncidence::EStar, y);
                return IncidenceMorphism(
                    g, star,
                    FiniteFunction::constant(g.vertices(), star.vertices(), Atom::number(1)), f,
                    FiniteFunction::from_map(g.incidences(), star.incidences(),
                                             [&](const Atom& i) {
                                                 return Atom::pair(Atom::number(1),
                                                                   f(g.att()(i)));
                                             }));
            },
            [](const IncidenceHypergraph&, const FiniteSet&, const IncidenceMorphism& m) {
                return m.edge_map();
            }};
        if (auto bad = verify_adjunction(upper, incs, sets, report.evidence)) return fail(*bad);
        return report;
    }

    if (name == "r_incidence") {
        Adjunction<SetOps, ROps> lower{
            "I_diamond -| I",
            [](const FiniteSet& x) { return standard_incidence(StandardIncidence::IDiamond, x); },
            [](const FiniteFunction& a) {
                return IncidenceMorphism(standard_incidence(StandardIncidence::IDiamond, a.dom()),
                                         standard_incidence(StandardIncidence::IDiamond, a.cod()),
                                         a, a, a);
            },
            [](const IncidenceHypergraph& g) { return g.incidences(); },
            [](const IncidenceMorphism& b) { return b.incidence_map(); },
            [](const FiniteSet&, const IncidenceHypergraph&, const IncidenceMorphism& m) {
                return m.incidence_map();
            },
            [](const FiniteSet& x, const IncidenceHypergraph& g, const FiniteFunction& f) {
                return IncidenceMorphism(standard_incidence(StandardIncidence::IDiamond, x), g,
                                         compose(g.port(), f), compose(g.att(), f), f);
            }};
        if (auto bad = verify_adjunction(lower, sets, incs, report.evidence)) return fail(*bad);
        Adjunction<ROps, SetOps> upper{
            "I -| I_star",
            [](const IncidenceHypergraph& g) { return g.incidences(); },
            [](const IncidenceMorphism& a) { return a.incidence_map(); },
            [](const FiniteSet& y) { return standard_incidence(StandardIncidence::IStar, y); },
            [](const FiniteFunction& b) {
                IncidenceHypergraph dom = standard_incidence(StandardIncidence::IStar, b.dom());
                IncidenceHypergraph cod = standard_incidence(StandardIncidence::IStar, b.cod());
                return IncidenceMorphism(dom, cod, FiniteFunction::identity(dom.vertices()),
                                         FiniteFunction::identity(dom.edges()), b);
            },
            [](const IncidenceHypergraph& g, const FiniteSet& y, const FiniteFunction& f) {
                IncidenceHypergraph star = standard_incidence(StandardIncidence::IStar, y);
                return IncidenceMorphism(
                    g, star,
                    FiniteFunction::constant(g.vertices(), star.vertices(), Atom::number(1)),
                    FiniteFunction::constant(g.edges(), star.edges(), Atom::number(1)), f);
            },
            [](const IncidenceHypergraph&, const FiniteSet&, const IncidenceMorphism& m) {
                return m.incidence_map();
            }};
        if (auto bad = verify_adjunction(upper, incs, sets, report.evidence)) return fail(*bad);
        return report;
    }

    if (name == "upsilon") {
        Adjunction<ROps, QOps> lower{
            "Upsilon_diamond -| Upsilon",
            [](const IncidenceHypergraph& g) { return upsilon_diamond(g); },
            [](const IncidenceMorphism& a) { return upsilon_diamond_on_morphisms(a); },
            [](const Quiver& q) { return upsilon(q); },
            [](const QuiverMorphism& b) { return upsilon_on_morphisms(b); },
            [](const IncidenceHypergraph& g, const Quiver& q, const QuiverMorphism& m) {
                FiniteFunction fv = FiniteFunction::from_map(
                    g.vertices(), q.vertices(),
                    [&](const Atom& v) { return m.vertex_map()(Atom::tag(0, v)); });
                FiniteFunction fe = FiniteFunction::from_map(
                    g.edges(), q.vertices(),
                    [&](const Atom& e) { return m.vertex_map()(Atom::tag(1, e)); });
                return IncidenceMorphism(g, upsilon(q), std::move(fv), std::move(fe),
                                         m.edge_map());
            },
            [](const IncidenceHypergraph& g, const Quiver& q, const IncidenceMorphism& m) {
                Quiver dom = upsilon_diamond(g);
                FiniteFunction fv = FiniteFunction::from_map(
                    dom.vertices(), q.vertices(), [&](const Atom& t) {
                        return t.parts()[0] == Atom::number(0)
                                   ? m.vertex_map()(t.parts()[1])
                                   : m.edge_map()(t.parts()[1]);
                    });
                return QuiverMorphism(dom, q, std::move(fv), m.incidence_map());
            }};
        if (auto bad = verify_adjunction(lower, incs, quivers, report.evidence)) return fail(*bad);
        Adjunction<QOps, ROps> upper{
            "Upsilon -| Upsilon_star",
            [](const Quiver& q) { return upsilon(q); },
            [](const QuiverMorphism& a) { return upsilon_on_morphisms(a); },
            [](const IncidenceHypergraph& g) { return upsilon_star(g); },
            [](const IncidenceMorphism& b) { return upsilon_star_on_morphisms(b); },
            [](const Quiver& q, const IncidenceHypergraph& g, const IncidenceMorphism& m) {
                Quiver star = upsilon_star(g);
                FiniteFunction fv = FiniteFunction::from_map(
                    q.vertices(), star.vertices(), [&](const Atom& v) {
                        return Atom::pair(m.vertex_map()(v), m.edge_map()(v));
                    });
                FiniteFunction fe = FiniteFunction::from_map(
                    q.edges(), star.edges(), [&](const Atom& e) {
                        return Atom::tuple({m.vertex_map()(q.tgt()(e)),
                                            m.incidence_map()(e),
                                            m.edge_map()(q.src()(e))});
                    });
                return QuiverMorphism(q, star, std::move(fv), std::move(fe));
            },
            [](const Quiver& q, const IncidenceHypergraph& g, const QuiverMorphism& m) {
                FiniteFunction fv = FiniteFunction::from_map(
                    q.vertices(), g.vertices(),
                    [&](const Atom& v) { return m.vertex_map()(v).parts()[0]; });
                FiniteFunction fe = FiniteFunction::from_map(
                    q.vertices(), g.edges(),
                    [&](const Atom& v) { return m.vertex_map()(v).parts()[1]; });
                FiniteFunction fi = FiniteFunction::from_map(
                    q.edges(), g.incidences(),
                    [&](const Atom& e) { return m.edge_map()(e).parts()[1]; });
                return IncidenceMorphism(upsilon(q), g, std::move(fv), std::move(fe),
                                         std::move(fi));
            }};
        if (auto bad = verify_adjunction(upper, quivers, incs, report.evidence)) return fail(*bad);
        return report;
    }

    throw ValidationError("unknown adjunction name: " + name);
}

// ----- Frobenius morphisms ------------------------------------------------

LawReport frobenius_phi_v(const IncidenceHypergraph& g, const FiniteSet& s) {
    LawReport report{"frobenius.phi_V", "G with |V| = " + std::to_string(g.vertices().size()) +
                                            ", S with " + std::to_string(s.size()) + " elements",
                     Verdict::Fails, {}};
    FiniteSet vs = product_set({g.vertices(), s}).carrier;
    IncidenceHypergraph source = standard_incidence(StandardIncidence::VDiamond, vs);
    IncidenceHypergraph target =
        inc_product(g, standard_incidence(StandardIncidence::VDiamond, s)).object;
    IncidenceMorphism phi(source, target, FiniteFunction::identity(vs),
                          FiniteFunction::empty_into(target.edges()),
                          FiniteFunction::empty_into(target.incidences()));
    if (phi.is_iso()) {
        report.verdict = Verdict::Holds;
        report.evidence.push_back("Phi_V is an isomorphism on " + std::to_string(vs.size()) +
                                  " vertices");
    } else {
        report.evidence.push_back("Phi_V failed to be bijective");
    }
    return report;
}

LawReport frobenius_phi_e(const IncidenceHypergraph& g, const FiniteSet& s) {
    LawReport report{"frobenius.phi_E", "G with |E| = " + std::to_string(g.edges().size()) +
                                            ", S with " + std::to_string(s.size()) + " elements",
                     Verdict::Fails, {}};
    FiniteSet es = product_set({g.edges(), s}).carrier;
    IncidenceHypergraph source = standard_incidence(StandardIncidence::EDiamond, es);
    IncidenceHypergraph target =
        inc_product(g, standard_incidence(StandardIncidence::EDiamond, s)).object;
    IncidenceMorphism phi(source, target, FiniteFunction::empty_into(target.vertices()),
                          FiniteFunction::identity(es),
                          FiniteFunction::empty_into(target.incidences()));
    if (phi.is_iso()) {
        report.verdict = Verdict::Holds;
        report.evidence.push_back("Phi_E is an isomorphism on " + std::to_string(es.size()) +
                                  " edges");
    } else {
        report.evidence.push_back("Phi_E failed to be bijective");
    }
    return report;
}

LawReport frobenius_phi_i(const IncidenceHypergraph& g, const FiniteSet& s) {
    LawReport report{"frobenius.phi_I", "G with |I| = " + std::to_string(g.incidences().size()) +
                                            ", S with " + std::to_string(s.size()) + " elements",
                     Verdict::Fails, {}};
    FiniteSet is = product_set({g.incidences(), s}).carrier;
    IncidenceHypergraph source = standard_incidence(StandardIncidence::IDiamond, is);
    IncidenceHypergraph target =
        inc_product(g, standard_incidence(StandardIncidence::IDiamond, s)).object;
    IncidenceMorphism phi(
        source, target,
        FiniteFunction::from_map(is, target.vertices(),
                                 [&](const Atom& t) {
                                     return Atom::pair(g.port()(t.parts()[0]), t.parts()[1]);
                                 }),
        FiniteFunction::from_map(is, target.edges(),
                                 [&](const Atom& t) {
                                     return Atom::pair(g.att()(t.parts()[0]), t.parts()[1]);
                                 }),
        FiniteFunction::identity(is));
    // find a vertex collision witnessing non-monicity
    std::map<std::string, Atom> images;
    for (const Atom& v : source.vertices()) {
        Atom image = phi.vertex_map()(v);
        auto [it, fresh] = images.emplace(image.text(), v);
        if (!fresh) {
            report.verdict = Verdict::WitnessFound;
            report.evidence.push_back("Phi_I collapses vertices " + it->second.text() + " and " +
                                      v.text() + " onto " + image.text());
            return report;
        }
    }
    report.evidence.push_back("Phi_I is monic on this instance");
    return report;
}

LawReport frobenius_phi_upsilon(const Quiver& q, const IncidenceHypergraph& g) {
    LawReport report{"frobenius.phi_upsilon",
                     "Q with |V| = " + std::to_string(q.vertices().size()) + ", G with |I| = " +
                         std::to_string(g.incidences().size()),
                     Verdict::Fails, {}};
    Quiver source = upsilon_diamond(inc_product(upsilon(q), g).object);
    Quiver target = quiver_product(q, upsilon_diamond(g)).object;
    // (n,(v,x)) |-> (v,(n,x)) on vertices; edges are identical pair atoms
    QuiverMorphism phi(
        source, target,
        FiniteFunction::from_map(source.vertices(), target.vertices(),
                                 [](const Atom& t) {
                                     const Atom& n = t.parts()[0];
                                     const Atom& v = t.parts()[1].parts()[0];
                                     const Atom& x = t.parts()[1].parts()[1];
                                     return Atom::pair(v, Atom::pair(n, x));
                                 }),
        FiniteFunction::from_map(source.edges(), target.edges(),
                                 [](const Atom& e) { return e; }));
    if (phi.is_iso()) {
        report.verdict = Verdict::Holds;
        report.evidence.push_back("Phi is an isomorphism on " +
                                  std::to_string(source.vertices().size()) + " vertices and " +
                                  std::to_string(source.edges().size()) + " edges");
    } else {
        report.evidence.push_back("Phi failed to be bijective");
    }
    return report;
}

LawReport frobenius(const std::string& name, const Bounds& bounds) {
    (void)bounds;
    FiniteSet two = FiniteSet::one_to(2);
    if (name == "phi_V") return frobenius_phi_v(upsilon(corpus_p1()), FiniteSet::one_to(1));
    if (name == "phi_E") return frobenius_phi_e(upsilon(corpus_p1()), FiniteSet::one_to(1));
    if (name == "phi_I")
        return frobenius_phi_i(standard_incidence(StandardIncidence::IStar, two), two);
    if (name == "phi_upsilon")
        return frobenius_phi_upsilon(corpus_p1(), standard_incidence(StandardIncidence::IStar,
                                                                     FiniteSet::one_to(1)));
    throw ValidationError("unknown Frobenius morphism name: " + name);
}

// ----- counterexamples ----------------------------------------------------

namespace {

struct ToposFailData {
    Hypergraph p1;
    HyperMorphism alpha, beta;
    Hypergraph h; // coequalizer of alpha, beta
};

ToposFailData topos_fail_data() {
    Hypergraph p1 = corpus_path1();
    Hypergraph point = standard_hypergraph(StandardHypergraph::VertexDiamond,
                                           FiniteSet::of_leaves({"0"}));
    auto constant_to = [&](const char* v) {
        return HyperMorphism(point, p1,
                             FiniteFunction::constant(point.vertices(), p1.vertices(),
                                                      Atom::leaf(v)),
                             FiniteFunction::empty_into(p1.edges()));
    };
    HyperMorphism alpha = constant_to("v");
    HyperMorphism beta = constant_to("w");
    Hypergraph h = hyper_coequalizer(alpha, beta).object;
    return {std::move(p1), std::move(alpha), std::move(beta), std::move(h)};
}

} // namespace

std::vector<std::string> counterexample_names() {
    return {"topos_fail",       "p1xp1_product", "p1xp1_coequalizer", "Ibad_product",
            "Ibad_coequalizer", "Fworse",        "del_not_epi_preserving"};
}

LawReport run_counterexample(const std::string& name, const Bounds& bounds) {
    if (name == "topos_fail") {
        LawReport report{"counterexample.topos_fail",
                         "coequalizer of the two vertex picks into P1", Verdict::Fails, {}};
        ToposFailData data = topos_fail_data();
        HyperSpan prod = hyper_product(data.p1, data.p1, bounds);
        HyperMorphism pa = hyper_product_on_morphisms(data.p1, data.alpha, bounds);
        HyperMorphism pb = hyper_product_on_morphisms(data.p1, data.beta, bounds);
        Hypergraph k = hyper_coequalizer(pa, pb).object;
        Hypergraph ph = hyper_product(data.p1, data.h, bounds).object;
        std::size_t edge_square = data.p1.edges().size() * data.p1.edges().size();
        bool not_iso = !hyper_iso(k, ph).has_value();
        bool edge_mismatch = edge_square != prod.object.edges().size();
        report.evidence.push_back(count_note("|E(P1 x P1)|", prod.object.edges().size()));
        report.evidence.push_back(count_note("|E(P1)|^2", edge_square));
        report.evidence.push_back(count_note("|E(K)|", k.edges().size()));
        report.evidence.push_back(count_note("|E(P1 x H)|", ph.edges().size()));
        if (not_iso && edge_mismatch) {
            report.verdict = Verdict::WitnessFound;
            report.evidence.push_back("K is not isomorphic to P1 x H and E does not preserve "
                                      "the product");
        }
        return report;
    }

    if (name == "p1xp1_product") {
        LawReport report{"counterexample.p1xp1_product", "U applied to the quiver product",
                         Verdict::Fails, {}};
        Quiver p1 = corpus_p1();
        MultigraphView via_q = underlying(quiver_product(p1, p1).object);
        MultigraphView via_m =
            del(hyper_product(corpus_path1(), corpus_path1(), bounds).object).multigraph;
        report.evidence.push_back(count_note("|E(U(P1 x P1))|", via_q.carrier().edges().size()));
        report.evidence.push_back(count_note("|E(U(P1) x U(P1))|", via_m.carrier().edges().size()));
        if (!hyper_iso(via_q.carrier(), via_m.carrier()).has_value()) {
            report.verdict = Verdict::WitnessFound;
            report.evidence.push_back("U does not preserve the product of P1 with itself");
        }
        return report;
    }

    if (name == "p1xp1_coequalizer") {
        LawReport report{"counterexample.p1xp1_coequalizer", "D applied to the coequalizer",
                         Verdict::Fails, {}};
        ToposFailData data = topos_fail_data();
        QuiverMorphism da = assoc_on_morphisms(data.alpha);
        QuiverMorphism db = assoc_on_morphisms(data.beta);
        Quiver r = quiver_coequalizer(da, db).object;
        Quiver dh = assoc_digraph(MultigraphView(data.h)).digraph;
        report.evidence.push_back(count_note("|E(coeq(D(a),D(b)))|", r.edges().size()));
        report.evidence.push_back(count_note("|E(D(H))|", dh.edges().size()));
        if (!quiver_iso(r, dh).has_value()) {
            report.verdict = Verdict::WitnessFound;
            report.evidence.push_back("D does not preserve the coequalizer");
        }
        return report;
    }

    if (name == "Ibad_product") {
        LawReport report{"counterexample.Ibad_product", "I applied to P1 x P1", Verdict::Fails, {}};
        Hypergraph p1 = corpus_path1();
        IncidenceHypergraph lhs = incidence_forming(hyper_product(p1, p1, bounds).object);
        IncidenceHypergraph rhs =
            inc_product(incidence_forming(p1), incidence_forming(p1)).object;
        report.evidence.push_back(count_note("|E(I(P1 x P1))|", lhs.edges().size()));
        report.evidence.push_back(count_note("|E(I(P1) x I(P1))|", rhs.edges().size()));
        report.evidence.push_back(count_note("|I(I(P1 x P1))|", lhs.incidences().size()));
        report.evidence.push_back(count_note("|I(I(P1) x I(P1))|", rhs.incidences().size()));
        if (!incidence_iso(lhs, rhs).has_value()) {
            report.verdict = Verdict::WitnessFound;
            report.evidence.push_back("I does not preserve the product");
        }
        return report;
    }

    if (name == "Ibad_coequalizer") {
        LawReport report{"counterexample.Ibad_coequalizer", "I applied to the coequalizer",
                         Verdict::Fails, {}};
        ToposFailData data = topos_fail_data();
        IncidenceMorphism ia = incidence_forming_on_morphisms(data.alpha);
        IncidenceMorphism ib = incidence_forming_on_morphisms(data.beta);
        IncidenceHypergraph j = inc_coequalizer(ia, ib).object;
        IncidenceHypergraph ih = incidence_forming(data.h);
        report.evidence.push_back(count_note("|I(J)|", j.incidences().size()));
        report.evidence.push_back(count_note("|I(I(H))|", ih.incidences().size()));
        if (!incidence_iso(j, ih).has_value()) {
            report.verdict = Verdict::WitnessFound;
            report.evidence.push_back("I does not preserve the coequalizer: the two incidences "
                                      "survive the quotient");
        }
        return report;
    }

    if (name == "Fworse") {
        LawReport report{"counterexample.Fworse", "the 1-edge mapping into a 2-edge",
                         Verdict::Fails, {}};
        // G: single vertex x, edge f, incidence k
        FiniteSet gv = FiniteSet::of_leaves({"x"});
        FiniteSet ge = FiniteSet::of_leaves({"f"});
        FiniteSet gi = FiniteSet::of_leaves({"k"});
        IncidenceHypergraph g(gv, ge, gi, FiniteFunction::constant(gi, gv, Atom::leaf("x")),
                              FiniteFunction::constant(gi, ge, Atom::leaf("f")));
        // H: vertices v,w, edge e, incidences i,j
        FiniteSet hv = FiniteSet::of_leaves({"v", "w"});
        FiniteSet he = FiniteSet::of_leaves({"e"});
        FiniteSet hi = FiniteSet::of_leaves({"i", "j"});
        IncidenceHypergraph h(
            hv, he, hi,
            FiniteFunction::from_map(hi, hv,
                                     [](const Atom& i) {
                                         return i == Atom::leaf("i") ? Atom::leaf("v")
                                                                     : Atom::leaf("w");
                                     }),
            FiniteFunction::constant(hi, he, Atom::leaf("e")));
        std::size_t in_r = incidence_hom_count(g, h);
        std::size_t in_h = hyper_hom_count(forget_incidence(g), forget_incidence(h));
        report.evidence.push_back(count_note("|R(G,H)|", in_r));
        report.evidence.push_back(count_note("|H(F(G),F(H))|", in_h));
        if (in_r >= 1 && in_h == 0) {
            report.verdict = Verdict::WitnessFound;
            report.evidence.push_back("a morphism exists in R but none between the F images");
        }
        return report;
    }

    if (name == "del_not_epi_preserving") {
        LawReport report{"counterexample.del_not_epi_preserving", "the collapse of E4 onto E1",
                         Verdict::Fails, {}};
        Hypergraph e4 = corpus_k_edge(4);
        Hypergraph e1 = corpus_k_edge(1);
        HyperMorphism alpha(
            e4, e1, FiniteFunction::constant(e4.vertices(), e1.vertices(), Atom::leaf("v1")),
            FiniteFunction::constant(e4.edges(), e1.edges(), Atom::leaf("e")));
        bool alpha_epi = classify_morphism(alpha).epi;
        HyperMorphism deleted = del_on_morphisms(alpha);
        bool del_epi = classify_morphism(deleted).epi;
        report.evidence.push_back(std::string("alpha epi: ") + (alpha_epi ? "true" : "false"));
        report.evidence.push_back(std::string("Del(alpha) epi: ") + (del_epi ? "true" : "false"));
        report.evidence.push_back(count_note("|E(Del(E4))|", deleted.dom().edges().size()));
        if (alpha_epi && !del_epi) {
            report.verdict = Verdict::WitnessFound;
            report.evidence.push_back("Del(E4) has no edge to cover the edge of E1");
        }
        return report;
    }

    throw ValidationError("unknown counterexample name: " + name);
}

// ----- separators ----------------------------------------------------------

std::optional<std::pair<std::size_t, QuiverMorphism>>
find_separator(const std::vector<Quiver>& family, const QuiverMorphism& phi,
               const QuiverMorphism& psi) {
    if (phi.dom() != psi.dom() || phi.cod() != psi.cod())
        throw ValidationError("find_separator requires a parallel pair");
    for (std::size_t i = 0; i < family.size(); ++i)
        for (const auto& tau : quiver_homs(family[i], phi.dom()))
            if (QOps::key(compose(phi, tau)) != QOps::key(compose(psi, tau)))
                return std::make_pair(i, tau);
    return std::nullopt;
}

std::optional<std::pair<std::size_t, IncidenceMorphism>>
find_separator(const std::vector<IncidenceHypergraph>& family, const IncidenceMorphism& phi,
               const IncidenceMorphism& psi) {
    if (phi.dom() != psi.dom() || phi.cod() != psi.cod())
        throw ValidationError("find_separator requires a parallel pair");
    for (std::size_t i = 0; i < family.size(); ++i)
        for (const auto& tau : incidence_homs(family[i], phi.dom()))
            if (ROps::key(compose(phi, tau)) != ROps::key(compose(psi, tau)))
                return std::make_pair(i, tau);
    return std::nullopt;
}

// ----- Upsilon natural isomorphisms ------------------------------------------

namespace {

// product of two morphisms (f x g) : A x B -> A' x B'
QuiverMorphism quiver_product_morphism(const QuiverMorphism& f, const QuiverMorphism& g) {
    QuiverSpan dom = quiver_product(f.dom(), g.dom());
    QuiverSpan cod = quiver_product(f.cod(), g.cod());
    return quiver_product_mediator(cod, compose(f, dom.legs[0]), compose(g, dom.legs[1]));
}

// the comparison Upsilon_diamond Upsilon (Q) -> Q x P1
QuiverMorphism updia_iso(const Quiver& q, const Quiver& p1) {
    Quiver lhs = upsilon_diamond(upsilon(q));
    Quiver rhs = quiver_product(q, p1).object;
    return QuiverMorphism(
        lhs, rhs,
        FiniteFunction::from_map(lhs.vertices(), rhs.vertices(),
                                 [&](const Atom& t) {
                                     return Atom::pair(
                                         t.parts()[1],
                                         Atom::tag(t.parts()[0] == Atom::number(0) ? 0 : 1,
                                                   Atom::number(1)));
                                 }),
        FiniteFunction::from_map(lhs.edges(), rhs.edges(),
                                 [](const Atom& e) { return Atom::pair(e, Atom::number(1)); }));
}

// the comparison Upsilon_star Upsilon (Q) -> Q^{P1}
QuiverMorphism upstar_iso(const Quiver& q, const Quiver& p1, const Quiver& power,
                          const Bounds& bounds) {
    Quiver lhs = upsilon_star(upsilon(q), bounds);
    Atom s = Atom::tag(0, Atom::number(1)); // the source vertex of P1
    Atom t = Atom::tag(1, Atom::number(1)); // the target vertex of P1
    IncidenceHypergraph up1 = upsilon(p1);
    IncidenceHypergraph uq = upsilon(q);
    return QuiverMorphism(
        lhs, power,
        FiniteFunction::from_map(lhs.vertices(), power.vertices(),
                                 [&](const Atom& ab) {
                                     return Atom::mapping(
                                         {{s, ab.parts()[0]}, {t, ab.parts()[1]}});
                                 }),
        FiniteFunction::from_map(lhs.edges(), power.edges(), [&](const Atom& vie) {
            const Atom& v = vie.parts()[0];
            const Atom& i = vie.parts()[1];
            const Atom& e2 = vie.parts()[2];
            IncidenceMorphism m(
                up1, uq,
                FiniteFunction::from_map(up1.vertices(), uq.vertices(),
                                         [&](const Atom& x) {
                                             return x == s ? q.src()(i) : e2;
                                         }),
                FiniteFunction::from_map(up1.edges(), uq.edges(),
                                         [&](const Atom& x) {
                                             return x == s ? v : q.tgt()(i);
                                         }),
                FiniteFunction::from_map(up1.incidences(), uq.incidences(),
                                         [&](const Atom&) { return i; }));
            return m.serialize();
        }));
}

// the functor (-)^{P1} on a morphism f : Q -> Q'
QuiverMorphism power_p1_on_morphisms(const Quiver& p1, const QuiverMorphism& f,
                                     const Quiver& dom_power, const Quiver& cod_power) {
    IncidenceHypergraph up1 = upsilon(p1);
    IncidenceHypergraph u_dom = upsilon(f.dom());
    IncidenceHypergraph u_cod = upsilon(f.cod());
    IncidenceMorphism uf = upsilon_on_morphisms(f);
    return QuiverMorphism(
        dom_power, cod_power,
        FiniteFunction::from_map(dom_power.vertices(), cod_power.vertices(),
                                 [&](const Atom& m) {
                                     std::vector<std::pair<Atom, Atom>> entries;
                                     for (const auto& [k, v] : m.entries())
                                         entries.emplace_back(k, f.vertex_map()(v));
                                     return Atom::mapping(std::move(entries));
                                 }),
        FiniteFunction::from_map(dom_power.edges(), cod_power.edges(), [&](const Atom& m) {
            IncidenceMorphism inner(
                up1, u_dom,
                FiniteFunction::from_mapping_atom(up1.vertices(), u_dom.vertices(), m.parts()[0]),
                FiniteFunction::from_mapping_atom(up1.edges(), u_dom.edges(), m.parts()[1]),
                FiniteFunction::from_mapping_atom(up1.incidences(), u_dom.incidences(),
                                                  m.parts()[2]));
            (void)u_cod;
            return compose(uf, inner).serialize();
        }));
}

} // namespace

LawReport check_updiaup(const Quiver& q, const Bounds& bounds) {
    LawReport report{"updiaup", "quiver with " + std::to_string(q.vertices().size()) +
                                    " vertices and " + std::to_string(q.edges().size()) + " edges",
                     Verdict::Fails, {}};
    Quiver p1 = corpus_p1();
    QuiverMorphism iso1 = updia_iso(q, p1);
    if (!iso1.is_iso()) {
        report.evidence.push_back("UpsilonDiamond Upsilon(Q) -> Q x P1 is not bijective");
        return report;
    }
    QuiverExponential exp = quiver_exponential(p1, q, bounds);
    QuiverMorphism iso2 = upstar_iso(q, p1, exp.power, bounds);
    if (!iso2.is_iso()) {
        report.evidence.push_back("UpsilonStar Upsilon(Q) -> Q^P1 is not bijective");
        return report;
    }
    report.evidence.push_back(count_note("|V(Q x P1)|", iso1.cod().vertices().size()));
    report.evidence.push_back(count_note("|E(Q^P1)|", iso2.cod().edges().size()));

    // naturality against sampled morphisms out of q
    std::size_t squares = 0;
    for (const auto& [name, q2] : quiver_samples(5)) {
        auto homs = quiver_homs(q, q2);
        if (homs.empty()) continue;
        const QuiverMorphism& f = homs.front();
        QuiverMorphism lhs1 = compose(updia_iso(q2, p1),
                                      upsilon_diamond_on_morphisms(upsilon_on_morphisms(f)));
        QuiverMorphism rhs1 = compose(quiver_product_morphism(f, identity_morphism(p1)), iso1);
        if (QOps::key(lhs1) != QOps::key(rhs1)) {
            report.evidence.push_back("naturality square for UpsilonDiamond fails at " + name);
            return report;
        }
        QuiverExponential exp2 = quiver_exponential(p1, q2, bounds);
        QuiverMorphism lhs2 = compose(upstar_iso(q2, p1, exp2.power, bounds),
                                      upsilon_star_on_morphisms(upsilon_on_morphisms(f), bounds));
        QuiverMorphism rhs2 = compose(power_p1_on_morphisms(p1, f, exp.power, exp2.power), iso2);
        if (QOps::key(lhs2) != QOps::key(rhs2)) {
            report.evidence.push_back("naturality square for UpsilonStar fails at " + name);
            return report;
        }
        squares += 2;
    }
    report.verdict = Verdict::Holds;
    report.evidence.push_back(count_note("naturality squares checked", squares));
    return report;
}

} // namespace graphcat
