// Command-line front end: build standard objects, apply functors, compute
// (co)limits and exponentials, enumerate homs, run the law checks, and
// render DOT.  Exit status: 0 on success/holds, 1 on a failed check, 2 on
// usage, parse, or bound errors.

#include <graphcat/dot.hpp>
#include <graphcat/interchange.hpp>
#include <graphcat/laws.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace graphcat;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Document load(const std::string& path) { return parse_document(slurp(path)); }

template <typename T>
T load_as(const std::string& path, const std::string& expected) {
    Document doc = load(path);
    if (auto* value = std::get_if<T>(&doc)) return *value;
    throw ParseError(path + " does not hold a " + expected + " document");
}

FiniteSet parse_elements(const std::vector<std::string>& elements, int count) {
    if (!elements.empty()) {
        std::vector<Atom> atoms;
        for (const std::string& e : elements) atoms.push_back(Atom::leaf(e));
        return FiniteSet::of(std::move(atoms));
    }
    return FiniteSet::one_to(static_cast<std::size_t>(count));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    out << text;
}

int report_exit(const LawReport& report, Verdict expected) {
    return report.verdict == expected ? 0 : 1;
}

struct Options {
    std::string category = "Q";
    std::vector<std::string> elements;
    int count = 1;
    std::string out;
    std::size_t bound = 0;
};

Bounds effective_bounds(const Options& opt) {
    Bounds b;
    if (opt.bound > 0) {
        b.powerset_max_elements = opt.bound;
        b.function_space_max = opt.bound;
        b.incidence_matrix_max = opt.bound;
        b.hom_enumeration_max = opt.bound;
    }
    return b;
}

Category category_or_throw(const std::string& name) {
    auto cat = category_from_string(name);
    if (!cat) throw ParseError("unknown category '" + name + "' (expected Q, H, M, or R)");
    return *cat;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite categories of graphs, hypergraphs, and incidence structures"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--bound", opt.bound, "override the powerset/function-space size limits");

    // ----- make ------------------------------------------------------------
    auto* make = app.add_subcommand("make", "build a standard object");
    std::string make_name;
    make->add_option("name", make_name, "standard construction name")->required();
    make->add_option("-c,--category", opt.category, "category (Q, H, M, R)");
    make->add_option("-e,--elements", opt.elements, "comma-separated atom labels")
        ->delimiter(',');
    make->add_option("-n", opt.count, "use the set {1..n} instead of named elements");
    make->add_option("-o", opt.out, "output file (default stdout)");

    // ----- functor ----------------------------------------------------------
    auto* functor = app.add_subcommand("functor", "apply a named functor to an object");
    std::string functor_name, functor_input;
    functor->add_option("name", functor_name, "functor name")->required();
    functor->add_option("input", functor_input, "input document (path or -)")->required();
    functor->add_option("-o", opt.out, "output file (default stdout)");

    // ----- limit / colimit ----------------------------------------------------
    auto* limit = app.add_subcommand("limit", "compute a limit");
    std::string limit_kind;
    std::vector<std::string> limit_inputs;
    limit->add_option("kind", limit_kind, "product | equalizer | pullback | terminal")->required();
    limit->add_option("-c,--category", opt.category, "category (Q, H, M, R)");
    limit->add_option("inputs", limit_inputs, "object or morphism documents");
    limit->add_option("-o", opt.out, "output file (default stdout)");

    auto* colimit = app.add_subcommand("colimit", "compute a colimit");
    std::string colimit_kind;
    std::vector<std::string> colimit_inputs;
    colimit->add_option("kind", colimit_kind, "coproduct | coequalizer | initial")->required();
    colimit->add_option("-c,--category", opt.category, "category (Q, H, M, R)");
    colimit->add_option("inputs", colimit_inputs, "object or morphism documents");
    colimit->add_option("-o", opt.out, "output file (default stdout)");

    // ----- exponential ---------------------------------------------------------
    auto* exponential = app.add_subcommand("exponential", "compute an exponential object");
    std::vector<std::string> exp_inputs;
    bool exp_classical = false;
    exponential->add_option("-c,--category", opt.category, "category (Q or R)");
    exponential->add_option("inputs", exp_inputs, "base then exponent documents")
        ->expected(2);
    exponential->add_flag("--classical", exp_classical,
                          "use the simple-digraph exponential (category Q)");
    exponential->add_option("-o", opt.out, "output file (default stdout)");

    // ----- hom / iso ---------------------------------------------------------
    auto* hom = app.add_subcommand("hom", "enumerate the hom-set between two objects");
    std::vector<std::string> hom_inputs;
    std::string hom_mode = "count";
    hom->add_option("-c,--category", opt.category, "category (Q, H, M, R)");
    hom->add_option("inputs", hom_inputs, "domain then codomain documents")->expected(2);
    hom->add_option("--mode", hom_mode, "count | list | first | iso");
    hom->add_option("-o", opt.out, "output file (default stdout)");

    auto* iso = app.add_subcommand("iso", "search for an isomorphism between two objects");
    std::vector<std::string> iso_inputs;
    iso->add_option("-c,--category", opt.category, "category (Q, H, M, R)");
    iso->add_option("inputs", iso_inputs, "two object documents")->expected(2);
    iso->add_option("-o", opt.out, "output file (default stdout)");

    // ----- check ----------------------------------------------------------------
    auto* check = app.add_subcommand("check", "run a verification");
    check->require_subcommand(1);
    auto* check_cx = check->add_subcommand("counterexample", "reproduce a counterexample");
    std::string cx_name = "all";
    check_cx->add_option("name", cx_name, "counterexample name or 'all'");
    auto* check_adj = check->add_subcommand("adjunction", "verify a registered adjunction");
    std::string adj_name = "all";
    check_adj->add_option("name", adj_name, "adjunction name or 'all'");
    auto* check_law = check->add_subcommand("law", "verify a universal property over the corpus");
    std::string law_kind;
    check_law->add_option("kind", law_kind,
                          "product | coproduct | equalizer | coequalizer | exponential | "
                          "terminal | classifier")
        ->required();
    check_law->add_option("-c,--category", opt.category, "category (Q, H, M, R)");
    auto* check_upd = check->add_subcommand("updiaup", "verify the upsilon isomorphisms");
    std::string upd_input;
    check_upd->add_option("input", upd_input, "quiver document (default: the corpus)");
    auto* check_fro = check->add_subcommand("frobenius", "verify a Frobenius morphism");
    std::string fro_name = "all";
    check_fro->add_option("name", fro_name, "phi_V | phi_E | phi_I | phi_upsilon | all");
    auto* check_cur = check->add_subcommand("currying", "verify the currying bijections");
    check_cur->add_option("-c,--category", opt.category, "category (Q or R)");

    // ----- dot ---------------------------------------------------------------------
    auto* dot = app.add_subcommand("dot", "render an object as DOT");
    std::string dot_input, dot_view = "plain";
    dot->add_option("input", dot_input, "object document (path or -)")->required();
    dot->add_option("--view", dot_view, "plain | bipartite | incidence_matrix");
    dot->add_option("-o", opt.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage errors exit 2; --help and --version stay at 0
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Bounds bounds = effective_bounds(opt);

        if (*make) {
            Category cat = category_or_throw(opt.category);
            FiniteSet x = parse_elements(opt.elements, opt.count);
            std::string text;
            if (cat == Category::Q) {
                StandardQuiver kind;
                if (make_name == "vertex_star") kind = StandardQuiver::VertexStar;
                else if (make_name == "vertex_diamond") kind = StandardQuiver::VertexDiamond;
                else if (make_name == "edge_star") kind = StandardQuiver::EdgeStar;
                else if (make_name == "edge_diamond") kind = StandardQuiver::EdgeDiamond;
                else if (make_name == "terminal") kind = StandardQuiver::Terminal;
                else if (make_name == "path1") kind = StandardQuiver::Path1;
                else throw ParseError("unknown standard quiver '" + make_name + "'");
                text = serialize(standard_quiver(kind, x));
            } else if (cat == Category::H || cat == Category::M) {
                StandardHypergraph kind;
                if (make_name == "vertex_star") kind = StandardHypergraph::VertexStar;
                else if (make_name == "vertex_diamond") kind = StandardHypergraph::VertexDiamond;
                else if (make_name == "edge_star") kind = StandardHypergraph::EdgeStar;
                else if (make_name == "k_edge") kind = StandardHypergraph::KEdge;
                else if (make_name == "terminal") kind = StandardHypergraph::Terminal;
                else if (make_name == "generator_GS") kind = StandardHypergraph::GeneratorGS;
                else throw ParseError("unknown standard hypergraph '" + make_name + "'");
                text = serialize(standard_hypergraph(kind, x, bounds));
            } else {
                StandardIncidence kind;
                if (make_name == "v_star") kind = StandardIncidence::VStar;
                else if (make_name == "v_diamond") kind = StandardIncidence::VDiamond;
                else if (make_name == "e_star") kind = StandardIncidence::EStar;
                else if (make_name == "e_diamond") kind = StandardIncidence::EDiamond;
                else if (make_name == "i_star") kind = StandardIncidence::IStar;
                else if (make_name == "i_diamond") kind = StandardIncidence::IDiamond;
                else if (make_name == "terminal") kind = StandardIncidence::Terminal;
                else throw ParseError("unknown standard incidence hypergraph '" + make_name + "'");
                text = serialize(standard_incidence(kind, x));
            }
            emit(text, opt.out);
            return 0;
        }

        if (*functor) {
            std::string text;
            if (functor_name == "upsilon") {
                text = serialize(upsilon(load_as<Quiver>(functor_input, "quiver")));
            } else if (functor_name == "upsilon-diamond") {
                text = serialize(upsilon_diamond(
                    load_as<IncidenceHypergraph>(functor_input, "incidence")));
            } else if (functor_name == "upsilon-star") {
                text = serialize(upsilon_star(
                    load_as<IncidenceHypergraph>(functor_input, "incidence"), bounds));
            } else if (functor_name == "incidence-forming") {
                text = serialize(incidence_forming(
                    load_as<Hypergraph>(functor_input, "hypergraph")));
            } else if (functor_name == "forget-incidence") {
                text = serialize(forget_incidence(
                    load_as<IncidenceHypergraph>(functor_input, "incidence")));
            } else if (functor_name == "del") {
                text = serialize(del(load_as<Hypergraph>(functor_input, "hypergraph"))
                                     .multigraph.carrier());
            } else if (functor_name == "underlying") {
                text = serialize(underlying(load_as<Quiver>(functor_input, "quiver")).carrier());
            } else if (functor_name == "assoc-digraph") {
                text = serialize(
                    assoc_digraph(MultigraphView(load_as<Hypergraph>(functor_input, "hypergraph")))
                        .digraph);
            } else if (functor_name == "explosion") {
                text = serialize(
                    explosion(MultigraphView(load_as<Hypergraph>(functor_input, "hypergraph")))
                        .carrier());
            } else if (functor_name == "projective-cover") {
                text = serialize(projective_cover(
                    MultigraphView(load_as<Hypergraph>(functor_input, "hypergraph"))));
            } else if (functor_name == "loading") {
                text = serialize(
                    loading(load_as<Hypergraph>(functor_input, "hypergraph"), bounds).object);
            } else if (functor_name == "representer") {
                text = serialize(partial_morphism_representer(
                                     load_as<Hypergraph>(functor_input, "hypergraph"), bounds)
                                     .object);
            } else {
                throw ParseError("unknown functor '" + functor_name + "'");
            }
            emit(text, opt.out);
            return 0;
        }

        if (*limit || *colimit) {
            bool is_limit = static_cast<bool>(*limit);
            const std::string& kind = is_limit ? limit_kind : colimit_kind;
            const std::vector<std::string>& inputs = is_limit ? limit_inputs : colimit_inputs;
            Category cat = category_or_throw(opt.category);
            std::string text;
            auto need = [&](std::size_t n) {
                if (inputs.size() != n)
                    throw ParseError(kind + " expects " + std::to_string(n) + " input document(s)");
            };
            if (kind == "terminal" || kind == "initial") {
                need(0);
                bool terminal = kind == "terminal";
                if (!is_limit && terminal) throw ParseError("terminal is a limit");
                if (is_limit && !terminal) throw ParseError("initial is a colimit");
                switch (cat) {
                case Category::Q:
                    text = serialize(terminal ? quiver_terminal() : quiver_initial());
                    break;
                case Category::H:
                    text = serialize(terminal ? hyper_terminal() : hyper_initial());
                    break;
                case Category::M:
                    text = serialize(terminal ? del(hyper_terminal()).multigraph.carrier()
                                              : hyper_initial());
                    break;
                case Category::R:
                    text = serialize(terminal ? inc_terminal() : inc_initial());
                    break;
                }
            } else if (kind == "product" || kind == "coproduct") {
                need(2);
                switch (cat) {
                case Category::Q: {
                    Quiver a = load_as<Quiver>(inputs[0], "quiver");
                    Quiver b = load_as<Quiver>(inputs[1], "quiver");
                    text = serialize((kind == "product" ? quiver_product(a, b)
                                                        : quiver_coproduct(a, b))
                                         .object);
                    break;
                }
                case Category::H:
                case Category::M: {
                    Hypergraph a = load_as<Hypergraph>(inputs[0], "hypergraph");
                    Hypergraph b = load_as<Hypergraph>(inputs[1], "hypergraph");
                    if (kind == "product") {
                        Hypergraph p = hyper_product(a, b, bounds).object;
                        text = serialize(cat == Category::M ? del(p).multigraph.carrier() : p);
                    } else {
                        text = serialize(hyper_coproduct(a, b).object);
                    }
                    break;
                }
                case Category::R: {
                    IncidenceHypergraph a = load_as<IncidenceHypergraph>(inputs[0], "incidence");
                    IncidenceHypergraph b = load_as<IncidenceHypergraph>(inputs[1], "incidence");
                    text = serialize(
                        (kind == "product" ? inc_product(a, b) : inc_coproduct(a, b)).object);
                    break;
                }
                }
            } else if (kind == "pullback") {
                need(2);
                if (cat != Category::H && cat != Category::M)
                    throw ParseError("pullback is implemented for categories H and M");
                HyperMorphism f = load_as<HyperMorphism>(inputs[0], "hypergraph morphism");
                HyperMorphism g = load_as<HyperMorphism>(inputs[1], "hypergraph morphism");
                text = serialize(hyper_pullback(f, g, bounds).object);
            } else if (kind == "equalizer" || kind == "coequalizer") {
                need(2);
                bool forward = kind == "equalizer";
                switch (cat) {
                case Category::Q: {
                    QuiverMorphism f = load_as<QuiverMorphism>(inputs[0], "quiver morphism");
                    QuiverMorphism g = load_as<QuiverMorphism>(inputs[1], "quiver morphism");
                    text = serialize(
                        (forward ? quiver_equalizer(f, g) : quiver_coequalizer(f, g)).object);
                    break;
                }
                case Category::H:
                case Category::M: {
                    HyperMorphism f = load_as<HyperMorphism>(inputs[0], "hypergraph morphism");
                    HyperMorphism g = load_as<HyperMorphism>(inputs[1], "hypergraph morphism");
                    text = serialize(
                        (forward ? hyper_equalizer(f, g) : hyper_coequalizer(f, g)).object);
                    break;
                }
                case Category::R: {
                    IncidenceMorphism f =
                        load_as<IncidenceMorphism>(inputs[0], "incidence morphism");
                    IncidenceMorphism g =
                        load_as<IncidenceMorphism>(inputs[1], "incidence morphism");
                    text = serialize((forward ? inc_equalizer(f, g) : inc_coequalizer(f, g))
                                         .object);
                    break;
                }
                }
            } else {
                throw ParseError("unknown (co)limit kind '" + kind + "'");
            }
            emit(text, opt.out);
            return 0;
        }

        if (*exponential) {
            Category cat = category_or_throw(opt.category);
            std::string text;
            if (cat == Category::Q) {
                Quiver base = load_as<Quiver>(exp_inputs[0], "quiver");
                Quiver exponent = load_as<Quiver>(exp_inputs[1], "quiver");
                // inputs are (Q, R) for R^Q
                text = serialize(exp_classical
                                     ? classical_digraph_exponential(base, exponent, bounds)
                                     : quiver_exponential(base, exponent, bounds).power);
            } else if (cat == Category::R) {
                if (exp_classical) throw ParseError("--classical applies to category Q");
                IncidenceHypergraph base = load_as<IncidenceHypergraph>(exp_inputs[0], "incidence");
                IncidenceHypergraph exponent =
                    load_as<IncidenceHypergraph>(exp_inputs[1], "incidence");
                text = serialize(inc_exponential(base, exponent, bounds).power);
            } else {
                throw ParseError("exponentials exist in categories Q and R");
            }
            emit(text, opt.out);
            return 0;
        }

        if (*hom || *iso) {
            Category cat = category_or_throw(opt.category);
            const std::vector<std::string>& inputs = *hom ? hom_inputs : iso_inputs;
            std::string mode = *hom ? hom_mode : std::string("iso");
            std::ostringstream out;
            bool found = true;
            auto run = [&](auto&& homs_list, auto&& count_fn, auto&& first_fn, auto&& iso_fn) {
                if (mode == "count") {
                    out << count_fn() << "\n";
                } else if (mode == "list") {
                    out << "[";
                    bool first = true;
                    for (const auto& m : homs_list()) {
                        out << (first ? "\n" : ",\n") << serialize(m);
                        first = false;
                    }
                    out << "]\n";
                } else if (mode == "first" || mode == "iso") {
                    auto m = mode == "first" ? first_fn() : iso_fn();
                    if (m) {
                        out << serialize(*m);
                    } else {
                        found = false;
                        out << "none\n";
                    }
                } else {
                    throw ParseError("unknown hom mode '" + mode + "'");
                }
            };
            switch (cat) {
            case Category::Q: {
                Quiver a = load_as<Quiver>(inputs[0], "quiver");
                Quiver b = load_as<Quiver>(inputs[1], "quiver");
                run([&] { return quiver_homs(a, b, bounds); },
                    [&] { return quiver_hom_count(a, b); }, [&] { return quiver_first_hom(a, b); },
                    [&] { return quiver_iso(a, b); });
                break;
            }
            case Category::H:
            case Category::M: {
                Hypergraph a = load_as<Hypergraph>(inputs[0], "hypergraph");
                Hypergraph b = load_as<Hypergraph>(inputs[1], "hypergraph");
                if (cat == Category::M) {
                    (void)MultigraphView(a);
                    (void)MultigraphView(b);
                }
                run([&] { return hyper_homs(a, b, bounds); },
                    [&] { return hyper_hom_count(a, b); }, [&] { return hyper_first_hom(a, b); },
                    [&] { return hyper_iso(a, b); });
                break;
            }
            case Category::R: {
                IncidenceHypergraph a = load_as<IncidenceHypergraph>(inputs[0], "incidence");
                IncidenceHypergraph b = load_as<IncidenceHypergraph>(inputs[1], "incidence");
                run([&] { return incidence_homs(a, b, bounds); },
                    [&] { return incidence_hom_count(a, b); },
                    [&] { return incidence_first_hom(a, b); }, [&] { return incidence_iso(a, b); });
                break;
            }
            }
            emit(out.str(), opt.out);
            return found ? 0 : 1;
        }

        if (*check_cx) {
            int exit_code = 0;
            for (const std::string& name : counterexample_names()) {
                if (cx_name != "all" && cx_name != name) continue;
                LawReport report = run_counterexample(name, bounds);
                std::cout << serialize(report);
                exit_code |= report_exit(report, Verdict::WitnessFound);
            }
            if (cx_name != "all") {
                auto names = counterexample_names();
                if (std::find(names.begin(), names.end(), cx_name) == names.end())
                    throw ParseError("unknown counterexample '" + cx_name + "'");
            }
            return exit_code;
        }

        if (*check_adj) {
            int exit_code = 0;
            for (const std::string& name : adjunction_names()) {
                if (adj_name != "all" && adj_name != name) continue;
                LawReport report = check_adjunction(name, bounds);
                std::cout << serialize(report);
                exit_code |= report_exit(report, Verdict::Holds);
            }
            if (adj_name != "all") {
                auto names = adjunction_names();
                if (std::find(names.begin(), names.end(), adj_name) == names.end())
                    throw ParseError("unknown adjunction '" + adj_name + "'");
            }
            return exit_code;
        }

        if (*check_law) {
            auto kind = universal_property_from_string(law_kind);
            if (!kind) throw ParseError("unknown law kind '" + law_kind + "'");
            LawReport report =
                check_universal_property(*kind, category_or_throw(opt.category), bounds);
            std::cout << serialize(report);
            return report_exit(report, Verdict::Holds);
        }

        if (*check_upd) {
            int exit_code = 0;
            if (!upd_input.empty()) {
                LawReport report = check_updiaup(load_as<Quiver>(upd_input, "quiver"), bounds);
                std::cout << serialize(report);
                exit_code = report_exit(report, Verdict::Holds);
            } else {
                for (const auto& [name, q] : default_corpus().quivers) {
                    LawReport report = check_updiaup(q, bounds);
                    report.instance = name;
                    std::cout << serialize(report);
                    exit_code |= report_exit(report, Verdict::Holds);
                }
            }
            return exit_code;
        }

        if (*check_fro) {
            int exit_code = 0;
            for (const std::string& name : {"phi_V", "phi_E", "phi_I", "phi_upsilon"}) {
                if (fro_name != "all" && fro_name != name) continue;
                LawReport report = frobenius(name, bounds);
                std::cout << serialize(report);
                exit_code |= report_exit(report, name == std::string("phi_I")
                                                     ? Verdict::WitnessFound
                                                     : Verdict::Holds);
            }
            if (fro_name != "all" && fro_name != "phi_V" && fro_name != "phi_E" &&
                fro_name != "phi_I" && fro_name != "phi_upsilon")
                throw ParseError("unknown Frobenius morphism '" + fro_name + "'");
            return exit_code;
        }

        if (*check_cur) {
            LawReport report = check_currying_bijections(category_or_throw(opt.category), bounds);
            std::cout << serialize(report);
            return report_exit(report, Verdict::Holds);
        }

        if (*dot) {
            Document doc = load(dot_input);
            DotView view;
            if (dot_view == "plain") view = DotView::Plain;
            else if (dot_view == "bipartite") view = DotView::Bipartite;
            else if (dot_view == "incidence_matrix") view = DotView::IncidenceMatrix;
            else throw ParseError("unknown view '" + dot_view + "'");
            std::string text;
            if (auto* q = std::get_if<Quiver>(&doc)) text = emit_dot(*q, view);
            else if (auto* h = std::get_if<Hypergraph>(&doc)) text = emit_dot(*h, view);
            else if (auto* g = std::get_if<IncidenceHypergraph>(&doc))
                text = emit_dot(*g, view, bounds);
            else throw ParseError("dot renders quiver, hypergraph, or incidence documents");
            emit(text, opt.out);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundError& e) {
        std::cerr << "bound error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
