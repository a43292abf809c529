#include <graphcat/dot.hpp>

#include <graphcat/errors.hpp>

#include <sstream>

namespace graphcat {

namespace {

std::string quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string quote(const Atom& a) { return quote(a.text()); }

bool is_two_sided(const Quiver& q) {
    for (const Atom& v : q.vertices()) {
        if (v.kind() != Atom::Kind::Tuple || v.parts().size() != 2) return false;
        const Atom& tag = v.parts()[0];
        if (tag != Atom::number(0) && tag != Atom::number(1)) return false;
    }
    return true;
}

} // namespace

std::string emit_dot(const Quiver& q, DotView view) {
    if (view == DotView::IncidenceMatrix)
        throw ValidationError("the incidence_matrix view applies to incidence hypergraphs");
    if (view == DotView::Bipartite && !is_two_sided(q))
        throw ValidationError("the bipartite view needs 0/1-tagged vertices");
    std::ostringstream out;
    out << "digraph {\n";
    if (view == DotView::Bipartite) {
        out << "  rankdir=LR;\n";
        for (int side = 0; side < 2; ++side) {
            out << "  { rank=same;";
            for (const Atom& v : q.vertices())
                if (v.parts()[0] == Atom::number(side)) out << " " << quote(v) << ";";
            out << " }\n";
        }
    }
    for (const Atom& v : q.vertices()) out << "  " << quote(v) << ";\n";
    for (const Atom& e : q.edges())
        out << "  " << quote(q.src()(e)) << " -> " << quote(q.tgt()(e))
            << " [label=" << quote(e) << "];\n";
    out << "}\n";
    return out.str();
}

std::string emit_dot(const Hypergraph& g, DotView view) {
    if (view != DotView::Plain)
        throw ValidationError("set-system hypergraphs render only in the plain view");
    std::ostringstream out;
    out << "graph {\n";
    for (const Atom& v : g.vertices())
        out << "  " << quote("v:" + v.text()) << " [label=" << quote(v)
            << ", shape=circle];\n";
    for (const Atom& e : g.edges()) {
        out << "  " << quote("e:" + e.text()) << " [label=" << quote(e) << ", shape=box];\n";
        for (const Atom& v : g.endpoints(e).parts())
            out << "  " << quote("e:" + e.text()) << " -- " << quote("v:" + v.text()) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_dot(const IncidenceHypergraph& g, DotView view, const Bounds& bounds) {
    switch (view) {
    case DotView::Plain: {
        std::ostringstream out;
        out << "graph {\n";
        for (const Atom& v : g.vertices())
            out << "  " << quote("v:" + v.text()) << " [label=" << quote(v)
                << ", shape=circle];\n";
        for (const Atom& e : g.edges())
            out << "  " << quote("e:" + e.text()) << " [label=" << quote(e) << ", shape=box];\n";
        for (const Atom& i : g.incidences())
            out << "  " << quote("v:" + g.port()(i).text()) << " -- "
                << quote("e:" + g.att()(i).text()) << " [label=" << quote(i) << "];\n";
        out << "}\n";
        return out.str();
    }
    case DotView::Bipartite:
        return emit_dot(upsilon_diamond(g), DotView::Bipartite);
    case DotView::IncidenceMatrix:
        return emit_dot(upsilon_star(g, bounds), DotView::Plain);
    }
    throw ValidationError("unknown dot view");
}

} // namespace graphcat
