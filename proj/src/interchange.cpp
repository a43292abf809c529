#include <graphcat/interchange.hpp>

#include <graphcat/errors.hpp>

#include <json.hpp>

#include <set>

namespace graphcat {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown(const json& object, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        (void)value;
        if (allowed.find(key) == allowed.end())
            throw ParseError("unknown field '" + key + "' in " + where);
    }
}

Atom atom_at(const json& value, const std::string& where) {
    if (!value.is_string()) throw ParseError(where + " must be an atom string");
    try {
        return Atom::parse(value.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

FiniteSet set_at(const json& value, const std::string& where) {
    if (!value.is_array()) throw ParseError(where + " must be an array of atoms");
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < value.size(); ++i)
        atoms.push_back(atom_at(value[i], where + "[" + std::to_string(i) + "]"));
    try {
        return FiniteSet::of(std::move(atoms));
    } catch (const ValidationError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

json set_to_json(const FiniteSet& s) {
    json out = json::array();
    for (const Atom& a : s) out.push_back(a.text());
    return out;
}

json map_to_json(const FiniteFunction& f) {
    json out = json::object();
    for (std::size_t i = 0; i < f.dom().size(); ++i)
        out[f.dom().elements()[i].text()] = f.values()[i].text();
    return out;
}

FiniteFunction map_at(const json& value, const FiniteSet& dom, const FiniteSet& cod,
                      const std::string& where) {
    if (!value.is_object()) throw ParseError(where + " must be an object of atom pairs");
    if (value.size() != dom.size())
        throw ParseError(where + " must assign exactly the domain atoms");
    std::vector<std::pair<Atom, Atom>> entries;
    for (const auto& [key, v] : value.items())
        entries.emplace_back(atom_at(json(key), where + " key"), atom_at(v, where + "['" + key + "']"));
    try {
        return FiniteFunction::from_mapping_atom(dom, cod, Atom::mapping(std::move(entries)));
    } catch (const ValidationError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

// ----- objects ------------------------------------------------------------

json quiver_to_json(const Quiver& q) {
    json doc;
    doc["kind"] = "quiver";
    doc["vertices"] = set_to_json(q.vertices());
    json edges = json::array();
    for (const Atom& e : q.edges()) {
        json edge;
        edge["name"] = e.text();
        edge["src"] = q.src()(e).text();
        edge["tgt"] = q.tgt()(e).text();
        edges.push_back(edge);
    }
    doc["edges"] = edges;
    return doc;
}

Quiver quiver_from_json(const json& doc) {
    reject_unknown(doc, {"kind", "vertices", "edges"}, "quiver document");
    FiniteSet vertices = set_at(doc.at("vertices"), "vertices");
    const json& edges = doc.at("edges");
    if (!edges.is_array()) throw ParseError("edges must be an array");
    std::vector<Atom> names;
    std::vector<std::pair<Atom, Atom>> srcs, tgts;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!edges[i].is_object()) throw ParseError(where + " must be an object");
        reject_unknown(edges[i], {"name", "src", "tgt"}, where);
        Atom name = atom_at(edges[i].at("name"), where + ".name");
        names.push_back(name);
        srcs.emplace_back(name, atom_at(edges[i].at("src"), where + ".src"));
        tgts.emplace_back(name, atom_at(edges[i].at("tgt"), where + ".tgt"));
    }
    try {
        FiniteSet edge_set = FiniteSet::of(std::move(names));
        Atom src_map = Atom::mapping(std::move(srcs));
        Atom tgt_map = Atom::mapping(std::move(tgts));
        return Quiver(vertices, edge_set,
                      FiniteFunction::from_mapping_atom(edge_set, vertices, src_map),
                      FiniteFunction::from_mapping_atom(edge_set, vertices, tgt_map));
    } catch (const ValidationError& e) {
        throw ParseError(std::string("quiver document: ") + e.what());
    }
}

json hypergraph_to_json(const Hypergraph& g) {
    json doc;
    doc["kind"] = "hypergraph";
    doc["vertices"] = set_to_json(g.vertices());
    json edges = json::array();
    for (const Atom& e : g.edges()) {
        json edge;
        edge["name"] = e.text();
        json endpoints = json::array();
        for (const Atom& v : g.endpoints(e).parts()) endpoints.push_back(v.text());
        edge["endpoints"] = endpoints;
        edges.push_back(edge);
    }
    doc["edges"] = edges;
    return doc;
}

Hypergraph hypergraph_from_json(const json& doc) {
    reject_unknown(doc, {"kind", "vertices", "edges"}, "hypergraph document");
    FiniteSet vertices = set_at(doc.at("vertices"), "vertices");
    const json& edges = doc.at("edges");
    if (!edges.is_array()) throw ParseError("edges must be an array");
    std::vector<Atom> names;
    std::vector<std::pair<Atom, Atom>> endpoints;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!edges[i].is_object()) throw ParseError(where + " must be an object");
        reject_unknown(edges[i], {"name", "endpoints"}, where);
        Atom name = atom_at(edges[i].at("name"), where + ".name");
        names.push_back(name);
        FiniteSet members = set_at(edges[i].at("endpoints"), where + ".endpoints");
        endpoints.emplace_back(name, members.as_subset_atom());
    }
    try {
        FiniteSet edge_set = FiniteSet::of(std::move(names));
        Atom eps = Atom::mapping(std::move(endpoints));
        return Hypergraph::from_map(vertices, edge_set,
                                    [&](const Atom& e) { return eps.apply(e); });
    } catch (const ValidationError& e) {
        throw ParseError(std::string("hypergraph document: ") + e.what());
    }
}

json incidence_to_json(const IncidenceHypergraph& g) {
    json doc;
    doc["kind"] = "incidence";
    doc["vertices"] = set_to_json(g.vertices());
    doc["edges"] = set_to_json(g.edges());
    json incidences = json::array();
    for (const Atom& i : g.incidences()) {
        json inc;
        inc["name"] = i.text();
        inc["vertex"] = g.port()(i).text();
        inc["edge"] = g.att()(i).text();
        incidences.push_back(inc);
    }
    doc["incidences"] = incidences;
    return doc;
}

IncidenceHypergraph incidence_from_json(const json& doc) {
    reject_unknown(doc, {"kind", "vertices", "edges", "incidences"}, "incidence document");
    FiniteSet vertices = set_at(doc.at("vertices"), "vertices");
    FiniteSet edges = set_at(doc.at("edges"), "edges");
    const json& incidences = doc.at("incidences");
    if (!incidences.is_array()) throw ParseError("incidences must be an array");
    std::vector<Atom> names;
    std::vector<std::pair<Atom, Atom>> ports, atts;
    for (std::size_t i = 0; i < incidences.size(); ++i) {
        const std::string where = "incidences[" + std::to_string(i) + "]";
        if (!incidences[i].is_object()) throw ParseError(where + " must be an object");
        reject_unknown(incidences[i], {"name", "vertex", "edge"}, where);
        Atom name = atom_at(incidences[i].at("name"), where + ".name");
        names.push_back(name);
        ports.emplace_back(name, atom_at(incidences[i].at("vertex"), where + ".vertex"));
        atts.emplace_back(name, atom_at(incidences[i].at("edge"), where + ".edge"));
    }
    try {
        FiniteSet inc_set = FiniteSet::of(std::move(names));
        Atom port_map = Atom::mapping(std::move(ports));
        Atom att_map = Atom::mapping(std::move(atts));
        return IncidenceHypergraph(vertices, edges, inc_set,
                                   FiniteFunction::from_mapping_atom(inc_set, vertices, port_map),
                                   FiniteFunction::from_mapping_atom(inc_set, edges, att_map));
    } catch (const ValidationError& e) {
        throw ParseError(std::string("incidence document: ") + e.what());
    }
}

// ----- morphisms ------------------------------------------------------------

json morphism_to_json(const QuiverMorphism& m) {
    json doc;
    doc["kind"] = "morphism";
    doc["category"] = "Q";
    doc["dom"] = quiver_to_json(m.dom());
    doc["cod"] = quiver_to_json(m.cod());
    doc["vertex_map"] = map_to_json(m.vertex_map());
    doc["edge_map"] = map_to_json(m.edge_map());
    return doc;
}

json morphism_to_json(const HyperMorphism& m) {
    json doc;
    doc["kind"] = "morphism";
    doc["category"] = "H";
    doc["dom"] = hypergraph_to_json(m.dom());
    doc["cod"] = hypergraph_to_json(m.cod());
    doc["vertex_map"] = map_to_json(m.vertex_map());
    doc["edge_map"] = map_to_json(m.edge_map());
    return doc;
}

json morphism_to_json(const IncidenceMorphism& m) {
    json doc;
    doc["kind"] = "morphism";
    doc["category"] = "R";
    doc["dom"] = incidence_to_json(m.dom());
    doc["cod"] = incidence_to_json(m.cod());
    doc["vertex_map"] = map_to_json(m.vertex_map());
    doc["edge_map"] = map_to_json(m.edge_map());
    doc["incidence_map"] = map_to_json(m.incidence_map());
    return doc;
}

Document morphism_from_json(const json& doc) {
    std::string category =
        doc.contains("category") ? doc.at("category").get<std::string>() : std::string();
    std::set<std::string> allowed{"kind", "category", "dom", "cod", "vertex_map", "edge_map"};
    if (category == "R") allowed.insert("incidence_map");
    reject_unknown(doc, allowed, "morphism document");
    try {
        if (category == "Q") {
            Quiver dom = quiver_from_json(doc.at("dom"));
            Quiver cod = quiver_from_json(doc.at("cod"));
            return QuiverMorphism(
                dom, cod, map_at(doc.at("vertex_map"), dom.vertices(), cod.vertices(), "vertex_map"),
                map_at(doc.at("edge_map"), dom.edges(), cod.edges(), "edge_map"));
        }
        if (category == "H" || category == "M") {
            Hypergraph dom = hypergraph_from_json(doc.at("dom"));
            Hypergraph cod = hypergraph_from_json(doc.at("cod"));
            if (category == "M") {
                (void)MultigraphView(dom);
                (void)MultigraphView(cod);
            }
            return HyperMorphism(
                dom, cod, map_at(doc.at("vertex_map"), dom.vertices(), cod.vertices(), "vertex_map"),
                map_at(doc.at("edge_map"), dom.edges(), cod.edges(), "edge_map"));
        }
        if (category == "R") {
            IncidenceHypergraph dom = incidence_from_json(doc.at("dom"));
            IncidenceHypergraph cod = incidence_from_json(doc.at("cod"));
            return IncidenceMorphism(
                dom, cod, map_at(doc.at("vertex_map"), dom.vertices(), cod.vertices(), "vertex_map"),
                map_at(doc.at("edge_map"), dom.edges(), cod.edges(), "edge_map"),
                map_at(doc.at("incidence_map"), dom.incidences(), cod.incidences(),
                       "incidence_map"));
        }
    } catch (const ValidationError& e) {
        throw ParseError(std::string("morphism document: ") + e.what());
    }
    throw ParseError("morphism category must be one of Q, H, M, R");
}

json report_to_json(const LawReport& r) {
    json doc;
    doc["kind"] = "report";
    doc["law"] = r.law_name;
    doc["instance"] = r.instance;
    doc["verdict"] = to_string(r.verdict);
    json evidence = json::array();
    for (const std::string& line : r.evidence) evidence.push_back(line);
    doc["evidence"] = evidence;
    return doc;
}

LawReport report_from_json(const json& doc) {
    reject_unknown(doc, {"kind", "law", "instance", "verdict", "evidence"}, "report document");
    LawReport r;
    r.law_name = doc.at("law").get<std::string>();
    r.instance = doc.at("instance").get<std::string>();
    std::string verdict = doc.at("verdict").get<std::string>();
    if (verdict == "holds") r.verdict = Verdict::Holds;
    else if (verdict == "fails") r.verdict = Verdict::Fails;
    else if (verdict == "witness_found") r.verdict = Verdict::WitnessFound;
    else throw ParseError("unknown verdict '" + verdict + "'");
    for (const auto& line : doc.at("evidence")) r.evidence.push_back(line.get<std::string>());
    return r;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace

Document parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind"))
        throw ParseError("a document must be an object with a 'kind' field");
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "quiver") return quiver_from_json(doc);
    if (kind == "hypergraph") return hypergraph_from_json(doc);
    if (kind == "incidence") return incidence_from_json(doc);
    if (kind == "morphism") return morphism_from_json(doc);
    if (kind == "report") return report_from_json(doc);
    throw ParseError("unknown document kind '" + kind + "'");
}

std::string serialize(const Quiver& q) { return dump(quiver_to_json(q)); }
std::string serialize(const Hypergraph& g) { return dump(hypergraph_to_json(g)); }
std::string serialize(const IncidenceHypergraph& g) { return dump(incidence_to_json(g)); }
std::string serialize(const QuiverMorphism& m) { return dump(morphism_to_json(m)); }
std::string serialize(const HyperMorphism& m) { return dump(morphism_to_json(m)); }
std::string serialize(const IncidenceMorphism& m) { return dump(morphism_to_json(m)); }
std::string serialize(const LawReport& r) { return dump(report_to_json(r)); }

std::string serialize(const Document& doc) {
    return std::visit([](const auto& value) { return serialize(value); }, doc);
}

} // namespace graphcat
