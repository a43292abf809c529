#pragma once

#include <graphcat/laws.hpp>

#include <string>
#include <variant>

namespace graphcat {

/// Everything the interchange format can carry.  Multigraphs travel as
/// hypergraph documents; morphism documents name their category.
using Document = std::variant<Quiver, Hypergraph, IncidenceHypergraph, QuiverMorphism,
                              HyperMorphism, IncidenceMorphism, LawReport>;

/// Strict parser: unknown fields are rejected, atoms are canonical text,
/// and morphism documents have their commuting squares validated at load.
Document parse_document(const std::string& text);

std::string serialize(const Quiver& q);
std::string serialize(const Hypergraph& g);
std::string serialize(const IncidenceHypergraph& g);
std::string serialize(const QuiverMorphism& m);
std::string serialize(const HyperMorphism& m);
std::string serialize(const IncidenceMorphism& m);
std::string serialize(const LawReport& r);
std::string serialize(const Document& doc);

} // namespace graphcat
