#pragma once

#include <graphcat/incidence.hpp>
#include <graphcat/multigraph.hpp>

#include <string>
#include <vector>

namespace graphcat {

/// The default verification corpus: small named objects in each category
/// covering the standard constructions and every instance the checks
/// exercise.  Objects stay within a few vertices/edges/incidences so full
/// hom enumeration remains fast.
struct Corpus {
    std::vector<std::pair<std::string, Quiver>> quivers;
    std::vector<std::pair<std::string, Hypergraph>> hypergraphs;
    std::vector<std::pair<std::string, MultigraphView>> multigraphs;
    std::vector<std::pair<std::string, IncidenceHypergraph>> incidence_hypergraphs;
};

const Corpus& default_corpus();

/// Named building blocks used throughout the checks.
Quiver corpus_p1();                 // directed path of length 1
Quiver corpus_loop();               // one vertex with one loop
Hypergraph corpus_path1();          // P1: one 2-edge
Hypergraph corpus_k_edge(std::size_t k);

} // namespace graphcat
