#pragma once

#include <graphcat/incidence.hpp>
#include <graphcat/set_system.hpp>

#include <string>

namespace graphcat {

enum class DotView {
    Plain,
    /// Two-rank layout; for an incidence hypergraph this renders its
    /// bipartite incidence digraph.
    Bipartite,
    /// The looped incidence-matrix quiver of an incidence hypergraph.
    IncidenceMatrix,
};

std::string emit_dot(const Quiver& q, DotView view = DotView::Plain);
std::string emit_dot(const Hypergraph& g, DotView view = DotView::Plain);
std::string emit_dot(const IncidenceHypergraph& g, DotView view = DotView::Plain,
                     const Bounds& bounds = {});

} // namespace graphcat
