#pragma once

#include <cstddef>

namespace graphcat {

/// Size limits for the constructions that blow up exponentially.
/// Operations that can explode take a Bounds value and throw BoundError
/// (naming the offended limit) instead of attempting the construction.
struct Bounds {
    /// Largest base set for a power set: 2^16 subset atoms at most.
    std::size_t powerset_max_elements = 16;
    /// Largest function space |Y|^|X| that may be materialized.
    std::size_t function_space_max = 4096;
    /// Largest edge set |V|*|I|*|E| for the incidence-matrix quiver.
    std::size_t incidence_matrix_max = 4096;
    /// Largest hom-set that may be materialized as a list.
    std::size_t hom_enumeration_max = 200000;
};

} // namespace graphcat
