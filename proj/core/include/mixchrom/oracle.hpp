#pragma once

#include "mixchrom/mixed_graph.hpp"
#include "mixchrom/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>

namespace mixchrom {

inline constexpr std::size_t kDefaultOracleBound = 6;

using Count = std::uint64_t;

/// Number of colorings c : V -> {1..x} with, for every edge uv,
/// c(u) != c(v) or c(u) > y, and for every arc u->v, c(u) < c(v) or c(u) > y.
///
/// Exhaustive backtracking; vertices are visited by descending constraint
/// degree and a partial assignment violating any constraint is abandoned.
/// y = 0 is accepted and makes every constraint vacuous.
Count count_colorings(const MixedGraph& g, Count x, Count y);

inline Integer to_integer(Count c) {
    static_assert(sizeof(unsigned long) == sizeof(Count));
    return Integer(static_cast<unsigned long>(c));
}

using GridSampler = std::function<Integer(Count x, Count y)>;

/// Recovers the polynomial of degree <= `degree` in each variable from its
/// values on { (x, y) : 1 <= y <= degree + 1, y <= x <= y + degree }. For each
/// y the x-polynomial is fitted, then every x-coefficient is fitted across y.
Polynomial interpolate_triangular_grid(unsigned degree, const GridSampler& sample);

/// chi_G recovered from count_colorings on the triangular grid.
/// Throws BoundError when |V| > bound.
Polynomial interpolate_chi(const MixedGraph& g, std::size_t bound = kDefaultOracleBound);

} // namespace mixchrom
