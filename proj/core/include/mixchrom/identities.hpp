#pragma once

#include "mixchrom/mixed_graph.hpp"
#include "mixchrom/oracle.hpp"
#include "mixchrom/polynomial.hpp"

#include <cstddef>
#include <string>

namespace mixchrom {

/// Outcome of an identity check. On failure `detail` names the first
/// counterexample with both sides of the identity.
struct CheckResult {
    bool passed = true;
    std::string detail;

    explicit operator bool() const noexcept { return passed; }
    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

/// chi_G == chi_{G-e} - chi_{G/e} + (x - y) chi_{(G/e)-v_e}, each side by
/// interpolate_chi. Throws GraphError if e is not an edge of g.
CheckResult check_edge_delcontr(const MixedGraph& g, const Edge& e, std::size_t bound = kDefaultOracleBound);

/// For a = u->v:
///   chi_G + chi_{G_a} == chi_{G-a} - chi_{G/a} + (x-y)(1-x+y) chi_{(G/a)-v_a}
///                        + (x-y)(chi_{G-a-v} + chi_{G-a-u})
/// where G_a reverses a. Throws GraphError if a is not an arc of g.
CheckResult check_arc_delcontr(const MixedGraph& g, const Arc& a, std::size_t bound = kDefaultOracleBound);

enum class EdgePivot { smallest, largest };

/// chi_G by eliminating undirected edges with the edge deletion-contraction
/// recurrence; arc-only graphs go to chi_by_decomposition. An edge on a pair
/// that also carries an arc is implied by the arc and is deleted outright.
Polynomial chi_by_delcontr(const MixedGraph& g, std::size_t bound = kDefaultOracleBound,
                           EdgePivot pivot = EdgePivot::smallest);

/// m_H(x, y): pairs (sigma, c) of an acyclic orientation of the underlying
/// graph of the quotient and a coloring c : V(H) -> {1..x} that is weakly
/// increasing along sigma with c(v) > y on C(H) and T(sigma).
Count count_compatible_pairs(const Flat& flat, Count x, Count y);

/// sum_H (-1)^|V(H)| m_H(x, y)
Integer reciprocity_sum(const MixedGraph& g, Count x, Count y);

/// chi_G(-x, -y) == sum_H (-1)^|V(H)| m_H(x, y) at every integer point
/// 0 <= y <= x <= xmax, and the sum, interpolated on the triangular grid,
/// equals negate_vars(chi_G) exactly.
CheckResult check_chromatic_reciprocity(const MixedGraph& g, Count xmax, std::size_t bound = kDefaultOracleBound);

/// m_H(x, y) == sum_sigma count_weak_maps(poset(H, sigma), x, y + 1).
/// Requires y + 1 <= x.
CheckResult cross_check_mH(const Flat& flat, Count x, Count y);

} // namespace mixchrom
