#pragma once

#include "mixchrom/mixed_graph.hpp"
#include "mixchrom/oracle.hpp"
#include "mixchrom/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mixchrom {

/// chi_G as the sum, over every flat H and every acyclic orientation sigma of
/// the underlying graph of H, of the strict bivariate order polynomial of the
/// poset induced by sigma with celeste set C(H) together with T(sigma).
Polynomial chi_by_decomposition(const MixedGraph& g, std::size_t bound = kDefaultOracleBound);

// Same sum for arc-free graphs, where T(sigma) is always empty.
// Throws GraphError if g has arcs.
Polynomial chi_undirected_decomposition(const MixedGraph& g, std::size_t bound = kDefaultOracleBound);

struct DecompositionRow {
    std::size_t flat_index = 0;
    std::string partition;            // e.g. "{v1}{v2,v3}"
    std::vector<std::string> directed; // e.g. "v1->v2"
    std::vector<std::string> celeste; // quotient vertex names
    Polynomial omega;
};

struct DecompositionFlat {
    std::string partition;
    std::vector<std::string> contracted;
    std::size_t orientation_count = 0;
};

struct DecompositionReport {
    std::vector<DecompositionFlat> flats;
    // Grouped by flat in enumerate_flats order, orientations in enumeration order.
    std::vector<DecompositionRow> rows;
    Polynomial total;
};

DecompositionReport decomposition_report(const MixedGraph& g, std::size_t bound = kDefaultOracleBound);

std::string report_to_text(const DecompositionReport& report, Format polynomial_format = Format::plain);
std::string report_to_json(const DecompositionReport& report);

} // namespace mixchrom
