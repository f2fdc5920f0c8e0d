#pragma once

#include "mixchrom/mixed_graph.hpp"
#include "mixchrom/order_poly.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace mixchrom {

struct RandomGraphOptions {
    double edge_probability = 0.3;
    double arc_probability = 0.3; // split evenly between the two directions
    // When false every vertex pair carries at most one element.
    bool allow_coexisting = false;
};

/// Vertices are named v1..vn.
MixedGraph random_mixed_graph(std::mt19937_64& rng, std::size_t n, const RandomGraphOptions& options = {});

/// Relations i < j are drawn on a random permutation, so the result is acyclic.
BicoloredPoset random_bicolored_poset(std::mt19937_64& rng, std::size_t n, double relation_probability = 0.4,
                                      double celeste_probability = 0.4);

/// The fixed-seed corpus used by the verification suites: `count` graphs
/// with 1..max_vertices vertices, weighted toward the largest size.
std::vector<MixedGraph> verification_corpus(std::uint64_t seed, std::size_t count, std::size_t max_vertices);

} // namespace mixchrom
