#include "mixchrom/random_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mixchrom {

MixedGraph random_mixed_graph(std::mt19937_64& rng, std::size_t n, const RandomGraphOptions& options) {
    MixedGraph g;
    for (std::size_t i = 1; i <= n; ++i) {
        g.add_vertex("v" + std::to_string(i));
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (options.allow_coexisting) {
                if (unit(rng) < options.edge_probability) {
                    g.add_edge(u, v);
                }
                if (unit(rng) < options.arc_probability / 2) {
                    g.add_arc(u, v);
                }
                if (unit(rng) < options.arc_probability / 2) {
                    g.add_arc(v, u);
                }
                continue;
            }
            const double r = unit(rng);
            if (r < options.edge_probability) {
                g.add_edge(u, v);
            } else if (r < options.edge_probability + options.arc_probability / 2) {
                g.add_arc(u, v);
            } else if (r < options.edge_probability + options.arc_probability) {
                g.add_arc(v, u);
            }
        }
    }
    return g;
}

BicoloredPoset random_bicolored_poset(std::mt19937_64& rng, std::size_t n, double relation_probability,
                                      double celeste_probability) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (unit(rng) < relation_probability) {
                relations.emplace_back(perm[i], perm[j]);
            }
        }
    }
    std::vector<bool> celeste(n);
    for (std::size_t i = 0; i < n; ++i) {
        celeste[i] = unit(rng) < celeste_probability;
    }
    return BicoloredPoset(n, std::move(relations), std::move(celeste));
}

std::vector<MixedGraph> verification_corpus(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> sizes;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        // weight n: larger graphs exercise more flats and orientations
        sizes.insert(sizes.end(), n, n);
    }
    std::uniform_int_distribution<std::size_t> pick(0, sizes.size() - 1);
    std::uniform_real_distribution<double> density(0.15, 0.45);
    std::vector<MixedGraph> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RandomGraphOptions options;
        options.edge_probability = density(rng);
        options.arc_probability = density(rng);
        corpus.push_back(random_mixed_graph(rng, sizes[pick(rng)], options));
    }
    return corpus;
}

} // namespace mixchrom
