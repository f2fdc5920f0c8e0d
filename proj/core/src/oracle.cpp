#include "mixchrom/oracle.hpp"

#include "mixchrom/errors.hpp"

#include <algorithm>
#include <numeric>

namespace mixchrom {

namespace {

struct Check {
    enum Kind { edge, arc_from_earlier, arc_to_earlier } kind;
    std::size_t other; // position of the already-colored endpoint
};

class ColoringCounter {
public:
    ColoringCounter(const MixedGraph& g, Count x, Count y) : x_(x), y_(y) {
        const std::size_t n = g.vertex_count();
        std::vector<std::size_t> degree(n, 0);
        for (const auto& e : g.edges()) {
            ++degree[e.u];
            ++degree[e.v];
        }
        for (const auto& a : g.arcs()) {
            ++degree[a.tail];
            ++degree[a.head];
        }
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), Vertex{0});
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
        std::vector<std::size_t> position(n);
        for (std::size_t i = 0; i < n; ++i) {
            position[order[i]] = i;
        }
        constrained_ = static_cast<std::size_t>(
            std::count_if(degree.begin(), degree.end(), [](std::size_t d) { return d > 0; }));
        free_ = n - constrained_;

        checks_.resize(n);
        for (const auto& e : g.edges()) {
            auto [early, late] = std::minmax(position[e.u], position[e.v]);
            checks_[late].push_back({Check::edge, early});
        }
        for (const auto& a : g.arcs()) {
            const std::size_t t = position[a.tail];
            const std::size_t h = position[a.head];
            if (t < h) {
                checks_[h].push_back({Check::arc_from_earlier, t});
            } else {
                checks_[t].push_back({Check::arc_to_earlier, h});
            }
        }
        colors_.assign(n, 0);
    }

    Count run() {
        if (x_ == 0) {
            return colors_.empty() ? 1 : 0;
        }
        Count free_factor = 1;
        for (std::size_t i = 0; i < free_; ++i) {
            free_factor *= x_;
        }
        return free_factor * extend(0);
    }

private:
    bool admissible(std::size_t pos, Count c) const {
        for (const auto& check : checks_[pos]) {
            const Count other = colors_[check.other];
            switch (check.kind) {
            case Check::edge:
                if (c == other && c <= y_) {
                    return false;
                }
                break;
            case Check::arc_from_earlier: // other -> pos
                if (!(other < c || other > y_)) {
                    return false;
                }
                break;
            case Check::arc_to_earlier: // pos -> other
                if (!(c < other || c > y_)) {
                    return false;
                }
                break;
            }
        }
        return true;
    }

    Count extend(std::size_t pos) {
        if (pos == constrained_) {
            return 1;
        }
        Count total = 0;
        for (Count c = 1; c <= x_; ++c) {
            if (admissible(pos, c)) {
                colors_[pos] = c;
                total += extend(pos + 1);
            }
        }
        return total;
    }

    Count x_;
    Count y_;
    std::size_t constrained_ = 0;
    std::size_t free_ = 0;
    std::vector<std::vector<Check>> checks_;
    std::vector<Count> colors_;
};

} // namespace

Count count_colorings(const MixedGraph& g, Count x, Count y) {
    if (y > x) {
        throw DomainError("threshold exceeds palette");
    }
    return ColoringCounter(g, x, y).run();
}

Polynomial interpolate_triangular_grid(unsigned degree, const GridSampler& sample) {
    const unsigned points = degree + 1;
    // x_coeffs[y - 1][i] = coefficient of x^i at that y
    std::vector<std::vector<Rational>> x_coeffs;
    std::vector<Rational> y_nodes;
    for (Count y = 1; y <= points; ++y) {
        std::vector<Rational> nodes;
        std::vector<Rational> values;
        for (Count x = y; x <= y + degree; ++x) {
            nodes.emplace_back(to_integer(x));
            values.emplace_back(sample(x, y));
        }
        x_coeffs.push_back(interpolate_univariate(nodes, values));
        y_nodes.emplace_back(to_integer(y));
    }
    Polynomial result;
    for (unsigned i = 0; i < points; ++i) {
        std::vector<Rational> across;
        for (const auto& row : x_coeffs) {
            across.push_back(row[i]);
        }
        const auto y_coeffs = interpolate_univariate(y_nodes, across);
        for (unsigned j = 0; j < points; ++j) {
            result += Polynomial::monomial(i, j, y_coeffs[j]);
        }
    }
    return result;
}

Polynomial interpolate_chi(const MixedGraph& g, std::size_t bound) {
    if (g.vertex_count() > bound) {
        throw BoundError("oracle interpolation limit: " + std::to_string(g.vertex_count()) + " vertices exceeds " +
                         std::to_string(bound));
    }
    return interpolate_triangular_grid(static_cast<unsigned>(g.vertex_count()),
                                       [&g](Count x, Count y) { return to_integer(count_colorings(g, x, y)); });
}

} // namespace mixchrom
