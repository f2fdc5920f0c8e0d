#include "mixchrom/identities.hpp"

#include "mixchrom/decomposition.hpp"
#include "mixchrom/errors.hpp"
#include "mixchrom/order_poly.hpp"

#include <map>

namespace mixchrom {

namespace {

Polynomial x_minus_y() {
    return Polynomial::x() - Polynomial::y();
}

std::string mismatch(const std::string& what, const Polynomial& lhs, const Polynomial& rhs) {
    return what + ": lhs = " + to_plain(lhs) + ", rhs = " + to_plain(rhs);
}

// (G/e) - v_e: both endpoints removed.
MixedGraph without_endpoints(const MixedGraph& g, const Element& element) {
    return delete_vertex(contract(g, element), merged_vertex(element));
}

} // namespace

CheckResult check_edge_delcontr(const MixedGraph& g, const Edge& e, std::size_t bound) {
    const Edge edge = Edge::between(e.u, e.v);
    if (!g.contains(edge)) {
        throw GraphError("no such edge");
    }
    const Polynomial lhs = interpolate_chi(g, bound);
    const Polynomial rhs = interpolate_chi(delete_element(g, edge), bound) -
                           interpolate_chi(contract(g, edge), bound) +
                           x_minus_y() * interpolate_chi(without_endpoints(g, edge), bound);
    if (lhs == rhs) {
        return CheckResult::pass();
    }
    return CheckResult::fail(mismatch("edge " + describe(g, edge), lhs, rhs));
}

CheckResult check_arc_delcontr(const MixedGraph& g, const Arc& a, std::size_t bound) {
    if (!g.contains(a)) {
        throw GraphError("no such arc");
    }
    const MixedGraph minus = delete_element(g, a);
    const Polynomial lhs = interpolate_chi(g, bound) + interpolate_chi(reverse_arc(g, a), bound);
    const Polynomial both_gone = interpolate_chi(without_endpoints(g, a), bound);
    const Polynomial one_minus_x_plus_y = Polynomial::constant(1) - Polynomial::x() + Polynomial::y();
    const Polynomial rhs = interpolate_chi(minus, bound) - interpolate_chi(contract(g, a), bound) +
                           x_minus_y() * one_minus_x_plus_y * both_gone +
                           x_minus_y() * (interpolate_chi(delete_vertex(minus, a.head), bound) +
                                          interpolate_chi(delete_vertex(minus, a.tail), bound));
    if (lhs == rhs) {
        return CheckResult::pass();
    }
    return CheckResult::fail(mismatch("arc " + describe(g, a), lhs, rhs));
}

namespace {

// Label-free structure of a graph; names do not affect chi.
struct ShapeKey {
    std::size_t n;
    std::set<Edge> edges;
    std::set<Arc> arcs;
    friend auto operator<=>(const ShapeKey&, const ShapeKey&) = default;
};

class DelContr {
public:
    DelContr(std::size_t bound, EdgePivot pivot) : bound_(bound), pivot_(pivot) {}

    Polynomial chi(const MixedGraph& g) {
        ShapeKey key{g.vertex_count(), g.edges(), g.arcs()};
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        Polynomial result = compute(g);
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    Polynomial compute(const MixedGraph& g) {
        for (const auto& e : g.edges()) {
            // c(u) < c(v) or c(u) > y already forces c(u) != c(v) or c(u) > y.
            if (g.has_arc(e.u, e.v) || g.has_arc(e.v, e.u)) {
                return chi(delete_element(g, e));
            }
        }
        if (g.edges().empty()) {
            return chi_by_decomposition(g, bound_);
        }
        const Edge e = pivot_ == EdgePivot::smallest ? *g.edges().begin() : *g.edges().rbegin();
        return chi(delete_element(g, e)) - chi(contract(g, e)) +
               (Polynomial::x() - Polynomial::y()) * chi(without_endpoints(g, e));
    }

    std::size_t bound_;
    EdgePivot pivot_;
    std::map<ShapeKey, Polynomial> memo_;
};

} // namespace

Polynomial chi_by_delcontr(const MixedGraph& g, std::size_t bound, EdgePivot pivot) {
    if (g.vertex_count() > bound) {
        throw BoundError("deletion-contraction limit: " + std::to_string(g.vertex_count()) + " vertices exceeds " +
                         std::to_string(bound));
    }
    return DelContr(bound, pivot).chi(g);
}

Count count_compatible_pairs(const Flat& flat, Count x, Count y) {
    if (y > x) {
        throw DomainError("threshold exceeds palette");
    }
    const std::size_t n = flat.quotient.vertex_count();
    Count total = 0;
    for (const auto& sigma : enumerate_acyclic_orientations(underlying(flat.quotient))) {
        std::vector<bool> above(n, false);
        for (Vertex v : flat.contracted) {
            above[v] = true;
        }
        for (Vertex v : tails(flat, sigma)) {
            above[v] = true;
        }
        if (x == 0) {
            total += n == 0 ? 1 : 0;
            continue;
        }
        std::vector<Count> c(n, 1);
        // Odometer over all x^n colorings.
        while (true) {
            bool ok = true;
            for (Vertex v = 0; v < n && ok; ++v) {
                ok = !above[v] || c[v] > y;
            }
            for (std::size_t i = 0; i < sigma.directed.size() && ok; ++i) {
                ok = c[sigma.directed[i].tail] <= c[sigma.directed[i].head];
            }
            total += ok;
            std::size_t pos = 0;
            while (pos < n && c[pos] == x) {
                c[pos++] = 1;
            }
            if (pos == n) {
                break;
            }
            ++c[pos];
        }
    }
    return total;
}

Integer reciprocity_sum(const MixedGraph& g, Count x, Count y) {
    Integer sum = 0;
    for (const Flat& flat : enumerate_flats(g)) {
        const Integer m = to_integer(count_compatible_pairs(flat, x, y));
        if (flat.quotient.vertex_count() % 2) {
            sum -= m;
        } else {
            sum += m;
        }
    }
    return sum;
}

CheckResult check_chromatic_reciprocity(const MixedGraph& g, Count xmax, std::size_t bound) {
    const Polynomial chi = interpolate_chi(g, bound);
    const Polynomial negated = negate_vars(chi);
    for (Count x = 0; x <= xmax; ++x) {
        for (Count y = 0; y <= x; ++y) {
            const Rational lhs = negated.eval(Rational(to_integer(x)), Rational(to_integer(y)));
            const Integer rhs = reciprocity_sum(g, x, y);
            if (lhs != Rational(rhs)) {
                return CheckResult::fail("at (x, y) = (" + std::to_string(x) + ", " + std::to_string(y) +
                                         "): chi(-x,-y) = " + lhs.get_str() + ", sum = " + rhs.get_str());
            }
        }
    }
    const Polynomial interpolated = interpolate_triangular_grid(
        static_cast<unsigned>(g.vertex_count()), [&g](Count x, Count y) { return reciprocity_sum(g, x, y); });
    if (interpolated != negated) {
        return CheckResult::fail(mismatch("interpolated reciprocity sum", negated, interpolated));
    }
    return CheckResult::pass();
}

CheckResult cross_check_mH(const Flat& flat, Count x, Count y) {
    if (y + 1 > x) {
        throw DomainError("cross check needs y + 1 <= x");
    }
    const Count pairs = count_compatible_pairs(flat, x, y);
    Count weak = 0;
    for (const auto& sigma : enumerate_acyclic_orientations(underlying(flat.quotient))) {
        weak += count_weak_maps(poset_from_orientation(flat, sigma), x, y + 1);
    }
    if (pairs == weak) {
        return CheckResult::pass();
    }
    return CheckResult::fail("at (x, y) = (" + std::to_string(x) + ", " + std::to_string(y) +
                             "): m_H = " + std::to_string(pairs) + ", weak sum = " + std::to_string(weak));
}

} // namespace mixchrom
