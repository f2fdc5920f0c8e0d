// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "mixchrom/decomposition.hpp"
#include "mixchrom/identities.hpp"
#include "mixchrom/oracle.hpp"
#include "mixchrom/order_poly.hpp"
#include "mixchrom/random_graphs.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace mixchrom {
namespace {

constexpr std::uint64_t kSuiteSeed = 20230601;
constexpr std::size_t kSuiteSize = 240;
constexpr std::size_t kSuiteMaxVertices = 5;
constexpr std::size_t kHeldOutPoints = 10;
constexpr std::size_t kMinIdentityInstances = 100;
constexpr std::size_t kPosetSamples = 150;
constexpr Count kReciprocityXmax = 4;

struct Outcome {
    bool passed = true;
    std::string note;

    void require(bool condition, const std::string& what) {
        if (!condition && passed) {
            passed = false;
            note = what;
        }
    }
};

struct SuiteGraph {
    MixedGraph graph;
    Polynomial oracle;
    Polynomial decomposition;
    Polynomial delcontr;
};

std::vector<SuiteGraph>& suite() {
    static std::vector<SuiteGraph> graphs = [] {
        std::vector<SuiteGraph> out;
        for (auto& g : verification_corpus(kSuiteSeed, kSuiteSize, kSuiteMaxVertices)) {
            out.push_back({std::move(g), {}, {}, {}});
        }
        return out;
    }();
    return graphs;
}

Rational at(Count v) {
    return Rational(to_integer(v));
}

Outcome example1() {
    Outcome o;
    const MixedGraph g = testing::single_arc();
    const Polynomial expected = testing::single_arc_polynomial();
    o.require(chi_by_decomposition(g) == expected, "decomposition differs");
    o.require(chi_by_delcontr(g) == expected, "delcontr differs");
    o.require(interpolate_chi(g) == expected, "interpolation differs");
    return o;
}

Outcome example2() {
    Outcome o;
    const MixedGraph g = testing::mixed_triangle();
    const Polynomial expected = testing::triangle_polynomial();
    o.require(chi_by_decomposition(g) == expected, "decomposition differs");
    o.require(chi_by_delcontr(g) == expected, "delcontr differs");
    o.require(interpolate_chi(g) == expected, "interpolation differs");

    const DecompositionReport report = decomposition_report(g);
    std::vector<std::size_t> census;
    for (const auto& flat : report.flats) {
        census.push_back(flat.orientation_count);
    }
    o.require(census == std::vector<std::size_t>{6, 2, 2, 2, 1}, "orientation census is not 6/2/2/2/1");
    o.require(report.rows.size() == 13, "report does not have 13 rows");

    const Polynomial x = Polynomial::x();
    const Polynomial y = Polynomial::y();
    const Polynomial one = Polynomial::constant(1);
    const Polynomial closed = Rational(3) * binomial(x, 3) + Rational(2) * (x - y) * binomial(y, 2) +
                              (Rational(3) * y + Rational(6) * one) * binomial(x - y, 2) +
                              Rational(3) * binomial(x - y, 3) + (x - y) * (Rational(3) * y + one);
    Polynomial row_sum;
    for (const auto& row : report.rows) {
        row_sum += row.omega;
    }
    o.require(row_sum == closed, "row sum differs from the closed form: " + to_plain(row_sum) + " vs " + to_plain(closed));
    o.require(closed == expected, "closed form differs from the stated polynomial");
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(kSuiteSeed + 1);
    std::size_t checked = 0;
    for (auto& s : suite()) {
        s.oracle = interpolate_chi(s.graph);
        s.decomposition = chi_by_decomposition(s.graph);
        s.delcontr = chi_by_delcontr(s.graph);
        o.require(s.decomposition == s.oracle, "decomposition differs from interpolation");
        o.require(s.delcontr == s.oracle, "delcontr differs from interpolation");

        const Count n = s.graph.vertex_count();
        std::size_t held_out = 0;
        while (held_out < kHeldOutPoints) {
            const Count x = std::uniform_int_distribution<Count>(0, 2 * n + 3)(rng);
            const Count y = std::uniform_int_distribution<Count>(0, x)(rng);
            const bool on_grid = y >= 1 && y <= n + 1 && x >= y && x <= y + n;
            if (on_grid) {
                continue;
            }
            ++held_out;
            o.require(s.oracle.eval(at(x), at(y)) == at(count_colorings(s.graph, x, y)),
                      "held-out point (" + std::to_string(x) + ", " + std::to_string(y) + ") disagrees");
        }
        ++checked;
    }
    o.require(checked >= 200, "fewer than 200 suite graphs");
    o.note = o.passed ? std::to_string(checked) + " graphs" : o.note;
    return o;
}

Outcome delcontr_identities() {
    Outcome o;
    std::mt19937_64 rng(kSuiteSeed + 2);
    std::size_t edges = 0;
    std::size_t arcs = 0;
    for (const auto& s : suite()) {
        const auto& g = s.graph;
        if (!g.edges().empty()) {
            auto it = g.edges().begin();
            std::advance(it, std::uniform_int_distribution<std::size_t>(0, g.edges().size() - 1)(rng));
            const CheckResult r = check_edge_delcontr(g, *it);
            o.require(static_cast<bool>(r), r.detail);
            ++edges;
        }
        if (!g.arcs().empty()) {
            auto it = g.arcs().begin();
            std::advance(it, std::uniform_int_distribution<std::size_t>(0, g.arcs().size() - 1)(rng));
            const CheckResult r = check_arc_delcontr(g, *it);
            o.require(static_cast<bool>(r), r.detail);
            ++arcs;
        }
    }
    o.require(edges >= kMinIdentityInstances, "only " + std::to_string(edges) + " edge instances");
    o.require(arcs >= kMinIdentityInstances, "only " + std::to_string(arcs) + " arc instances");
    o.note = o.passed ? std::to_string(edges) + " edge / " + std::to_string(arcs) + " arc instances" : o.note;
    return o;
}

Outcome chromatic_reciprocity() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& s : suite()) {
        if (s.graph.vertex_count() > 4) {
            continue;
        }
        const CheckResult r = check_chromatic_reciprocity(s.graph, kReciprocityXmax);
        o.require(static_cast<bool>(r), r.detail);
        ++checked;
    }
    o.note = o.passed ? std::to_string(checked) + " graphs" : o.note;
    return o;
}

Outcome bop_reciprocity() {
    Outcome o;
    std::mt19937_64 rng(kSuiteSeed + 3);
    for (std::size_t i = 0; i < kPosetSamples; ++i) {
        const std::size_t n = 1 + i % 5;
        const BicoloredPoset p = random_bicolored_poset(rng, n);
        o.require(check_bop_reciprocity(p), "poset sample " + std::to_string(i) + " fails");
    }
    o.note = o.passed ? std::to_string(kPosetSamples) + " posets" : o.note;
    return o;
}

Outcome specializations() {
    Outcome o;
    const Polynomial x = Polynomial::x();
    // (a) arc-free graphs: the diagonal is the classical chromatic polynomial
    const MixedGraph k3 = testing::complete_undirected(3);
    o.require(substitute_y_equals_x(chi_by_decomposition(k3)) ==
                  x * (x - Polynomial::constant(1)) * (x - Polynomial::constant(2)),
              "K3 diagonal is not x(x-1)(x-2)");
    std::vector<MixedGraph> arc_free;
    std::mt19937_64 rng(kSuiteSeed + 4);
    for (int i = 0; i < 60; ++i) {
        RandomGraphOptions options;
        options.arc_probability = 0;
        options.edge_probability = 0.5;
        arc_free.push_back(random_mixed_graph(rng, 1 + i % 5, options));
    }
    for (const auto& s : suite()) {
        if (s.graph.arcs().empty()) {
            arc_free.push_back(s.graph);
        }
    }
    for (const auto& g : arc_free) {
        o.require(substitute_y_equals_x(chi_by_decomposition(g)) == testing::classical_chromatic(g),
                  "arc-free diagonal differs from classical chromatic polynomial");
    }
    // (b) y = 0 and (c) diagonal vanishes exactly for cyclic arc sets
    o.require(substitute_y_equals_x(chi_by_decomposition(testing::directed_cycle(3))).is_zero(),
              "directed 3-cycle diagonal is not zero");
    std::size_t cyclic = 0;
    for (const auto& s : suite()) {
        const unsigned n = static_cast<unsigned>(s.graph.vertex_count());
        const Polynomial& chi = s.decomposition;
        for (Count v = 0; v <= 6; ++v) {
            Rational power = 1;
            for (unsigned i = 0; i < n; ++i) {
                power *= at(v);
            }
            o.require(chi.eval(at(v), 0) == power, "chi(x, 0) != x^|V|");
        }
        const Polynomial diagonal = substitute_y_equals_x(chi);
        if (arcs_have_cycle(s.graph)) {
            ++cyclic;
            o.require(diagonal.is_zero(), "cyclic arc set but nonzero diagonal");
        } else {
            o.require(!diagonal.is_zero() && diagonal.degree_x() == n, "acyclic arc set but diagonal degree != |V|");
        }
    }
    o.note = o.passed ? std::to_string(arc_free.size()) + " arc-free, " + std::to_string(cyclic) + " cyclic" : o.note;
    return o;
}

Outcome mh_bridge() {
    Outcome o;
    std::size_t flats = 0;
    for (const auto& s : suite()) {
        if (s.graph.vertex_count() > 4) {
            continue;
        }
        for (const Flat& flat : enumerate_flats(s.graph)) {
            ++flats;
            for (Count x = 1; x <= 5; ++x) {
                for (Count y = 0; y + 1 <= x; ++y) {
                    const CheckResult r = cross_check_mH(flat, x, y);
                    o.require(static_cast<bool>(r), r.detail);
                }
            }
        }
    }
    o.note = o.passed ? std::to_string(flats) + " flats" : o.note;
    return o;
}

struct Criterion {
    const char* id;
    const char* title;
    double time_limit_seconds; // 0: no limit stated
    std::function<Outcome()> run;
};

} // namespace
} // namespace mixchrom

int main() {
    using namespace mixchrom;
    const std::vector<Criterion> criteria{
        {"AC1", "single-arc graph: three methods agree with (2x^2 - y^2 - y)/2", 1.0, example1},
        {"AC2", "mixed triangle: three methods, 6/2/2/2/1 census, closed-form row sum", 5.0, example2},
        {"AC3", "oracle equivalence on the random suite with held-out points", 300.0, oracle_equivalence},
        {"AC4", "edge and arc deletion-contraction identities", 0.0, delcontr_identities},
        {"AC5", "chromatic reciprocity on suite graphs with |V| <= 4", 0.0, chromatic_reciprocity},
        {"AC6", "order-polynomial reciprocity on random bicolored posets", 0.0, bop_reciprocity},
        {"AC7", "specializations y = x, y = 0 and cyclic arc sets", 0.0, specializations},
        {"AC8", "compatible-pair count equals the weak order-polynomial sum", 0.0, mh_bridge},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
            o.passed = false;
            o.note = "exceeded " + std::to_string(c.time_limit_seconds) + " s";
        }
        failures += !o.passed;
        std::printf("[%s] %s %s (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.title, seconds,
                    o.note.empty() ? "" : ": ", o.note.c_str());
    }
    std::printf("%s: %d of %zu criteria failed\n", failures ? "FAILED" : "OK", failures, criteria.size());
    return failures ? 1 : 0;
}
