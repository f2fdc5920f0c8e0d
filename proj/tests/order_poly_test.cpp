#include "mixchrom/errors.hpp"
#include "mixchrom/order_poly.hpp"
#include "mixchrom/random_graphs.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace mixchrom {
namespace {

const Polynomial x = Polynomial::x();
const Polynomial y = Polynomial::y();

BicoloredPoset chain2(std::vector<bool> celeste = {false, false}) {
    return BicoloredPoset(2, {{0, 1}}, std::move(celeste));
}

BicoloredPoset single_celeste() {
    return BicoloredPoset(1, {}, {true});
}

// Odometer over all maps, checking every pair of the closure.
Count brute_maps(const BicoloredPoset& p, Count xs, Count ys, bool strict) {
    const std::size_t n = p.size();
    if (n == 0) {
        return 1;
    }
    if (xs == 0) {
        return 0;
    }
    std::vector<Count> phi(n, 1);
    Count total = 0;
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a) {
            if (p.is_celeste(a)) {
                ok = ok && (strict ? phi[a] > ys : phi[a] >= ys);
            }
            for (std::size_t b = 0; b < n; ++b) {
                if (p.less(a, b)) {
                    ok = ok && (strict ? phi[a] < phi[b] : phi[a] <= phi[b]);
                }
            }
        }
        total += ok;
        std::size_t pos = 0;
        while (pos < n && phi[pos] == xs) {
            phi[pos++] = 1;
        }
        if (pos == n) {
            return total;
        }
        ++phi[pos];
    }
}

TEST(BicoloredPoset, ClosureAndValidation) {
    const BicoloredPoset p(3, {{0, 1}, {1, 2}}, {false, false, false});
    EXPECT_TRUE(p.less(0, 2));
    EXPECT_FALSE(p.less(2, 0));
    EXPECT_EQ(p.linear_extension(), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_THROW(BicoloredPoset(2, {{0, 1}, {1, 0}}, {false, false}), DomainError);
    EXPECT_THROW(BicoloredPoset(2, {{0, 2}}, {false, false}), DomainError);
    EXPECT_THROW(BicoloredPoset(2, {}, {false}), DomainError);
}

TEST(PosetFromOrientation, SingleArcGraph) {
    const MixedGraph g = testing::single_arc();
    const Flat flat = trivial_flat(g);
    const MixedGraph h = underlying(g);
    const BicoloredPoset forward = poset_from_orientation(flat, Orientation{h, {{0, 1}}});
    EXPECT_TRUE(forward.less(0, 1));
    EXPECT_EQ(forward.celeste(), (std::vector<bool>{false, false}));
    const BicoloredPoset backward = poset_from_orientation(flat, Orientation{h, {{1, 0}}});
    EXPECT_TRUE(backward.less(1, 0));
    EXPECT_EQ(backward.celeste(), (std::vector<bool>{true, false}));
}

TEST(PosetFromOrientation, AllMergedTriangle) {
    const auto flats = enumerate_flats(testing::mixed_triangle());
    const Flat& merged = flats.back();
    const auto orientations = enumerate_acyclic_orientations(underlying(merged.quotient));
    ASSERT_EQ(orientations.size(), 1U);
    const BicoloredPoset p = poset_from_orientation(merged, orientations[0]);
    EXPECT_EQ(p.size(), 1U);
    EXPECT_TRUE(p.is_celeste(0));
    EXPECT_EQ(p.name(0), "v1v2v3");
}

TEST(CountMaps, Examples) {
    EXPECT_EQ(count_strict_maps(single_celeste(), 5, 2), 3U);
    EXPECT_EQ(count_strict_maps(chain2(), 3, 0), 3U);
    EXPECT_EQ(count_strict_maps(chain2({false, true}), 3, 1), 3U);
    EXPECT_EQ(count_weak_maps(single_celeste(), 5, 2), 4U);
    EXPECT_EQ(count_weak_maps(chain2(), 3, 1), 6U);
    EXPECT_EQ(count_weak_maps(BicoloredPoset(2, {}, {true, false}), 3, 2), 6U);
    EXPECT_EQ(brute_maps(chain2({false, true}), 3, 1, true), 3U);
    EXPECT_EQ(brute_maps(chain2(), 3, 1, false), 6U);
}

TEST(CountMaps, DomainErrors) {
    EXPECT_THROW(count_strict_maps(chain2(), 2, 3), DomainError);
    EXPECT_THROW(count_weak_maps(chain2(), 2, 3), DomainError);
    EXPECT_THROW(count_weak_maps(chain2(), 2, 0), DomainError);
}

TEST(Omega, ClosedForms) {
    EXPECT_EQ(omega_strict(single_celeste()), x - y);
    EXPECT_EQ(omega_weak(single_celeste()), x - y + Polynomial::constant(1));
    EXPECT_EQ(omega_strict(chain2()), binomial(x, 2));
    EXPECT_EQ(omega_weak(chain2()), binomial(x + Polynomial::constant(1), 2));
    // sum over phi(b) in (y, x] of phi(b) - 1
    EXPECT_EQ(omega_strict(chain2({false, true})), Rational(1, 2) * (x * x - x - y * y + y));
    EXPECT_THROW(omega_strict(BicoloredPoset(9, {}, std::vector<bool>(9, false))), BoundError);
}

TEST(BopReciprocity, SmallCases) {
    EXPECT_TRUE(check_bop_reciprocity(single_celeste()));
    EXPECT_TRUE(check_bop_reciprocity(chain2()));
    EXPECT_TRUE(check_bop_reciprocity(chain2({true, false})));
}

class PosetProperties : public ::testing::TestWithParam<int> {};

TEST_P(PosetProperties, CountsPolynomialsAndReciprocity) {
    std::mt19937_64 rng(900 + GetParam());
    const std::size_t n = 1 + GetParam() % 5;
    const BicoloredPoset p = random_bicolored_poset(rng, n);
    for (Count xs = 0; xs <= 4; ++xs) {
        for (Count ys = 0; ys <= xs; ++ys) {
            EXPECT_EQ(count_strict_maps(p, xs, ys), brute_maps(p, xs, ys, true));
            if (ys >= 1) {
                EXPECT_EQ(count_weak_maps(p, xs, ys), brute_maps(p, xs, ys, false));
                EXPECT_LE(count_strict_maps(p, xs, ys), count_weak_maps(p, xs, ys));
            }
        }
    }
    const Polynomial strict = omega_strict(p);
    const Polynomial weak = omega_weak(p);
    std::uniform_int_distribution<Count> pick(1, 2 * n + 3);
    for (int i = 0; i < 10; ++i) {
        const Count xs = pick(rng);
        const Count ys = std::uniform_int_distribution<Count>(1, xs)(rng);
        const Rational xr(to_integer(xs));
        const Rational yr(to_integer(ys));
        EXPECT_EQ(strict.eval(xr, yr), Rational(to_integer(count_strict_maps(p, xs, ys))));
        EXPECT_EQ(weak.eval(xr, yr), Rational(to_integer(count_weak_maps(p, xs, ys))));
    }
    EXPECT_TRUE(check_bop_reciprocity(p));

    const BicoloredPoset silver(p.size(), p.relations(), std::vector<bool>(p.size(), false));
    EXPECT_EQ(omega_strict(silver).degree_y(), 0U);
    EXPECT_EQ(omega_weak(silver).degree_y(), 0U);
}

INSTANTIATE_TEST_SUITE_P(Seeds, PosetProperties, ::testing::Range(0, 40));

} // namespace
} // namespace mixchrom
