#include "support.hpp"

#include <gtest/gtest.h>

using namespace cyclerees;
using testing_support::P;

namespace {

monomial M(const cycle_rings& r, const std::string& text) { return P(r, text).leading_monomial(); }

monomial_ideal MI(const cycle_rings& r, std::initializer_list<std::string> gens) {
    std::vector<monomial> ms;
    for (const auto& g : gens) {
        ms.push_back(M(r, g));
    }
    return monomial_ideal(r.T, ms);
}

}  // namespace

TEST(MonomialIdeal, MinimalGenerators) {
    const cycle_rings r(3);
    const auto I = MI(r, {"x1*y1", "x1^2*y1", "y2", "y2*x0", "x1*y1"});
    EXPECT_EQ(I.size(), 2U);
    EXPECT_TRUE(I.contains(M(r, "x1*x2*y1")));
    EXPECT_FALSE(I.contains(M(r, "x1^5")));
}

TEST(InitialIdeal, Examples) {
    const cycle_rings r4(4);
    const auto J4 = rees_ideal({4, 2});
    EXPECT_EQ(initial_ideal(J4, r4.product), MI(r4, {"x3*y1", "x0*y2", "x1*y3", "x0*y1", "y1*y3"}));

    EXPECT_TRUE(initial_ideal(ideal(r4.T, {}), r4.product).is_zero());

    const cycle_rings r5(5);
    const auto J5 = rees_ideal({5, 3});
    EXPECT_EQ(initial_ideal(J5, r5.product), monomial_ideal(r5.T, {M(r5, "x4*y1"), M(r5, "x0*y2"), M(r5, "x1*y3"),
                                                                 M(r5, "x2*y4"), M(r5, "x0*y1"),
                                                                 M(r5, "x2*y1*y3")}));
}

TEST(Squarefree, Examples) {
    const cycle_rings r4(4);
    EXPECT_TRUE(is_squarefree(initial_ideal(rees_ideal({4, 2}), r4.product)));
    EXPECT_FALSE(is_squarefree(MI(r4, {"y1^2"})));
    const cycle_rings r6(6);
    EXPECT_TRUE(is_squarefree(initial_ideal(rees_ideal({6, 3}), r6.product)));
}

TEST(XCondition, Examples) {
    const cycle_rings r4(4);
    EXPECT_TRUE(x_condition(initial_ideal(rees_ideal({4, 2}), r4.product)));
    EXPECT_FALSE(x_condition(MI(r4, {"x1^2*y1"})));
    EXPECT_TRUE(x_condition(MI(r4, {"x1*y1^3"})));
    const cycle_rings r8(8);
    EXPECT_TRUE(x_condition(initial_ideal(rees_ideal({8, 6}), r8.product)));
    EXPECT_THROW(x_condition(monomial_ideal(testing_support::small_ring(2))), std::invalid_argument);
}

TEST(Hilbert, Examples) {
    const auto R3 = testing_support::small_ring(3);
    EXPECT_EQ(hilbert_numerator(monomial_ideal(R3)), (hilbert_series{{1}, 3}));

    const auto R2 = testing_support::small_ring(2);
    monomial m(2);
    m.set(0, 1);
    m.set(1, 1);
    EXPECT_EQ(hilbert_numerator(monomial_ideal(R2, {m})), (hilbert_series{{1, 1}, 1}));

    const cycle_rings r4(4);
    EXPECT_EQ(hilbert_numerator(MI(r4, {"x3*y1", "x0*y2", "x1*y3", "x0*y1", "y1*y3"})), (hilbert_series{{1, 3, 1}, 5}));
}

TEST(Hilbert, UnitIdealAndLinearForms) {
    const auto R3 = testing_support::small_ring(3);
    EXPECT_EQ(hilbert_numerator(monomial_ideal(R3, {monomial(3)})), (hilbert_series{{}, 0}));
    // (v0, v1^2): series (1 + z) / (1 - z)
    monomial a(3);
    a.set(0, 1);
    monomial b(3);
    b.set(1, 2);
    EXPECT_EQ(hilbert_numerator(monomial_ideal(R3, {a, b})), (hilbert_series{{1, 1}, 1}));
}

TEST(Hilbert, Canonicalization) {
    EXPECT_EQ((hilbert_series{{1, 0, -1}, 3}).canonical(), (hilbert_series{{1, 1}, 2}));
    EXPECT_EQ((hilbert_series{{0, 0}, 4}).canonical(), (hilbert_series{{}, 0}));
    EXPECT_EQ((hilbert_series{{1, -1}, 1}).canonical(), (hilbert_series{{1}, 0}));
    EXPECT_EQ(to_string(hilbert_series{{1, 3, 1}, 5}), "(1 + 3z + z^2) / (1 - z)^5");
}

TEST(Colon, Examples) {
    const cycle_rings r4(4);
    EXPECT_EQ(colon_mono(MI(r4, {"x1*y1"}), M(r4, "y1")), MI(r4, {"x1"}));

    const cycle_rings r5(5);
    const auto K5 = initial_ideal(rees_ideal({5, 3}), r5.product);
    EXPECT_EQ(colon_mono(K5, M(r5, "y1*y3")), monomial_ideal(r5.T, {M(r5, "x4"), M(r5, "x0"), M(r5, "x1"), M(r5, "x2")}));

    EXPECT_TRUE(sum_mono(MI(r4, {"x1*y1"}), monomial(8)).is_unit());
}

TEST(HilbertProperty, PivotStrategiesAgree) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 1200; ++i) {
        const std::size_t nv = 3 + static_cast<std::size_t>(i % 4);
        const auto R = testing_support::small_ring(nv);
        std::vector<monomial> gens;
        const int k = 1 + i % 7;
        for (int j = 0; j < k; ++j) {
            gens.push_back(testing_support::random_monomial(rng, nv, 3));
        }
        const monomial_ideal I(R, gens);
        ASSERT_EQ(hilbert_numerator(I, pivot_strategy::most_frequent),
                  hilbert_numerator(I, pivot_strategy::first_shared));
    }
}

TEST(HilbertProperty, InclusionExclusionOracle) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 1500; ++i) {
        const std::size_t nv = 2 + static_cast<std::size_t>(i % 5);
        const auto R = testing_support::small_ring(nv);
        std::vector<monomial> gens;
        const int k = 1 + i % 5;
        for (int j = 0; j < k; ++j) {
            gens.push_back(testing_support::random_monomial(rng, nv, 3));
        }
        const monomial_ideal I(R, gens);
        ASSERT_EQ(hilbert_numerator(I), testing_support::inclusion_exclusion(gens, nv)) << to_string(I);
    }
}

TEST(HilbertProperty, ColonAndSumLaws) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t nv = 4;
        const auto R = testing_support::small_ring(nv);
        std::vector<monomial> gens;
        for (int j = 0; j < 1 + i % 5; ++j) {
            gens.push_back(testing_support::random_monomial(rng, nv, 3));
        }
        const monomial_ideal M(R, gens);
        const auto p = testing_support::random_monomial(rng, nv, 2);
        const auto colon = colon_mono(M, p);
        const auto sum = sum_mono(M, p);
        for (const auto& c : colon.generators()) {
            ASSERT_TRUE(M.contains(c * p));
        }
        for (const auto& g : M.generators()) {
            ASSERT_TRUE(sum.contains(g));
        }
        ASSERT_TRUE(sum.contains(p));
        for (const auto* ideal_ptr : {&colon, &sum}) {
            const auto& gs = ideal_ptr->generators();
            for (std::size_t a = 0; a < gs.size(); ++a) {
                for (std::size_t b = 0; b < gs.size(); ++b) {
                    ASSERT_TRUE(a == b || !gs[a].divides(gs[b]));
                }
            }
        }
        // Pivot identity on a single-variable pivot.
        const auto x = monomial::variable(nv, static_cast<std::size_t>(i) % nv);
        const auto lhs = hilbert_numerator(M);
        const auto a = hilbert_numerator(sum_mono(M, x));
        const auto b = hilbert_numerator(colon_mono(M, x));
        auto lift = [&](const hilbert_series& h) {
            auto num = h.numerator;
            for (std::size_t e = h.denom_power; e < nv; ++e) {
                num = zpoly::mul(num, {1, -1});
            }
            return num;
        };
        const auto rhs = zpoly::add(lift(a), zpoly::shift(lift(b), 1));
        ASSERT_EQ((hilbert_series{rhs, nv}).canonical(), lhs);
    }
}

TEST(HilbertProperty, IndependentOfTermOrder) {
    for (std::size_t n = 4; n <= 6; ++n) {
        const cycle_rings r(n);
        const auto lex = make_simple_order(r.T, base_order::lex);
        const auto drl = make_simple_order(r.T, base_order::degrevlex);
        for (std::size_t t = 2; t < n; ++t) {
            const auto J = rees_ideal({n, t});
            const auto a = hilbert_numerator(initial_ideal(J, r.product));
            ASSERT_EQ(a, hilbert_numerator(initial_ideal(J, lex))) << n << "," << t;
            ASSERT_EQ(a, hilbert_numerator(initial_ideal(J, drl))) << n << "," << t;
            ASSERT_EQ(a.denom_power, n + 1) << n << "," << t;
        }
    }
}
