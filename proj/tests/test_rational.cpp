#include "cyclerees/rational.hpp"

#include <gmpxx.h>
#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>

using cyclerees::rational;

namespace {

mpq_class as_mpq(std::int64_t n, std::int64_t d) {
    mpq_class q(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
    q.canonicalize();
    return q;
}

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
    EXPECT_EQ(rational(6, -4), rational(-3, 2));
    EXPECT_EQ(rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(rational(0, -7).to_string(), "0");
    EXPECT_TRUE(rational(4, 2).is_integer());
    EXPECT_THROW(rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
    const rational a(1, 3);
    const rational b(1, 6);
    EXPECT_EQ(a + b, rational(1, 2));
    EXPECT_EQ(a - b, rational(1, 6));
    EXPECT_EQ(a * b, rational(1, 18));
    EXPECT_EQ(a / b, rational(2));
    EXPECT_EQ(-a, rational(-1, 3));
    EXPECT_THROW(a / rational(0), std::domain_error);
}

TEST(Rational, ParseRoundTrip) {
    EXPECT_EQ(rational::parse("-12/8"), rational(-3, 2));
    EXPECT_EQ(rational::parse("7"), rational(7));
    EXPECT_EQ(rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
    EXPECT_THROW(rational::parse("1/0"), std::domain_error);
    EXPECT_THROW(rational::parse("abc"), std::invalid_argument);
}

TEST(Rational, PromotesOnOverflowAndDemotesBack) {
    const rational big(std::numeric_limits<std::int64_t>::max());
    const rational sq = big * big;
    EXPECT_FALSE(sq.is_small());
    EXPECT_EQ(sq.to_mpq(), mpq_class(mpz_class("85070591730234615847396907784232501249")));
    const rational back = sq / big;
    EXPECT_TRUE(back.is_small());
    EXPECT_EQ(back, big);
    const rational low(std::numeric_limits<std::int64_t>::min());
    EXPECT_EQ((-low).to_mpq(), -low.to_mpq());
    EXPECT_EQ((low - rational(1)).to_string(), "-9223372036854775809");
}

TEST(Rational, Ordering) {
    EXPECT_LT(rational(1, 3), rational(1, 2));
    EXPECT_GT(rational(-1, 3), rational(-1, 2));
    const rational huge = rational(std::numeric_limits<std::int64_t>::max()) * rational(4);
    EXPECT_GT(huge, rational(1));
    EXPECT_LT(-huge, rational(-1));
}

TEST(RationalProperty, AgreesWithGmpOnRandomOperands) {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<std::int64_t> wide(std::numeric_limits<std::int64_t>::min() / 2,
                                                     std::numeric_limits<std::int64_t>::max() / 2);
    std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
        auto pick = [&](bool w) { return w ? wide(rng) : small(rng); };
        const bool w = i % 2 == 0;
        std::int64_t an = pick(w);
        std::int64_t ad = pick(w);
        std::int64_t bn = pick(!w);
        std::int64_t bd = pick(!w);
        if (ad == 0) ad = 1;
        if (bd == 0) bd = 1;
        const rational a(an, ad);
        const rational b(bn, bd);
        const mpq_class qa = as_mpq(an, ad);
        const mpq_class qb = as_mpq(bn, bd);
        ASSERT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
        ASSERT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
        ASSERT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
        if (bn != 0) {
            ASSERT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
        }
        ASSERT_EQ(a < b, qa < qb);
        ASSERT_EQ(a == b, qa == qb);
    }
}
