#include <gtest/gtest.h>

#include <vector>

#include "rscount/rational.hpp"
#include "test_support.hpp"

namespace rscount {
namespace {

using testing::Gen;
using testing::kPropertyCases;

bool is_reduced(const Rational& q)
{
    BigInt g;
    const BigInt num = q.numerator();
    const BigInt den = q.denominator();
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return den > 0 && g == 1;
}

TEST(Rational, ArithmeticExamples)
{
    EXPECT_EQ(*rational_arith(Rational(1, 6), Rational(2, 3), ArithOp::add), Rational(5, 6));
    EXPECT_EQ(*rational_arith(Rational(-5, 6), Rational(-6, 5), ArithOp::mul), Rational(1));
    const Rational x(BigInt(-7), BigInt(9));
    EXPECT_EQ(*rational_arith(x, Rational(1), ArithOp::mul), x);
    EXPECT_EQ(*rational_arith(Rational(1, 2), Rational(1, 3), ArithOp::sub), Rational(1, 6));
    EXPECT_EQ(*rational_arith(Rational(1, 2), Rational(1, 3), ArithOp::div), Rational(3, 2));
}

TEST(Rational, DivisionByZeroIsAnErrorValue)
{
    EXPECT_FALSE(rational_arith(Rational(3), Rational(0), ArithOp::div).has_value());
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(Rational, CanonicalForm)
{
    const Rational q(BigInt(6), BigInt(-4));
    EXPECT_EQ(q.numerator(), -3);
    EXPECT_EQ(q.denominator(), 2);
    const Rational zero(BigInt(0), BigInt(-17));
    EXPECT_EQ(zero.numerator(), 0);
    EXPECT_EQ(zero.denominator(), 1);
    EXPECT_EQ(zero, Rational());
    EXPECT_EQ(Rational(-3, 2).to_string(), "-3/2");
    EXPECT_EQ(Rational(4, 2).to_string(), "2");
    EXPECT_THROW(Rational(1, 2).to_integer(), std::domain_error);
}

TEST(Rational, RingAxiomsOnRandomInputs)
{
    Gen gen(0x5eed01);
    for (int i = 0; i < kPropertyCases; ++i) {
        const auto x = gen.rational();
        const auto y = gen.rational();
        const auto z = gen.rational();
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x + y, y + x);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x - x, Rational());
        ASSERT_TRUE(is_reduced(x + y));
        ASSERT_TRUE(is_reduced(x * y));
        ASSERT_TRUE(is_reduced(x - z));
        if (!y.is_zero()) {
            const auto q = *rational_arith(x, y, ArithOp::div);
            ASSERT_TRUE(is_reduced(q));
            ASSERT_EQ(q * y, x);
        }
    }
}

// Pascal's triangle with exact integers, independent of the multiplicative formula.
std::vector<std::vector<BigInt>> pascal(std::size_t rows)
{
    std::vector<std::vector<BigInt>> t(rows + 1);
    for (std::size_t n = 0; n <= rows; ++n) {
        t[n].assign(n + 1, 1);
        for (std::size_t k = 1; k < n; ++k) {
            t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
    }
    return t;
}

TEST(Binomial, Examples)
{
    EXPECT_EQ(binomial(7, 3), 35);
    EXPECT_EQ(binomial(63, 31), BigInt("916312070471295267"));
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(40, 0), 1);
    EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Binomial, MatchesPascalTriangle)
{
    const auto t = pascal(80);
    EXPECT_EQ(t[63][31], BigInt("916312070471295267"));
    for (std::size_t n = 0; n <= 80; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            ASSERT_EQ(binomial(n, k), t[n][k]) << n << " choose " << k;
        }
    }
}

TEST(Binomial, PascalRecurrence)
{
    for (std::uint64_t n = 1; n <= 64; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
            ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

}  // namespace
}  // namespace rscount
