#include <gtest/gtest.h>

#include "ordclose/rational.hpp"

using ordclose::ExtRational;
using ordclose::ParseError;
using ordclose::Rational;

TEST(Rational, CanonicalForm)
{
    const Rational r(6, -4);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(4, 2).to_string(), "2");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseForms)
{
    EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
    EXPECT_EQ(Rational::parse("1e-9"), Rational(1, 1000000000));
    EXPECT_EQ(Rational::parse("2.5E2"), Rational(250));
    EXPECT_EQ(Rational::parse(".125"), Rational(1, 8));
    EXPECT_EQ(Rational::parse(" 7 "), Rational(7));
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("1.2.3"), ParseError);
}

TEST(Rational, OutwardDecimal)
{
    const Rational third(1, 3);
    EXPECT_EQ(third.to_decimal_down(4), "0.3333");
    EXPECT_EQ(third.to_decimal_up(4), "0.3334");
    EXPECT_EQ((-third).to_decimal_down(4), "-0.3334");
    EXPECT_EQ((-third).to_decimal_up(4), "-0.3333");
    EXPECT_EQ(Rational(2).to_decimal_down(3), "2.000");
    EXPECT_EQ(Rational(1, 200).to_decimal_up(2), "0.01");
    EXPECT_EQ(Rational(1, 200).to_decimal_down(2), "0.00");
}

TEST(Rational, PowersAndRounding)
{
    EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
    EXPECT_EQ(Rational(2).pow(-2), Rational(1, 4));
    EXPECT_EQ(Rational(-1, 2).pow(2), Rational(1, 4));
    const Rational x(1, 3);
    EXPECT_LE(ordclose::round_down(x, 10), x);
    EXPECT_GE(ordclose::round_up(x, 10), x);
    EXPECT_LE(ordclose::round_up(x, 10) - ordclose::round_down(x, 10), ordclose::dyadic_unit(10));
    EXPECT_EQ(ordclose::round_down(Rational(3, 4), 2), Rational(3, 4));
}

TEST(Rational, IntegerRoot)
{
    auto r = ordclose::integer_root(mpz_class(27), 3);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.root, 3);
    r = ordclose::integer_root(mpz_class(28), 3);
    EXPECT_FALSE(r.exact);
    EXPECT_EQ(r.root, 3);
}

TEST(ExtRational, InfinityOrdering)
{
    const auto inf = ExtRational::infinity();
    EXPECT_LT(ExtRational(Rational(1000000)), inf);
    EXPECT_EQ(inf, ExtRational::infinity());
    EXPECT_EQ(inf + ExtRational(3), inf);
    EXPECT_EQ(ExtRational(2) + ExtRational(3), ExtRational(5));
    EXPECT_EQ(ExtRational::parse("inf"), inf);
    EXPECT_EQ(ExtRational::parse("1/2").value(), Rational(1, 2));
    EXPECT_THROW((void)inf.value(), std::domain_error);
}

TEST(Rational, LeadingZerosAreDecimal)
{
    EXPECT_EQ(Rational::parse("010"), Rational(10));
    EXPECT_EQ(Rational::parse("09/012"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("0.69"), Rational(69, 100));
    EXPECT_EQ(Rational::parse("-0.05e1"), Rational(-1, 2));
}
