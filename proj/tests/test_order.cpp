#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "ordclose/order.hpp"
#include "ordclose/random.hpp"

using namespace ordclose;

TEST(PreorderLaws, RationalOrderHolds)
{
    const std::vector<Rational> samples{Rational(-1), Rational(0), Rational(1, 2)};
    const auto report = check_preorder_laws(natural_order<Rational>(), std::span<const Rational>(samples));
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.cases, 3U + 27U);
}

TEST(PreorderLaws, StrictOrderFailsReflexivity)
{
    const PreorderRel<long> strict{"<", [](long a, long b) { return a < b; }};
    const std::vector<long> samples{3};
    const auto report = check_preorder_laws(strict, std::span<const long>(samples),
                                            std::function<std::string(const long&)>(
                                                [](const long& v) { return std::to_string(v); }));
    ASSERT_EQ(report.violations.size(), 1U);
    EXPECT_EQ(report.violations[0].law, "reflexive");
    EXPECT_EQ(report.violations[0].inputs, "(3,3)");
}

TEST(PreorderLaws, NonTransitiveRelationWitnessed)
{
    // a ~ b iff |a - b| <= 1: reflexive, not transitive.
    const PreorderRel<long> near{"near", [](long a, long b) { return a - b <= 1 && b - a <= 1; }};
    const std::vector<long> samples{0, 1, 2};
    const auto report = check_preorder_laws(near, std::span<const long>(samples));
    EXPECT_FALSE(report.ok());
    EXPECT_EQ(report.violations.front().law, "transitive");
}

TEST(PreorderLaws, RandomTriplesWhenLarge)
{
    std::vector<long> samples;
    for (long i = 0; i < 100; ++i) {
        samples.push_back(i);
    }
    LawCheckOptions options;
    options.seed = 11;
    const auto report = check_preorder_laws(natural_order<long>(), std::span<const long>(samples), {}, options);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.cases, 100U + options.random_triples);
    EXPECT_GE(options.random_triples, 200U);
}

TEST(Bounds, LowerAndUpper)
{
    const std::vector<long> set{1, 2, 3};
    const auto le = natural_order<long>();
    EXPECT_TRUE(is_lower_bound(0L, std::span<const long>(set), le));
    EXPECT_FALSE(is_lower_bound(2L, std::span<const long>(set), le));
    EXPECT_TRUE(is_upper_bound(3L, std::span<const long>(set), le));
    EXPECT_THROW(is_lower_bound(0L, std::span<const long>(), le), std::invalid_argument);

    // Subsets of a small carrier as bitmasks under inclusion.
    const PreorderRel<std::uint32_t> subset{"subset", [](std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }};
    const std::vector<std::uint32_t> family{0b011, 0b110, 0b101};
    EXPECT_TRUE(is_lower_bound(std::uint32_t{0}, std::span<const std::uint32_t>(family), subset));
}

TEST(Bounds, FiniteInfAndSup)
{
    const std::vector<Rational> set{Rational(3, 2), Rational(1, 2), Rational(5, 2)};
    EXPECT_EQ(finite_inf(std::span<const Rational>(set), rational_order()), Rational(1, 2));
    EXPECT_EQ(finite_sup(std::span<const Rational>(set), rational_order()), Rational(5, 2));

    ValueOrder<std::uint32_t> lattice;
    lattice.rel = {"subset", [](std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }};
    lattice.meet = [](std::uint32_t a, std::uint32_t b) -> std::optional<std::uint32_t> { return a & b; };
    const std::vector<std::uint32_t> family{0b011, 0b110};  // {1,2}, {2,3}
    EXPECT_EQ(finite_inf(std::span<const std::uint32_t>(family), lattice), 0b010U);

    const std::vector<long> distinct{1, 2};
    EXPECT_THROW(finite_inf(std::span<const long>(distinct), equality_order<long>()), NoMeet);
    const std::vector<long> same{4, 4};
    EXPECT_EQ(finite_inf(std::span<const long>(same), equality_order<long>()), 4);
}

TEST(Bounds, InfIsGreatestLowerBoundProperty)
{
    SeededRng rng(2024);
    const auto order = rational_order();
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> set;
        const auto n = 1 + rng.index(6);
        for (std::size_t i = 0; i < n; ++i) {
            set.emplace_back(rng.integer(-20, 20), rng.integer(1, 6));
        }
        const auto inf = finite_inf(std::span<const Rational>(set), order);
        const auto sup = finite_sup(std::span<const Rational>(set), order);
        EXPECT_TRUE(is_lower_bound(inf, std::span<const Rational>(set), order.rel));
        EXPECT_TRUE(is_upper_bound(sup, std::span<const Rational>(set), order.rel));
        const Rational m(rng.integer(-30, 30), rng.integer(1, 6));
        if (is_lower_bound(m, std::span<const Rational>(set), order.rel)) {
            EXPECT_LE(m, inf);
        }
        if (is_upper_bound(m, std::span<const Rational>(set), order.rel)) {
            EXPECT_GE(m, sup);
        }
    }
}

TEST(Enclosure, RejectsInvertedBounds)
{
    EXPECT_THROW(RationalEnclosure(Rational(2), Rational(1)), std::invalid_argument);
    const RationalEnclosure e(Rational(1), Rational(2));
    EXPECT_EQ(width(e), Rational(1));
    EXPECT_TRUE(contains(e, Rational(3, 2)));
    EXPECT_FALSE(contains(e, Rational(3)));

    const PreorderRel<std::uint32_t> superset{"superset", [](std::uint32_t a, std::uint32_t b) { return (b & ~a) == 0; }};
    EXPECT_NO_THROW(Enclosure<std::uint32_t>(0b111U, 0b001U, superset));
    EXPECT_THROW(Enclosure<std::uint32_t>(0b001U, 0b111U, superset), std::invalid_argument);
}

TEST(Enclosure, IntervalArithmetic)
{
    const RationalEnclosure a(Rational(-1), Rational(2));
    const RationalEnclosure b(Rational(3), Rational(4));
    EXPECT_EQ(a + b, RationalEnclosure(Rational(2), Rational(6)));
    EXPECT_EQ(a - b, RationalEnclosure(Rational(-5), Rational(-1)));
    EXPECT_EQ(a * b, RationalEnclosure(Rational(-4), Rational(8)));
    EXPECT_EQ(Rational(-2) * a, RationalEnclosure(Rational(-4), Rational(2)));
    EXPECT_EQ(-a, RationalEnclosure(Rational(-2), Rational(1)));
}

TEST(ValueOrders, AntisymmetryInCompleteOrders)
{
    SeededRng rng(5);
    const auto q = rational_order();
    const auto ext = ext_rational_order();
    for (int i = 0; i < 200; ++i) {
        const Rational a(rng.integer(-5, 5), rng.integer(1, 3));
        const Rational b(rng.integer(-5, 5), rng.integer(1, 3));
        if (q.leq(a, b) && q.leq(b, a)) {
            EXPECT_EQ(a, b);
        }
        const ExtRational ea = rng.coin() ? ExtRational(a) : ExtRational::infinity();
        const ExtRational eb = rng.coin() ? ExtRational(b) : ExtRational::infinity();
        if (ext.leq(ea, eb) && ext.leq(eb, ea)) {
            EXPECT_EQ(ea, eb);
        }
    }
}
