#include <gtest/gtest.h>

#include <utility>

#include "ordclose/algebra_props.hpp"

using namespace ordclose;

namespace {

using Pair = std::pair<Rational, Rational>;

bool lex_leq(const Pair& a, const Pair& b)
{
    return a.first < b.first || (a.first == b.first && a.second <= b.second);
}

std::vector<Pair> pair_samples()
{
    std::vector<Pair> out;
    for (int a = -1; a <= 1; ++a) {
        for (int b = -1; b <= 1; ++b) {
            out.emplace_back(Rational(a), Rational(b));
        }
    }
    return out;
}

OrderedVectorWitness<Pair> lex_witness()
{
    OrderedVectorWitness<Pair> w;
    w.name = "lex";
    w.add = [](const Pair& a, const Pair& b) { return Pair{a.first + b.first, a.second + b.second}; };
    w.neg = [](const Pair& a) { return Pair{-a.first, -a.second}; };
    w.zero = {Rational(0), Rational(0)};
    w.order = {"lex", lex_leq};
    w.equal = [](const Pair& a, const Pair& b) { return a == b; };
    w.scale = [](const Rational& s, const Pair& a) { return Pair{s * a.first, s * a.second}; };
    return w;
}

RationalEnclosure enclosure_of(const ExtensionOutcome<Rational>& out)
{
    EXPECT_TRUE(out.converged()) << out.note;
    return *out.enclosure;
}

}  // namespace

TEST(Compatibility, LexicographicOrderOnPairsIsCompatible)
{
    const auto samples = pair_samples();
    const auto report = check_compatibility(lex_witness(), std::span<const Pair>(samples));
    EXPECT_TRUE(report.ok()) << report.to_json().dump();
    EXPECT_GT(report.cases, 1000U);
}

TEST(Compatibility, BrokenOrderIsReported)
{
    // Second coordinate added with its sign flipped: not a group and not compatible.
    auto w = lex_witness();
    w.add = [](const Pair& a, const Pair& b) { return Pair{a.first + b.first, a.second - b.second}; };
    const auto samples = pair_samples();
    const auto report = check_compatibility(w, std::span<const Pair>(samples));
    EXPECT_FALSE(report.ok());
    bool saw_compatible = false;
    for (const auto& v : report.violations) {
        saw_compatible = saw_compatible || v.law == "compatible";
    }
    EXPECT_TRUE(saw_compatible);
}

TEST(Compatibility, NegativeScalingIsNotCheckedButPositiveIs)
{
    auto w = lex_witness();
    w.scale = [](const Rational& s, const Pair& a) { return Pair{-s * a.first, a.second}; };
    const auto samples = pair_samples();
    const auto report = check_compatibility(w, std::span<const Pair>(samples));
    EXPECT_FALSE(report.ok());
    EXPECT_EQ(report.violations.front().law, "scaling");
}

TEST(Compatibility, CandidateOrdersOfEveryInstance)
{
    for (const auto& name : law_instance_names()) {
        const auto report = instance_compatibility(name, 10, 3);
        EXPECT_TRUE(report.ok()) << name << " " << report.to_json().dump();
        EXPECT_GT(report.cases, 0U) << name;
    }
}

TEST(Additivity, KnownExamples)
{
    const auto x = Integrand1D::from_polynomial("x", Rational(0), Rational(1), Polynomial({Rational(0), Rational(1)}));
    const auto x2 = Integrand1D::from_polynomial("x^2", Rational(0), Rational(1),
                                                 Polynomial({Rational(0), Rational(0), Rational(1)}));
    const Rational tol(1, 1000);
    const auto e = enclosure_of(darboux_extend(x + x2, tol));
    EXPECT_TRUE(contains(e, Rational(5, 6)));
    EXPECT_TRUE(intersects(e, enclosure_of(darboux_extend(x, tol)) + enclosure_of(darboux_extend(x2, tol))));

    const auto h = harmonic_sequence();
    EXPECT_EQ(enclosure_of(net_limit(h + (-h), Rational(1, 1000))), RationalEnclosure(Rational(0), Rational(0)));

    const auto riemann = riemann_instance();
    EXPECT_EQ(enclosure_of(riemann.extend(x + riemann.zero)), enclosure_of(riemann.extend(x)));
    const auto limits = limits_instance();
    EXPECT_EQ(enclosure_of(limits.extend(h + limits.zero)), enclosure_of(limits.extend(h)));
}

TEST(Additivity, RiemannAndLimitsHaveNoViolations)
{
    const auto riemann = additivity_suite(riemann_instance(), 200, 1);
    EXPECT_TRUE(riemann.ok()) << riemann.to_json().dump();
    EXPECT_EQ(riemann.skipped, 0U);
    EXPECT_EQ(riemann.cases, 400U);
    const auto limits = additivity_suite(limits_instance(), 200, 1);
    EXPECT_TRUE(limits.ok()) << limits.to_json().dump();
    EXPECT_EQ(limits.skipped, 0U);
}

TEST(Additivity, OtherInstances)
{
    for (const auto& name : {"lebesgue", "continuity", "derivative"}) {
        const auto report = run_law_suite("additivity", name, 5, 40);
        EXPECT_TRUE(report.ok()) << report.to_json().dump();
        EXPECT_GT(report.cases, 0U) << name;
    }
}

TEST(Additivity, DivergentCasesAreSkipped)
{
    auto inst = limits_instance();
    inst.sample = [](SeededRng& rng) {
        return rng.coin() ? alternating_sequence() : harmonic_sequence();
    };
    const auto report = additivity_suite(inst, 30, 2);
    EXPECT_TRUE(report.ok());
    EXPECT_GT(report.skipped, 0U);
}

TEST(Additivity, ABrokenExtendIsCaught)
{
    auto inst = limits_instance();
    const auto honest = inst.extend;
    inst.extend = [honest](const TailedSequence& f) {
        auto out = honest(f);
        if (out.enclosure && f.name.find('+') != std::string::npos) {
            out.enclosure = *out.enclosure + RationalEnclosure(Rational(1), Rational(1));
        }
        return out;
    };
    inst.sample = [](SeededRng& rng) { return constant_sequence(Rational(rng.integer(1, 5))); };
    const auto report = additivity_suite(inst, 10, 0);
    EXPECT_FALSE(report.ok());
}

TEST(Scaling, KnownExamples)
{
    const auto x = Integrand1D::from_polynomial("x", Rational(0), Rational(1), Polynomial({Rational(0), Rational(1)}));
    EXPECT_TRUE(contains(enclosure_of(darboux_extend(Rational(3) * x, Rational(1, 100))), Rational(3, 2)));
    EXPECT_EQ(enclosure_of(darboux_extend(Rational(1) * x, Rational(1, 100))),
              enclosure_of(darboux_extend(x, Rational(1, 100))));
    EXPECT_TRUE(contains(enclosure_of(net_limit(Rational(2) * harmonic_sequence(), Rational(1, 1000))), Rational(0)));
    EXPECT_EQ(enclosure_of(net_limit(Rational(0) * alternating_sequence(), Rational(1, 1000))),
              RationalEnclosure(Rational(0), Rational(0)));
}

TEST(Scaling, RiemannAndLimitsHaveNoViolations)
{
    for (const auto& name : {"riemann", "limits"}) {
        const auto report = run_law_suite("scaling", name, 11, 200);
        EXPECT_TRUE(report.ok()) << report.to_json().dump();
        EXPECT_EQ(report.skipped, 0U);
    }
    for (const auto& name : {"lebesgue", "continuity", "derivative"}) {
        const auto report = run_law_suite("scaling", name, 11, 40);
        EXPECT_TRUE(report.ok()) << report.to_json().dump();
    }
}

TEST(Negation, ExactOnKernelElements)
{
    for (const auto& name : law_instance_names()) {
        const auto report = run_law_suite("negation", name, 4, 50);
        EXPECT_TRUE(report.ok()) << report.to_json().dump();
        EXPECT_EQ(report.cases, 50U) << name;
    }
}

TEST(Product, KnownExamples)
{
    const Rational tol(1, 100000);
    const auto h = harmonic_sequence();
    EXPECT_TRUE(contains(enclosure_of(net_limit(h * h, tol)), Rational(0)));
    const auto f = constant_sequence(Rational(2)) + h;
    const auto g = constant_sequence(Rational(3)) + -h;
    EXPECT_TRUE(contains(enclosure_of(net_limit(f * g, tol)), Rational(6)));
    EXPECT_EQ(enclosure_of(net_limit(f * constant_sequence(Rational(1)), tol)), enclosure_of(net_limit(f, tol)));
}

TEST(Product, LimitsHaveNoViolationsAndOthersAreRejected)
{
    const auto report = run_law_suite("product", "limits", 9, 200);
    EXPECT_TRUE(report.ok()) << report.to_json().dump();
    EXPECT_EQ(report.skipped, 0U);
    EXPECT_THROW(run_law_suite("product", "riemann", 9, 5), DomainError);
}

TEST(InfSup, FiniteSetIdentities)
{
    const auto report = infsup_suite(500, 17);
    EXPECT_TRUE(report.ok()) << report.to_json().dump();
    EXPECT_EQ(report.cases, 1500U);
}

TEST(Reports, SerializeAndAreDeterministic)
{
    const auto a = run_law_suite("additivity", "limits", 42, 20);
    const auto b = run_law_suite("additivity", "limits", 42, 20);
    EXPECT_EQ(a.to_json(), b.to_json());
    const auto j = a.to_json();
    EXPECT_EQ(j["suite"], "additivity:limits");
    EXPECT_EQ(j["seed"], 42);
    EXPECT_TRUE(j.contains("cases"));
    EXPECT_TRUE(j["violations"].is_array());
    EXPECT_THROW(run_law_suite("nonsense", "limits", 0, 1), DomainError);
    EXPECT_THROW(run_law_suite("additivity", "nonsense", 0, 1), DomainError);
}
