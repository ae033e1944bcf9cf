#include <gtest/gtest.h>

#include <bit>

#include "ordclose/filters_topology.hpp"

using namespace ordclose;

namespace {

Subset set_of(std::initializer_list<std::size_t> xs)
{
    Subset s = 0;
    for (auto x : xs) {
        s |= singleton(x);
    }
    return s;
}

// Brute-force closure: points every open neighbourhood of which meets s.
Subset closure_by_points(const FiniteTopology& top, Subset s)
{
    Subset out = 0;
    for (std::size_t x = 0; x < top.size(); ++x) {
        bool adherent = true;
        for (Subset u : top.opens()) {
            if (((u >> x) & 1U) != 0 && (u & s) == 0) {
                adherent = false;
            }
        }
        if (adherent) {
            out |= singleton(x);
        }
    }
    return out;
}

}  // namespace

TEST(Topology, AxiomsAreEnforced)
{
    EXPECT_THROW(FiniteTopology({"a", "b"}, {0, set_of({0}), set_of({1})}), DomainError);
    EXPECT_THROW(FiniteTopology({"a", "b"}, {set_of({0, 1})}), DomainError);
    EXPECT_THROW(FiniteTopology({"a", "a"}, {0, set_of({0, 1})}), DomainError);
    EXPECT_THROW(FiniteTopology::discrete(0), DomainError);
    EXPECT_NO_THROW(FiniteTopology({"a", "b", "c"}, {0, set_of({0}), set_of({0, 1}), set_of({0, 1, 2})}));
    EXPECT_TRUE(check_topology_axioms(2, {0, 1, 2, 3}).ok());
    EXPECT_EQ(check_topology_axioms(2, {0, 1, 2}).violations.front().law, "carrier open");
}

TEST(Topology, CountsMatchKnownSequence)
{
    EXPECT_EQ(enumerate_topologies(1).size(), 1U);
    EXPECT_EQ(enumerate_topologies(2).size(), 4U);
    EXPECT_EQ(enumerate_topologies(3).size(), 29U);
    EXPECT_EQ(enumerate_topologies(4).size(), 355U);
    EXPECT_THROW(enumerate_topologies(5), DomainError);
}

TEST(Topology, ClosureAgreesWithAdherentPoints)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& top : enumerate_topologies(n)) {
            for (Subset s = 0; s <= top.carrier(); ++s) {
                EXPECT_EQ(top.closure(s), closure_by_points(top, s));
            }
        }
    }
}

TEST(Filter, AxiomsAreEnforced)
{
    EXPECT_THROW(FiniteFilter(2, {}), DomainError);
    EXPECT_THROW(FiniteFilter(2, {0, 1, 2, 3}), DomainError);
    EXPECT_THROW(FiniteFilter(2, {1}), DomainError);        // not upward closed
    EXPECT_THROW(FiniteFilter(2, {1, 2, 3}), DomainError);  // {0} & {1} missing
    EXPECT_NO_THROW(FiniteFilter(2, {1, 3}));
    EXPECT_THROW(FiniteFilter::generated_by(2, {1, 2}), DomainError);
    EXPECT_EQ(FiniteFilter::generated_by(3, {3, 6}), FiniteFilter::principal(3, 2));
    EXPECT_THROW(FiniteFilter::principal(2, 0), DomainError);
}

TEST(Filter, EveryFilterOnAFiniteSetIsPrincipal)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto filters = enumerate_filters(n);
        EXPECT_EQ(filters.size(), (std::size_t{1} << n) - 1);
        for (const auto& f : filters) {
            EXPECT_EQ(f, FiniteFilter::principal(n, f.core()));
            EXPECT_TRUE(check_filter_axioms(n, f.sets()).ok());
        }
    }
}

TEST(Neighborhood, KnownExamples)
{
    const auto discrete = FiniteTopology::discrete(3);
    EXPECT_EQ(neighborhood_filter(discrete, 0).sets(), (std::vector<Subset>{1, 3, 5, 7}));
    EXPECT_EQ(neighborhood_filter(FiniteTopology::sierpinski(), 1).sets(), (std::vector<Subset>{2, 3}));
    const auto indiscrete = FiniteTopology::indiscrete(3);
    for (std::size_t x = 0; x < 3; ++x) {
        EXPECT_EQ(neighborhood_filter(indiscrete, x).sets(), (std::vector<Subset>{7}));
    }
    EXPECT_THROW(neighborhood_filter(discrete, 3), DomainError);
}

TEST(LimitSet, KnownExamples)
{
    const auto discrete = FiniteTopology::discrete(3);
    for (std::size_t x = 0; x < 3; ++x) {
        EXPECT_EQ(limit_set(discrete, neighborhood_filter(discrete, x)), singleton(x));
    }
    const auto s = FiniteTopology::sierpinski();
    EXPECT_EQ(limit_set(s, FiniteFilter::principal(2, singleton(1))), set_of({0, 1}));
    const auto indiscrete = FiniteTopology::indiscrete(3);
    EXPECT_EQ(limit_set(indiscrete, FiniteFilter::principal(3, 7)), Subset{7});
}

TEST(LimitSet, NonConvergentFilterIsRejected)
{
    // On the discrete space the filter of supersets of {0,1} refines no U(x).
    const auto discrete = FiniteTopology::discrete(3);
    EXPECT_THROW(limit_set(discrete, FiniteFilter::principal(3, set_of({0, 1}))), NotConvergent);
    EXPECT_EQ(convergence_points(discrete, FiniteFilter::principal(3, set_of({0, 1}))), Subset{0});
}

TEST(LimitSet, HausdorffLimitsAreSingletons)
{
    const auto discrete = FiniteTopology::discrete(4);
    for (const auto& f : enumerate_filters(4)) {
        if (convergence_points(discrete, f) != 0) {
            EXPECT_EQ(std::popcount(limit_set(discrete, f)), 1);
        }
    }
}

TEST(KBounded, EveryTopologyOnUpToThreePoints)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& top : enumerate_topologies(n)) {
            const auto report = kbounded_closure_check(top);
            EXPECT_TRUE(report.ok()) << report.to_json().dump();
            EXPECT_GT(report.cases, 0U);
        }
    }
}

TEST(KBounded, FourPointSamplesAndBound)
{
    const auto tops = enumerate_topologies(4);
    for (std::size_t i = 0; i < tops.size(); i += 23) {
        EXPECT_TRUE(kbounded_closure_check(tops[i]).ok());
    }
    EXPECT_THROW(kbounded_closure_check(FiniteTopology::discrete(5)), DomainError);
}

TEST(KBounded, Census)
{
    const auto indiscrete = filter_census(FiniteTopology::indiscrete(3));
    EXPECT_EQ(indiscrete.filters, 7U);
    EXPECT_EQ(indiscrete.convergent, 7U);
    EXPECT_EQ(indiscrete.k_bounded, 7U);
    // Discrete: exactly the singleton-core filters converge; those are the
    // finest filters, so nothing else sits above a convergent one.
    const auto discrete = filter_census(FiniteTopology::discrete(3));
    EXPECT_EQ(discrete.convergent, 3U);
    EXPECT_EQ(discrete.k_bounded, 3U);
}

TEST(Continuity, KnownExamples)
{
    const auto s = FiniteTopology::sierpinski();
    for (const auto& pc : filter_continuity(s, s, {0, 1})) {
        EXPECT_TRUE(pc.by_filters);
        EXPECT_TRUE(pc.by_preimages);
    }
    for (const auto& pc : filter_continuity(s, s, {1, 1})) {
        EXPECT_TRUE(pc.by_filters);
    }
    const auto swap = filter_continuity(s, s, {1, 0});
    // f^{-1}({1}) = {0} is not open; the failure sits at 0, whose image is 1.
    EXPECT_FALSE(swap[0].by_filters);
    EXPECT_FALSE(swap[0].by_preimages);
    EXPECT_TRUE(swap[1].by_filters);
    EXPECT_TRUE(swap[1].by_preimages);
    EXPECT_FALSE(globally_continuous(s, s, {1, 0}));
    EXPECT_THROW(filter_continuity(s, s, {0}), DomainError);
    EXPECT_THROW(filter_continuity(s, s, {0, 2}), DomainError);
}

TEST(Continuity, PushforwardIsGeneratedByImages)
{
    const auto f = FiniteFilter::principal(3, set_of({0, 1}));
    EXPECT_EQ(pushforward(f, {2, 2, 0}, 3), FiniteFilter::principal(3, singleton(2)));
    EXPECT_EQ(pushforward(f, {0, 1, 1}, 2), FiniteFilter::principal(2, set_of({0, 1})));
}

TEST(Continuity, FilterAndPreimageVerdictsAgreeExhaustively)
{
    const auto report = continuity_cross_check(3);
    EXPECT_TRUE(report.ok()) << report.to_json().dump();
    EXPECT_GT(report.cases, 50000U);
}
