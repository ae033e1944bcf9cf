#ifndef ORDCLOSE_FILTERS_TOPOLOGY_HPP
#define ORDCLOSE_FILTERS_TOPOLOGY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordclose/law_report.hpp"
#include "ordclose/order.hpp"

namespace ordclose {

// Subsets of a finite carrier {0, ..., n-1} as bitmasks.
using Subset = std::uint32_t;

constexpr std::size_t kMaxCarrier = 16;

inline Subset full_set(std::size_t n)
{
    return n == 32 ? ~Subset{0} : ((Subset{1} << n) - 1);
}

inline bool subset_of(Subset a, Subset b)
{
    return (a & ~b) == 0;
}

inline Subset singleton(std::size_t x)
{
    return Subset{1} << x;
}

class NotConvergent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Family-level axiom checks, reported rather than thrown.
LawReport check_topology_axioms(std::size_t n, const std::vector<Subset>& opens);
LawReport check_filter_axioms(std::size_t n, const std::vector<Subset>& sets);

class FiniteTopology {
public:
    // Throws DomainError unless the family satisfies the topology axioms.
    FiniteTopology(std::vector<std::string> labels, std::vector<Subset> opens);

    static FiniteTopology discrete(std::size_t n);
    static FiniteTopology indiscrete(std::size_t n);
    // ({0, 1}, {{}, {1}, {0, 1}})
    static FiniteTopology sierpinski();

    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] Subset carrier() const { return full_set(size()); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::vector<Subset>& opens() const { return opens_; }
    [[nodiscard]] std::size_t index_of(const std::string& label) const;
    [[nodiscard]] std::string show(Subset s) const;

    [[nodiscard]] bool is_open(Subset s) const;
    // Smallest open set containing x.
    [[nodiscard]] Subset minimal_open(std::size_t x) const;
    // Intersection of all closed supersets.
    [[nodiscard]] Subset closure(Subset s) const;

private:
    std::vector<std::string> labels_;
    std::vector<Subset> opens_;
};

// Proper filter on {0, ..., n-1}; `sets` is sorted.
class FiniteFilter {
public:
    // Throws DomainError unless the family satisfies the filter axioms.
    FiniteFilter(std::size_t n, std::vector<Subset> sets);

    // All supersets of a nonempty core.
    static FiniteFilter principal(std::size_t n, Subset core);
    // Upward closure of the finite intersections of `base`; DomainError if
    // they reach the empty set.
    static FiniteFilter generated_by(std::size_t n, const std::vector<Subset>& base);

    [[nodiscard]] std::size_t carrier_size() const { return n_; }
    [[nodiscard]] const std::vector<Subset>& sets() const { return sets_; }
    [[nodiscard]] bool contains(Subset s) const;
    // Intersection of all members; on a finite carrier the filter is
    // exactly the supersets of it.
    [[nodiscard]] Subset core() const;

    friend bool operator==(const FiniteFilter&, const FiniteFilter&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Subset> sets_;
};

// F <= G as families: F is a subfamily of G (G is finer).
bool filter_leq(const FiniteFilter& f, const FiniteFilter& g);
PreorderRel<FiniteFilter> filter_inclusion();
// Subsets ordered by reverse inclusion.
PreorderRel<Subset> reverse_inclusion();

FiniteFilter neighborhood_filter(const FiniteTopology& top, std::size_t x);

// Points x with U(x) contained in F.
Subset convergence_points(const FiniteTopology& top, const FiniteFilter& f);

// Intersection of the closures of the members of F. NotConvergent when F
// refines no neighbourhood filter.
Subset limit_set(const FiniteTopology& top, const FiniteFilter& f);

// Every filter on a carrier of at most 4 points, found by testing every
// family of subsets against the axioms.
std::vector<FiniteFilter> enumerate_filters(std::size_t n);

// Every topology on a carrier of at most 4 points.
std::vector<FiniteTopology> enumerate_topologies(std::size_t n);

struct FilterCensus {
    std::size_t filters = 0;
    std::size_t convergent = 0;
    std::size_t k_bounded = 0;
};

FilterCensus filter_census(const FiniteTopology& top);

// Over all filters: every K-bounded filter (between two convergent filters
// under inclusion) is convergent, and limit_set is antitone on convergent
// filters. Carriers of at most 4 points.
LawReport kbounded_closure_check(const FiniteTopology& top);

struct PointContinuity {
    std::size_t point = 0;
    bool by_filters = false;   // U(f(x)) contained in f(U(x))
    bool by_preimages = false; // each open V around f(x) has an open U around x with f(U) in V
};

// Filter generated by the images of the members of F.
FiniteFilter pushforward(const FiniteFilter& f, const std::vector<std::size_t>& map, std::size_t target_size);

std::vector<PointContinuity> filter_continuity(const FiniteTopology& x, const FiniteTopology& y,
                                               const std::vector<std::size_t>& map);

// Preimages of open sets are open.
bool globally_continuous(const FiniteTopology& x, const FiniteTopology& y, const std::vector<std::size_t>& map);

// Filter verdicts against preimage verdicts at every point of every map
// between every pair of topologies on carriers of at most `max_size` points,
// and pointwise continuity everywhere against global continuity.
LawReport continuity_cross_check(std::size_t max_size = 3);

}  // namespace ordclose

#endif
