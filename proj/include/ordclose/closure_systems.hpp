#ifndef ORDCLOSE_CLOSURE_SYSTEMS_HPP
#define ORDCLOSE_CLOSURE_SYSTEMS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordclose/filters_topology.hpp"
#include "ordclose/law_report.hpp"
#include "ordclose/order.hpp"
#include "ordclose/rational.hpp"

namespace ordclose {

// Subsets of a closure system's carrier {0, ..., size-1}, size <= 64.
using ElementSet = std::uint64_t;

constexpr std::size_t kMaxClosureCarrier = 64;

class NotBoundedAbove : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotInKStar : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoCover : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AdditivityViolation : public std::runtime_error {
public:
    AdditivityViolation(const std::string& what, Subset a, Subset b)
        : std::runtime_error(what), first(a), second(b) {}
    Subset first;
    Subset second;
};

// A family of closed subsets of a finite carrier. `closed_sets`, when set,
// lists every closed set; `close_step`, when set, maps K to K plus
// everything its rules generate in one round.
struct ClosureSystem {
    std::string name;
    std::size_t size = 0;
    std::vector<std::string> labels;
    std::function<bool(ElementSet)> is_closed;
    std::function<std::vector<ElementSet>()> closed_sets;
    std::function<ElementSet(ElementSet)> close_step;

    [[nodiscard]] ElementSet top() const;
    [[nodiscard]] std::string show(ElementSet s) const;
    [[nodiscard]] ElementSet parse(const std::vector<std::string>& members) const;
};

struct ClosureResult {
    ElementSet closure = 0;
    std::optional<ElementSet> by_intersection;
    std::optional<ElementSet> by_fixpoint;
};

// Smallest closed superset of K: the intersection of all closed supersets
// and the fixpoint of the rules, each when available. ContractViolation if
// they differ, NotBoundedAbove if nothing closed contains K.
ClosureResult l_closure(ElementSet k, const ClosureSystem& system);

// Top closed, closed sets stable under intersection (over the enumeration).
LawReport check_closure_system(const ClosureSystem& system);

// Extensive, idempotent, isotone, and methods agreeing, on `samples` seeded
// random sets (every set when the carrier has at most 10 elements).
LawReport closure_operator_laws(const ClosureSystem& system, std::size_t samples, std::uint64_t seed);

ClosureSystem topological_system(const FiniteTopology& top);

class FiniteGroup {
public:
    // Verifies the group axioms exhaustively; DomainError otherwise.
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

    static FiniteGroup cyclic(std::size_t n);
    // Permutations of {1..degree} generated by `generators` (images of
    // 1..degree, 1-based); at most kMaxClosureCarrier elements.
    static FiniteGroup from_permutations(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators);
    static FiniteGroup symmetric(std::size_t degree);

    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] std::size_t op(std::size_t a, std::size_t b) const { return table_[a][b]; }
    [[nodiscard]] std::size_t identity() const { return identity_; }
    [[nodiscard]] std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    [[nodiscard]] bool is_subgroup(ElementSet s) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

// Cycle notation over letters 1..n, "()" for the identity.
std::string cycle_notation(const std::vector<std::size_t>& images);

// Subgroups; every subgroup is enumerated when the group has at most 16
// elements, otherwise only the fixpoint method is available.
ClosureSystem subgroup_system(const FiniteGroup& group);

// sigma-algebras on {0, ..., n-1}, n <= 5: the carrier is the power set,
// element i standing for the subset with bitmask i. Points are labelled
// 1..n unless `omega_labels` is given.
ClosureSystem sigma_system(std::size_t n, std::vector<std::string> omega_labels = {});

// One-sided extension: phi^*(f) = inf { phi(b) | f <= b, b in K } over the upper
// approximants `upper_candidates(f)` proposes.
template <class F, class V>
struct OneSidedProblem {
    std::string name;
    PreorderRel<F> order;
    ValueOrder<V> values;
    std::function<bool(const F&)> in_kernel;
    std::function<V(const F&)> phi;
    std::function<std::vector<F>(const F&)> upper_candidates;
};

template <class F, class V>
V one_sided_extend(const OneSidedProblem<F, V>& problem, const F& f)
{
    std::vector<V> values;
    for (const auto& b : problem.upper_candidates(f)) {
        if (problem.in_kernel(b) && problem.order.leq(f, b)) {
            values.push_back(problem.phi(b));
        }
    }
    if (values.empty()) {
        throw NotInKStar(problem.name + ": no upper approximant in the kernel");
    }
    return finite_inf(std::span<const V>(values), problem.values);
}

// Subsets under inclusion, kernel = closed sets, phi = identity.
OneSidedProblem<ElementSet, ElementSet> closure_problem(const ClosureSystem& system);

// Continuation on kernel elements and isotonicity under inclusion, over
// every closed set and every pair of sets (seeded samples on large carriers).
LawReport one_sided_laws(const ClosureSystem& system, std::size_t samples, std::uint64_t seed);

class SetRing {
public:
    // Contains the empty set, closed under union and difference; |Omega| <= 5.
    SetRing(std::size_t omega, std::vector<Subset> members, std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t omega() const { return omega_; }
    [[nodiscard]] const std::vector<Subset>& members() const { return members_; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] bool contains(Subset s) const;
    [[nodiscard]] Subset cover() const;
    [[nodiscard]] std::string show(Subset s) const;

private:
    std::size_t omega_ = 0;
    std::vector<Subset> members_;
    std::vector<std::string> labels_;
};

LawReport check_ring_axioms(std::size_t omega, const std::vector<Subset>& members);

class PreMeasure {
public:
    // mu(empty) = 0 and finite additivity on disjoint members; DomainError otherwise.
    PreMeasure(SetRing ring, std::map<Subset, ExtRational> values);
    // Skips the additivity check (for exercising downstream verification).
    static PreMeasure unchecked(SetRing ring, std::map<Subset, ExtRational> values);

    [[nodiscard]] const SetRing& ring() const { return ring_; }
    [[nodiscard]] const ExtRational& operator()(Subset s) const;

private:
    PreMeasure(SetRing ring, std::map<Subset, ExtRational> values, bool check);
    SetRing ring_;
    std::map<Subset, ExtRational> values_;
};

// Finite sequences of subsets (trailing empties implicit), ordered by union
// containment; kernel = pairwise disjoint ring members; phi = sum of mu.
OneSidedProblem<std::vector<Subset>, ExtRational> premeasure_problem(const PreMeasure& pre);

// Pairwise disjoint families of nonempty ring members.
std::vector<std::vector<Subset>> disjoint_ring_families(const SetRing& ring);

// mu*(S) = phi^*((S, {}, {}, ...)). NoCover if the ring does not cover Omega.
ExtRational outer_measure(const PreMeasure& pre, Subset s);

// Null set, monotonicity, finite subadditivity and continuation of mu, over
// every subset of Omega.
LawReport outer_measure_laws(const PreMeasure& pre);

// For disjoint families f, g with union(f) within union(g): sum mu(f) <= sum mu(g).
LawReport premeasure_isotonicity(const PreMeasure& pre);

struct RestrictedMeasure {
    std::vector<Subset> sigma_algebra;
    std::map<Subset, ExtRational> measure;
};

// The sigma-algebra generated by the ring with mu* tabulated on it, checked
// additive on every disjoint pair (AdditivityViolation otherwise).
RestrictedMeasure caratheodory_restrict(const PreMeasure& pre);

}  // namespace ordclose

#endif
