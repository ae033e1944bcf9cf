#ifndef ORDCLOSE_ORDER_HPP
#define ORDCLOSE_ORDER_HPP

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordclose/law_report.hpp"
#include "ordclose/random.hpp"
#include "ordclose/rational.hpp"

namespace ordclose {

// Thrown when a finite inf/sup is requested in an order that has no meet
// (resp. join) for the given elements.
class NoMeet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (e.g. a nonpositive radicand).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a caller-supplied map, generator or certificate breaks its
// declared contract (e.g. a non-isotonic phi).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

template <class T>
struct PreorderRel {
    std::string name;
    std::function<bool(const T&, const T&)> leq;
    bool total = false;

    bool operator()(const T& a, const T& b) const { return leq(a, b); }
};

// Declared completeness class of a value order. Completeness is not
// decidable, so each value order states it and the engine trusts it.
enum class Completeness { complete, complete_from_below, none };

template <class V>
struct ValueOrder {
    PreorderRel<V> rel;
    Completeness completeness = Completeness::complete;
    // Binary meet/join; nullopt when the pair has none.
    std::function<std::optional<V>(const V&, const V&)> meet;
    std::function<std::optional<V>(const V&, const V&)> join;
    // upper - lower, when the order carries a difference. Empty means
    // convergence is exact coincidence.
    std::function<Rational(const V&, const V&)> width;

    [[nodiscard]] bool leq(const V& a, const V& b) const { return rel.leq(a, b); }
    [[nodiscard]] bool equivalent(const V& a, const V& b) const { return leq(a, b) && leq(b, a); }
};

template <std::totally_ordered V>
PreorderRel<V> natural_order(std::string name = "<=")
{
    return {std::move(name), [](const V& a, const V& b) { return a <= b; }, true};
}

template <std::totally_ordered V>
ValueOrder<V> total_value_order()
{
    ValueOrder<V> order;
    order.rel = natural_order<V>();
    order.meet = [](const V& a, const V& b) -> std::optional<V> { return b < a ? b : a; };
    order.join = [](const V& a, const V& b) -> std::optional<V> { return a < b ? b : a; };
    return order;
}

ValueOrder<Rational> rational_order();
ValueOrder<ExtRational> ext_rational_order();

// The order of equality only: every bounded set is a singleton.
template <std::equality_comparable V>
ValueOrder<V> equality_order()
{
    ValueOrder<V> order;
    order.rel = {"=", [](const V& a, const V& b) { return a == b; }, false};
    order.meet = [](const V& a, const V& b) -> std::optional<V> {
        if (a == b) {
            return a;
        }
        return std::nullopt;
    };
    order.join = order.meet;
    return order;
}

// Certified pair lower <= upper in a value order.
template <class V>
class Enclosure {
public:
    Enclosure(V lower, V upper)
        requires std::totally_ordered<V>
        : lower_(std::move(lower)), upper_(std::move(upper))
    {
        if (upper_ < lower_) {
            throw std::invalid_argument("enclosure with lower > upper");
        }
    }

    Enclosure(V lower, V upper, const PreorderRel<V>& order) : lower_(std::move(lower)), upper_(std::move(upper))
    {
        if (!order.leq(lower_, upper_)) {
            throw std::invalid_argument("enclosure with lower not <= upper in " + order.name);
        }
    }

    static Enclosure point(V value) { return Enclosure(value, value, PreorderRel<V>{"refl", [](const V&, const V&) { return true; }}); }

    [[nodiscard]] const V& lower() const { return lower_; }
    [[nodiscard]] const V& upper() const { return upper_; }

    friend bool operator==(const Enclosure&, const Enclosure&) = default;

private:
    V lower_;
    V upper_;
};

using RationalEnclosure = Enclosure<Rational>;

// Interval arithmetic on exact rational enclosures.
Rational width(const RationalEnclosure& e);
Rational midpoint(const RationalEnclosure& e);
bool contains(const RationalEnclosure& e, const Rational& x);
bool intersects(const RationalEnclosure& a, const RationalEnclosure& b);
RationalEnclosure hull(const RationalEnclosure& a, const RationalEnclosure& b);
RationalEnclosure operator+(const RationalEnclosure& a, const RationalEnclosure& b);
RationalEnclosure operator-(const RationalEnclosure& a, const RationalEnclosure& b);
RationalEnclosure operator-(const RationalEnclosure& a);
RationalEnclosure operator*(const RationalEnclosure& a, const RationalEnclosure& b);
RationalEnclosure operator*(const Rational& scale, const RationalEnclosure& a);
std::string to_string(const RationalEnclosure& e);

// The map phi: K -> M. `evaluate` returns a certified enclosure of phi(a);
// exact maps return a point enclosure.
template <class A, class B>
struct IsotonicMap {
    std::string name;
    std::function<bool(const A&)> domain;
    std::function<Enclosure<B>(const A&)> evaluate;
};

template <class V>
bool is_lower_bound(const V& m, std::span<const V> set, const PreorderRel<V>& rel)
{
    if (set.empty()) {
        throw std::invalid_argument("is_lower_bound: empty set");
    }
    for (const auto& a : set) {
        if (!rel.leq(m, a)) {
            return false;
        }
    }
    return true;
}

template <class V>
bool is_upper_bound(const V& m, std::span<const V> set, const PreorderRel<V>& rel)
{
    if (set.empty()) {
        throw std::invalid_argument("is_upper_bound: empty set");
    }
    for (const auto& a : set) {
        if (!rel.leq(a, m)) {
            return false;
        }
    }
    return true;
}

template <class V>
V finite_inf(std::span<const V> set, const ValueOrder<V>& order)
{
    if (set.empty()) {
        throw std::invalid_argument("finite_inf: empty set");
    }
    if (!order.meet) {
        throw NoMeet("order '" + order.rel.name + "' has no computable meet");
    }
    V result = set.front();
    for (std::size_t i = 1; i < set.size(); ++i) {
        auto m = order.meet(result, set[i]);
        if (!m) {
            throw NoMeet("no meet in order '" + order.rel.name + "'");
        }
        result = std::move(*m);
    }
    return result;
}

template <class V>
V finite_sup(std::span<const V> set, const ValueOrder<V>& order)
{
    if (set.empty()) {
        throw std::invalid_argument("finite_sup: empty set");
    }
    if (!order.join) {
        throw NoMeet("order '" + order.rel.name + "' has no computable join");
    }
    V result = set.front();
    for (std::size_t i = 1; i < set.size(); ++i) {
        auto j = order.join(result, set[i]);
        if (!j) {
            throw NoMeet("no join in order '" + order.rel.name + "'");
        }
        result = std::move(*j);
    }
    return result;
}

struct LawCheckOptions {
    // Exhaustive over all triples when samples^3 is at most this many.
    std::size_t exhaustive_limit = 200000;
    // Otherwise, this many seeded random triples.
    std::size_t random_triples = 2000;
    std::uint64_t seed = 0;
};

namespace detail {

template <class T>
std::string describe(const std::function<std::string(const T&)>& show, const T& value, std::size_t index)
{
    if (show) {
        return show(value);
    }
    return "#" + std::to_string(index);
}

}  // namespace detail

// Checks reflexivity on every sample and transitivity on triples of samples.
// Violations are reported with their witnesses, never thrown.
template <class T>
LawReport check_preorder_laws(const PreorderRel<T>& rel, std::span<const T> samples,
                              const std::function<std::string(const T&)>& show = {}, LawCheckOptions options = {})
{
    if (samples.empty()) {
        throw std::invalid_argument("check_preorder_laws: no samples");
    }
    LawReport report;
    report.suite = "preorder:" + rel.name;
    report.seed = options.seed;
    const std::size_t n = samples.size();

    for (std::size_t i = 0; i < n; ++i) {
        ++report.cases;
        if (!rel.leq(samples[i], samples[i])) {
            const auto w = detail::describe(show, samples[i], i);
            report.add_violation("reflexive", "(" + w + "," + w + ")", "leq", "not leq");
        }
    }

    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            leq[i][j] = rel.leq(samples[i], samples[j]) ? 1 : 0;
        }
    }
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
        ++report.cases;
        if (leq[a][b] != 0 && leq[b][c] != 0 && leq[a][c] == 0) {
            report.add_violation("transitive",
                                 "(" + detail::describe(show, samples[a], a) + "," + detail::describe(show, samples[b], b) +
                                     "," + detail::describe(show, samples[c], c) + ")",
                                 "leq(a,c)", "not leq");
        }
    };
    if (n * n * n <= options.exhaustive_limit) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    check(a, b, c);
                }
            }
        }
    } else {
        SeededRng rng(options.seed);
        for (std::size_t t = 0; t < options.random_triples; ++t) {
            check(rng.index(n), rng.index(n), rng.index(n));
        }
    }
    return report;
}

}  // namespace ordclose

#endif
