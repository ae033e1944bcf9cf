#ifndef ORDCLOSE_ALGEBRA_PROPS_HPP
#define ORDCLOSE_ALGEBRA_PROPS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordclose/engine.hpp"
#include "ordclose/integration.hpp"
#include "ordclose/law_report.hpp"
#include "ordclose/limits_local.hpp"
#include "ordclose/order.hpp"
#include "ordclose/random.hpp"

namespace ordclose {

// A group (F, +) with a preorder, checked for compatibility
//     a <= b and c <= d  =>  a + c <= b + d.
// `equal`, when set, enables checks of the group laws themselves.
template <class F>
struct OrderedGroupWitness {
    std::string name;
    std::function<F(const F&, const F&)> add;
    std::function<F(const F&)> neg;
    F zero;
    PreorderRel<F> order;
    std::function<bool(const F&, const F&)> equal;
};

// Adds positive rational scaling: a <= b and lambda > 0  =>  lambda*a <= lambda*b.
template <class F>
struct OrderedVectorWitness : OrderedGroupWitness<F> {
    std::function<F(const Rational&, const F&)> scale;
    std::vector<Rational> scalars{Rational(1, 3), Rational(1), Rational(5, 2)};
};

struct CompatibilityOptions {
    // Exhaustive over quadruples when samples^4 is at most this many.
    std::size_t exhaustive_limit = 50000;
    std::size_t random_quadruples = 4000;
    std::uint64_t seed = 0;
};

namespace detail {

template <class F>
std::string tuple_of(const std::function<std::string(const F&)>& show, std::span<const F> samples,
                     std::initializer_list<std::size_t> idx)
{
    std::string out = "(";
    bool first = true;
    for (std::size_t i : idx) {
        out += (first ? "" : ",") + describe(show, samples[i], i);
        first = false;
    }
    return out + ")";
}

template <class F>
void check_group_part(const OrderedGroupWitness<F>& w, std::span<const F> samples,
                      const std::function<std::string(const F&)>& show, const CompatibilityOptions& options,
                      LawReport& report)
{
    const std::size_t n = samples.size();
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            leq[i][j] = w.order.leq(samples[i], samples[j]) ? 1 : 0;
        }
    }
    auto quad = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        if (leq[a][b] == 0 || leq[c][d] == 0) {
            return;
        }
        ++report.cases;
        if (!w.order.leq(w.add(samples[a], samples[c]), w.add(samples[b], samples[d]))) {
            report.add_violation("compatible", tuple_of(show, samples, {a, b, c, d}), "a+c <= b+d", "not leq");
        }
    };
    if (n * n * n * n <= options.exhaustive_limit) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    for (std::size_t d = 0; d < n; ++d) {
                        quad(a, b, c, d);
                    }
                }
            }
        }
    } else {
        SeededRng rng(options.seed);
        for (std::size_t t = 0; t < options.random_quadruples; ++t) {
            quad(rng.index(n), rng.index(n), rng.index(n), rng.index(n));
        }
    }
    if (!w.equal) {
        return;
    }
    for (std::size_t a = 0; a < n; ++a) {
        ++report.cases;
        if (!w.equal(w.add(samples[a], w.zero), samples[a])) {
            report.add_violation("identity", tuple_of(show, samples, {a}), "a+0 = a", "differs");
        }
        if (!w.equal(w.add(samples[a], w.neg(samples[a])), w.zero)) {
            report.add_violation("inverse", tuple_of(show, samples, {a}), "a+(-a) = 0", "differs");
        }
    }
    SeededRng rng(options.seed + 1);
    for (std::size_t t = 0; t < std::min<std::size_t>(n * n * n, 500); ++t) {
        const std::size_t a = rng.index(n);
        const std::size_t b = rng.index(n);
        const std::size_t c = rng.index(n);
        ++report.cases;
        if (!w.equal(w.add(w.add(samples[a], samples[b]), samples[c]),
                     w.add(samples[a], w.add(samples[b], samples[c])))) {
            report.add_violation("associative", tuple_of(show, samples, {a, b, c}), "(a+b)+c = a+(b+c)", "differs");
        }
    }
}

}  // namespace detail

template <class F>
LawReport check_compatibility(const OrderedGroupWitness<F>& witness, std::span<const F> samples,
                              const std::function<std::string(const F&)>& show = {}, CompatibilityOptions options = {})
{
    if (samples.empty()) {
        throw std::invalid_argument("check_compatibility: no samples");
    }
    LawReport report;
    report.suite = "compatibility:" + witness.name;
    report.seed = options.seed;
    detail::check_group_part(witness, samples, show, options, report);
    return report;
}

template <class F>
LawReport check_compatibility(const OrderedVectorWitness<F>& witness, std::span<const F> samples,
                              const std::function<std::string(const F&)>& show = {}, CompatibilityOptions options = {})
{
    LawReport report = check_compatibility(static_cast<const OrderedGroupWitness<F>&>(witness), samples, show, options);
    for (std::size_t a = 0; a < samples.size(); ++a) {
        for (std::size_t b = 0; b < samples.size(); ++b) {
            if (!witness.order.leq(samples[a], samples[b])) {
                continue;
            }
            for (const auto& lambda : witness.scalars) {
                if (lambda.sign() <= 0) {
                    continue;
                }
                ++report.cases;
                if (!witness.order.leq(witness.scale(lambda, samples[a]), witness.scale(lambda, samples[b]))) {
                    report.add_violation("scaling",
                                         detail::tuple_of(show, samples, {a, b}) + " lambda=" + lambda.to_string(),
                                         "lambda*a <= lambda*b", "not leq");
                }
            }
        }
    }
    return report;
}

// An instance of the engine packaged for the homomorphism suites: its
// candidate operations, a seeded sampler of closure elements, and extend.
template <class F>
struct LawInstance {
    std::string name;
    Rational tol{1, 100};
    PreorderRel<F> order;
    std::function<F(const F&, const F&)> add;
    std::function<F(const F&)> neg;
    std::function<F(const Rational&, const F&)> scale;
    std::function<F(const F&, const F&)> mul;  // only for ring instances
    F zero;
    std::function<F(SeededRng&)> sample;
    std::function<F(SeededRng&)> sample_kernel;
    std::function<ExtensionOutcome<Rational>(const F&)> extend;
    std::function<std::string(const F&)> show;
};

namespace detail {

inline Rational midpoint_gap(const RationalEnclosure& a, const RationalEnclosure& b)
{
    return (midpoint(a) - midpoint(b)).abs();
}

template <class F>
std::string show_pair(const LawInstance<F>& inst, const F& f, const F& g)
{
    const auto s = [&](const F& x) { return inst.show ? inst.show(x) : std::string("?"); };
    return "(" + s(f) + ", " + s(g) + ")";
}

inline Rational random_positive_scalar(SeededRng& rng)
{
    return {rng.integer(1, 8), rng.integer(1, 4)};
}

}  // namespace detail

// phi^*(f + g) = phi^*(f) + phi^*(g) and phi^*(-f) = -phi^*(f) at the
// enclosure level: intersection, and midpoints within 2*tol. The first pair
// uses g = zero.
template <class F>
LawReport additivity_suite(const LawInstance<F>& inst, std::size_t pairs, std::uint64_t seed)
{
    LawReport report;
    report.suite = "additivity:" + inst.name;
    report.seed = seed;
    SeededRng rng(seed);
    const Rational slack = Rational(2) * inst.tol;
    for (std::size_t i = 0; i < pairs; ++i) {
        const F f = inst.sample(rng);
        const F g = i == 0 ? inst.zero : inst.sample(rng);
        const auto ef = inst.extend(f);
        const auto eg = inst.extend(g);
        const auto efg = inst.extend(inst.add(f, g));
        const auto eneg = inst.extend(inst.neg(f));
        if (!ef.converged() || !eg.converged() || !efg.converged() || !eneg.converged()) {
            ++report.skipped;
            continue;
        }
        const auto sum = *ef.enclosure + *eg.enclosure;
        ++report.cases;
        if (!intersects(*efg.enclosure, sum) || detail::midpoint_gap(*efg.enclosure, sum) > slack) {
            report.add_violation("additive", detail::show_pair(inst, f, g), to_string(sum), to_string(*efg.enclosure));
        }
        ++report.cases;
        if (!intersects(*eneg.enclosure, -*ef.enclosure)) {
            report.add_violation("negation", detail::show_pair(inst, f, f), to_string(-*ef.enclosure),
                                 to_string(*eneg.enclosure));
        }
    }
    return report;
}

// phi^*(lambda f) = lambda phi^*(f) for positive rational lambda; lambda = 1
// (the first case) must reproduce the enclosure exactly.
template <class F>
LawReport scaling_suite(const LawInstance<F>& inst, std::size_t pairs, std::uint64_t seed)
{
    LawReport report;
    report.suite = "scaling:" + inst.name;
    report.seed = seed;
    SeededRng rng(seed);
    const Rational slack = Rational(2) * inst.tol;
    for (std::size_t i = 0; i < pairs; ++i) {
        const Rational lambda = i == 0 ? Rational(1) : detail::random_positive_scalar(rng);
        const F f = inst.sample(rng);
        const auto ef = inst.extend(f);
        const auto el = inst.extend(inst.scale(lambda, f));
        if (!ef.converged() || !el.converged()) {
            ++report.skipped;
            continue;
        }
        ++report.cases;
        const auto expected = lambda * *ef.enclosure;
        const std::string who = "lambda=" + lambda.to_string() + " " + detail::show_pair(inst, f, f);
        if (lambda == Rational(1)) {
            if (!(*el.enclosure == *ef.enclosure)) {
                report.add_violation("unit scaling", who, to_string(*ef.enclosure), to_string(*el.enclosure));
            }
            continue;
        }
        if (!intersects(*el.enclosure, expected) || detail::midpoint_gap(*el.enclosure, expected) > lambda * slack) {
            report.add_violation("homogeneous", who, to_string(expected), to_string(*el.enclosure));
        }
    }
    return report;
}

// On kernel elements phi^*(-f) = -phi^*(f) holds exactly.
template <class F>
LawReport negation_suite(const LawInstance<F>& inst, std::size_t samples, std::uint64_t seed)
{
    LawReport report;
    report.suite = "negation:" + inst.name;
    report.seed = seed;
    SeededRng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const F f = inst.sample_kernel(rng);
        const auto ef = inst.extend(f);
        const auto en = inst.extend(inst.neg(f));
        if (!ef.converged() || !en.converged()) {
            ++report.skipped;
            continue;
        }
        ++report.cases;
        if (!(*en.enclosure == -*ef.enclosure)) {
            report.add_violation("negation", detail::show_pair(inst, f, f), to_string(-*ef.enclosure),
                                 to_string(*en.enclosure));
        }
    }
    return report;
}

// phi^*(f g) = phi^*(f) phi^*(g) at the enclosure level.
template <class F>
LawReport product_suite(const LawInstance<F>& inst, std::size_t pairs, std::uint64_t seed)
{
    if (!inst.mul) {
        throw DomainError("product suite: instance '" + inst.name + "' has no ring structure");
    }
    LawReport report;
    report.suite = "product:" + inst.name;
    report.seed = seed;
    SeededRng rng(seed);
    for (std::size_t i = 0; i < pairs; ++i) {
        const F f = inst.sample(rng);
        const F g = inst.sample(rng);
        const auto ef = inst.extend(f);
        const auto eg = inst.extend(g);
        const auto efg = inst.extend(inst.mul(f, g));
        if (!ef.converged() || !eg.converged() || !efg.converged()) {
            ++report.skipped;
            continue;
        }
        ++report.cases;
        const auto expected = *ef.enclosure * *eg.enclosure;
        if (!intersects(*efg.enclosure, expected)) {
            report.add_violation("multiplicative", detail::show_pair(inst, f, g), to_string(expected),
                                 to_string(*efg.enclosure));
        }
    }
    return report;
}

// inf(A + B) = inf A + inf B, sup(-A) = -inf A and inf(lambda A) = lambda inf A
// (lambda >= 0) on random finite rational sets.
LawReport infsup_suite(std::size_t sets, std::uint64_t seed);

LawInstance<Integrand1D> riemann_instance(const Rational& tol = Rational(1, 100));
LawInstance<TailedSequence> limits_instance(const Rational& tol = Rational(1, 1000000));
LawInstance<AtomicFunction> lebesgue_instance(const Rational& tol = Rational(1, 1000000));
LawInstance<LocalFunction> continuity_instance(const Rational& tol = Rational(1, 1000000));
LawInstance<LocalFunction> derivative_instance(const Rational& tol = Rational(1, 1000000));

// The candidate order of an instance with its pointwise operations, as a
// vector witness over seeded samples.
LawReport instance_compatibility(const std::string& instance, std::size_t samples, std::uint64_t seed);

std::vector<std::string> law_suite_names();
std::vector<std::string> law_instance_names();

// Dispatch by name: suite in law_suite_names(), instance in
// law_instance_names() (ignored by "infsup"). Throws DomainError on unknown
// names or unsupported combinations.
LawReport run_law_suite(const std::string& suite, const std::string& instance, std::uint64_t seed,
                        std::size_t cases = 200);

}  // namespace ordclose

#endif
