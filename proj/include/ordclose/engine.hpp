#ifndef ORDCLOSE_ENGINE_HPP
#define ORDCLOSE_ENGINE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordclose/law_report.hpp"
#include "ordclose/order.hpp"
#include "ordclose/rational.hpp"

namespace ordclose {

// Two-sided isotonic extension. Given a preorder on candidates L, a complete
// value order M, a kernel K of candidates and an isotonic phi: K -> M, the
// engine brackets
//
//     phi_*(f) = sup { phi(a) | a in K, a <= f }
//     phi^*(f) = inf { phi(b) | b in K, f <= b }
//
// by the best values seen over a stream of kernel witnesses a_k <= f <= b_k.
// Every enclosure it returns is sound; convergence depends on the instance
// supplying exhaustive witness streams.

template <class F, class V>
struct ExtensionProblem {
    std::string name;
    PreorderRel<F> candidate_order;
    ValueOrder<V> value_order;
    std::function<bool(const F&)> kernel_member;
    IsotonicMap<F, V> phi;
};

// Instance-level proof that phi_*(f) and phi^*(f) are at least `width` apart.
struct GapCertificate {
    Rational width;
    std::string reason;
};

template <class F>
struct ApproximantGenerator {
    std::function<std::optional<F>(const F&, std::size_t)> next_lower;
    std::function<std::optional<F>(const F&, std::size_t)> next_upper;
    // Optional. Consulted after step k; must only answer when the gap is
    // certified for the instance, never on mere non-convergence.
    std::function<std::optional<GapCertificate>(const F&, std::size_t)> gap_certificate;
    // When false the engine skips re-checking candidate_order on witnesses
    // (for instances whose preorder is only semi-decidable).
    bool verify_witnesses = true;
};

enum class ExtensionStatus { converged, gap_at_least, budget_exhausted, not_k_bounded };

std::string to_string(ExtensionStatus status);

template <class V>
struct ExtensionOutcome {
    ExtensionStatus status = ExtensionStatus::budget_exhausted;
    std::optional<Enclosure<V>> enclosure;
    std::optional<Rational> gap;
    std::size_t iterations = 0;
    std::string note;

    [[nodiscard]] bool converged() const { return status == ExtensionStatus::converged; }
};

template <class V>
struct RefineResult {
    std::optional<V> best_lower;
    std::optional<V> best_upper;
    std::size_t iterations = 0;
};

namespace detail {

template <class V>
void improve_lower(std::optional<V>& best, const V& candidate, const ValueOrder<V>& order)
{
    if (!best) {
        best = candidate;
        return;
    }
    if (order.join) {
        if (auto j = order.join(*best, candidate)) {
            best = std::move(*j);
            return;
        }
    }
    if (order.leq(*best, candidate)) {
        best = candidate;
    }
}

template <class V>
void improve_upper(std::optional<V>& best, const V& candidate, const ValueOrder<V>& order)
{
    if (!best) {
        best = candidate;
        return;
    }
    if (order.meet) {
        if (auto m = order.meet(*best, candidate)) {
            best = std::move(*m);
            return;
        }
    }
    if (order.leq(candidate, *best)) {
        best = candidate;
    }
}

template <class F, class V>
class Refiner {
public:
    Refiner(const ExtensionProblem<F, V>& problem, const ApproximantGenerator<F>& gen, const F& f)
        : problem_(problem), gen_(gen), f_(f)
    {
    }

    // Seeds the bounds with phi(f) itself when f is a kernel member.
    bool seed_from_kernel()
    {
        if (!problem_.kernel_member(f_)) {
            return false;
        }
        const auto value = problem_.phi.evaluate(f_);
        improve_lower(result_.best_lower, value.lower(), problem_.value_order);
        improve_upper(result_.best_upper, value.upper(), problem_.value_order);
        return true;
    }

    void step(std::size_t k)
    {
        ++result_.iterations;
        std::optional<Enclosure<V>> lower_value;
        if (gen_.next_lower) {
            if (auto a = gen_.next_lower(f_, k)) {
                check_witness(*a, true, k);
                lower_value = problem_.phi.evaluate(*a);
                improve_lower(result_.best_lower, lower_value->lower(), problem_.value_order);
            }
        }
        if (gen_.next_upper) {
            if (auto b = gen_.next_upper(f_, k)) {
                check_witness(*b, false, k);
                const auto upper_value = problem_.phi.evaluate(*b);
                if (lower_value && !problem_.value_order.leq(lower_value->lower(), upper_value.upper())) {
                    throw ContractViolation(problem_.name + ": phi(a_k) > phi(b_k) at step " + std::to_string(k) +
                                            "; generator or phi is not isotonic");
                }
                improve_upper(result_.best_upper, upper_value.upper(), problem_.value_order);
            }
        }
        if (result_.best_lower && result_.best_upper &&
            !problem_.value_order.leq(*result_.best_lower, *result_.best_upper)) {
            throw ContractViolation(problem_.name + ": best lower bound exceeds best upper bound at step " +
                                    std::to_string(k));
        }
    }

    [[nodiscard]] const RefineResult<V>& result() const { return result_; }

    [[nodiscard]] bool bounded() const { return result_.best_lower && result_.best_upper; }

    [[nodiscard]] Enclosure<V> enclosure() const
    {
        return Enclosure<V>(*result_.best_lower, *result_.best_upper, problem_.value_order.rel);
    }

private:
    void check_witness(const F& w, bool is_lower, std::size_t k) const
    {
        const char* side = is_lower ? "lower" : "upper";
        if (!problem_.kernel_member(w)) {
            throw ContractViolation(problem_.name + ": " + side + " approximant at step " + std::to_string(k) +
                                    " is not a kernel member");
        }
        if (!gen_.verify_witnesses) {
            return;
        }
        const bool ok = is_lower ? problem_.candidate_order.leq(w, f_) : problem_.candidate_order.leq(f_, w);
        if (!ok) {
            throw ContractViolation(problem_.name + ": " + side + " approximant at step " + std::to_string(k) +
                                    " does not bound f in " + problem_.candidate_order.name);
        }
    }

    const ExtensionProblem<F, V>& problem_;
    const ApproximantGenerator<F>& gen_;
    const F& f_;
    RefineResult<V> result_;
};

}  // namespace detail

// Runs `budget` generator steps and returns the best bounds seen:
// best_lower <= phi_*(f) and phi^*(f) <= best_upper.
template <class F, class V>
RefineResult<V> refine_bounds(const ExtensionProblem<F, V>& problem, const ApproximantGenerator<F>& gen, const F& f,
                              std::size_t budget)
{
    detail::Refiner<F, V> refiner(problem, gen, f);
    refiner.seed_from_kernel();
    for (std::size_t k = 0; k < budget; ++k) {
        refiner.step(k);
    }
    return refiner.result();
}

template <class V>
bool within_tolerance(const ValueOrder<V>& order, const Enclosure<V>& e, const std::optional<Rational>& tol)
{
    if (order.width && tol) {
        return order.width(e.lower(), e.upper()) <= *tol;
    }
    return order.equivalent(e.lower(), e.upper());
}

// Refines until the enclosure is within `tol` (exact coincidence for value
// orders without a difference), a gap is certified, or the budget runs out.
template <class F, class V>
ExtensionOutcome<V> extend(const ExtensionProblem<F, V>& problem, const ApproximantGenerator<F>& gen, const F& f,
                           std::optional<Rational> tol, std::size_t budget)
{
    if (tol && tol->sign() <= 0 && problem.value_order.width) {
        throw std::invalid_argument("extend: tolerance must be positive");
    }
    ExtensionOutcome<V> out;
    detail::Refiner<F, V> refiner(problem, gen, f);
    if (refiner.seed_from_kernel()) {
        out.iterations = 1;
        const auto e = refiner.enclosure();
        if (within_tolerance(problem.value_order, e, tol)) {
            out.status = ExtensionStatus::converged;
            out.enclosure = e;
            out.note = "kernel element";
            return out;
        }
    }
    for (std::size_t k = 0; k < budget; ++k) {
        refiner.step(k);
        out.iterations = refiner.result().iterations;
        if (!refiner.bounded()) {
            continue;
        }
        const auto e = refiner.enclosure();
        if (within_tolerance(problem.value_order, e, tol)) {
            out.status = ExtensionStatus::converged;
            out.enclosure = e;
            return out;
        }
        if (gen.gap_certificate) {
            if (auto cert = gen.gap_certificate(f, k)) {
                if (cert->width.sign() <= 0) {
                    throw ContractViolation(problem.name + ": gap certificate with nonpositive width");
                }
                if (problem.value_order.width && problem.value_order.width(e.lower(), e.upper()) < cert->width) {
                    throw ContractViolation(problem.name + ": certified gap " + cert->width.to_string() +
                                            " exceeds the enclosure width");
                }
                out.status = ExtensionStatus::gap_at_least;
                out.enclosure = e;
                out.gap = cert->width;
                out.note = cert->reason;
                return out;
            }
        }
    }
    if (!refiner.bounded()) {
        out.status = ExtensionStatus::not_k_bounded;
        out.note = !refiner.result().best_lower ? "no lower kernel approximant found"
                                                : "no upper kernel approximant found";
        return out;
    }
    out.status = ExtensionStatus::budget_exhausted;
    out.enclosure = refiner.enclosure();
    return out;
}

// On kernel members extend must return phi(f) itself: both endpoints equal
// phi(f) for exact maps, or bracket it within tol otherwise.
template <class F, class V>
LawReport continuation_identity_check(const ExtensionProblem<F, V>& problem, const ApproximantGenerator<F>& gen,
                                      std::span<const F> kernel_samples, std::optional<Rational> tol,
                                      std::size_t budget, const std::function<std::string(const F&)>& show = {})
{
    LawReport report;
    report.suite = "continuation:" + problem.name;
    for (std::size_t i = 0; i < kernel_samples.size(); ++i) {
        const F& f = kernel_samples[i];
        ++report.cases;
        const std::string who = detail::describe(show, f, i);
        if (!problem.kernel_member(f)) {
            report.add_violation("precondition", who, "kernel member", "not in K");
            continue;
        }
        const auto phi = problem.phi.evaluate(f);
        const auto out = extend(problem, gen, f, tol, budget);
        if (!out.converged() || !out.enclosure) {
            report.add_violation("continuation", who, "converged", to_string(out.status));
            continue;
        }
        const auto& e = *out.enclosure;
        const auto& vo = problem.value_order;
        const bool exact_phi = vo.equivalent(phi.lower(), phi.upper());
        bool ok = false;
        if (exact_phi) {
            ok = vo.equivalent(e.lower(), phi.lower()) && vo.equivalent(e.upper(), phi.upper());
        } else {
            ok = vo.leq(e.lower(), phi.upper()) && vo.leq(phi.lower(), e.upper());
        }
        if (!ok) {
            report.add_violation("continuation", who, "enclosure equal to phi(f)", "mismatch");
        }
    }
    return report;
}

// For pairs f <= g, the enclosure-level form of phi^*(f) <= phi^*(g):
// lower(f) <= upper(g). Inconclusive extends are counted as skipped.
template <class F, class V>
LawReport isotonicity_check(const ExtensionProblem<F, V>& problem, const ApproximantGenerator<F>& gen,
                            std::span<const std::pair<F, F>> pairs, std::optional<Rational> tol, std::size_t budget)
{
    LawReport report;
    report.suite = "isotonicity:" + problem.name;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [f, g] = pairs[i];
        if (!problem.candidate_order.leq(f, g)) {
            report.add_violation("precondition", "pair #" + std::to_string(i), "f <= g", "not comparable");
            continue;
        }
        const auto ef = extend(problem, gen, f, tol, budget);
        const auto eg = extend(problem, gen, g, tol, budget);
        if (!ef.converged() || !eg.converged()) {
            ++report.skipped;
            continue;
        }
        ++report.cases;
        if (!problem.value_order.leq(ef.enclosure->lower(), eg.enclosure->upper())) {
            report.add_violation("isotone", "pair #" + std::to_string(i), "lower(f) <= upper(g)", "violated");
        }
    }
    return report;
}

}  // namespace ordclose

#endif
