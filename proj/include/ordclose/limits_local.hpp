#ifndef ORDCLOSE_LIMITS_LOCAL_HPP
#define ORDCLOSE_LIMITS_LOCAL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordclose/engine.hpp"
#include "ordclose/polynomial.hpp"
#include "ordclose/rational.hpp"

namespace ordclose {

// ---------------------------------------------------------------------------
// Sequences (nets over (N, <=), indices n >= 1)
// ---------------------------------------------------------------------------

// Closed form f(n) = branches[n mod p](n) for all n >= start, p = branches.size().
// Makes "finally <=" decidable between sequences that carry one.
struct SequenceForm {
    std::vector<RationalFunction> branches;
    std::size_t start = 1;
};

// `tail_range(N)` bounds { f(n) | n >= N } and is nested in N. `exact`
// states that both endpoints of every tail range are values taken for
// infinitely many n, which certifies liminf <= lower and limsup >= upper.
struct TailedSequence {
    std::string name;
    std::function<Rational(std::size_t)> eval;
    std::function<RationalEnclosure(std::size_t)> tail_range;
    bool exact = false;
    std::optional<Rational> constant;
    std::optional<SequenceForm> form;
};

TailedSequence constant_sequence(const Rational& c);
TailedSequence harmonic_sequence();           // 1/n
TailedSequence alternating_sequence();        // (-1)^n
TailedSequence damped_alternating_sequence(); // (-1)^n / n
TailedSequence geometric_sequence(const Rational& ratio);  // ratio^n, 0 <= ratio < 1
// c + 1/n for n >= start and `head` before it: equal tail to c + 1/n.
TailedSequence shifted_harmonic(const Rational& c, std::size_t start = 1, const Rational& head = Rational(0));

TailedSequence operator+(const TailedSequence& f, const TailedSequence& g);
TailedSequence operator*(const TailedSequence& f, const TailedSequence& g);
TailedSequence operator*(const Rational& scale, const TailedSequence& f);
TailedSequence operator-(const TailedSequence& f);

// f <=_fin g: exact when both carry closed forms, otherwise a sufficient
// check of a constant against the other side's tail ranges.
bool finally_leq(const TailedSequence& f, const TailedSequence& g);
PreorderRel<TailedSequence> finally_order();

ExtensionProblem<TailedSequence, Rational> limit_problem();
// Step k: constants at tail_range(2^k).lower / .upper.
ApproximantGenerator<TailedSequence> tail_generator();

ExtensionOutcome<Rational> net_limit(const TailedSequence& f, const Rational& tol, std::size_t budget = 64);

using Point = std::vector<Rational>;

struct Metric {
    std::string name;
    std::function<Rational(const Point&, const Point&)> dist;
    // Bound on dist(y, x) for y ranging over a box.
    std::function<RationalEnclosure(const std::vector<RationalEnclosure>&, const Point&)> box_range;
};

Metric max_metric();
Metric sum_metric();

enum class Verdict { confirmed, refuted, inconclusive };
std::string to_string(Verdict v);

struct MetricCheck {
    ExtensionOutcome<Rational> distance;
    Verdict verdict = Verdict::inconclusive;
};

// Limit of n -> (coords[0](n), ..., coords[d-1](n)) at x through the real
// net n -> dist(f(n), x): confirmed when that net converges with lower
// bound 0, refuted when its lower bound is positive.
MetricCheck metric_limit_check(const std::vector<TailedSequence>& coords, const Point& x, const Metric& metric,
                               const Rational& tol, std::size_t budget = 64);

// ---------------------------------------------------------------------------
// Functions near a point p
// ---------------------------------------------------------------------------

// f(p + t) = left(t) for t < 0, right(t) for t > 0, and f(p) = at_point.
struct PolyGerm {
    Polynomial left;
    Rational at_point;
    Polynomial right;
};

// `local_range(d)` bounds f on [p - d, p + d] and is nested in d. `exact`
// states that both endpoints are values taken in every neighbourhood of p.
// The quotient fields describe q(x) = (f(x) - f(p)) / (x - p) on punctured
// balls, used for derivatives.
struct LocalFunction {
    std::string name;
    Rational point;
    std::function<Rational(const Rational&)> eval;
    std::function<RationalEnclosure(const Rational&)> local_range;
    bool exact = false;
    std::optional<Rational> constant;
    std::optional<PolyGerm> germ;
    std::function<RationalEnclosure(const Rational&)> quotient_range;
    bool quotient_exact = false;
    // Lipschitz constant of q on punctured balls, as a smoothness hint.
    std::optional<Rational> quotient_lipschitz;

    static LocalFunction constant_function(const Rational& p, const Rational& c);
    static LocalFunction piecewise_polynomial(std::string name, const Rational& p, Polynomial left,
                                              const Rational& at_point, Polynomial right);
    // A polynomial in x, expanded around p.
    static LocalFunction polynomial(std::string name, const Rational& p, const Polynomial& in_x);
    // range = [f(p) - c*d, f(p) + c*d].
    static LocalFunction lipschitz(std::string name, const Rational& p, std::function<Rational(const Rational&)> eval,
                                   const Rational& c);
};

LocalFunction abs_function();   // |x| at 0
LocalFunction sign_function();  // sign at 0, sign(0) = 0

LocalFunction operator+(const LocalFunction& f, const LocalFunction& g);
LocalFunction operator*(const Rational& scale, const LocalFunction& f);
LocalFunction operator-(const LocalFunction& f);

// f <=_loc g near their common point (the point itself included unless
// punctured). Exact on polynomial germs, otherwise a sufficient check of a
// constant against local ranges.
bool locally_leq(const LocalFunction& f, const LocalFunction& g, bool punctured = false);
PreorderRel<LocalFunction> local_order(bool punctured = false);

// f <=_tang g: for every eps > 0, f <=_loc g + eps*|x - p|. Decided on
// polynomial germs; nullopt without germs.
std::optional<bool> tangentially_leq(const LocalFunction& f, const LocalFunction& g);

ExtensionProblem<LocalFunction, Rational> local_limit_problem(bool punctured);
// Step k: constants at local_range(delta0 / 2^k).lower / .upper.
ApproximantGenerator<LocalFunction> radius_generator(const Rational& delta0 = Rational(1));

ExtensionOutcome<Rational> continuity_at(const LocalFunction& f, const Rational& tol, std::size_t budget = 64,
                                         const Rational& delta0 = Rational(1));

// Maps into Q^d near p. `exact_distance` asserts that the distance ranges
// derived from local_box have endpoints taken in every neighbourhood of p.
struct LocalMap {
    std::string name;
    Rational point;
    std::function<Point(const Rational&)> eval;
    std::function<std::vector<RationalEnclosure>(const Rational&)> local_box;
    bool exact_distance = false;
};

// Continuity of f at p through x -> dist(f(x), f(p)): confirmed when that
// function converges, refuted on a certified gap.
MetricCheck metric_continuity_check(const LocalMap& f, const Metric& metric, const Rational& tol,
                                    std::size_t budget = 64);

// The quotient q(x) = f(x)/x near 0 as a punctured local function.
LocalFunction difference_quotient(const LocalFunction& f);

// Slope m with df_0 = m * id, from the limit of the difference quotient.
ExtensionOutcome<Rational> derivative_at_zero(const LocalFunction& f, const Rational& tol, std::size_t budget = 64,
                                              const Rational& delta0 = Rational(1));

}  // namespace ordclose

#endif
