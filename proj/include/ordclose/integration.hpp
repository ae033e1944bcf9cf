#ifndef ORDCLOSE_INTEGRATION_HPP
#define ORDCLOSE_INTEGRATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordclose/engine.hpp"
#include "ordclose/law_report.hpp"
#include "ordclose/polynomial.hpp"
#include "ordclose/rational.hpp"

namespace ordclose {

class DivergentSeries : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Riemann integration over an interval [a, b]
// ---------------------------------------------------------------------------

// Step function on [x_0, x_m]: value v_i on the left-closed piece
// [x_{i-1}, x_i), the last piece closed. Equal consecutive breakpoints give a
// single-point piece, which has length zero.
class StepFunction1D {
public:
    StepFunction1D(std::vector<Rational> breakpoints, std::vector<Rational> values);
    static StepFunction1D constant(const Rational& lo, const Rational& hi, const Rational& value);

    [[nodiscard]] const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    [[nodiscard]] const std::vector<Rational>& values() const { return values_; }
    [[nodiscard]] std::size_t pieces() const { return values_.size(); }
    [[nodiscard]] const Rational& lo() const { return breakpoints_.front(); }
    [[nodiscard]] const Rational& hi() const { return breakpoints_.back(); }

    [[nodiscard]] Rational operator()(const Rational& x) const;
    // Hull of the values taken on the closed box [l, r].
    [[nodiscard]] RationalEnclosure range(const Rational& l, const Rational& r) const;

    friend StepFunction1D operator+(const StepFunction1D& a, const StepFunction1D& b);
    friend StepFunction1D operator*(const Rational& s, const StepFunction1D& a);
    friend bool operator==(const StepFunction1D&, const StepFunction1D&) = default;

private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

// Sum of v_i * (x_i - x_{i-1}).
Rational step_integral(const StepFunction1D& s);

// Sound bound of { f(x) | x in [l, r] }. `oscillation_floor`, when set,
// certifies that on every nondegenerate box the true range has width at
// least that value (used to certify non-integrability).
struct RangeOracle {
    std::string name;
    std::function<RationalEnclosure(const Rational&, const Rational&)> range;
    std::optional<Rational> oscillation_floor;
};

RangeOracle identity_oracle();
RangeOracle square_oracle();  // exact range of x^2
RangeOracle constant_oracle(const Rational& c);
RangeOracle polynomial_oracle(const Polynomial& p);
RangeOracle step_oracle(const StepFunction1D& s);
RangeOracle dirichlet_oracle();  // indicator of the rationals
// range = [f(mid) - c*w/2, f(mid) + c*w/2] for a c-Lipschitz f.
RangeOracle lipschitz_oracle(std::string name, std::function<Rational(const Rational&)> eval, const Rational& c);

// A candidate f in L: a function on [lo, hi] known through a range oracle,
// optionally with an exact step-function or polynomial form.
struct Integrand1D {
    std::string name;
    Rational lo;
    Rational hi;
    RangeOracle oracle;
    std::optional<StepFunction1D> step;
    std::optional<Polynomial> poly;

    static Integrand1D from_step(std::string name, StepFunction1D s);
    static Integrand1D from_polynomial(std::string name, const Rational& lo, const Rational& hi, Polynomial p);
    static Integrand1D from_oracle(std::string name, const Rational& lo, const Rational& hi, RangeOracle oracle);
};

Integrand1D operator+(const Integrand1D& f, const Integrand1D& g);
Integrand1D operator-(const Integrand1D& f);
Integrand1D operator*(const Rational& scale, const Integrand1D& f);

// Pointwise f <= g. Decided exactly for step functions; for other pairs a
// sufficient check through the oracles, so `false` may mean "unknown".
bool pointwise_leq(const Integrand1D& f, const Integrand1D& g);

ExtensionProblem<Integrand1D, Rational> riemann_problem();
// Level k: the uniform 2^k partition with box-range lower/upper values.
ApproximantGenerator<Integrand1D> darboux_generator();

// Largest refinement level whose cumulative oracle calls fit in `budget`.
std::size_t darboux_levels(std::size_t budget);

// `budget` counts oracle evaluations summed over refinement levels.
ExtensionOutcome<Rational> darboux_extend(const Integrand1D& f, const Rational& tol, std::size_t budget = 1000000);
ExtensionOutcome<Rational> darboux_extend(const RangeOracle& oracle, const Rational& lo, const Rational& hi,
                                          const Rational& tol, std::size_t budget = 1000000);

// ---------------------------------------------------------------------------
// Integration on countable atomic measure spaces
// ---------------------------------------------------------------------------

// Finite spaces index atoms 0..m-1 with ExtRational weights. Countable spaces
// index atoms 1, 2, 3, ... with rational weights and a bound on tail mass.
class AtomicMeasureSpace {
public:
    static AtomicMeasureSpace finite(std::vector<ExtRational> weights, std::vector<std::string> labels = {});
    // mu({n}) = ratio^n for n >= 1, 0 < ratio < 1; tail mass is exact.
    static AtomicMeasureSpace geometric(const Rational& ratio);
    static AtomicMeasureSpace countable(std::string name, std::function<Rational(std::size_t)> weight,
                                        std::function<std::optional<Rational>(std::size_t)> tail_bound,
                                        bool tail_exact = false);

    [[nodiscard]] bool is_finite() const { return !countable_; }
    [[nodiscard]] std::size_t size() const { return finite_weights_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] ExtRational weight(std::size_t atom) const;
    // Bound on the mass of atoms >= n (countable spaces); nullopt if infinite.
    [[nodiscard]] std::optional<Rational> tail_bound(std::size_t n) const;
    [[nodiscard]] bool tail_exact() const { return tail_exact_; }
    [[nodiscard]] std::size_t first_atom() const { return countable_ ? 1 : 0; }

private:
    std::string name_;
    bool countable_ = false;
    std::vector<ExtRational> finite_weights_;
    std::vector<std::string> labels_;
    std::function<Rational(std::size_t)> weight_;
    std::function<std::optional<Rational>(std::size_t)> tail_bound_;
    bool tail_exact_ = false;
};

// f: atom -> Q. On countable spaces `abs_bound_from(N)` bounds |f(n)| for
// n >= N (nullopt: none known), and `eventual_constant` = (N, c) states
// f(n) = c for all n >= N, which makes f an exactly integrable step function.
struct AtomicFunction {
    std::string name;
    std::function<Rational(std::size_t)> value;
    std::function<std::optional<Rational>(std::size_t)> abs_bound_from;
    std::optional<std::pair<std::size_t, Rational>> eventual_constant;

    static AtomicFunction from_values(std::string name, std::vector<Rational> values);
};

AtomicFunction atomic_constant(const Rational& c);
AtomicFunction atomic_reciprocal();    // 1/n
AtomicFunction atomic_alternating();   // (-1)^n
// base^n; bounded (and so integrable on finite-mass spaces) only for |base| <= 1.
AtomicFunction atomic_exponential(const Rational& base);

AtomicFunction operator+(const AtomicFunction& f, const AtomicFunction& g);
AtomicFunction operator-(const AtomicFunction& f);
AtomicFunction operator*(const Rational& scale, const AtomicFunction& f);

// mu-almost-everywhere f <= g: exact on finite spaces, sufficient on countable ones.
bool ae_leq(const AtomicFunction& f, const AtomicFunction& g, const AtomicMeasureSpace& space);
PreorderRel<AtomicFunction> ae_order(const AtomicMeasureSpace& space);

// Sum of f(x) mu({x}). Exact on finite spaces; on countable spaces the sum
// up to atom N-1 plus +-(abs bound) * tail_bound(N).
RationalEnclosure mu_step_integral(const AtomicFunction& f, const AtomicMeasureSpace& space,
                                   std::size_t truncation = 64);

ExtensionProblem<AtomicFunction, Rational> lebesgue_problem(const AtomicMeasureSpace& space);
// Step k: f on atoms below 2^k, -+ the tail bound beyond.
ApproximantGenerator<AtomicFunction> truncation_generator(const AtomicMeasureSpace& space);

ExtensionOutcome<Rational> lebesgue_extend(const AtomicFunction& f, const AtomicMeasureSpace& space,
                                           const Rational& tol, std::size_t budget = 24);

struct VectorIntegral {
    std::vector<RationalEnclosure> components;
    std::vector<ExtensionStatus> statuses;
    LawReport duality;
};

// Integral of f: atoms -> Q^d, componentwise, with a duality check against
// `functionals` seeded random rational functionals alpha:
// alpha(v-enclosure) must intersect the extension of alpha o f.
VectorIntegral vector_integral(const std::vector<AtomicFunction>& coordinates, const AtomicMeasureSpace& space,
                               const Rational& tol, std::uint64_t seed = 0, std::size_t functionals = 8,
                               std::size_t budget = 24);

}  // namespace ordclose

#endif
