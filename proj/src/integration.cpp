#include "ordclose/integration.hpp"

#include <algorithm>
#include <memory>
#include <utility>

#include "ordclose/random.hpp"

namespace ordclose {

namespace {

RationalEnclosure point_or_hull(const std::optional<RationalEnclosure>& acc, const Rational& v)
{
    if (!acc) {
        return RationalEnclosure::point(v);
    }
    return hull(*acc, RationalEnclosure::point(v));
}

// Natural interval extension in Horner form; inclusion-isotone in the box.
RationalEnclosure horner_range(const Polynomial& p, const Rational& l, const Rational& r)
{
    if (p.is_zero()) {
        return RationalEnclosure::point(Rational(0));
    }
    const RationalEnclosure x(l, r);
    const auto& c = p.coeffs();
    RationalEnclosure acc = RationalEnclosure::point(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc = acc * x + RationalEnclosure::point(c[i]);
    }
    return acc;
}

// p >= 0 on [l, r]: range test, then all Taylor coefficients at l nonnegative,
// then bisection.
bool nonnegative_on(const Polynomial& p, const Rational& l, const Rational& r, int depth)
{
    if (p.is_zero()) {
        return true;
    }
    const auto range = p.range(l, r);
    if (range.lower().sign() >= 0) {
        return true;
    }
    if (range.upper().sign() < 0 || p(l).sign() < 0 || p(r).sign() < 0) {
        return false;
    }
    const auto shifted = p.shifted(l);
    if (std::all_of(shifted.coeffs().begin(), shifted.coeffs().end(), [](const Rational& c) { return c.sign() >= 0; })) {
        return true;
    }
    if (depth == 0) {
        return false;
    }
    const Rational mid = (l + r) / Rational(2);
    return nonnegative_on(p, l, mid, depth - 1) && nonnegative_on(p, mid, r, depth - 1);
}

// Each piece as a closed box (a single point for zero-length pieces).
template <class Visit>
bool all_piece_boxes(const StepFunction1D& s, Visit visit)
{
    const auto& b = s.breakpoints();
    for (std::size_t i = 0; i < s.pieces(); ++i) {
        const bool last = i + 1 == s.pieces();
        if (b[i] == b[i + 1] && !last) {
            continue;  // empty left-closed piece
        }
        if (!visit(b[i], b[i + 1], s.values()[i])) {
            return false;
        }
    }
    return true;
}

std::string rational_list(const std::vector<Rational>& values)
{
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i == 0 ? "" : ",") + values[i].to_string();
    }
    return out + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Step functions
// ---------------------------------------------------------------------------

StepFunction1D::StepFunction1D(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values))
{
    if (values_.empty() || breakpoints_.size() != values_.size() + 1) {
        throw DomainError("step function needs m + 1 breakpoints for m >= 1 values");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (breakpoints_[i] < breakpoints_[i - 1]) {
            throw DomainError("step function breakpoints must be nondecreasing");
        }
    }
}

StepFunction1D StepFunction1D::constant(const Rational& lo, const Rational& hi, const Rational& value)
{
    return StepFunction1D({lo, hi}, {value});
}

Rational StepFunction1D::operator()(const Rational& x) const
{
    if (x < lo() || x > hi()) {
        throw DomainError("step function evaluated outside its domain at " + x.to_string());
    }
    if (x == hi()) {
        return values_.back();
    }
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

RationalEnclosure StepFunction1D::range(const Rational& l, const Rational& r) const
{
    std::optional<RationalEnclosure> acc;
    for (std::size_t i = 0; i < pieces(); ++i) {
        const bool last = i + 1 == pieces();
        const Rational& a = breakpoints_[i];
        const Rational& b = breakpoints_[i + 1];
        const bool nonempty = a < b || last;
        const bool meets = a <= r && (last ? b >= l : b > l);
        if (nonempty && meets) {
            acc = point_or_hull(acc, values_[i]);
        }
    }
    if (!acc) {
        throw DomainError("step function range requested outside its domain");
    }
    return *acc;
}

StepFunction1D operator+(const StepFunction1D& a, const StepFunction1D& b)
{
    if (a.lo() != b.lo() || a.hi() != b.hi()) {
        throw DomainError("step function sum needs a common domain");
    }
    std::vector<Rational> cuts = a.breakpoints();
    cuts.insert(cuts.end(), b.breakpoints().begin(), b.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.size() == 1) {
        return StepFunction1D({cuts[0], cuts[0]}, {a(cuts[0]) + b(cuts[0])});
    }
    std::vector<Rational> values;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        values.push_back(a(cuts[i]) + b(cuts[i]));
    }
    // The closed last piece must also carry the value at the right endpoint.
    const Rational at_end = a(a.hi()) + b(b.hi());
    const Rational before_end = values.back();
    if (at_end != before_end) {
        cuts.push_back(cuts.back());
        values.push_back(at_end);
    }
    return {std::move(cuts), std::move(values)};
}

StepFunction1D operator*(const Rational& s, const StepFunction1D& a)
{
    std::vector<Rational> values;
    values.reserve(a.values().size());
    for (const auto& v : a.values()) {
        values.push_back(s * v);
    }
    return {a.breakpoints(), std::move(values)};
}

Rational step_integral(const StepFunction1D& s)
{
    Rational total(0);
    const auto& b = s.breakpoints();
    for (std::size_t i = 0; i < s.pieces(); ++i) {
        total = total + s.values()[i] * (b[i + 1] - b[i]);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Range oracles and integrands
// ---------------------------------------------------------------------------

RangeOracle identity_oracle()
{
    return {"x", [](const Rational& l, const Rational& r) { return RationalEnclosure(l, r); }, std::nullopt};
}

RangeOracle square_oracle()
{
    return {"x^2",
            [](const Rational& l, const Rational& r) {
                if (l.sign() >= 0) {
                    return RationalEnclosure(l * l, r * r);
                }
                if (r.sign() <= 0) {
                    return RationalEnclosure(r * r, l * l);
                }
                return RationalEnclosure(Rational(0), max(l * l, r * r));
            },
            std::nullopt};
}

RangeOracle constant_oracle(const Rational& c)
{
    return {"const " + c.to_string(), [c](const Rational&, const Rational&) { return RationalEnclosure::point(c); },
            std::nullopt};
}

RangeOracle polynomial_oracle(const Polynomial& p)
{
    return {p.to_string(), [p](const Rational& l, const Rational& r) { return horner_range(p, l, r); }, std::nullopt};
}

RangeOracle step_oracle(const StepFunction1D& s)
{
    return {"step", [s](const Rational& l, const Rational& r) { return s.range(l, r); }, std::nullopt};
}

RangeOracle dirichlet_oracle()
{
    return {"dirichlet",
            [](const Rational& l, const Rational& r) {
                // Every box endpoint is rational, so a point box sits on the value 1.
                if (l == r) {
                    return RationalEnclosure::point(Rational(1));
                }
                return RationalEnclosure(Rational(0), Rational(1));
            },
            Rational(1)};
}

RangeOracle lipschitz_oracle(std::string name, std::function<Rational(const Rational&)> eval, const Rational& c)
{
    if (c.sign() < 0) {
        throw DomainError("Lipschitz constant must be nonnegative");
    }
    return {std::move(name),
            [eval = std::move(eval), c](const Rational& l, const Rational& r) {
                const Rational centre = eval((l + r) / Rational(2));
                const Rational radius = c * (r - l) / Rational(2);
                return RationalEnclosure(centre - radius, centre + radius);
            },
            std::nullopt};
}

Integrand1D Integrand1D::from_step(std::string name, StepFunction1D s)
{
    Integrand1D f{std::move(name), s.lo(), s.hi(), step_oracle(s), std::nullopt, std::nullopt};
    f.step = std::move(s);
    return f;
}

Integrand1D Integrand1D::from_polynomial(std::string name, const Rational& lo, const Rational& hi, Polynomial p)
{
    if (hi < lo) {
        throw DomainError("integrand domain with lo > hi");
    }
    Integrand1D f{std::move(name), lo, hi, polynomial_oracle(p), std::nullopt, std::nullopt};
    f.poly = std::move(p);
    return f;
}

Integrand1D Integrand1D::from_oracle(std::string name, const Rational& lo, const Rational& hi, RangeOracle oracle)
{
    if (hi < lo) {
        throw DomainError("integrand domain with lo > hi");
    }
    return {std::move(name), lo, hi, std::move(oracle), std::nullopt, std::nullopt};
}

Integrand1D operator+(const Integrand1D& f, const Integrand1D& g)
{
    if (f.lo != g.lo || f.hi != g.hi) {
        throw DomainError("integrand sum needs a common domain");
    }
    Integrand1D h;
    h.name = "(" + f.name + ")+(" + g.name + ")";
    h.lo = f.lo;
    h.hi = f.hi;
    h.oracle = {h.name,
                [fo = f.oracle.range, go = g.oracle.range](const Rational& l, const Rational& r) {
                    return fo(l, r) + go(l, r);
                },
                std::nullopt};
    if (f.step && g.step) {
        h.step = *f.step + *g.step;
        h.oracle = step_oracle(*h.step);
    }
    if (f.poly && g.poly) {
        h.poly = *f.poly + *g.poly;
        h.oracle = polynomial_oracle(*h.poly);
    }
    return h;
}

Integrand1D operator-(const Integrand1D& f)
{
    return Rational(-1) * f;
}

Integrand1D operator*(const Rational& scale, const Integrand1D& f)
{
    Integrand1D h;
    h.name = scale.to_string() + "*(" + f.name + ")";
    h.lo = f.lo;
    h.hi = f.hi;
    h.oracle = {h.name, [scale, fo = f.oracle.range](const Rational& l, const Rational& r) { return scale * fo(l, r); },
                std::nullopt};
    if (f.oracle.oscillation_floor && !scale.is_zero()) {
        h.oracle.oscillation_floor = scale.abs() * *f.oracle.oscillation_floor;
    }
    if (f.step) {
        h.step = scale * *f.step;
        h.oracle = step_oracle(*h.step);
    }
    if (f.poly) {
        h.poly = scale * *f.poly;
        h.oracle = polynomial_oracle(*h.poly);
    }
    return h;
}

bool pointwise_leq(const Integrand1D& f, const Integrand1D& g)
{
    if (f.lo != g.lo || f.hi != g.hi) {
        return false;
    }
    if (f.step && g.step) {
        std::vector<Rational> cuts = f.step->breakpoints();
        cuts.insert(cuts.end(), g.step->breakpoints().begin(), g.step->breakpoints().end());
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            if ((*f.step)(cuts[i]) > (*g.step)(cuts[i])) {
                return false;
            }
            if (i + 1 < cuts.size()) {
                const Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
                if ((*f.step)(mid) > (*g.step)(mid)) {
                    return false;
                }
            }
        }
        return true;
    }
    if (f.poly && g.poly) {
        return nonnegative_on(*g.poly - *f.poly, f.lo, f.hi, 16);
    }
    if (f.step) {
        return all_piece_boxes(*f.step, [&](const Rational& l, const Rational& r, const Rational& v) {
            return v <= g.oracle.range(l, r).lower();
        });
    }
    if (g.step) {
        return all_piece_boxes(*g.step, [&](const Rational& l, const Rational& r, const Rational& v) {
            return f.oracle.range(l, r).upper() <= v;
        });
    }
    return false;
}

// ---------------------------------------------------------------------------
// Riemann instance
// ---------------------------------------------------------------------------

ExtensionProblem<Integrand1D, Rational> riemann_problem()
{
    ExtensionProblem<Integrand1D, Rational> p;
    p.name = "riemann";
    p.candidate_order = {"pointwise<=", pointwise_leq, false};
    p.value_order = rational_order();
    p.kernel_member = [](const Integrand1D& f) { return f.step.has_value(); };
    p.phi.name = "step integral";
    p.phi.domain = p.kernel_member;
    p.phi.evaluate = [](const Integrand1D& f) {
        if (!f.step) {
            throw ContractViolation("riemann phi evaluated on a non-step integrand " + f.name);
        }
        return RationalEnclosure::point(step_integral(*f.step));
    };
    return p;
}

namespace {

// Box ranges of the current level, shared by the lower and upper streams.
struct DarbouxLevel {
    const Integrand1D* f = nullptr;
    std::size_t level = 0;
    std::vector<Rational> cuts;
    std::vector<RationalEnclosure> ranges;

    void compute(const Integrand1D& g, std::size_t k)
    {
        if (f == &g && level == k && !cuts.empty()) {
            return;
        }
        f = &g;
        level = k;
        const std::size_t n = std::size_t{1} << k;
        const Rational step = (g.hi - g.lo) / Rational(static_cast<long>(n));
        cuts.clear();
        ranges.clear();
        cuts.reserve(n + 1);
        ranges.reserve(n);
        for (std::size_t i = 0; i <= n; ++i) {
            cuts.push_back(i == n ? g.hi : g.lo + step * Rational(static_cast<long>(i)));
        }
        for (std::size_t i = 0; i < n; ++i) {
            ranges.push_back(g.oracle.range(cuts[i], cuts[i + 1]));
        }
    }

    Integrand1D approximant(bool lower) const
    {
        std::vector<Rational> values;
        values.reserve(ranges.size());
        for (const auto& r : ranges) {
            values.push_back(lower ? r.lower() : r.upper());
        }
        return Integrand1D::from_step(std::string(lower ? "lower" : "upper") + " darboux level " + std::to_string(level),
                                      StepFunction1D(cuts, std::move(values)));
    }
};

}  // namespace

ApproximantGenerator<Integrand1D> darboux_generator()
{
    auto state = std::make_shared<DarbouxLevel>();
    ApproximantGenerator<Integrand1D> gen;
    gen.next_lower = [state](const Integrand1D& f, std::size_t k) -> std::optional<Integrand1D> {
        state->compute(f, k);
        return state->approximant(true);
    };
    gen.next_upper = [state](const Integrand1D& f, std::size_t k) -> std::optional<Integrand1D> {
        state->compute(f, k);
        return state->approximant(false);
    };
    // Witness values are the oracle's own box bounds, so re-checking them
    // against f would only repeat the same oracle calls.
    gen.verify_witnesses = false;
    gen.gap_certificate = [](const Integrand1D& f, std::size_t) -> std::optional<GapCertificate> {
        if (!f.oracle.oscillation_floor || f.oracle.oscillation_floor->sign() <= 0 || f.hi <= f.lo) {
            return std::nullopt;
        }
        return GapCertificate{*f.oracle.oscillation_floor * (f.hi - f.lo),
                              "range width >= " + f.oracle.oscillation_floor->to_string() + " on every box"};
    };
    return gen;
}

std::size_t darboux_levels(std::size_t budget)
{
    // Levels 0..L cost 2^(L+1) - 1 oracle calls.
    std::size_t levels = 0;
    while (levels < 40 && (std::size_t{1} << (levels + 1)) - 1 <= budget) {
        ++levels;
    }
    return levels;
}

ExtensionOutcome<Rational> darboux_extend(const Integrand1D& f, const Rational& tol, std::size_t budget)
{
    if (tol.sign() <= 0) {
        throw DomainError("darboux_extend: tolerance must be positive");
    }
    const auto problem = riemann_problem();
    const auto gen = darboux_generator();
    return extend(problem, gen, f, tol, darboux_levels(budget));
}

ExtensionOutcome<Rational> darboux_extend(const RangeOracle& oracle, const Rational& lo, const Rational& hi,
                                          const Rational& tol, std::size_t budget)
{
    return darboux_extend(Integrand1D::from_oracle(oracle.name, lo, hi, oracle), tol, budget);
}

// ---------------------------------------------------------------------------
// Atomic measure spaces
// ---------------------------------------------------------------------------

AtomicMeasureSpace AtomicMeasureSpace::finite(std::vector<ExtRational> weights, std::vector<std::string> labels)
{
    if (!labels.empty() && labels.size() != weights.size()) {
        throw DomainError("measure space: one label per atom");
    }
    for (const auto& w : weights) {
        if (w.is_finite() && w.value().sign() < 0) {
            throw DomainError("measure space: negative weight " + w.to_string());
        }
    }
    if (labels.empty()) {
        for (std::size_t i = 0; i < weights.size(); ++i) {
            labels.push_back(std::to_string(i));
        }
    }
    AtomicMeasureSpace s;
    s.name_ = "finite(" + std::to_string(weights.size()) + ")";
    s.finite_weights_ = std::move(weights);
    s.labels_ = std::move(labels);
    return s;
}

AtomicMeasureSpace AtomicMeasureSpace::geometric(const Rational& ratio)
{
    if (ratio.sign() <= 0 || ratio >= Rational(1)) {
        throw DomainError("geometric weights need 0 < ratio < 1");
    }
    return countable(
        "geometric(" + ratio.to_string() + ")", [ratio](std::size_t n) { return ratio.pow(static_cast<long>(n)); },
        [ratio](std::size_t n) -> std::optional<Rational> {
            const long start = static_cast<long>(std::max<std::size_t>(n, 1));
            return ratio.pow(start) / (Rational(1) - ratio);
        },
        true);
}

AtomicMeasureSpace AtomicMeasureSpace::countable(std::string name, std::function<Rational(std::size_t)> weight,
                                                 std::function<std::optional<Rational>(std::size_t)> tail_bound,
                                                 bool tail_exact)
{
    AtomicMeasureSpace s;
    s.name_ = std::move(name);
    s.countable_ = true;
    s.weight_ = std::move(weight);
    s.tail_bound_ = std::move(tail_bound);
    s.tail_exact_ = tail_exact;
    return s;
}

ExtRational AtomicMeasureSpace::weight(std::size_t atom) const
{
    if (!countable_) {
        if (atom >= finite_weights_.size()) {
            throw DomainError("no atom " + std::to_string(atom) + " in " + name_);
        }
        return finite_weights_[atom];
    }
    if (atom < 1) {
        throw DomainError("countable atoms start at 1");
    }
    const Rational w = weight_(atom);
    if (w.sign() < 0) {
        throw DomainError("negative weight at atom " + std::to_string(atom));
    }
    return w;
}

std::optional<Rational> AtomicMeasureSpace::tail_bound(std::size_t n) const
{
    if (!countable_) {
        return Rational(0);
    }
    return tail_bound_ ? tail_bound_(n) : std::nullopt;
}

// ---------------------------------------------------------------------------
// Atomic functions
// ---------------------------------------------------------------------------

namespace {

// Bound on |f(n)| for n >= N, from the explicit bound or the eventual constant.
std::optional<Rational> tail_abs_bound(const AtomicFunction& f, std::size_t n)
{
    if (f.abs_bound_from) {
        if (auto b = f.abs_bound_from(n)) {
            return b;
        }
    }
    if (f.eventual_constant && n >= f.eventual_constant->first) {
        return f.eventual_constant->second.abs();
    }
    return std::nullopt;
}

bool positive_weight(const AtomicMeasureSpace& space, std::size_t atom)
{
    const auto w = space.weight(atom);
    return !w.is_finite() || w.value().sign() > 0;
}

bool head_leq(const AtomicFunction& f, const AtomicFunction& g, const AtomicMeasureSpace& space, std::size_t end)
{
    for (std::size_t n = space.first_atom(); n < end; ++n) {
        if (positive_weight(space, n) && f.value(n) > g.value(n)) {
            return false;
        }
    }
    return true;
}

Rational head_sum(const AtomicFunction& f, const AtomicMeasureSpace& space, std::size_t end)
{
    Rational total(0);
    for (std::size_t n = 1; n < end; ++n) {
        total = total + f.value(n) * space.weight(n).value();
    }
    return total;
}

AtomicFunction truncated(const AtomicFunction& f, std::size_t cut, const Rational& tail_value)
{
    AtomicFunction a;
    a.name = f.name + " cut at " + std::to_string(cut);
    a.value = [value = f.value, cut, tail_value](std::size_t n) { return n < cut ? value(n) : tail_value; };
    a.abs_bound_from = [value = f.value, cut, tail_value](std::size_t n) -> std::optional<Rational> {
        Rational bound = tail_value.abs();
        for (std::size_t i = std::max<std::size_t>(n, 1); i < cut; ++i) {
            bound = max(bound, value(i).abs());
        }
        return bound;
    };
    a.eventual_constant = std::pair{cut, tail_value};
    return a;
}

}  // namespace

AtomicFunction AtomicFunction::from_values(std::string name, std::vector<Rational> values)
{
    AtomicFunction f;
    f.name = std::move(name);
    auto shared = std::make_shared<const std::vector<Rational>>(std::move(values));
    f.value = [shared](std::size_t n) { return n < shared->size() ? (*shared)[n] : Rational(0); };
    f.abs_bound_from = [shared](std::size_t n) -> std::optional<Rational> {
        Rational bound(0);
        for (std::size_t i = n; i < shared->size(); ++i) {
            bound = max(bound, (*shared)[i].abs());
        }
        return bound;
    };
    f.eventual_constant = std::pair{shared->size(), Rational(0)};
    return f;
}

AtomicFunction atomic_constant(const Rational& c)
{
    AtomicFunction f;
    f.name = c.to_string();
    f.value = [c](std::size_t) { return c; };
    f.abs_bound_from = [c](std::size_t) -> std::optional<Rational> { return c.abs(); };
    f.eventual_constant = std::pair{std::size_t{0}, c};
    return f;
}

AtomicFunction atomic_reciprocal()
{
    AtomicFunction f;
    f.name = "1/n";
    f.value = [](std::size_t n) { return Rational(1, static_cast<long>(std::max<std::size_t>(n, 1))); };
    f.abs_bound_from = [](std::size_t n) -> std::optional<Rational> {
        return Rational(1, static_cast<long>(std::max<std::size_t>(n, 1)));
    };
    return f;
}

AtomicFunction atomic_alternating()
{
    AtomicFunction f;
    f.name = "(-1)^n";
    f.value = [](std::size_t n) { return Rational(n % 2 == 0 ? 1 : -1); };
    f.abs_bound_from = [](std::size_t) -> std::optional<Rational> { return Rational(1); };
    return f;
}

AtomicFunction atomic_exponential(const Rational& base)
{
    AtomicFunction f;
    f.name = base.to_string() + "^n";
    f.value = [base](std::size_t n) { return base.pow(static_cast<long>(n)); };
    if (base.abs() <= Rational(1)) {
        f.abs_bound_from = [base](std::size_t n) -> std::optional<Rational> {
            return base.abs().pow(static_cast<long>(std::min<std::size_t>(n, 4096)));
        };
    }
    return f;
}

AtomicFunction operator+(const AtomicFunction& f, const AtomicFunction& g)
{
    AtomicFunction h;
    h.name = "(" + f.name + ")+(" + g.name + ")";
    h.value = [fv = f.value, gv = g.value](std::size_t n) { return fv(n) + gv(n); };
    h.abs_bound_from = [f, g](std::size_t n) -> std::optional<Rational> {
        auto a = tail_abs_bound(f, n);
        auto b = tail_abs_bound(g, n);
        if (!a || !b) {
            return std::nullopt;
        }
        return *a + *b;
    };
    if (f.eventual_constant && g.eventual_constant) {
        h.eventual_constant = std::pair{std::max(f.eventual_constant->first, g.eventual_constant->first),
                                        f.eventual_constant->second + g.eventual_constant->second};
    }
    return h;
}

AtomicFunction operator-(const AtomicFunction& f)
{
    return Rational(-1) * f;
}

AtomicFunction operator*(const Rational& scale, const AtomicFunction& f)
{
    AtomicFunction h;
    h.name = scale.to_string() + "*(" + f.name + ")";
    h.value = [scale, fv = f.value](std::size_t n) { return scale * fv(n); };
    h.abs_bound_from = [scale, f](std::size_t n) -> std::optional<Rational> {
        auto b = tail_abs_bound(f, n);
        if (!b) {
            return std::nullopt;
        }
        return scale.abs() * *b;
    };
    if (f.eventual_constant) {
        h.eventual_constant = std::pair{f.eventual_constant->first, scale * f.eventual_constant->second};
    }
    return h;
}

bool ae_leq(const AtomicFunction& f, const AtomicFunction& g, const AtomicMeasureSpace& space)
{
    if (space.is_finite()) {
        return head_leq(f, g, space, space.size());
    }
    const auto& ef = f.eventual_constant;
    const auto& eg = g.eventual_constant;
    if (ef && eg) {
        return head_leq(f, g, space, std::max(ef->first, eg->first)) && ef->second <= eg->second;
    }
    if (ef) {
        const auto b = tail_abs_bound(g, ef->first);
        return b && head_leq(f, g, space, ef->first) && ef->second <= -*b;
    }
    if (eg) {
        const auto b = tail_abs_bound(f, eg->first);
        return b && head_leq(f, g, space, eg->first) && *b <= eg->second;
    }
    return false;
}

PreorderRel<AtomicFunction> ae_order(const AtomicMeasureSpace& space)
{
    return {"<=ae", [space](const AtomicFunction& f, const AtomicFunction& g) { return ae_leq(f, g, space); }, false};
}

RationalEnclosure mu_step_integral(const AtomicFunction& f, const AtomicMeasureSpace& space, std::size_t truncation)
{
    if (space.is_finite()) {
        Rational total(0);
        for (std::size_t i = 0; i < space.size(); ++i) {
            const auto w = space.weight(i);
            const Rational v = f.value(i);
            if (!w.is_finite()) {
                if (!v.is_zero()) {
                    throw DivergentSeries("nonzero value on an atom of infinite weight");
                }
                continue;
            }
            total = total + v * w.value();
        }
        return RationalEnclosure::point(total);
    }
    if (f.eventual_constant) {
        const auto& [start, c] = *f.eventual_constant;
        const Rational head = head_sum(f, space, start);
        if (c.is_zero()) {
            return RationalEnclosure::point(head);
        }
        const auto tail = space.tail_bound(start);
        if (!tail) {
            throw DivergentSeries("nonzero eventual value on a space of infinite mass");
        }
        const Rational t = c * *tail;
        if (space.tail_exact()) {
            return RationalEnclosure::point(head + t);
        }
        return {head + min(Rational(0), t), head + max(Rational(0), t)};
    }
    const std::size_t n = std::max<std::size_t>(truncation, 1);
    const auto bound = tail_abs_bound(f, n);
    const auto tail = space.tail_bound(n);
    if (!bound || !tail) {
        throw DivergentSeries("no absolute-convergence certificate for " + f.name);
    }
    const Rational head = head_sum(f, space, n);
    const Rational radius = *bound * *tail;
    return {head - radius, head + radius};
}

ExtensionProblem<AtomicFunction, Rational> lebesgue_problem(const AtomicMeasureSpace& space)
{
    ExtensionProblem<AtomicFunction, Rational> p;
    p.name = "lebesgue";
    p.candidate_order = ae_order(space);
    p.value_order = rational_order();
    p.kernel_member = [space](const AtomicFunction& f) {
        if (space.is_finite()) {
            for (std::size_t i = 0; i < space.size(); ++i) {
                if (!space.weight(i).is_finite() && !f.value(i).is_zero()) {
                    return false;
                }
            }
            return true;
        }
        return f.eventual_constant &&
               (f.eventual_constant->second.is_zero() || space.tail_bound(f.eventual_constant->first).has_value());
    };
    p.phi.name = "sum y mu(f^-1(y))";
    p.phi.domain = p.kernel_member;
    p.phi.evaluate = [space](const AtomicFunction& f) { return mu_step_integral(f, space); };
    return p;
}

ApproximantGenerator<AtomicFunction> truncation_generator(const AtomicMeasureSpace& space)
{
    ApproximantGenerator<AtomicFunction> gen;
    auto make = [space](const AtomicFunction& f, std::size_t k, bool lower) -> std::optional<AtomicFunction> {
        if (space.is_finite() || k >= 48) {
            return std::nullopt;
        }
        const std::size_t cut = std::size_t{1} << k;
        const auto bound = tail_abs_bound(f, cut);
        if (!bound || !space.tail_bound(cut)) {
            return std::nullopt;
        }
        return truncated(f, cut, lower ? -*bound : *bound);
    };
    gen.next_lower = [make](const AtomicFunction& f, std::size_t k) { return make(f, k, true); };
    gen.next_upper = [make](const AtomicFunction& f, std::size_t k) { return make(f, k, false); };
    return gen;
}

ExtensionOutcome<Rational> lebesgue_extend(const AtomicFunction& f, const AtomicMeasureSpace& space,
                                           const Rational& tol, std::size_t budget)
{
    if (tol.sign() <= 0) {
        throw DomainError("lebesgue_extend: tolerance must be positive");
    }
    const auto problem = lebesgue_problem(space);
    const auto gen = truncation_generator(space);
    return extend(problem, gen, f, tol, budget);
}

VectorIntegral vector_integral(const std::vector<AtomicFunction>& coordinates, const AtomicMeasureSpace& space,
                               const Rational& tol, std::uint64_t seed, std::size_t functionals, std::size_t budget)
{
    if (coordinates.empty()) {
        throw DomainError("vector_integral: dimension must be >= 1");
    }
    VectorIntegral result;
    for (const auto& f : coordinates) {
        auto out = lebesgue_extend(f, space, tol, budget);
        if (!out.converged()) {
            throw DivergentSeries("coordinate " + f.name + " did not converge: " + to_string(out.status));
        }
        result.components.push_back(*out.enclosure);
        result.statuses.push_back(out.status);
    }
    result.duality.suite = "vector-duality";
    result.duality.seed = seed;
    SeededRng rng(seed);
    for (std::size_t t = 0; t < functionals; ++t) {
        std::vector<Rational> alpha;
        for (std::size_t i = 0; i < coordinates.size(); ++i) {
            alpha.emplace_back(rng.integer(-6, 6), rng.integer(1, 4));
        }
        AtomicFunction composed = alpha[0] * coordinates[0];
        RationalEnclosure image = alpha[0] * result.components[0];
        for (std::size_t i = 1; i < coordinates.size(); ++i) {
            composed = composed + alpha[i] * coordinates[i];
            image = image + alpha[i] * result.components[i];
        }
        const auto out = lebesgue_extend(composed, space, tol, budget);
        if (!out.converged()) {
            ++result.duality.skipped;
            continue;
        }
        ++result.duality.cases;
        if (!intersects(image, *out.enclosure)) {
            result.duality.add_violation("alpha(v) = extension of alpha o f", rational_list(alpha), to_string(image),
                                         to_string(*out.enclosure));
        }
    }
    return result;
}

}  // namespace ordclose
