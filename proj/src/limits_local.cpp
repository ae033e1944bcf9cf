#include "ordclose/limits_local.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace ordclose {

namespace {

constexpr std::size_t kMaxDoublings = 62;

RationalEnclosure abs_enclosure(const RationalEnclosure& e)
{
    if (e.lower().sign() >= 0) {
        return e;
    }
    if (e.upper().sign() <= 0) {
        return -e;
    }
    return {Rational(0), max(-e.lower(), e.upper())};
}

RationalEnclosure hull_of(std::initializer_list<RationalEnclosure> parts)
{
    auto it = parts.begin();
    RationalEnclosure acc = *it;
    for (++it; it != parts.end(); ++it) {
        acc = hull(acc, *it);
    }
    return acc;
}

std::size_t first_index(std::size_t n)
{
    return std::max<std::size_t>(n, 1);
}

RationalFunction reciprocal_n()
{
    return {Polynomial::constant(Rational(1)), Polynomial({Rational(0), Rational(1)})};
}

template <class Op>
SequenceForm combine_forms(const SequenceForm& a, const SequenceForm& b, Op op)
{
    const std::size_t period = std::lcm(a.branches.size(), b.branches.size());
    SequenceForm out;
    out.start = std::max(a.start, b.start);
    for (std::size_t r = 0; r < period; ++r) {
        out.branches.push_back(op(a.branches[r % a.branches.size()], b.branches[r % b.branches.size()]));
    }
    return out;
}

bool sequence_below_constant(const TailedSequence& f, const Rational& c)
{
    if (!f.tail_range) {
        return false;
    }
    for (std::size_t j = 0; j <= kMaxDoublings; ++j) {
        if (f.tail_range(std::size_t{1} << j).upper() <= c) {
            return true;
        }
    }
    return false;
}

bool sequence_above_constant(const TailedSequence& f, const Rational& c)
{
    if (!f.tail_range) {
        return false;
    }
    for (std::size_t j = 0; j <= kMaxDoublings; ++j) {
        if (c <= f.tail_range(std::size_t{1} << j).lower()) {
            return true;
        }
    }
    return false;
}

bool function_below_constant(const LocalFunction& f, const Rational& c)
{
    if (!f.local_range) {
        return false;
    }
    for (unsigned j = 0; j <= kMaxDoublings; ++j) {
        if (f.local_range(dyadic_unit(j)).upper() <= c) {
            return true;
        }
    }
    return false;
}

bool function_above_constant(const LocalFunction& f, const Rational& c)
{
    if (!f.local_range) {
        return false;
    }
    for (unsigned j = 0; j <= kMaxDoublings; ++j) {
        if (c <= f.local_range(dyadic_unit(j)).lower()) {
            return true;
        }
    }
    return false;
}

// (g - f)(t) + eps*|t| >= 0 near 0+ (right) or 0- (left) for every eps > 0.
bool tangent_side_ok(const Polynomial& h, bool right)
{
    if (h.is_zero()) {
        return true;
    }
    const std::size_t k = h.lowest_order();
    const int c = h.lowest_coeff().sign();
    if (k >= 2) {
        return true;
    }
    if (right) {
        return c > 0;
    }
    return k == 1 ? c < 0 : c > 0;
}

bool constant_polynomial(const Polynomial& p)
{
    return p.degree() <= 0;
}

// A closed form whose branches are all the same constant c pins the tail at c.
void settle_constant_form(TailedSequence& h)
{
    if (!h.form || h.form->branches.empty()) {
        return;
    }
    std::optional<Rational> value;
    for (const auto& b : h.form->branches) {
        if (!b.is_zero() && (!constant_polynomial(b.numerator()) || !constant_polynomial(b.denominator()))) {
            return;
        }
        const Rational v = b.is_zero() ? Rational(0) : b(Rational(0));
        if (value && *value != v) {
            return;
        }
        value = v;
    }
    const std::size_t start = h.form->start;
    h.tail_range = [c = *value, start, inner = h.tail_range](std::size_t n) {
        return n >= start ? RationalEnclosure::point(c) : inner(n);
    };
    if (start <= 1) {
        h.constant = *value;
        h.exact = true;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Sequences
// ---------------------------------------------------------------------------

TailedSequence constant_sequence(const Rational& c)
{
    TailedSequence f;
    f.name = c.to_string();
    f.eval = [c](std::size_t) { return c; };
    f.tail_range = [c](std::size_t) { return RationalEnclosure::point(c); };
    f.exact = true;
    f.constant = c;
    f.form = SequenceForm{{RationalFunction(Polynomial::constant(c))}, 1};
    return f;
}

TailedSequence harmonic_sequence()
{
    TailedSequence f;
    f.name = "1/n";
    f.eval = [](std::size_t n) {
        if (n == 0) {
            throw DomainError("1/n at n = 0");
        }
        return Rational(1, static_cast<long>(n));
    };
    f.tail_range = [](std::size_t n) {
        return RationalEnclosure(Rational(0), Rational(1, static_cast<long>(first_index(n))));
    };
    f.form = SequenceForm{{reciprocal_n()}, 1};
    return f;
}

TailedSequence alternating_sequence()
{
    TailedSequence f;
    f.name = "(-1)^n";
    f.eval = [](std::size_t n) { return Rational(n % 2 == 0 ? 1 : -1); };
    f.tail_range = [](std::size_t) { return RationalEnclosure(Rational(-1), Rational(1)); };
    f.exact = true;
    f.form = SequenceForm{{RationalFunction(Polynomial::constant(Rational(1))),
                           RationalFunction(Polynomial::constant(Rational(-1)))},
                          1};
    return f;
}

TailedSequence damped_alternating_sequence()
{
    TailedSequence f;
    f.name = "(-1)^n/n";
    f.eval = [](std::size_t n) {
        if (n == 0) {
            throw DomainError("(-1)^n/n at n = 0");
        }
        return Rational(n % 2 == 0 ? 1 : -1, static_cast<long>(n));
    };
    f.tail_range = [](std::size_t n) {
        const std::size_t m = first_index(n);
        const std::size_t even = m % 2 == 0 ? m : m + 1;
        const std::size_t odd = m % 2 == 1 ? m : m + 1;
        return RationalEnclosure(Rational(-1, static_cast<long>(odd)), Rational(1, static_cast<long>(even)));
    };
    f.form = SequenceForm{{reciprocal_n(), Rational(-1) * reciprocal_n()}, 1};
    return f;
}

TailedSequence geometric_sequence(const Rational& ratio)
{
    if (ratio.sign() < 0 || ratio >= Rational(1)) {
        throw DomainError("geometric sequence needs 0 <= ratio < 1");
    }
    TailedSequence f;
    f.name = ratio.to_string() + "^n";
    f.eval = [ratio](std::size_t n) { return ratio.pow(static_cast<long>(n)); };
    // r^N <= r^cap for N >= cap keeps the bound sound while capping its size.
    f.tail_range = [ratio](std::size_t n) {
        const std::size_t capped = std::min<std::size_t>(first_index(n), 4096);
        return RationalEnclosure(Rational(0), ratio.pow(static_cast<long>(capped)));
    };
    return f;
}

TailedSequence shifted_harmonic(const Rational& c, std::size_t start, const Rational& head)
{
    start = first_index(start);
    TailedSequence f;
    f.name = c.to_string() + "+1/n";
    if (start > 1) {
        f.name += " (from " + std::to_string(start) + ", else " + head.to_string() + ")";
    }
    f.eval = [c, start, head](std::size_t n) {
        if (n < start) {
            return head;
        }
        return c + Rational(1, static_cast<long>(n));
    };
    f.tail_range = [c, start, head](std::size_t n) {
        const std::size_t m = std::max(first_index(n), start);
        RationalEnclosure tail(c, c + Rational(1, static_cast<long>(m)));
        if (first_index(n) < start) {
            tail = hull(tail, RationalEnclosure::point(head));
        }
        return tail;
    };
    f.form = SequenceForm{{RationalFunction(Polynomial::constant(c)) + reciprocal_n()}, start};
    return f;
}

TailedSequence operator+(const TailedSequence& f, const TailedSequence& g)
{
    TailedSequence h;
    h.name = "(" + f.name + ")+(" + g.name + ")";
    h.eval = [fe = f.eval, ge = g.eval](std::size_t n) { return fe(n) + ge(n); };
    h.tail_range = [ft = f.tail_range, gt = g.tail_range](std::size_t n) { return ft(n) + gt(n); };
    h.exact = (f.exact && g.constant) || (g.exact && f.constant);
    if (f.constant && g.constant) {
        h.constant = *f.constant + *g.constant;
    }
    if (f.form && g.form) {
        h.form = combine_forms(*f.form, *g.form, [](const RationalFunction& a, const RationalFunction& b) { return a + b; });
        settle_constant_form(h);
    }
    return h;
}

TailedSequence operator*(const TailedSequence& f, const TailedSequence& g)
{
    TailedSequence h;
    h.name = "(" + f.name + ")*(" + g.name + ")";
    h.eval = [fe = f.eval, ge = g.eval](std::size_t n) { return fe(n) * ge(n); };
    h.tail_range = [ft = f.tail_range, gt = g.tail_range](std::size_t n) { return ft(n) * gt(n); };
    if (f.constant && g.constant) {
        h.constant = *f.constant * *g.constant;
        h.exact = true;
    }
    if (f.form && g.form) {
        h.form = combine_forms(*f.form, *g.form, [](const RationalFunction& a, const RationalFunction& b) { return a * b; });
        settle_constant_form(h);
    }
    return h;
}

TailedSequence operator*(const Rational& scale, const TailedSequence& f)
{
    TailedSequence h;
    h.name = scale.to_string() + "*(" + f.name + ")";
    h.eval = [scale, fe = f.eval](std::size_t n) { return scale * fe(n); };
    h.tail_range = [scale, ft = f.tail_range](std::size_t n) { return scale * ft(n); };
    h.exact = f.exact;
    if (f.constant) {
        h.constant = scale * *f.constant;
    }
    if (f.form) {
        h.form = *f.form;
        for (auto& b : h.form->branches) {
            b = scale * b;
        }
        settle_constant_form(h);
    }
    return h;
}

TailedSequence operator-(const TailedSequence& f)
{
    return Rational(-1) * f;
}

bool finally_leq(const TailedSequence& f, const TailedSequence& g)
{
    if (f.form && g.form) {
        const auto& fb = f.form->branches;
        const auto& gb = g.form->branches;
        const std::size_t period = std::lcm(fb.size(), gb.size());
        for (std::size_t r = 0; r < period; ++r) {
            if (sign_at_infinity(gb[r % gb.size()] - fb[r % fb.size()]) < 0) {
                return false;
            }
        }
        return true;
    }
    if (f.constant && g.constant) {
        return *f.constant <= *g.constant;
    }
    if (f.constant) {
        return sequence_above_constant(g, *f.constant);
    }
    if (g.constant) {
        return sequence_below_constant(f, *g.constant);
    }
    return false;
}

PreorderRel<TailedSequence> finally_order()
{
    return {"<=fin", finally_leq, false};
}

ExtensionProblem<TailedSequence, Rational> limit_problem()
{
    ExtensionProblem<TailedSequence, Rational> p;
    p.name = "limits";
    p.candidate_order = finally_order();
    p.value_order = rational_order();
    p.kernel_member = [](const TailedSequence& f) { return f.constant.has_value(); };
    p.phi.name = "constant value";
    p.phi.domain = p.kernel_member;
    p.phi.evaluate = [](const TailedSequence& f) {
        if (!f.constant) {
            throw ContractViolation("limit phi evaluated on a non-constant sequence " + f.name);
        }
        return RationalEnclosure::point(*f.constant);
    };
    return p;
}

namespace {

// Finite limit of r(n) as n -> infinity, if any.
std::optional<Rational> limit_at_infinity(const RationalFunction& r)
{
    const long dn = r.numerator().degree();
    const long dd = r.denominator().degree();
    if (r.is_zero() || dn < dd) {
        return Rational(0);
    }
    if (dn > dd) {
        return std::nullopt;
    }
    return r.numerator().leading_coeff() / r.denominator().leading_coeff();
}

}  // namespace

ApproximantGenerator<TailedSequence> tail_generator()
{
    ApproximantGenerator<TailedSequence> gen;
    gen.next_lower = [](const TailedSequence& f, std::size_t k) -> std::optional<TailedSequence> {
        if (k > kMaxDoublings || !f.tail_range) {
            return std::nullopt;
        }
        return constant_sequence(f.tail_range(std::size_t{1} << k).lower());
    };
    gen.next_upper = [](const TailedSequence& f, std::size_t k) -> std::optional<TailedSequence> {
        if (k > kMaxDoublings || !f.tail_range) {
            return std::nullopt;
        }
        return constant_sequence(f.tail_range(std::size_t{1} << k).upper());
    };
    gen.gap_certificate = [](const TailedSequence& f, std::size_t k) -> std::optional<GapCertificate> {
        if (k > kMaxDoublings) {
            return std::nullopt;
        }
        if (f.form) {
            // Every branch runs over infinitely many n, so the branch limits
            // are exactly the cluster points: liminf = min, limsup = max.
            std::optional<Rational> lo;
            std::optional<Rational> hi;
            for (const auto& b : f.form->branches) {
                const auto l = limit_at_infinity(b);
                if (!l) {
                    lo.reset();
                    break;
                }
                lo = lo ? min(*lo, *l) : *l;
                hi = hi ? max(*hi, *l) : *l;
            }
            if (lo && *hi > *lo) {
                return GapCertificate{*hi - *lo, "closed-form branches tend to " + lo->to_string() + " and " +
                                                     hi->to_string()};
            }
        }
        if (!f.exact) {
            return std::nullopt;
        }
        const auto tail = f.tail_range(std::size_t{1} << k);
        if (width(tail).sign() <= 0) {
            return std::nullopt;
        }
        return GapCertificate{width(tail), "tail extremes " + to_string(tail) + " recur infinitely often"};
    };
    return gen;
}

ExtensionOutcome<Rational> net_limit(const TailedSequence& f, const Rational& tol, std::size_t budget)
{
    if (tol.sign() <= 0) {
        throw DomainError("net_limit: tolerance must be positive");
    }
    const auto problem = limit_problem();
    const auto gen = tail_generator();
    return extend(problem, gen, f, tol, budget);
}

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

namespace {

void check_dims(std::size_t a, std::size_t b)
{
    if (a != b) {
        throw DomainError("metric: dimension mismatch " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

Metric max_metric()
{
    Metric m;
    m.name = "max";
    m.dist = [](const Point& a, const Point& b) {
        check_dims(a.size(), b.size());
        Rational d(0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            d = max(d, (a[i] - b[i]).abs());
        }
        return d;
    };
    m.box_range = [](const std::vector<RationalEnclosure>& box, const Point& x) {
        check_dims(box.size(), x.size());
        Rational lo(0);
        Rational hi(0);
        for (std::size_t i = 0; i < box.size(); ++i) {
            const auto e = abs_enclosure(box[i] - RationalEnclosure::point(x[i]));
            lo = max(lo, e.lower());
            hi = max(hi, e.upper());
        }
        return RationalEnclosure(lo, hi);
    };
    return m;
}

Metric sum_metric()
{
    Metric m;
    m.name = "sum";
    m.dist = [](const Point& a, const Point& b) {
        check_dims(a.size(), b.size());
        Rational d(0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            d = d + (a[i] - b[i]).abs();
        }
        return d;
    };
    m.box_range = [](const std::vector<RationalEnclosure>& box, const Point& x) {
        check_dims(box.size(), x.size());
        RationalEnclosure acc = RationalEnclosure::point(Rational(0));
        for (std::size_t i = 0; i < box.size(); ++i) {
            acc = acc + abs_enclosure(box[i] - RationalEnclosure::point(x[i]));
        }
        return acc;
    };
    return m;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::confirmed:
        return "confirmed";
    case Verdict::refuted:
        return "refuted";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

MetricCheck metric_limit_check(const std::vector<TailedSequence>& coords, const Point& x, const Metric& metric,
                               const Rational& tol, std::size_t budget)
{
    if (coords.empty()) {
        throw DomainError("metric_limit_check: dimension must be >= 1");
    }
    check_dims(coords.size(), x.size());
    TailedSequence d;
    d.name = metric.name + "-distance to limit candidate";
    d.eval = [coords, x, dist = metric.dist](std::size_t n) {
        Point p;
        for (const auto& c : coords) {
            p.push_back(c.eval(n));
        }
        return dist(p, x);
    };
    d.tail_range = [coords, x, box_range = metric.box_range](std::size_t n) {
        std::vector<RationalEnclosure> box;
        for (const auto& c : coords) {
            box.push_back(c.tail_range(n));
        }
        return box_range(box, x);
    };
    if (std::all_of(coords.begin(), coords.end(), [](const TailedSequence& c) { return c.constant.has_value(); })) {
        Point p;
        for (const auto& c : coords) {
            p.push_back(*c.constant);
        }
        d.constant = metric.dist(p, x);
        d.exact = true;
    }
    MetricCheck check;
    check.distance = net_limit(d, tol, budget);
    const auto& e = check.distance.enclosure;
    if (e && e->lower().sign() > 0) {
        check.verdict = Verdict::refuted;
    } else if (check.distance.converged()) {
        check.verdict = Verdict::confirmed;
    }
    return check;
}

// ---------------------------------------------------------------------------
// Local functions
// ---------------------------------------------------------------------------

LocalFunction LocalFunction::constant_function(const Rational& p, const Rational& c)
{
    LocalFunction f;
    f.name = c.to_string();
    f.point = p;
    f.eval = [c](const Rational&) { return c; };
    f.local_range = [c](const Rational&) { return RationalEnclosure::point(c); };
    f.exact = true;
    f.constant = c;
    f.germ = PolyGerm{Polynomial::constant(c), c, Polynomial::constant(c)};
    return f;
}

LocalFunction LocalFunction::piecewise_polynomial(std::string name, const Rational& p, Polynomial left,
                                                  const Rational& at_point, Polynomial right)
{
    LocalFunction f;
    f.name = std::move(name);
    f.point = p;
    f.eval = [p, left, at_point, right](const Rational& x) {
        const Rational t = x - p;
        if (t.sign() < 0) {
            return left(t);
        }
        if (t.sign() > 0) {
            return right(t);
        }
        return at_point;
    };
    f.local_range = [left, at_point, right](const Rational& d) {
        return hull_of({left.range(-d, Rational(0)), RationalEnclosure::point(at_point), right.range(Rational(0), d)});
    };
    f.exact = constant_polynomial(left) && constant_polynomial(right);
    if (f.exact && left == right && left(Rational(0)) == at_point) {
        f.constant = at_point;
    }
    f.germ = PolyGerm{std::move(left), at_point, std::move(right)};
    return f;
}

LocalFunction LocalFunction::polynomial(std::string name, const Rational& p, const Polynomial& in_x)
{
    const Polynomial t = in_x.shifted(p);
    auto f = piecewise_polynomial(std::move(name), p, t, t(Rational(0)), t);
    f.eval = [in_x](const Rational& x) { return in_x(x); };
    return f;
}

LocalFunction LocalFunction::lipschitz(std::string name, const Rational& p, std::function<Rational(const Rational&)> eval,
                                       const Rational& c)
{
    if (c.sign() < 0) {
        throw DomainError("Lipschitz constant must be nonnegative");
    }
    LocalFunction f;
    f.name = std::move(name);
    f.point = p;
    const Rational centre = eval(p);
    f.eval = std::move(eval);
    f.local_range = [centre, c](const Rational& d) { return RationalEnclosure(centre - c * d, centre + c * d); };
    return f;
}

LocalFunction abs_function()
{
    return LocalFunction::piecewise_polynomial("|x|", Rational(0), Polynomial({Rational(0), Rational(-1)}), Rational(0),
                                               Polynomial({Rational(0), Rational(1)}));
}

LocalFunction sign_function()
{
    return LocalFunction::piecewise_polynomial("sign", Rational(0), Polynomial::constant(Rational(-1)), Rational(0),
                                               Polynomial::constant(Rational(1)));
}

LocalFunction operator+(const LocalFunction& f, const LocalFunction& g)
{
    if (f.point != g.point) {
        throw DomainError("local functions at different points");
    }
    LocalFunction h;
    h.name = "(" + f.name + ")+(" + g.name + ")";
    h.point = f.point;
    h.eval = [fe = f.eval, ge = g.eval](const Rational& x) { return fe(x) + ge(x); };
    if (f.local_range && g.local_range) {
        h.local_range = [fr = f.local_range, gr = g.local_range](const Rational& d) { return fr(d) + gr(d); };
    }
    h.exact = (f.exact && g.constant) || (g.exact && f.constant);
    if (f.constant && g.constant) {
        h.constant = *f.constant + *g.constant;
    }
    if (f.germ && g.germ) {
        h.germ = PolyGerm{f.germ->left + g.germ->left, f.germ->at_point + g.germ->at_point,
                          f.germ->right + g.germ->right};
    }
    if (f.quotient_range && g.quotient_range) {
        h.quotient_range = [fq = f.quotient_range, gq = g.quotient_range](const Rational& d) { return fq(d) + gq(d); };
    }
    if (f.quotient_lipschitz && g.quotient_lipschitz) {
        h.quotient_lipschitz = *f.quotient_lipschitz + *g.quotient_lipschitz;
    }
    return h;
}

LocalFunction operator*(const Rational& scale, const LocalFunction& f)
{
    LocalFunction h;
    h.name = scale.to_string() + "*(" + f.name + ")";
    h.point = f.point;
    h.eval = [scale, fe = f.eval](const Rational& x) { return scale * fe(x); };
    if (f.local_range) {
        h.local_range = [scale, fr = f.local_range](const Rational& d) { return scale * fr(d); };
    }
    h.exact = f.exact;
    if (f.constant) {
        h.constant = scale * *f.constant;
    }
    if (f.germ) {
        h.germ = PolyGerm{scale * f.germ->left, scale * f.germ->at_point, scale * f.germ->right};
    }
    if (f.quotient_range) {
        h.quotient_range = [scale, fq = f.quotient_range](const Rational& d) { return scale * fq(d); };
    }
    h.quotient_exact = f.quotient_exact;
    if (f.quotient_lipschitz) {
        h.quotient_lipschitz = scale.abs() * *f.quotient_lipschitz;
    }
    return h;
}

LocalFunction operator-(const LocalFunction& f)
{
    return Rational(-1) * f;
}

bool locally_leq(const LocalFunction& f, const LocalFunction& g, bool punctured)
{
    if (f.point != g.point) {
        return false;
    }
    if (f.germ && g.germ) {
        return (punctured || f.germ->at_point <= g.germ->at_point) &&
               sign_near_zero_right(g.germ->right - f.germ->right) >= 0 &&
               sign_near_zero_left(g.germ->left - f.germ->left) >= 0;
    }
    if (f.constant && g.constant) {
        return *f.constant <= *g.constant;
    }
    if (f.constant) {
        return function_above_constant(g, *f.constant);
    }
    if (g.constant) {
        return function_below_constant(f, *g.constant);
    }
    return false;
}

PreorderRel<LocalFunction> local_order(bool punctured)
{
    return {punctured ? "<=loc (punctured)" : "<=loc",
            [punctured](const LocalFunction& f, const LocalFunction& g) { return locally_leq(f, g, punctured); }, false};
}

std::optional<bool> tangentially_leq(const LocalFunction& f, const LocalFunction& g)
{
    if (f.point != g.point || !f.germ || !g.germ) {
        return std::nullopt;
    }
    return f.germ->at_point <= g.germ->at_point && tangent_side_ok(g.germ->right - f.germ->right, true) &&
           tangent_side_ok(g.germ->left - f.germ->left, false);
}

ExtensionProblem<LocalFunction, Rational> local_limit_problem(bool punctured)
{
    ExtensionProblem<LocalFunction, Rational> p;
    p.name = punctured ? "local limit" : "continuity";
    p.candidate_order = local_order(punctured);
    p.value_order = rational_order();
    p.kernel_member = [](const LocalFunction& f) { return f.constant.has_value(); };
    p.phi.name = "constant value";
    p.phi.domain = p.kernel_member;
    p.phi.evaluate = [](const LocalFunction& f) {
        if (!f.constant) {
            throw ContractViolation("local phi evaluated on a non-constant function " + f.name);
        }
        return RationalEnclosure::point(*f.constant);
    };
    return p;
}

ApproximantGenerator<LocalFunction> radius_generator(const Rational& delta0)
{
    if (delta0.sign() <= 0) {
        throw DomainError("initial radius must be positive");
    }
    ApproximantGenerator<LocalFunction> gen;
    auto radius = [delta0](std::size_t k) { return delta0 * dyadic_unit(static_cast<unsigned>(k)); };
    gen.next_lower = [radius](const LocalFunction& f, std::size_t k) -> std::optional<LocalFunction> {
        if (!f.local_range) {
            return std::nullopt;
        }
        return LocalFunction::constant_function(f.point, f.local_range(radius(k)).lower());
    };
    gen.next_upper = [radius](const LocalFunction& f, std::size_t k) -> std::optional<LocalFunction> {
        if (!f.local_range) {
            return std::nullopt;
        }
        return LocalFunction::constant_function(f.point, f.local_range(radius(k)).upper());
    };
    gen.gap_certificate = [radius](const LocalFunction& f, std::size_t k) -> std::optional<GapCertificate> {
        if (!f.exact || !f.local_range) {
            return std::nullopt;
        }
        const auto range = f.local_range(radius(k));
        if (width(range).sign() <= 0) {
            return std::nullopt;
        }
        return GapCertificate{width(range), "local extremes " + to_string(range) + " taken in every neighbourhood"};
    };
    return gen;
}

ExtensionOutcome<Rational> continuity_at(const LocalFunction& f, const Rational& tol, std::size_t budget,
                                         const Rational& delta0)
{
    if (tol.sign() <= 0) {
        throw DomainError("continuity_at: tolerance must be positive");
    }
    const auto problem = local_limit_problem(false);
    const auto gen = radius_generator(delta0);
    return extend(problem, gen, f, tol, budget);
}

MetricCheck metric_continuity_check(const LocalMap& f, const Metric& metric, const Rational& tol, std::size_t budget)
{
    const Point at_p = f.eval(f.point);
    LocalFunction d;
    d.name = metric.name + "-distance to f(p)";
    d.point = f.point;
    d.eval = [eval = f.eval, at_p, dist = metric.dist](const Rational& x) { return dist(eval(x), at_p); };
    if (f.local_box) {
        d.local_range = [box = f.local_box, at_p, box_range = metric.box_range](const Rational& r) {
            return box_range(box(r), at_p);
        };
    }
    d.exact = f.exact_distance;
    MetricCheck check;
    check.distance = continuity_at(d, tol, budget);
    if (check.distance.status == ExtensionStatus::gap_at_least) {
        check.verdict = Verdict::refuted;
    } else if (check.distance.converged()) {
        check.verdict = Verdict::confirmed;
    }
    return check;
}

LocalFunction difference_quotient(const LocalFunction& f)
{
    if (f.point != Rational(0)) {
        throw DomainError("derivatives are taken at 0; got point " + f.point.to_string());
    }
    const Rational at_zero = f.germ ? f.germ->at_point : f.eval(Rational(0));
    if (!at_zero.is_zero()) {
        throw DomainError("derivative_at_zero needs f(0) = 0, got " + at_zero.to_string());
    }
    LocalFunction q;
    q.name = "(" + f.name + ")/x";
    q.point = Rational(0);
    q.eval = [fe = f.eval](const Rational& x) {
        if (x.is_zero()) {
            throw DomainError("difference quotient is undefined at 0");
        }
        return fe(x) / x;
    };
    if (f.quotient_range) {
        q.local_range = f.quotient_range;
        q.exact = f.quotient_exact;
        return q;
    }
    if (f.germ) {
        const auto& g = *f.germ;
        if (!g.left(Rational(0)).is_zero() || !g.right(Rational(0)).is_zero()) {
            return q;  // jump at 0: the quotient is unbounded, no range oracle
        }
        const Polynomial ql = g.left.divided_by_x();
        const Polynomial qr = g.right.divided_by_x();
        q.local_range = [ql, qr](const Rational& d) { return hull(ql.range(-d, Rational(0)), qr.range(Rational(0), d)); };
        q.exact = constant_polynomial(ql) && constant_polynomial(qr);
        if (q.exact && ql == qr) {
            q.constant = ql(Rational(0));
        }
        q.germ = PolyGerm{ql, ql(Rational(0)), qr};
        return q;
    }
    if (f.quotient_lipschitz) {
        q.local_range = [fe = f.eval, c = *f.quotient_lipschitz](const Rational& d) {
            const Rational centre = fe(d) / d;
            const Rational radius = Rational(2) * c * d;
            return RationalEnclosure(centre - radius, centre + radius);
        };
    }
    return q;
}

ExtensionOutcome<Rational> derivative_at_zero(const LocalFunction& f, const Rational& tol, std::size_t budget,
                                              const Rational& delta0)
{
    if (tol.sign() <= 0) {
        throw DomainError("derivative_at_zero: tolerance must be positive");
    }
    const LocalFunction q = difference_quotient(f);
    const auto problem = local_limit_problem(true);
    const auto gen = radius_generator(delta0);
    return extend(problem, gen, q, tol, budget);
}

}  // namespace ordclose
