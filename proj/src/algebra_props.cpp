#include "ordclose/algebra_props.hpp"

#include <algorithm>

namespace ordclose {

namespace {

Rational small_rational(SeededRng& rng, long bound, long denom)
{
    return {rng.integer(-bound, bound), rng.integer(1, denom)};
}

Polynomial random_polynomial(SeededRng& rng, long degree, long bound)
{
    std::vector<Rational> coeffs;
    const long d = rng.integer(0, degree);
    for (long i = 0; i <= d; ++i) {
        coeffs.push_back(small_rational(rng, bound, 2));
    }
    return Polynomial(std::move(coeffs));
}

StepFunction1D random_step(SeededRng& rng)
{
    std::vector<long> cuts{0, 8};
    const long extra = rng.integer(0, 3);
    for (long i = 0; i < extra; ++i) {
        cuts.push_back(rng.integer(1, 7));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Rational> breakpoints;
    std::vector<Rational> values;
    for (long c : cuts) {
        breakpoints.emplace_back(c, 8);
    }
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        values.push_back(small_rational(rng, 4, 3));
    }
    return {std::move(breakpoints), std::move(values)};
}

Integrand1D riemann_sample(SeededRng& rng)
{
    if (rng.coin()) {
        return Integrand1D::from_step("step", random_step(rng));
    }
    const auto p = random_polynomial(rng, 2, 3);
    return Integrand1D::from_polynomial(p.to_string(), Rational(0), Rational(1), p);
}

const Rational& pick(SeededRng& rng, const std::vector<Rational>& options)
{
    return options[rng.index(options.size())];
}

// a + b/n + c(-1)^n/n + d r^n
TailedSequence limits_sample(SeededRng& rng)
{
    static const std::vector<Rational> ratios{Rational(1, 2), Rational(1, 3), Rational(2, 3)};
    auto f = constant_sequence(small_rational(rng, 3, 2));
    f = f + small_rational(rng, 3, 2) * harmonic_sequence();
    if (rng.coin()) {
        f = f + small_rational(rng, 3, 2) * damped_alternating_sequence();
    }
    if (rng.coin()) {
        f = f + small_rational(rng, 3, 2) * geometric_sequence(pick(rng, ratios));
    }
    return f;
}

// a + b/n + c(-1)^n: carries a closed form, so finally-<= is decided exactly.
TailedSequence limits_form_sample(SeededRng& rng)
{
    auto f = constant_sequence(small_rational(rng, 2, 1)) + small_rational(rng, 2, 1) * harmonic_sequence();
    if (rng.coin()) {
        f = f + small_rational(rng, 1, 1) * alternating_sequence();
    }
    return f;
}

AtomicFunction lebesgue_sample(SeededRng& rng)
{
    static const std::vector<Rational> bases{Rational(1, 2), Rational(-1, 3), Rational(3, 4)};
    auto f = atomic_constant(small_rational(rng, 3, 2)) + small_rational(rng, 3, 2) * atomic_reciprocal();
    if (rng.coin()) {
        f = f + small_rational(rng, 2, 2) * atomic_alternating();
    }
    if (rng.coin()) {
        f = f + small_rational(rng, 3, 1) * atomic_exponential(pick(rng, bases));
    }
    return f;
}

AtomicFunction lebesgue_kernel_sample(SeededRng& rng)
{
    std::vector<Rational> values;
    const long n = rng.integer(1, 6);
    for (long i = 0; i < n; ++i) {
        values.push_back(small_rational(rng, 5, 3));
    }
    return AtomicFunction::from_values("step", std::move(values));
}

LocalFunction continuity_sample(SeededRng& rng)
{
    const auto p = random_polynomial(rng, 3, 3);
    auto f = LocalFunction::polynomial(p.to_string(), Rational(0), p);
    if (rng.coin()) {
        f = f + small_rational(rng, 2, 2) * abs_function();
    }
    return f;
}

LocalFunction derivative_sample(SeededRng& rng)
{
    auto p = random_polynomial(rng, 3, 3);
    std::vector<Rational> coeffs = p.coeffs();
    if (coeffs.empty()) {
        coeffs.emplace_back(0);
    }
    coeffs[0] = Rational(0);
    const Polynomial q(std::move(coeffs));
    return LocalFunction::polynomial(q.to_string(), Rational(0), q);
}

LocalFunction linear_sample(SeededRng& rng)
{
    const Polynomial p({Rational(0), small_rational(rng, 5, 3)});
    return LocalFunction::polynomial(p.to_string(), Rational(0), p);
}

template <class F>
void set_vector_ops(LawInstance<F>& inst)
{
    inst.add = [](const F& f, const F& g) { return f + g; };
    inst.neg = [](const F& f) { return -f; };
    inst.scale = [](const Rational& s, const F& f) { return s * f; };
    inst.show = [](const F& f) { return f.name; };
}

template <class F>
LawReport compatibility_of(const LawInstance<F>& inst, const std::function<F(SeededRng&)>& sampler,
                           std::size_t samples, std::uint64_t seed)
{
    OrderedVectorWitness<F> witness;
    witness.name = inst.name;
    witness.add = inst.add;
    witness.neg = inst.neg;
    witness.zero = inst.zero;
    witness.order = inst.order;
    witness.scale = inst.scale;
    SeededRng rng(seed);
    std::vector<F> pool{inst.zero};
    while (pool.size() < samples) {
        pool.push_back(sampler(rng));
    }
    CompatibilityOptions options;
    options.seed = seed;
    return check_compatibility(witness, std::span<const F>(pool), inst.show, options);
}

}  // namespace

LawReport infsup_suite(std::size_t sets, std::uint64_t seed)
{
    LawReport report;
    report.suite = "infsup";
    report.seed = seed;
    SeededRng rng(seed);
    const auto order = rational_order();
    auto random_set = [&] {
        std::vector<Rational> out;
        const long n = rng.integer(1, 6);
        for (long i = 0; i < n; ++i) {
            out.push_back(small_rational(rng, 20, 6));
        }
        return out;
    };
    auto show = [](const std::vector<Rational>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += (i == 0 ? "" : ",") + v[i].to_string();
        }
        return s + "}";
    };
    for (std::size_t t = 0; t < sets; ++t) {
        const auto a = random_set();
        const auto b = random_set();
        std::vector<Rational> sum;
        std::vector<Rational> neg;
        for (const auto& x : a) {
            neg.push_back(-x);
            for (const auto& y : b) {
                sum.push_back(x + y);
            }
        }
        const Rational inf_a = finite_inf(std::span<const Rational>(a), order);
        const Rational inf_b = finite_inf(std::span<const Rational>(b), order);
        report.cases += 3;
        const Rational inf_sum = finite_inf(std::span<const Rational>(sum), order);
        if (inf_sum != inf_a + inf_b) {
            report.add_violation("inf(A+B)", show(a) + " " + show(b), (inf_a + inf_b).to_string(), inf_sum.to_string());
        }
        const Rational sup_neg = finite_sup(std::span<const Rational>(neg), order);
        if (sup_neg != -inf_a) {
            report.add_violation("sup(-A)", show(a), (-inf_a).to_string(), sup_neg.to_string());
        }
        const Rational lambda(rng.integer(0, 6), rng.integer(1, 3));
        std::vector<Rational> scaled;
        for (const auto& x : a) {
            scaled.push_back(lambda * x);
        }
        const Rational inf_scaled = finite_inf(std::span<const Rational>(scaled), order);
        if (inf_scaled != lambda * inf_a) {
            report.add_violation("inf(lambda A)", "lambda=" + lambda.to_string() + " " + show(a),
                                 (lambda * inf_a).to_string(), inf_scaled.to_string());
        }
    }
    return report;
}

LawInstance<Integrand1D> riemann_instance(const Rational& tol)
{
    LawInstance<Integrand1D> inst;
    inst.zero = Integrand1D::from_step("0", StepFunction1D::constant(Rational(0), Rational(1), Rational(0)));
    inst.name = "riemann";
    inst.tol = tol;
    inst.order = {"pointwise<=", pointwise_leq};
    set_vector_ops(inst);
    inst.sample = riemann_sample;
    inst.sample_kernel = [](SeededRng& rng) { return Integrand1D::from_step("step", random_step(rng)); };
    inst.extend = [tol](const Integrand1D& f) { return darboux_extend(f, tol); };
    return inst;
}

LawInstance<TailedSequence> limits_instance(const Rational& tol)
{
    LawInstance<TailedSequence> inst;
    inst.zero = constant_sequence(Rational(0));
    inst.name = "limits";
    inst.tol = tol;
    inst.order = finally_order();
    set_vector_ops(inst);
    inst.mul = [](const TailedSequence& f, const TailedSequence& g) { return f * g; };
    inst.sample = limits_sample;
    inst.sample_kernel = [](SeededRng& rng) { return constant_sequence(small_rational(rng, 9, 4)); };
    inst.extend = [tol](const TailedSequence& f) { return net_limit(f, tol); };
    return inst;
}

LawInstance<AtomicFunction> lebesgue_instance(const Rational& tol)
{
    const auto space = AtomicMeasureSpace::geometric(Rational(1, 2));
    LawInstance<AtomicFunction> inst;
    inst.zero = atomic_constant(Rational(0));
    inst.name = "lebesgue";
    inst.tol = tol;
    inst.order = ae_order(space);
    set_vector_ops(inst);
    inst.sample = lebesgue_sample;
    inst.sample_kernel = lebesgue_kernel_sample;
    inst.extend = [space, tol](const AtomicFunction& f) { return lebesgue_extend(f, space, tol, 40); };
    return inst;
}

LawInstance<LocalFunction> continuity_instance(const Rational& tol)
{
    LawInstance<LocalFunction> inst;
    inst.zero = LocalFunction::constant_function(Rational(0), Rational(0));
    inst.name = "continuity";
    inst.tol = tol;
    inst.order = local_order();
    set_vector_ops(inst);
    inst.sample = continuity_sample;
    inst.sample_kernel = [](SeededRng& rng) {
        return LocalFunction::constant_function(Rational(0), small_rational(rng, 9, 4));
    };
    inst.extend = [tol](const LocalFunction& f) { return continuity_at(f, tol); };
    return inst;
}

LawInstance<LocalFunction> derivative_instance(const Rational& tol)
{
    LawInstance<LocalFunction> inst;
    inst.zero = LocalFunction::polynomial("0", Rational(0), Polynomial(std::vector<Rational>{Rational(0)}));
    inst.name = "derivative";
    inst.tol = tol;
    inst.order = {"tangential<=",
                  [](const LocalFunction& f, const LocalFunction& g) { return tangentially_leq(f, g).value_or(false); }};
    set_vector_ops(inst);
    inst.sample = derivative_sample;
    inst.sample_kernel = linear_sample;
    inst.extend = [tol](const LocalFunction& f) { return derivative_at_zero(f, tol); };
    return inst;
}

LawReport instance_compatibility(const std::string& instance, std::size_t samples, std::uint64_t seed)
{
    // Samples are drawn where the candidate order is decided exactly, so a
    // reported violation is a real one.
    if (instance == "riemann") {
        const auto inst = riemann_instance();
        return compatibility_of<Integrand1D>(inst, inst.sample_kernel, samples, seed);
    }
    if (instance == "limits") {
        return compatibility_of<TailedSequence>(limits_instance(), limits_form_sample, samples, seed);
    }
    if (instance == "lebesgue") {
        auto inst = lebesgue_instance();
        inst.order = ae_order(AtomicMeasureSpace::finite({1, 2, 0, 1}));
        inst.zero = AtomicFunction::from_values("0", {Rational(0), Rational(0), Rational(0), Rational(0)});
        const std::function<AtomicFunction(SeededRng&)> sampler = [](SeededRng& rng) {
            std::vector<Rational> values;
            for (int i = 0; i < 4; ++i) {
                values.push_back(small_rational(rng, 3, 1));
            }
            return AtomicFunction::from_values("f", std::move(values));
        };
        return compatibility_of<AtomicFunction>(inst, sampler, samples, seed);
    }
    if (instance == "continuity") {
        const std::function<LocalFunction(SeededRng&)> sampler = [](SeededRng& rng) {
            const auto p = random_polynomial(rng, 2, 2);
            return LocalFunction::polynomial(p.to_string(), Rational(0), p);
        };
        return compatibility_of<LocalFunction>(continuity_instance(), sampler, samples, seed);
    }
    if (instance == "derivative") {
        const auto inst = derivative_instance();
        return compatibility_of<LocalFunction>(inst, inst.sample, samples, seed);
    }
    throw DomainError("unknown law instance '" + instance + "'");
}

std::vector<std::string> law_suite_names()
{
    return {"additivity", "scaling", "negation", "product", "compatibility", "infsup"};
}

std::vector<std::string> law_instance_names()
{
    return {"riemann", "limits", "lebesgue", "continuity", "derivative"};
}

namespace {

template <class F>
LawReport run_on(const std::string& suite, const LawInstance<F>& inst, std::uint64_t seed, std::size_t cases)
{
    if (suite == "additivity") {
        return additivity_suite(inst, cases, seed);
    }
    if (suite == "scaling") {
        return scaling_suite(inst, cases, seed);
    }
    if (suite == "negation") {
        return negation_suite(inst, cases, seed);
    }
    if (suite == "product") {
        return product_suite(inst, cases, seed);
    }
    throw DomainError("unknown law suite '" + suite + "'");
}

}  // namespace

LawReport run_law_suite(const std::string& suite, const std::string& instance, std::uint64_t seed, std::size_t cases)
{
    if (suite == "infsup") {
        return infsup_suite(cases, seed);
    }
    if (suite == "compatibility") {
        return instance_compatibility(instance, std::min<std::size_t>(std::max<std::size_t>(cases, 2), 14), seed);
    }
    if (instance == "riemann") {
        return run_on(suite, riemann_instance(), seed, cases);
    }
    if (instance == "limits") {
        return run_on(suite, limits_instance(), seed, cases);
    }
    if (instance == "lebesgue") {
        return run_on(suite, lebesgue_instance(), seed, cases);
    }
    if (instance == "continuity") {
        return run_on(suite, continuity_instance(), seed, cases);
    }
    if (instance == "derivative") {
        return run_on(suite, derivative_instance(), seed, cases);
    }
    throw DomainError("unknown law instance '" + instance + "'");
}

}  // namespace ordclose
