// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ordclose/algebra_props.hpp"
#include "ordclose/cli.hpp"
#include "ordclose/closure_systems.hpp"
#include "ordclose/filters_topology.hpp"
#include "ordclose/fixtures.hpp"
#include "ordclose/integration.hpp"
#include "ordclose/limits_local.hpp"
#include "ordclose/random.hpp"
#include "ordclose/roots_exp.hpp"

using namespace ordclose;

namespace {

// Pinned tolerances and sizes.
const Rational kRootTol = Rational::parse("1e-9");
const Rational kPowTol = Rational::parse("1e-6");
const Rational kCombinedWidth = Rational::parse("2e-6");
const Rational kSquareTol = Rational::parse("1e-3");
const Rational kLimitTol = Rational::parse("1e-6");
const Rational kKernelTol = Rational::parse("1e-6");
constexpr std::size_t kMaxBisections = 64;
constexpr std::size_t kMaxLevels = 20;
constexpr double kKernelSeconds = 5.0;
constexpr std::size_t kSuitePairs = 200;
constexpr std::size_t kProductPairs = 100;
constexpr std::size_t kRandomClosureInputs = 200;
constexpr std::uint64_t kSeed = 20240601;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

bool exact(const ExtensionOutcome<Rational>& out, const Rational& value)
{
    return out.converged() && out.enclosure && out.enclosure->lower() == value && out.enclosure->upper() == value;
}

std::string show(const ExtensionOutcome<Rational>& out)
{
    std::string s = to_string(out.status);
    if (out.enclosure) {
        s += " " + to_string(*out.enclosure);
    }
    return s;
}

Polynomial poly(std::initializer_list<long> coeffs)
{
    std::vector<Rational> c;
    for (long v : coeffs) {
        c.emplace_back(v);
    }
    return Polynomial(c);
}

Check kernel_identity()
{
    Check c;
    const auto start = std::chrono::steady_clock::now();
    std::size_t fixtures = 0;
    const auto expect = [&](bool ok, const std::string& name) {
        ++fixtures;
        c.require(ok, name);
    };

    // Roots of perfect powers.
    const std::vector<std::pair<Rational, unsigned long>> roots = {
        {Rational(1), 2}, {Rational(2), 2}, {Rational(3), 3}, {Rational(2, 3), 2},
        {Rational(5), 4}, {Rational(7, 2), 3}, {Rational(10), 2}, {Rational(1, 4), 5}};
    for (const auto& [r, n] : roots) {
        expect(exact(nth_root(RootQuery{r.pow(static_cast<long>(n)), n}, kKernelTol), r), "root of " + r.to_string());
    }
    // Exponentials at integer exponents.
    expect(exact(real_power(ExpQuery{Rational(2), RationalEnclosure(Rational(0), Rational(0))}, kKernelTol),
                 Rational(1)),
           "2^[0,0]");
    expect(exact(rational_power(Rational(3), Rational(4), kKernelTol), Rational(81)), "3^4");
    expect(exact(rational_power(Rational(3, 2), Rational(-2), kKernelTol), Rational(4, 9)), "(3/2)^-2");
    expect(exact(rational_power(Rational(2), Rational(0), kKernelTol), Rational(1)), "2^0");
    // Step functions.
    SeededRng rng(kSeed);
    for (int i = 0; i < 8; ++i) {
        std::vector<Rational> breaks{Rational(0)};
        std::vector<Rational> values;
        const long pieces = rng.integer(1, 6);
        for (long p = 1; p <= pieces; ++p) {
            breaks.emplace_back(p, pieces);
            values.emplace_back(rng.integer(-9, 9), rng.integer(1, 4));
        }
        const StepFunction1D s(breaks, values);
        expect(exact(darboux_extend(Integrand1D::from_step("step", s), kKernelTol), step_integral(s)),
               "step " + std::to_string(i));
    }
    // Finitely supported functions on atomic spaces.
    const auto geometric = AtomicMeasureSpace::geometric(Rational(1, 2));
    const auto finite = AtomicMeasureSpace::finite({Rational(1), Rational(2), Rational(0), Rational(1, 3)});
    for (int i = 0; i < 6; ++i) {
        std::vector<Rational> v;
        for (int a = 0; a < 4; ++a) {
            v.emplace_back(rng.integer(-5, 5), rng.integer(1, 3));
        }
        const auto& space = i % 2 == 0 ? geometric : finite;
        const auto f = AtomicFunction::from_values("f", v);
        const auto sum = mu_step_integral(f, space);
        expect(sum.lower() == sum.upper() && exact(lebesgue_extend(f, space, kKernelTol), sum.lower()),
               "atomic " + std::to_string(i));
    }
    // Constant sequences and constant local functions.
    for (long v : {-3L, 0L, 1L, 7L, 22L, -100L}) {
        const Rational c(v, 7);
        expect(exact(net_limit(constant_sequence(c), kKernelTol), c), "sequence " + c.to_string());
    }
    for (long v : {-2L, 0L, 3L, 5L, 9L}) {
        const Rational c(v, 3);
        expect(exact(continuity_at(LocalFunction::constant_function(Rational(0), c), kKernelTol), c),
               "local " + c.to_string());
    }
    // Linear maps under the derivative.
    for (long m : {-4L, 0L, 1L, 6L}) {
        expect(exact(derivative_at_zero(LocalFunction::polynomial("mx", Rational(0), poly({0, m})), kKernelTol),
                     Rational(m)),
               "slope " + std::to_string(m));
    }
    // Closed sets of closure systems.
    const auto s3 = subgroup_system(FiniteGroup::symmetric(3));
    const auto sigma = sigma_system(3);
    const auto topo = topological_system(FiniteTopology::sierpinski());
    const std::vector<std::pair<const ClosureSystem*, ElementSet>> closed = {
        {&s3, l_closure(1, s3).closure},       {&s3, s3.top()},
        {&sigma, l_closure(2, sigma).closure}, {&sigma, sigma.top()},
        {&topo, l_closure(1, topo).closure}};
    for (const auto& [system, k] : closed) {
        expect(one_sided_extend(closure_problem(*system), k) == k, system->name + " closed set");
    }
    // Ring members under the outer measure.
    const SetRing ring(3, {0, 1, 6, 7}, {"1", "2", "3"});
    const PreMeasure pre(ring, {{0, ExtRational(0)}, {1, ExtRational(2)}, {6, ExtRational(1)}, {7, ExtRational(3)}});
    for (Subset m : ring.members()) {
        expect(outer_measure(pre, m) == pre(m), "ring member " + ring.show(m));
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(fixtures == 50, "expected 50 fixtures, ran " + std::to_string(fixtures));
    c.require(seconds < kKernelSeconds, "took " + std::to_string(seconds) + " s");
    std::ostringstream d;
    d << fixtures << " fixtures, " << seconds << " s";
    c.detail = c.ok ? d.str() : d.str() + ": " + c.detail;
    return c;
}

Check roots()
{
    Check c;
    const auto r = nth_root(RootQuery{Rational(2), 2}, kRootTol, kMaxBisections);
    c.require(r.converged() && r.enclosure.has_value(), "sqrt 2: " + show(r));
    if (r.enclosure) {
        const auto& e = *r.enclosure;
        c.require(e.lower() * e.lower() <= Rational(2) && Rational(2) <= e.upper() * e.upper(), "a^2 <= 2 <= b^2");
        c.require(width(e) <= kRootTol, "width " + width(e).to_string());
    }
    c.require(r.iterations <= kMaxBisections, std::to_string(r.iterations) + " bisections");
    const auto cube = nth_root(RootQuery{Rational(8), 3}, kRootTol);
    c.require(cube.enclosure && contains(*cube.enclosure, Rational(2)), "cube root of 8: " + show(cube));
    if (c.ok) {
        c.detail = std::to_string(r.iterations) + " bisections, " + decimal_display(*r.enclosure, 11);
    }
    return c;
}

Check exponentials()
{
    Check c;
    const auto p = rational_power(Rational(2), Rational(1, 2), kPowTol);
    const auto r = nth_root(RootQuery{Rational(2), 2}, kPowTol);
    c.require(p.enclosure && r.enclosure, "missing enclosure");
    if (p.enclosure && r.enclosure) {
        c.require(intersects(*p.enclosure, *r.enclosure), "enclosures disjoint");
        const Rational combined = width(hull(*p.enclosure, *r.enclosure));
        c.require(combined <= kCombinedWidth, "combined width " + combined.to_string());
        if (c.ok) {
            c.detail = "combined width " + combined.to_decimal_up(9);
        }
    }
    const auto one = real_power(ExpQuery{Rational(2), RationalEnclosure(Rational(0), Rational(0))}, kPowTol);
    c.require(exact(one, Rational(1)), "2^[0,0] = " + show(one));
    return c;
}

Check riemann()
{
    Check c;
    const auto x = Integrand1D::from_polynomial("x", Rational(0), Rational(1), poly({0, 1}));
    const auto gen = darboux_generator();
    for (std::size_t k = 0; k <= 12; ++k) {
        const Rational two_k = Rational(2).pow(static_cast<long>(k));
        const RationalEnclosure closed_form((two_k - 1) / (2 * two_k), (two_k + 1) / (2 * two_k));
        const auto lower = gen.next_lower(x, k);
        const auto upper = gen.next_upper(x, k);
        c.require(lower && upper && lower->step && upper->step, "level " + std::to_string(k) + " has no step witness");
        if (lower && upper && lower->step && upper->step) {
            c.require(step_integral(*lower->step) == closed_form.lower() &&
                          step_integral(*upper->step) == closed_form.upper(),
                      "level " + std::to_string(k) + " sums differ");
        }
        // The engine, given exactly the oracle calls of levels 0..k.
        const std::size_t calls = (std::size_t{1} << (k + 1)) - 1;
        const auto out = darboux_extend(x, Rational(1, 1000000000), calls);
        c.require(out.enclosure && out.enclosure->lower() == closed_form.lower() &&
                      out.enclosure->upper() == closed_form.upper(),
                  "engine at level " + std::to_string(k) + ": " + show(out));
    }
    const auto sq = darboux_extend(Integrand1D::from_polynomial("x^2", Rational(0), Rational(1), poly({0, 0, 1})),
                                   kSquareTol, (std::size_t{1} << (kMaxLevels + 1)) - 1);
    c.require(sq.converged() && sq.enclosure && contains(*sq.enclosure, Rational(1, 3)) &&
                  width(*sq.enclosure) <= kSquareTol,
              "x^2: " + show(sq));
    c.require(sq.iterations <= kMaxLevels + 1, "x^2 used " + std::to_string(sq.iterations) + " levels");
    const auto d = darboux_extend(dirichlet_oracle(), Rational(0), Rational(1), kKernelTol);
    c.require(d.status == ExtensionStatus::gap_at_least && d.gap && *d.gap == Rational(1), "dirichlet: " + show(d));
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli({"integrate", "riemann", "--domain", "0,1", "--oracle", "dirichlet"}, out, err);
    c.require(code == 2, "dirichlet exit code " + std::to_string(code));
    if (c.ok) {
        c.detail = "levels 0..12 exact; x^2 in " + std::to_string(sq.iterations) + " levels; dirichlet gap 1, exit 2";
    }
    return c;
}

Check report_clean(const LawReport& r, std::size_t min_cases, Check& c)
{
    c.require(r.ok(), r.suite + ": " + std::to_string(r.violations.size()) + " violations");
    c.require(r.cases >= min_cases, r.suite + ": only " + std::to_string(r.cases) + " cases");
    return c;
}

Check linearity_suites()
{
    Check c;
    std::string counts;
    for (const std::string suite : {"additivity", "scaling"}) {
        for (const std::string instance : {"riemann", "limits"}) {
            const auto r = run_law_suite(suite, instance, kSeed, kSuitePairs);
            // Each pair is one case per law checked; skipped pairs do not count.
            report_clean(r, kSuitePairs, c);
            counts += (counts.empty() ? "" : ", ") + r.suite + " " + std::to_string(r.cases) + " cases/" +
                      std::to_string(r.skipped) + " skipped";
        }
    }
    for (const auto& instance : law_instance_names()) {
        const auto r = run_law_suite("negation", instance, kSeed, 50);
        report_clean(r, 50, c);
    }
    if (c.ok) {
        c.detail = counts + "; negation exact on all instances";
    }
    return c;
}

Check product()
{
    Check c;
    const auto r = run_law_suite("product", "limits", kSeed, kProductPairs);
    report_clean(r, kProductPairs, c);
    if (c.ok) {
        c.detail = std::to_string(r.cases) + " cases";
    }
    return c;
}

Check limits()
{
    Check c;
    const auto h = net_limit(harmonic_sequence(), kLimitTol);
    c.require(h.converged() && h.enclosure && contains(*h.enclosure, Rational(0)) && width(*h.enclosure) <= kLimitTol,
              "harmonic: " + show(h));
    const auto a = net_limit(alternating_sequence(), kLimitTol);
    c.require(a.status == ExtensionStatus::gap_at_least && a.gap && *a.gap == Rational(2), "alternating: " + show(a));

    // c + p/n + b(-1)^n + q(-1)^n/n (+ r^n when b = 0): liminf c - |b|, limsup c + |b|.
    SeededRng rng(kSeed + 7);
    for (int i = 0; i < 20; ++i) {
        const Rational base(rng.integer(-20, 20), rng.integer(1, 5));
        const Rational p(rng.integer(-5, 5), rng.integer(1, 3));
        const Rational b = i % 2 == 0 ? Rational(0) : Rational(rng.integer(-4, 4), rng.integer(1, 3));
        const Rational q(rng.integer(-3, 3), rng.integer(1, 2));
        const Rational r(rng.integer(0, 8), 9);
        const std::string expr = base.to_string() + "+" + p.to_string() + "*harmonic+" + b.to_string() + "*alt+" +
                                 q.to_string() + "*damped" + (b.is_zero() ? "+geometric:" + r.to_string() : "");
        const auto f = parse_sequence(expr);
        const Rational liminf = base - b.abs();
        const Rational limsup = base + b.abs();
        const auto out = net_limit(f, kLimitTol);
        const bool contained =
            out.enclosure && out.enclosure->lower() <= liminf && limsup <= out.enclosure->upper();
        c.require(contained, expr + ": " + show(out));
        if (b.is_zero()) {
            c.require(out.converged(), expr + " should converge: " + show(out));
        } else {
            c.require(out.status == ExtensionStatus::gap_at_least, expr + " should certify a gap: " + show(out));
        }
    }
    if (c.ok) {
        c.detail = "harmonic width " + width(*h.enclosure).to_string() + "; alternating gap 2; 20 fixtures contained";
    }
    return c;
}

Check continuity_derivative()
{
    Check c;
    const auto s = continuity_at(sign_function(), kLimitTol);
    c.require(s.status == ExtensionStatus::gap_at_least && s.gap && *s.gap == Rational(2), "sign: " + show(s));
    const auto a = derivative_at_zero(abs_function(), kLimitTol);
    c.require(a.status == ExtensionStatus::gap_at_least && a.gap && *a.gap == Rational(2), "|x|': " + show(a));
    const auto sq = derivative_at_zero(LocalFunction::polynomial("x^2", Rational(0), poly({0, 0, 1})), kLimitTol);
    c.require(sq.converged() && sq.enclosure && contains(*sq.enclosure, Rational(0)) &&
                  width(*sq.enclosure) <= kLimitTol,
              "(x^2)': " + show(sq));
    if (c.ok) {
        c.detail = "sign gap 2; |x|' gap 2; (x^2)' width " + width(*sq.enclosure).to_string();
    }
    return c;
}

Check filters()
{
    Check c;
    std::size_t topologies = 0;
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& top : enumerate_topologies(n)) {
            const auto r = kbounded_closure_check(top);
            ++topologies;
            cases += r.cases;
            c.require(r.ok(), "K-bounded check fails on " + top.show(top.carrier()));
        }
    }
    const auto cont = continuity_cross_check(3);
    c.require(cont.ok(), std::to_string(cont.violations.size()) + " continuity disagreements");
    if (c.ok) {
        c.detail = std::to_string(topologies) + " topologies, " + std::to_string(cases) + " filter cases; " +
                   std::to_string(cont.cases) + " continuity cases";
    }
    return c;
}

Check closure_systems_check()
{
    Check c;
    const auto generated = FiniteGroup::from_permutations(3, {{2, 1, 3}, {1, 3, 2}});
    const auto s3 = subgroup_system(FiniteGroup::symmetric(3));
    const ElementSet k = s3.parse({"(12)", "(23)"});
    c.require(generated.size() == 6 && std::popcount(l_closure(k, s3).closure) == 6, "<(12),(23)> != S3");
    const auto sigma3 = sigma_system(3);
    c.require(std::popcount(l_closure(sigma3.parse({"{1}"}), sigma3).closure) == 4, "sigma({{1}}) != 4 sets");

    // Both methods on seeded random inputs.
    std::vector<ClosureSystem> systems = {s3,
                                          subgroup_system(FiniteGroup::cyclic(12)),
                                          subgroup_system(FiniteGroup::from_permutations(4, {{2, 1, 4, 3}, {3, 4, 1, 2}})),
                                          sigma3,
                                          sigma_system(4),
                                          topological_system(FiniteTopology::sierpinski())};
    for (const auto& top : enumerate_topologies(3)) {
        systems.push_back(topological_system(top));
    }
    SeededRng rng(kSeed);
    std::size_t compared = 0;
    for (const auto& system : systems) {
        for (std::size_t i = 0; i < kRandomClosureInputs; ++i) {
            const ElementSet input = system.size == 64 ? rng.integer(0, 1L << 62) : rng.integer(0, static_cast<long>(system.top()));
            const ElementSet in = input & system.top();
            try {
                const auto r = l_closure(in, system);
                c.require(r.by_intersection && r.by_fixpoint && *r.by_intersection == *r.by_fixpoint,
                          system.name + ": methods missing or differ");
                ++compared;
            } catch (const ContractViolation& e) {
                c.require(false, system.name + ": " + e.what());
            }
        }
    }
    // Exhaustive closure-operator laws on 3-element carriers.
    std::size_t exhaustive = 0;
    for (const auto& top : enumerate_topologies(3)) {
        const auto r = closure_operator_laws(topological_system(top), 0, kSeed);
        c.require(r.ok(), "closure laws fail on " + top.show(top.carrier()));
        exhaustive += r.cases;
    }
    const auto c3 = closure_operator_laws(subgroup_system(FiniteGroup::cyclic(3)), 0, kSeed);
    c.require(c3.ok(), "closure laws fail on C3");
    exhaustive += c3.cases;
    if (c.ok) {
        c.detail = std::to_string(compared) + " random inputs over " + std::to_string(systems.size()) +
                   " systems; " + std::to_string(exhaustive) + " exhaustive law cases";
    }
    return c;
}

// Every partition of {0..n-1}, as lists of blocks.
void partitions(std::size_t n, std::size_t x, std::vector<Subset>& blocks, std::vector<std::vector<Subset>>& out)
{
    if (x == n) {
        out.push_back(blocks);
        return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b] |= singleton(x);
        partitions(n, x + 1, blocks, out);
        blocks[b] &= ~singleton(x);
    }
    blocks.push_back(singleton(x));
    partitions(n, x + 1, blocks, out);
    blocks.pop_back();
}

Check outer_measure_check()
{
    Check c;
    const SetRing ring(3, {0, 1, 6, 7}, {"1", "2", "3"});
    const PreMeasure pre(ring, {{0, ExtRational(0)}, {1, ExtRational(2)}, {6, ExtRational(1)}, {7, ExtRational(3)}});
    c.require(outer_measure(pre, 1) == ExtRational(2), "mu*({1}) = " + outer_measure(pre, 1).to_string());

    // Rings generated by every partition of carriers up to 4 points, with
    // seeded weights (some infinite).
    SeededRng rng(kSeed);
    std::size_t rings = 0;
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::vector<Subset>> all;
        std::vector<Subset> blocks;
        partitions(n, 0, blocks, all);
        for (const auto& parts : all) {
            std::vector<ExtRational> weight;
            for (std::size_t b = 0; b < parts.size(); ++b) {
                weight.push_back(rng.integer(0, 9) == 0 ? ExtRational::infinity() : ExtRational(Rational(rng.integer(0, 6), rng.integer(1, 3))));
            }
            std::vector<Subset> members;
            std::map<Subset, ExtRational> mu;
            for (Subset pick = 0; pick < (Subset{1} << parts.size()); ++pick) {
                Subset s = 0;
                ExtRational m(0);
                for (std::size_t b = 0; b < parts.size(); ++b) {
                    if (((pick >> b) & 1U) != 0) {
                        s |= parts[b];
                        m = m + weight[b];
                    }
                }
                members.push_back(s);
                mu[s] = m;
            }
            const PreMeasure p(SetRing(n, members), mu);
            const auto laws = outer_measure_laws(p);
            c.require(laws.ok(), "outer-measure laws fail on a ring over " + std::to_string(n) + " points");
            cases += laws.cases;
            try {
                caratheodory_restrict(p);
            } catch (const AdditivityViolation& e) {
                c.require(false, std::string("restriction: ") + e.what());
            }
            ++rings;
        }
    }
    try {
        const auto restricted = caratheodory_restrict(pre);
        c.require(restricted.sigma_algebra.size() == 4, "fixture sigma-algebra has " +
                                                             std::to_string(restricted.sigma_algebra.size()) + " sets");
    } catch (const AdditivityViolation& e) {
        c.require(false, std::string("fixture restriction: ") + e.what());
    }
    if (c.ok) {
        c.detail = "mu*({1}) = 2; " + std::to_string(rings) + " rings, " + std::to_string(cases) +
                   " law cases; restrictions additive";
    }
    return c;
}

const std::vector<std::vector<std::string>>& cli_matrix()
{
    static const std::vector<std::vector<std::string>> m = {
        {"root", "--radicand", "2", "--degree", "2", "--tol", "1e-9", "--json"},
        {"pow", "--base", "2", "--exp", "1/2"},
        {"pow", "--base", "3", "--exp", "1/3,1/2", "--tol", "1e-3"},
        {"integrate", "riemann", "--domain", "0,1", "--oracle", "x^2", "--tol", "1e-3"},
        {"integrate", "riemann", "--domain", "0,1", "--oracle", "dirichlet"},
        {"integrate", "lebesgue", "--space", "geometric:1/2", "--f", "reciprocal"},
        {"limit", "--seq", "alt", "--json"},
        {"limit", "--seq", "2+harmonic"},
        {"continuity", "--fn", "sign", "--at", "0"},
        {"derivative", "--fn", "abs"},
        {"filters", "--space", "sierpinski", "--map", "1,0"},
        {"closure", "group", "--input", "S3", "--set", "(12),(23)"},
        {"closure", "sigma", "--input", "{\"carrier\":[1,2,3]}", "--set", "{1}"},
        {"closure", "topo", "--input", "discrete:3", "--set", "0"},
        {"measure", "extend", "--ring",
         "{\"carrier\":[1,2,3],\"sets\":[[1],[2,3],[1,2,3]],\"mu\":{\"{1}\":2,\"{2,3}\":1,\"{1,2,3}\":3}}", "--set", "1"},
        {"measure", "restrict", "--ring",
         "{\"carrier\":[1,2,3],\"sets\":[[1],[2,3],[1,2,3]],\"mu\":{\"{1}\":2,\"{2,3}\":1,\"{1,2,3}\":3}}"},
        {"--seed", "9", "laws", "--suite", "additivity", "--instance", "limits", "--cases", "20"},
        {"--seed", "9", "laws", "--suite", "infsup", "--cases", "20"},
        {"--plain", "fixtures"},
    };
    return m;
}

std::string quote(const std::string& s)
{
    std::string out = "'";
    for (char ch : s) {
        out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    }
    return out + "'";
}

// stdout and exit status of the command-line tool run as a separate process.
std::pair<std::string, int> run_process(const std::vector<std::string>& args)
{
    std::string cmd = quote(ORDCLOSE_CLI_PATH);
    for (const auto& a : args) {
        cmd += " " + quote(a);
    }
    cmd += " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return {"", -1};
    }
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
        out += buf.data();
    }
    const int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

Check determinism()
{
    Check c;
    std::size_t runs = 0;
    for (const auto& args : cli_matrix()) {
        const auto first = run_process(args);
        const auto second = run_process(args);
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        runs += 3;
        std::string joined;
        for (const auto& a : args) {
            joined += a + " ";
        }
        c.require(!first.first.empty(), "no output from: " + joined);
        c.require(first == second, "process runs differ: " + joined);
        c.require(first.first == out.str() && first.second == code, "in-process run differs: " + joined);
    }
    if (c.ok) {
        c.detail = std::to_string(cli_matrix().size()) + " commands, " + std::to_string(runs) + " runs byte-identical";
    }
    return c;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"kernel identity", kernel_identity},
        {"roots", roots},
        {"exponentials", exponentials},
        {"riemann", riemann},
        {"additivity/scaling/negation suites", linearity_suites},
        {"product suite", product},
        {"limits", limits},
        {"continuity/derivative", continuity_derivative},
        {"filters", filters},
        {"closure systems", closure_systems_check},
        {"outer measure", outer_measure_check},
        {"cli determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        failed += c.ok ? 0 : 1;
        std::cout << (c.ok ? "PASS " : "FAIL ") << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first
                  << ": " << c.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
