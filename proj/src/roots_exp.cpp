#include "ordclose/roots_exp.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace ordclose {

namespace {

void validate(const RootQuery& query)
{
    if (query.radicand.sign() <= 0) {
        throw DomainError("nth_root: radicand must be positive, got " + query.radicand.to_string());
    }
    if (query.degree < 1) {
        throw DomainError("nth_root: degree must be >= 1");
    }
}

void validate_base(const Rational& base)
{
    if (base <= Rational(1)) {
        throw DomainError("exponential base must be > 1, got " + base.to_string());
    }
}

unsigned bit_length(const mpz_class& v)
{
    return v == 0 ? 0U : static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

bool is_power_of_two(const mpz_class& v)
{
    return v > 0 && mpz_popcount(v.get_mpz_t()) == 1;
}

// Nested brackets a_k^n <= f <= b_k^n; entry k is the bracket after k + 1 halvings.
class BisectionCache {
public:
    explicit BisectionCache(unsigned long degree) : degree_(degree) {}

    const std::pair<Rational, Rational>& bracket(const Rational& f, std::size_t k)
    {
        if (!f_ || *f_ != f) {
            f_ = f;
            brackets_.clear();
        }
        while (brackets_.size() <= k) {
            auto [lo, hi] = brackets_.empty() ? std::pair{min(Rational(1), f), max(Rational(1), f)} : brackets_.back();
            const Rational mid = (lo + hi) / Rational(2);
            if (mid.pow(static_cast<long>(degree_)) <= f) {
                lo = mid;
            } else {
                hi = mid;
            }
            brackets_.emplace_back(std::move(lo), std::move(hi));
        }
        return brackets_[k];
    }

private:
    unsigned long degree_;
    std::optional<Rational> f_;
    std::vector<std::pair<Rational, Rational>> brackets_;
};

Rational sqrt_down(const Rational& x, unsigned bits)
{
    const mpz_class n = x.numerator();
    const mpz_class d = x.denominator();
    mpz_class scaled = n * d;
    scaled <<= 2 * bits;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
    mpz_class one = 1;
    one <<= bits;
    return {q, one};
}

Rational sqrt_up(const Rational& x, unsigned bits)
{
    const mpz_class n = x.numerator();
    const mpz_class d = x.denominator();
    mpz_class scaled = n * d;
    scaled <<= 2 * bits;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    if (s * s != scaled) {
        s += 1;
    }
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
    mpz_class one = 1;
    one <<= bits;
    return {q, one};
}

}  // namespace

std::optional<Rational> exact_root(const Rational& value, unsigned long degree)
{
    if (value.sign() <= 0 || degree < 1) {
        return std::nullopt;
    }
    const auto num = integer_root(value.numerator(), degree);
    const auto den = integer_root(value.denominator(), degree);
    if (!num.exact || !den.exact) {
        return std::nullopt;
    }
    return Rational(num.root, den.root);
}

ExtensionProblem<Rational, Rational> root_problem(const RootQuery& query)
{
    validate(query);
    const auto degree = query.degree;
    ExtensionProblem<Rational, Rational> p;
    p.name = "root(n=" + std::to_string(degree) + ")";
    p.candidate_order = natural_order<Rational>();
    p.value_order = rational_order();
    p.kernel_member = [degree](const Rational& x) { return exact_root(x, degree).has_value(); };
    p.phi.name = "x^n -> x";
    p.phi.domain = p.kernel_member;
    p.phi.evaluate = [degree](const Rational& x) {
        auto r = exact_root(x, degree);
        if (!r) {
            throw ContractViolation("root phi evaluated outside K: " + x.to_string());
        }
        return RationalEnclosure::point(*r);
    };
    return p;
}

ApproximantGenerator<Rational> bisection_generator(const RootQuery& query)
{
    validate(query);
    auto cache = std::make_shared<BisectionCache>(query.degree);
    const auto n = static_cast<long>(query.degree);
    ApproximantGenerator<Rational> gen;
    gen.next_lower = [cache, n](const Rational& f, std::size_t k) -> std::optional<Rational> {
        return cache->bracket(f, k).first.pow(n);
    };
    gen.next_upper = [cache, n](const Rational& f, std::size_t k) -> std::optional<Rational> {
        return cache->bracket(f, k).second.pow(n);
    };
    return gen;
}

ExtensionOutcome<Rational> nth_root(const RootQuery& query, const Rational& tol, std::size_t budget)
{
    const auto problem = root_problem(query);
    const auto gen = bisection_generator(query);
    return extend(problem, gen, query.radicand, tol, budget);
}

namespace detail {

RationalEnclosure dyadic_power(const Rational& base, const mpz_class& s, unsigned j, unsigned bits)
{
    if (s < 0 || bit_length(s) > j) {
        throw DomainError("dyadic_power: numerator out of range");
    }
    RationalEnclosure chain(base, base);
    RationalEnclosure result(Rational(1), Rational(1));
    for (unsigned i = 1; i <= j; ++i) {
        chain = RationalEnclosure(sqrt_down(chain.lower(), bits), sqrt_up(chain.upper(), bits));
        if (mpz_tstbit(s.get_mpz_t(), j - i) != 0) {
            const auto product = result * chain;
            result = RationalEnclosure(round_down(product.lower(), bits), round_up(product.upper(), bits));
        }
    }
    return result;
}

}  // namespace detail

ExtensionOutcome<Rational> rational_power(const Rational& base, const Rational& exponent, const Rational& tol,
                                          std::size_t budget)
{
    validate_base(base);
    if (tol.sign() <= 0) {
        throw DomainError("rational_power: tolerance must be positive");
    }
    const mpz_class p = exponent.numerator();
    const mpz_class q = exponent.denominator();
    const mpz_class whole = exponent.floor();
    const mpz_class frac_num = p - whole * q;  // 0 <= frac_num < q
    if (!whole.fits_slong_p()) {
        throw DomainError("rational_power: exponent too large");
    }
    const Rational scale = base.pow(whole.get_si());

    ExtensionOutcome<Rational> out;
    if (frac_num == 0) {
        out.status = ExtensionStatus::converged;
        out.enclosure = RationalEnclosure::point(scale);
        out.iterations = 1;
        return out;
    }

    const Rational inner_tol = tol / (Rational(4) * max(Rational(1), scale));
    if (q > 64 && is_power_of_two(q)) {
        const unsigned j = bit_length(q) - 1;
        const Rational ratio = Rational(1) / inner_tol;
        unsigned bits = bit_length(ratio.ceil()) + bit_length(mpz_class(j)) + 8;
        for (std::size_t attempt = 0; attempt < budget; ++attempt) {
            const auto frac = detail::dyadic_power(base, frac_num, j, bits);
            const RationalEnclosure e = scale * frac;
            ++out.iterations;
            if (width(e) <= tol) {
                out.status = ExtensionStatus::converged;
                out.enclosure = e;
                return out;
            }
            out.enclosure = e;
            bits *= 2;
        }
        out.status = ExtensionStatus::budget_exhausted;
        return out;
    }

    if (!q.fits_ulong_p() || !frac_num.fits_slong_p()) {
        throw DomainError("rational_power: denominator too large for the root path");
    }
    const RootQuery inner{base.pow(frac_num.get_si()), q.get_ui()};
    auto root = nth_root(inner, inner_tol, budget);
    out.iterations = root.iterations;
    out.status = root.status;
    if (root.enclosure) {
        out.enclosure = scale * *root.enclosure;
    }
    return out;
}

ExtensionProblem<RationalEnclosure, Rational> exp_problem(const Rational& base, const Rational& tol)
{
    validate_base(base);
    ExtensionProblem<RationalEnclosure, Rational> p;
    p.name = "exp(u=" + base.to_string() + ")";
    p.candidate_order = {"certainly<=",
                         [](const RationalEnclosure& a, const RationalEnclosure& b) {
                             return a == b || a.upper() <= b.lower();
                         }};
    p.value_order = rational_order();
    p.kernel_member = [](const RationalEnclosure& x) { return x.lower() == x.upper(); };
    p.phi.name = "r -> u^r";
    p.phi.domain = p.kernel_member;
    const Rational phi_tol = tol / Rational(4);
    p.phi.evaluate = [base, phi_tol](const RationalEnclosure& x) {
        auto r = rational_power(base, x.lower(), phi_tol);
        if (!r.enclosure) {
            throw ContractViolation("rational_power produced no enclosure");
        }
        return *r.enclosure;
    };
    return p;
}

ApproximantGenerator<RationalEnclosure> dyadic_exponent_generator()
{
    ApproximantGenerator<RationalEnclosure> gen;
    gen.next_lower = [](const RationalEnclosure& f, std::size_t k) -> std::optional<RationalEnclosure> {
        mpz_class scale = 1;
        scale <<= k;
        const Rational a((f.lower() * Rational(scale)).floor(), scale);
        return RationalEnclosure::point(a);
    };
    gen.next_upper = [](const RationalEnclosure& f, std::size_t k) -> std::optional<RationalEnclosure> {
        mpz_class scale = 1;
        scale <<= k;
        const Rational b((f.upper() * Rational(scale)).ceil(), scale);
        return RationalEnclosure::point(b);
    };
    return gen;
}

ExtensionOutcome<Rational> real_power(const ExpQuery& query, const Rational& tol, std::size_t budget)
{
    validate_base(query.base);
    if (tol.sign() <= 0) {
        throw DomainError("real_power: tolerance must be positive");
    }
    const auto problem = exp_problem(query.base, tol);
    const auto gen = dyadic_exponent_generator();
    return extend(problem, gen, query.exponent, tol, budget);
}

}  // namespace ordclose
