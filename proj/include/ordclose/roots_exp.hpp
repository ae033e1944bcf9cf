#ifndef ORDCLOSE_ROOTS_EXP_HPP
#define ORDCLOSE_ROOTS_EXP_HPP

#include <cstddef>

#include "ordclose/engine.hpp"
#include "ordclose/rational.hpp"

namespace ordclose {

// n-th roots by nested intervals. L = M = Q+, K = { x^n | x in Q+ },
// phi(x^n) = x. A radicand outside K is bracketed by bisection
// a^n <= f <= b^n starting from [min(1, f), max(1, f)].
struct RootQuery {
    Rational radicand;
    unsigned long degree = 2;
};

// Exponentials u^r for a rational base u > 1. K = Q (point exponents),
// L = R represented by rational brackets of the real exponent.
struct ExpQuery {
    Rational base;
    RationalEnclosure exponent{Rational(0), Rational(0)};
};

ExtensionProblem<Rational, Rational> root_problem(const RootQuery& query);
ApproximantGenerator<Rational> bisection_generator(const RootQuery& query);

// Exact rational n-th root when `value` is a perfect n-th power in Q+.
std::optional<Rational> exact_root(const Rational& value, unsigned long degree);

// Converged enclosures satisfy a^n <= radicand <= b^n exactly and b - a <= tol.
// `iterations` counts bisections; BudgetExhausted when budget runs out first.
ExtensionOutcome<Rational> nth_root(const RootQuery& query, const Rational& tol, std::size_t budget = 4096);

// Enclosure of u^r, r = p/q in lowest terms. Exact for integer r.
ExtensionOutcome<Rational> rational_power(const Rational& base, const Rational& exponent, const Rational& tol,
                                          std::size_t budget = 4096);

ExtensionProblem<RationalEnclosure, Rational> exp_problem(const Rational& base, const Rational& tol);
ApproximantGenerator<RationalEnclosure> dyadic_exponent_generator();

// Enclosure of u^x for a real x known by rational bounds, approached through
// dyadic rational exponents below and above the bracket.
ExtensionOutcome<Rational> real_power(const ExpQuery& query, const Rational& tol, std::size_t budget = 256);

namespace detail {

// u^(s / 2^j) for 0 <= s < 2^j through a chain of outward-rounded square
// roots held on a 2^-bits grid. An independent route to rational_power for
// dyadic exponents.
RationalEnclosure dyadic_power(const Rational& base, const mpz_class& s, unsigned j, unsigned bits);

}  // namespace detail

}  // namespace ordclose

#endif
