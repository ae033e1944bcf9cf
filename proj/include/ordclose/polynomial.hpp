#ifndef ORDCLOSE_POLYNOMIAL_HPP
#define ORDCLOSE_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "ordclose/order.hpp"
#include "ordclose/rational.hpp"

namespace ordclose {

// Dense univariate polynomial with exact rational coefficients,
// coeffs[i] multiplying x^i. Trailing zeros are trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coeff(std::size_t i) const;

    [[nodiscard]] Rational operator()(const Rational& x) const;
    // Coefficients of t -> p(center + t).
    [[nodiscard]] Polynomial shifted(const Rational& center) const;
    // Sound bound on { p(x) | x in [lo, hi] } from the Taylor form at the midpoint.
    [[nodiscard]] RationalEnclosure range(const Rational& lo, const Rational& hi) const;
    // Index and coefficient of the lowest-order nonzero term; the zero
    // polynomial has none.
    [[nodiscard]] std::size_t lowest_order() const;
    [[nodiscard]] Rational lowest_coeff() const;
    [[nodiscard]] Rational leading_coeff() const;
    // p(x) / x, requires p(0) = 0.
    [[nodiscard]] Polynomial divided_by_x() const;

    [[nodiscard]] std::string to_string() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Sign (-1, 0, 1) of p(t) for all sufficiently small t > 0 (right) or t < 0 (left).
int sign_near_zero_right(const Polynomial& p);
int sign_near_zero_left(const Polynomial& p);
// Sign of p(n) for all sufficiently large n.
int sign_at_infinity(const Polynomial& p);

// numerator / denominator with a nonzero denominator polynomial.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial numerator, Polynomial denominator);
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}  // NOLINT

    [[nodiscard]] const Polynomial& numerator() const { return num_; }
    [[nodiscard]] const Polynomial& denominator() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] Rational operator()(const Rational& x) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const Rational& s, const RationalFunction& a);

private:
    Polynomial num_;
    Polynomial den_;
};

int sign_near_zero_right(const RationalFunction& r);
int sign_near_zero_left(const RationalFunction& r);
int sign_at_infinity(const RationalFunction& r);

}  // namespace ordclose

#endif
