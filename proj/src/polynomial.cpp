#include "ordclose/polynomial.hpp"

#include <stdexcept>

namespace ordclose {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial({c});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::shifted(const Rational& center) const
{
    // Repeated synthetic division by (x - center).
    std::vector<Rational> work = coeffs_;
    const std::size_t n = work.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = n - 1; j > i; --j) {
            work[j - 1] += center * work[j];
        }
    }
    return Polynomial(std::move(work));
}

RationalEnclosure Polynomial::range(const Rational& lo, const Rational& hi) const
{
    if (hi < lo) {
        throw std::invalid_argument("polynomial range over an empty box");
    }
    if (is_zero()) {
        return {Rational(0), Rational(0)};
    }
    const Rational mid = (lo + hi) / Rational(2);
    const Rational radius = (hi - lo) / Rational(2);
    const Polynomial taylor = shifted(mid);
    Rational spread(0);
    Rational power(1);
    for (std::size_t j = 1; j < taylor.coeffs_.size(); ++j) {
        power *= radius;
        spread += taylor.coeffs_[j].abs() * power;
    }
    // Exact for polynomials of degree <= 1.
    const Rational centre = taylor.coeff(0);
    return {centre - spread, centre + spread};
}

std::size_t Polynomial::lowest_order() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            return i;
        }
    }
    throw std::domain_error("lowest_order of the zero polynomial");
}

Rational Polynomial::lowest_coeff() const
{
    return coeffs_[lowest_order()];
}

Rational Polynomial::leading_coeff() const
{
    return is_zero() ? Rational(0) : coeffs_.back();
}

Polynomial Polynomial::divided_by_x() const
{
    if (!coeff(0).is_zero()) {
        throw std::domain_error("divided_by_x: p(0) != 0");
    }
    if (is_zero()) {
        return {};
    }
    return Polynomial(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

std::string Polynomial::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += coeffs_[i].to_string();
        if (i == 1) {
            out += "*x";
        } else if (i > 1) {
            out += "*x^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coeff(i) + b.coeff(i);
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a)
{
    std::vector<Rational> c;
    c.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) {
        c.push_back(-x);
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& a)
{
    std::vector<Rational> c;
    c.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) {
        c.push_back(s * x);
    }
    return Polynomial(std::move(c));
}

int sign_near_zero_right(const Polynomial& p)
{
    return p.is_zero() ? 0 : p.lowest_coeff().sign();
}

int sign_near_zero_left(const Polynomial& p)
{
    if (p.is_zero()) {
        return 0;
    }
    const int s = p.lowest_coeff().sign();
    return p.lowest_order() % 2 == 0 ? s : -s;
}

int sign_at_infinity(const Polynomial& p)
{
    return p.leading_coeff().sign();
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
}

Rational RationalFunction::operator()(const Rational& x) const
{
    return num_(x) / den_(x);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.den_ == b.den_) {
        return {a.num_ + b.num_, a.den_};
    }
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return a + Rational(-1) * b;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator*(const Rational& s, const RationalFunction& a)
{
    return {s * a.num_, a.den_};
}

int sign_near_zero_right(const RationalFunction& r)
{
    return sign_near_zero_right(r.numerator()) * sign_near_zero_right(r.denominator());
}

int sign_near_zero_left(const RationalFunction& r)
{
    return sign_near_zero_left(r.numerator()) * sign_near_zero_left(r.denominator());
}

int sign_at_infinity(const RationalFunction& r)
{
    return sign_at_infinity(r.numerator()) * sign_at_infinity(r.denominator());
}

}  // namespace ordclose
