#include "ordclose/rational.hpp"

#include <cctype>
#include <ostream>

namespace ordclose {

Rational::Rational(long numerator, long denominator) : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q))
{
    if (q_.get_den() == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

mpz_class pow10(unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational Rational::parse(std::string_view text)
{
    const std::string original(text);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ParseError("malformed rational literal '" + original + "'");
        }
        const mpz_class n{std::string(num), 10};
        const mpz_class d{std::string(den), 10};
        if (d == 0) {
            throw ParseError("zero denominator in '" + original + "'");
        }
        return Rational(negative ? mpz_class(-n) : n, d);
    }

    std::string_view mantissa = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        auto exp_text = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            throw ParseError("malformed exponent in '" + original + "'");
        }
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) {
            exponent = -exponent;
        }
    }
    std::string digits;
    long fraction_digits = 0;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        const auto int_part = mantissa.substr(0, dot);
        const auto frac_part = mantissa.substr(dot + 1);
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
            (int_part.empty() && frac_part.empty())) {
            throw ParseError("malformed decimal literal '" + original + "'");
        }
        digits = std::string(int_part) + std::string(frac_part);
        fraction_digits = static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(mantissa)) {
            throw ParseError("malformed rational literal '" + original + "'");
        }
        digits = std::string(mantissa);
    }
    mpz_class n(digits, 10);
    if (negative) {
        n = -n;
    }
    const long shift = exponent - fraction_digits;
    if (shift >= 0) {
        return Rational(mpz_class(n * pow10(static_cast<unsigned long>(shift))));
    }
    return Rational(n, pow10(static_cast<unsigned long>(-shift)));
}

Rational Rational::abs() const
{
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::reciprocal() const
{
    if (is_zero()) {
        throw std::domain_error("reciprocal of zero");
    }
    return Rational(q_.get_den(), q_.get_num());
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        return reciprocal().pow(-exponent);
    }
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of a reduced fraction stay reduced.
    Rational r;
    r.q_.get_num() = n;
    r.q_.get_den() = d;
    return r;
}

mpz_class Rational::floor() const
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {

std::string scaled_to_decimal(const mpz_class& scaled, int digits)
{
    const bool negative = scaled < 0;
    std::string s = mpz_class(::abs(scaled)).get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) {
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + s : s;
}

}  // namespace

std::string Rational::to_decimal_down(int digits) const
{
    const Rational scaled = *this * Rational(pow10(static_cast<unsigned long>(digits)));
    return scaled_to_decimal(scaled.floor(), digits);
}

std::string Rational::to_decimal_up(int digits) const
{
    const Rational scaled = *this * Rational(pow10(static_cast<unsigned long>(digits)));
    return scaled_to_decimal(scaled.ceil(), digits);
}

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational operator-(const Rational& a)
{
    Rational r;
    r.q_ = -a.q_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Rational min(const Rational& a, const Rational& b)
{
    return b < a ? b : a;
}

Rational max(const Rational& a, const Rational& b)
{
    return a < b ? b : a;
}

Rational dyadic_unit(unsigned bits)
{
    mpz_class d = 1;
    d <<= bits;
    return Rational(mpz_class(1), d);
}

Rational round_down(const Rational& x, unsigned bits)
{
    mpz_class scale = 1;
    scale <<= bits;
    const Rational scaled = x * Rational(scale);
    return Rational(scaled.floor(), scale);
}

Rational round_up(const Rational& x, unsigned bits)
{
    mpz_class scale = 1;
    scale <<= bits;
    const Rational scaled = x * Rational(scale);
    return Rational(scaled.ceil(), scale);
}

IntegerRoot integer_root(const mpz_class& value, unsigned long degree)
{
    if (value < 0) {
        throw std::domain_error("integer root of a negative value");
    }
    if (degree == 0) {
        throw std::domain_error("zeroth root");
    }
    IntegerRoot r;
    r.exact = mpz_root(r.root.get_mpz_t(), value.get_mpz_t(), degree) != 0;
    return r;
}

ExtRational ExtRational::infinity()
{
    ExtRational r;
    r.finite_ = false;
    return r;
}

ExtRational ExtRational::parse(std::string_view text)
{
    if (text == "inf" || text == "+inf" || text == "infinity") {
        return infinity();
    }
    return {Rational::parse(text)};
}

const Rational& ExtRational::value() const
{
    if (!finite_) {
        throw std::domain_error("value() of +inf");
    }
    return value_;
}

std::string ExtRational::to_string() const
{
    return finite_ ? value_.to_string() : "inf";
}

ExtRational operator+(const ExtRational& a, const ExtRational& b)
{
    if (!a.finite_ || !b.finite_) {
        return ExtRational::infinity();
    }
    return {a.value_ + b.value_};
}

bool operator==(const ExtRational& a, const ExtRational& b)
{
    if (a.finite_ != b.finite_) {
        return false;
    }
    return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b)
{
    if (!a.finite_ || !b.finite_) {
        if (a.finite_ == b.finite_) {
            return std::strong_ordering::equal;
        }
        return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r)
{
    return os << r.to_string();
}

}  // namespace ordclose
