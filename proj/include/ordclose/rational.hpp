#ifndef ORDCLOSE_RATIONAL_HPP
#define ORDCLOSE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ordclose {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class& integer) : q_(integer) {}
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpq_class q);

    // Accepts "p", "p/q", decimals "1.25" and scientific "1e-9", "-2.5E3".
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational reciprocal() const;
    [[nodiscard]] Rational pow(long exponent) const;
    [[nodiscard]] mpz_class floor() const;
    [[nodiscard]] mpz_class ceil() const;

    // Canonical exact form: "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;
    // Decimal with `digits` places, rounded toward -inf (down) or +inf (up).
    [[nodiscard]] std::string to_decimal_down(int digits) const;
    [[nodiscard]] std::string to_decimal_up(int digits) const;
    [[nodiscard]] double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// 2^-bits as an exact rational.
Rational dyadic_unit(unsigned bits);
// Outward rounding onto the dyadic grid 2^-bits.
Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);

// Floor of the n-th root of a nonnegative integer, and whether it is exact.
struct IntegerRoot {
    mpz_class root;
    bool exact;
};
IntegerRoot integer_root(const mpz_class& value, unsigned long degree);

// Value in [0, +inf]; used for measures.
class ExtRational {
public:
    ExtRational() = default;
    ExtRational(Rational value) : finite_(true), value_(std::move(value)) {}  // NOLINT
    ExtRational(long value) : ExtRational(Rational(value)) {}  // NOLINT
    static ExtRational infinity();
    static ExtRational parse(std::string_view text);  // Rational syntax or "inf"

    [[nodiscard]] bool is_finite() const { return finite_; }
    [[nodiscard]] const Rational& value() const;
    [[nodiscard]] std::string to_string() const;

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
    friend bool operator==(const ExtRational& a, const ExtRational& b);
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

private:
    bool finite_ = true;
    Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

}  // namespace ordclose

#endif
