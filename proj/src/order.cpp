#include "ordclose/order.hpp"

namespace ordclose {

ValueOrder<Rational> rational_order()
{
    auto order = total_value_order<Rational>();
    order.width = [](const Rational& lo, const Rational& hi) { return hi - lo; };
    return order;
}

ValueOrder<ExtRational> ext_rational_order()
{
    auto order = total_value_order<ExtRational>();
    order.completeness = Completeness::complete_from_below;
    return order;
}

Rational width(const RationalEnclosure& e)
{
    return e.upper() - e.lower();
}

Rational midpoint(const RationalEnclosure& e)
{
    return (e.lower() + e.upper()) / Rational(2);
}

bool contains(const RationalEnclosure& e, const Rational& x)
{
    return e.lower() <= x && x <= e.upper();
}

bool intersects(const RationalEnclosure& a, const RationalEnclosure& b)
{
    return a.lower() <= b.upper() && b.lower() <= a.upper();
}

RationalEnclosure hull(const RationalEnclosure& a, const RationalEnclosure& b)
{
    return {min(a.lower(), b.lower()), max(a.upper(), b.upper())};
}

RationalEnclosure operator+(const RationalEnclosure& a, const RationalEnclosure& b)
{
    return {a.lower() + b.lower(), a.upper() + b.upper()};
}

RationalEnclosure operator-(const RationalEnclosure& a, const RationalEnclosure& b)
{
    return {a.lower() - b.upper(), a.upper() - b.lower()};
}

RationalEnclosure operator-(const RationalEnclosure& a)
{
    return {-a.upper(), -a.lower()};
}

RationalEnclosure operator*(const RationalEnclosure& a, const RationalEnclosure& b)
{
    const Rational p1 = a.lower() * b.lower();
    const Rational p2 = a.lower() * b.upper();
    const Rational p3 = a.upper() * b.lower();
    const Rational p4 = a.upper() * b.upper();
    return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
}

RationalEnclosure operator*(const Rational& scale, const RationalEnclosure& a)
{
    if (scale.sign() >= 0) {
        return {scale * a.lower(), scale * a.upper()};
    }
    return {scale * a.upper(), scale * a.lower()};
}

std::string to_string(const RationalEnclosure& e)
{
    return "[" + e.lower().to_string() + ", " + e.upper().to_string() + "]";
}

}  // namespace ordclose
