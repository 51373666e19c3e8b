#include "lcd/rational_function.hpp"

#include "lcd/error.hpp"

namespace lcd {

Rational RationalFunction::operator()(const Rational& z) const {
    const Rational den = denominator(z);
    require(sgn(den) != 0, "rational function evaluated at a pole");
    return numerator(z) / den;
}

Series RationalFunction::expand(std::size_t order) const {
    return expand_rational(numerator, denominator, order);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.numerator * b.denominator + b.numerator * a.denominator,
            a.denominator * b.denominator};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.numerator * b.numerator, a.denominator * b.denominator};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    require(!b.numerator.is_zero(), "division by the zero rational function");
    return {a.numerator * b.denominator, a.denominator * b.numerator};
}

}  // namespace lcd
