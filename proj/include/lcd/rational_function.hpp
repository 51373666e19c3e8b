#pragma once

#include "lcd/poly.hpp"
#include "lcd/series.hpp"

namespace lcd {

// numerator / denominator, kept unreduced (no polynomial gcd).
struct RationalFunction {
    Poly numerator;
    Poly denominator;

    Rational operator()(const Rational& z) const;
    // Exact expansion at 0; the denominator must not vanish there.
    Series expand(std::size_t order) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
};

}  // namespace lcd
