#pragma once

// Singularity analysis with exact arithmetic. Every real quantity is carried
// as a closed interval with rational endpoints; floating point only appears
// in rendering.

#include "lcd/number.hpp"
#include "lcd/poly.hpp"

#include <vector>

namespace lcd {

struct Interval {
    Rational lo;
    Rational hi;

    static Interval point(const Rational& v) { return {v, v}; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool positive() const { return sgn(lo) > 0; }
};

// Products and quotients are defined for strictly positive intervals only.
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval abs(const Interval& a);

// Enclosure of sqrt(v) for v >= 0 with width at most 10^-digits.
Interval sqrt_interval(const Rational& v, unsigned digits = 40);
// Enclosures of pi and 1/sqrt(pi).
Interval pi_interval();
Interval inv_sqrt_pi_interval();

// Gamma(k + 1/2) / sqrt(pi) = (2k)! / (4^k k!).
Rational gamma_half_integer_over_sqrt_pi(unsigned k);

struct AsymptoticEstimate {
    unsigned g = 1;
    // c_g(n) ~ constant * n^exponent * growth^n
    Rational exponent;
    Interval growth_rate;
    // constant = constant_over_sqrt_pi / sqrt(pi)
    Rational constant_over_sqrt_pi;
    Interval constant;
};

// P_g(1/4) / Gamma(3g - 1/2), exponent 3g - 3/2 and growth rate 4.
AsymptoticEstimate cg_leading_constant(unsigned g);

struct RatioCheck {
    unsigned g = 1;
    unsigned n = 0;
    // c_g(n) / (n^{3g-3/2} 4^n)
    Interval ratio;
    Interval constant;
    // |ratio / constant - 1|
    Interval relative_error;
};

RatioCheck cg_ratio_check(unsigned g, unsigned n);

// True when the relative error strictly decreases along the given n values.
bool ratio_error_decreasing(unsigned g, const std::vector<unsigned>& ns);

struct RootIsolation {
    Poly polynomial;
    Rational lo;
    Rational hi;
    // polynomial(lo) and polynomial(hi) have opposite signs
    bool sign_change = false;
    // Sturm count of distinct roots in (0, lo]; zero for the smallest root
    unsigned roots_below = 0;
    // Sturm count of distinct roots in (lo, hi]
    unsigned roots_inside = 0;
};

// Number of distinct real roots of p in (a, b], by Sturm's theorem.
unsigned sturm_count(const Poly& p, const Rational& a, const Rational& b);

// Smallest root of p in (lo, hi), bisected to width at most `width`.
// Throws PreconditionError when p has no root there.
RootIsolation isolate_smallest_root(const Poly& p, const Rational& lo, const Rational& hi,
                                    const Rational& width);

// 4 * numerator(theta_sigma) - denominator(theta_sigma): its smallest root
// in (0, 1) is the dominant singularity rho_sigma of D_{g,sigma}.
Poly theta_quarter_polynomial(unsigned sigma);

RootIsolation dominant_singularity(unsigned sigma, const Rational& width = make_rational(1, 1000000000000L));

// 1/rho as an interval.
Interval growth_rate(const RootIsolation& root);

struct EmpiricalGrowth {
    unsigned n = 0;
    // d(n+1) / d(n)
    Rational ratio;
};

// Coefficient ratio of D_{g,sigma} at n_max, moving forward past zero coefficients.
EmpiricalGrowth empirical_growth(unsigned g, unsigned sigma, unsigned n_max = 400);
// Catalan control c_0(n+1) / c_0(n).
EmpiricalGrowth catalan_growth(unsigned n);

// |value / target - 1| <= tol, decided exactly over the whole interval.
bool within_relative(const Interval& value, const Interval& target, const Rational& tol);

}  // namespace lcd
