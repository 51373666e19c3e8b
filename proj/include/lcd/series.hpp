#pragma once

#include "lcd/kernels.hpp"
#include "lcd/number.hpp"
#include "lcd/poly.hpp"

#include <string>
#include <vector>

namespace lcd {

// Truncated power series with exact rational coefficients. A series of
// order N stores the N+1 coefficients of z^0..z^N, and every one of them is
// exact. Binary operations return the smaller of the operand orders.
class Series {
public:
    // The zero series of order 0.
    Series();
    Series(std::vector<Rational> coeffs, std::size_t order);
    static Series zero(std::size_t order);
    static Series one(std::size_t order);
    // Expansion of a polynomial, exact to the given order.
    static Series from_poly(const Poly& p, std::size_t order);
    // z^k truncated to order.
    static Series monomial(std::size_t k, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](std::size_t k) const { return c_.at(k); }
    // Same series at a lower order.
    Series truncated(std::size_t order) const;
    // Smallest k with a nonzero coefficient, or order()+1 if all are zero.
    std::size_t valuation() const;
    bool is_zero() const { return valuation() > order(); }
    bool is_integral() const;
    // Coefficients 0..order as a polynomial (the truncation, not the function).
    Poly to_poly() const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator-(const Series& a);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rational& s, const Series& a);
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    // Equal as truncations: same order and same coefficients.
    friend bool operator==(const Series& a, const Series& b) = default;

    // z^k * a; the result is exact to order(a) + k.
    Series mul_z_power(std::size_t k) const;
    // a / z^k; requires the first k coefficients to vanish. Order drops by k.
    Series div_z_power(std::size_t k) const;

    std::vector<std::string> coeff_strings() const;

private:
    std::vector<Rational> c_;
};

Series series_mul(const Series& a, const Series& b, kernels::Exec exec = kernels::Exec::parallel);

// Integer power by repeated squaring.
Series series_pow(const Series& a, unsigned exp);

// outer(inner(z)). inner must have zero constant term. The result order is
// order(inner), lowered only when outer is too short to make every reported
// coefficient exact (outer order M, inner valuation v: exact through v(M+1)-1).
Series series_compose(const Series& outer, const Series& inner);

// 1/a; a must have a nonzero constant term.
Series series_reciprocal(const Series& a);
// a/b; b must have a nonzero constant term.
Series series_divide(const Series& a, const Series& b);
// d/dz; the order drops by one. Requires order(a) >= 1.
Series series_derivative(const Series& a);
// Antiderivative with zero constant term; the order rises by one.
Series series_integrate(const Series& a);

// Coefficients of sqrt(1+z) from the binomial expansion
// 1 - 2 sum_{n>=1} C(2n-2, n-1) (-1/4)^n z^n / n.
Series sqrt_one_plus_z(std::size_t order);
// Square root of a series with constant term 1, by substituting a-1 into
// the binomial expansion above.
Series series_sqrt_binomial(const Series& a);
// Square root of a series with constant term 1 by order-doubling Newton steps
// r <- (r + a/r)/2.
Series series_sqrt_newton(const Series& a);
// Default square root (Newton).
Series series_sqrt(const Series& a);

// Coefficients 0..order of the exact series expansion of num/den.
Series expand_rational(const Poly& num, const Poly& den, std::size_t order);

}  // namespace lcd
