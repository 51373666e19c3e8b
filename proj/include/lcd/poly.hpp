#pragma once

#include "lcd/number.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace lcd {

// Dense univariate polynomial over the rationals. coeffs()[k] is the
// coefficient of z^k; the top coefficient is never zero and the zero
// polynomial has no coefficients (degree -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t k);
    // a + b z
    static Poly linear(const Rational& a, const Rational& b);

    const std::vector<Rational>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Coefficient of z^k; zero past the degree or for negative k.
    Rational coeff(long k) const;
    bool is_integral() const;
    // Smallest k with a nonzero coefficient; -1 for the zero polynomial.
    long valuation() const;

    Rational operator()(const Rational& z) const;

    Poly derivative() const;
    // p(z + delta)
    Poly shifted(const Rational& delta) const;
    // p(a + b z)
    Poly compose_affine(const Rational& a, const Rational& b) const;
    // p(q(z))
    Poly compose(const Poly& q) const;
    // p(z) * z^k
    Poly mul_z_power(std::size_t k) const;
    // p(z) / z^k; throws InvariantViolation unless z^k divides p.
    Poly div_z_power(std::size_t k) const;
    Poly pow(unsigned exp) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Euclidean division over Q; throws PreconditionError for a zero divisor.
    friend std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

    // Exact coefficient list, lowest degree first, as decimal strings.
    std::vector<std::string> coeff_strings() const;
    // "21*z^4 + 21*z^5" style; "0" for the zero polynomial.
    std::string to_string(const std::string& var = "z") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

// Coefficients q_k with p(z) = sum_k q_k (shift + scale z)^k.
Poly poly_in_shifted_basis(const Poly& p, const Rational& scale, const Rational& shift);
// Inverse of poly_in_shifted_basis: sum_k q_k (shift + scale z)^k as a polynomial in z.
Poly poly_from_shifted_basis(const Poly& q, const Rational& scale, const Rational& shift);

// Sign of p at z (-1, 0, 1).
int sign_at(const Poly& p, const Rational& z);

}  // namespace lcd
