#include "lcd/series.hpp"

#include "lcd/error.hpp"

#include <algorithm>

namespace lcd {

Series::Series() : c_(1, Rational(0)) {}

Series::Series(std::vector<Rational> coeffs, std::size_t order) : c_(std::move(coeffs)) {
    c_.resize(order + 1, Rational(0));
}

Series Series::zero(std::size_t order) { return Series({}, order); }

Series Series::one(std::size_t order) { return Series({Rational(1)}, order); }

Series Series::from_poly(const Poly& p, std::size_t order) {
    std::vector<Rational> v(p.coeffs().begin(),
                            p.coeffs().begin() + static_cast<long>(std::min(
                                                     p.coeffs().size(), order + 1)));
    return Series(std::move(v), order);
}

Series Series::monomial(std::size_t k, std::size_t order) {
    std::vector<Rational> v(order + 1);
    if (k <= order) v[k] = 1;
    return Series(std::move(v), order);
}

Series Series::truncated(std::size_t order) const {
    require(order <= this->order(), "cannot truncate a series to a higher order");
    return Series(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(order + 1)),
                  order);
}

std::size_t Series::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (sgn(c_[k]) != 0) return k;
    return c_.size();
}

bool Series::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return lcd::is_integral(v); });
}

Poly Series::to_poly() const { return Poly(c_); }

Series operator+(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = a.c_[k] + b.c_[k];
    return Series(std::move(v), n);
}

Series operator-(const Series& a) {
    std::vector<Rational> v(a.c_);
    for (auto& x : v) x = -x;
    return Series(std::move(v), a.order());
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

Series operator*(const Rational& s, const Series& a) {
    std::vector<Rational> v(a.c_);
    for (auto& x : v) x *= s;
    return Series(std::move(v), a.order());
}

Series Series::mul_z_power(std::size_t k) const {
    std::vector<Rational> v(k, Rational(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Series(std::move(v), order() + k);
}

Series Series::div_z_power(std::size_t k) const {
    require(k <= order(), "div_z_power: shift exceeds the truncation order");
    for (std::size_t i = 0; i < k; ++i)
        require(sgn(c_[i]) == 0, "div_z_power: coefficient of z^" + std::to_string(i) +
                                     " is nonzero");
    return Series(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()),
                  order() - k);
}

std::vector<std::string> Series::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(to_string(v));
    return out;
}

Series series_mul(const Series& a, const Series& b, kernels::Exec exec) {
    const std::size_t n = std::min(a.order(), b.order());
    return Series(kernels::convolve(a.coeffs(), b.coeffs(), n + 1, exec), n);
}

Series series_pow(const Series& a, unsigned exp) {
    Series result = Series::one(a.order());
    Series base = a;
    while (exp > 0) {
        if (exp & 1U) result = result * base;
        exp >>= 1U;
        if (exp > 0) base = base * base;
    }
    return result;
}

Series series_compose(const Series& outer, const Series& inner) {
    require(sgn(inner[0]) == 0, "series_compose: inner series has nonzero constant term " +
                                    to_string(inner[0]));
    const std::size_t v = inner.valuation();
    std::size_t order = inner.order();
    if (v <= inner.order()) order = std::min(order, v * (outer.order() + 1) - 1);
    // Only outer terms k with k*v <= order can reach the result.
    std::size_t top = outer.order();
    if (v <= inner.order()) top = std::min(top, order / v);
    const Series in = inner.truncated(order);
    Series acc = Series({outer[top]}, order);
    for (std::size_t k = top; k-- > 0;) {
        acc = acc * in;
        std::vector<Rational> c = acc.coeffs();
        c[0] += outer[k];
        acc = Series(std::move(c), order);
    }
    return acc;
}

Series series_reciprocal(const Series& a) {
    require(sgn(a[0]) != 0, "series_reciprocal: zero constant term");
    const std::size_t n = a.order();
    std::vector<Rational> r(n + 1);
    const Rational inv0 = 1 / a[0];
    r[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i)
            if (sgn(a[i]) != 0) acc += a[i] * r[k - i];
        r[k] = -acc * inv0;
    }
    return Series(std::move(r), n);
}

Series series_divide(const Series& a, const Series& b) { return a * series_reciprocal(b); }

Series series_derivative(const Series& a) {
    require(a.order() >= 1, "series_derivative: need order >= 1 to report an exact coefficient");
    std::vector<Rational> d(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) d[k - 1] = a[k] * static_cast<long>(k);
    return Series(std::move(d), a.order() - 1);
}

Series series_integrate(const Series& a) {
    std::vector<Rational> v(a.order() + 2);
    for (std::size_t k = 0; k <= a.order(); ++k)
        v[k + 1] = a[k] / Rational(static_cast<long>(k + 1));
    return Series(std::move(v), a.order() + 1);
}

Series sqrt_one_plus_z(std::size_t order) {
    std::vector<Rational> v(order + 1);
    v[0] = 1;
    const Rational quarter = make_rational(-1, 4);
    for (std::size_t n = 1; n <= order; ++n) {
        const long ln = static_cast<long>(n);
        v[n] = Rational(-2) * Rational(binomial(2 * ln - 2, ln - 1)) * pow_rat(quarter, n) /
               Rational(ln);
    }
    return Series(std::move(v), order);
}

Series series_sqrt_binomial(const Series& a) {
    require(a[0] == 1, "series_sqrt: constant term must be 1");
    return series_compose(sqrt_one_plus_z(a.order()), a - Series::one(a.order()));
}

Series series_sqrt_newton(const Series& a) {
    require(a[0] == 1, "series_sqrt: constant term must be 1");
    const std::size_t n = a.order();
    Series r = Series::one(0);
    std::size_t prec = 0;
    const Rational half = make_rational(1, 2);
    while (prec < n) {
        prec = std::min(n, 2 * prec + 1);
        const Series lifted(r.coeffs(), prec);
        r = half * (lifted + series_divide(a.truncated(prec), lifted));
    }
    return Series(r.coeffs(), n);
}

Series series_sqrt(const Series& a) { return series_sqrt_newton(a); }

Series expand_rational(const Poly& num, const Poly& den, std::size_t order) {
    require(sgn(den.coeff(0)) != 0, "expand_rational: denominator vanishes at 0");
    return Series::from_poly(num, order) * series_reciprocal(Series::from_poly(den, order));
}

}  // namespace lcd
