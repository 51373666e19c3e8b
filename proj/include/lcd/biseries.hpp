#pragma once

#include "lcd/number.hpp"
#include "lcd/series.hpp"

#include <vector>

namespace lcd {

// Bivariate truncated power series in (x, y) with a rectangular truncation:
// coefficient (i, j) is stored and exact for 0 <= i <= N, 0 <= j <= M.
class BiSeries {
public:
    BiSeries(std::size_t order_x, std::size_t order_y);
    static BiSeries constant(const Rational& c, std::size_t order_x, std::size_t order_y);
    // x^i y^j truncated.
    static BiSeries monomial(std::size_t i, std::size_t j, std::size_t order_x,
                             std::size_t order_y);
    // A univariate series in x (or in y) viewed as bivariate.
    static BiSeries from_series_x(const Series& s, std::size_t order_y);
    static BiSeries from_series_y(const Series& s, std::size_t order_x);

    std::size_t order_x() const { return nx_; }
    std::size_t order_y() const { return ny_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return c_[i * (ny_ + 1) + j]; }
    Rational& at(std::size_t i, std::size_t j) { return c_[i * (ny_ + 1) + j]; }

    BiSeries truncated(std::size_t order_x, std::size_t order_y) const;
    bool is_zero() const;

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const Rational& s, const BiSeries& a);
    friend bool operator==(const BiSeries& a, const BiSeries& b) = default;

    // x^k * a (exact to order_x + k) and y^k * a.
    BiSeries mul_x_power(std::size_t k) const;
    BiSeries mul_y_power(std::size_t k) const;
    // Partial derivatives; the differentiated variable loses one order.
    BiSeries d_dx() const;
    BiSeries d_dy() const;

    // a(x, y0) for a rational y0: exact univariate series in x, possible only
    // when the y-degree is bounded within the rectangle, which callers ensure.
    Series at_y(const Rational& y0) const;
    // sum_j a(i, j): the y = 1 specialization.
    Series at_y_one() const { return at_y(1); }

private:
    std::size_t nx_;
    std::size_t ny_;
    std::vector<Rational> c_;
};

BiSeries biseries_reciprocal(const BiSeries& a);

// outer(inner(x, y)) for univariate outer. inner must vanish on x = 0 (every
// term carries a factor x), so outer needs order >= order_x(inner).
BiSeries biseries_compose(const Series& outer, const BiSeries& inner);

// a(t(x), y) for univariate t with zero constant term.
BiSeries substitute_x(const BiSeries& a, const Series& t);

}  // namespace lcd
