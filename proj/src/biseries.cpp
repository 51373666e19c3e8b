#include "lcd/biseries.hpp"

#include "lcd/error.hpp"

#include <algorithm>

namespace lcd {

BiSeries::BiSeries(std::size_t order_x, std::size_t order_y)
    : nx_(order_x), ny_(order_y), c_((order_x + 1) * (order_y + 1)) {}

BiSeries BiSeries::constant(const Rational& c, std::size_t order_x, std::size_t order_y) {
    BiSeries r(order_x, order_y);
    r.at(0, 0) = c;
    return r;
}

BiSeries BiSeries::monomial(std::size_t i, std::size_t j, std::size_t order_x,
                            std::size_t order_y) {
    BiSeries r(order_x, order_y);
    if (i <= order_x && j <= order_y) r.at(i, j) = 1;
    return r;
}

BiSeries BiSeries::from_series_x(const Series& s, std::size_t order_y) {
    BiSeries r(s.order(), order_y);
    for (std::size_t i = 0; i <= s.order(); ++i) r.at(i, 0) = s[i];
    return r;
}

BiSeries BiSeries::from_series_y(const Series& s, std::size_t order_x) {
    BiSeries r(order_x, s.order());
    for (std::size_t j = 0; j <= s.order(); ++j) r.at(0, j) = s[j];
    return r;
}

BiSeries BiSeries::truncated(std::size_t order_x, std::size_t order_y) const {
    require(order_x <= nx_ && order_y <= ny_, "cannot truncate a bivariate series upward");
    BiSeries r(order_x, order_y);
    for (std::size_t i = 0; i <= order_x; ++i)
        for (std::size_t j = 0; j <= order_y; ++j) r.at(i, j) = (*this)(i, j);
    return r;
}

bool BiSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    const std::size_t nx = std::min(a.nx_, b.nx_);
    const std::size_t ny = std::min(a.ny_, b.ny_);
    BiSeries r(nx, ny);
    for (std::size_t i = 0; i <= nx; ++i)
        for (std::size_t j = 0; j <= ny; ++j) r.at(i, j) = a(i, j) + b(i, j);
    return r;
}

BiSeries operator*(const Rational& s, const BiSeries& a) {
    BiSeries r = a;
    for (auto& v : r.c_) v *= s;
    return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + Rational(-1) * b; }

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    const std::size_t nx = std::min(a.nx_, b.nx_);
    const std::size_t ny = std::min(a.ny_, b.ny_);
    BiSeries r(nx, ny);
    for (std::size_t i1 = 0; i1 <= nx; ++i1)
        for (std::size_t j1 = 0; j1 <= ny; ++j1) {
            const Rational& u = a(i1, j1);
            if (sgn(u) == 0) continue;
            for (std::size_t i2 = 0; i1 + i2 <= nx; ++i2)
                for (std::size_t j2 = 0; j1 + j2 <= ny; ++j2) {
                    const Rational& w = b(i2, j2);
                    if (sgn(w) != 0) r.at(i1 + i2, j1 + j2) += u * w;
                }
        }
    return r;
}

BiSeries BiSeries::mul_x_power(std::size_t k) const {
    BiSeries r(nx_ + k, ny_);
    for (std::size_t i = 0; i <= nx_; ++i)
        for (std::size_t j = 0; j <= ny_; ++j) r.at(i + k, j) = (*this)(i, j);
    return r;
}

BiSeries BiSeries::mul_y_power(std::size_t k) const {
    BiSeries r(nx_, ny_ + k);
    for (std::size_t i = 0; i <= nx_; ++i)
        for (std::size_t j = 0; j <= ny_; ++j) r.at(i, j + k) = (*this)(i, j);
    return r;
}

BiSeries BiSeries::d_dx() const {
    require(nx_ >= 1, "d_dx needs order_x >= 1");
    BiSeries r(nx_ - 1, ny_);
    for (std::size_t i = 1; i <= nx_; ++i)
        for (std::size_t j = 0; j <= ny_; ++j) r.at(i - 1, j) = (*this)(i, j) * static_cast<long>(i);
    return r;
}

BiSeries BiSeries::d_dy() const {
    require(ny_ >= 1, "d_dy needs order_y >= 1");
    BiSeries r(nx_, ny_ - 1);
    for (std::size_t i = 0; i <= nx_; ++i)
        for (std::size_t j = 1; j <= ny_; ++j) r.at(i, j - 1) = (*this)(i, j) * static_cast<long>(j);
    return r;
}

Series BiSeries::at_y(const Rational& y0) const {
    std::vector<Rational> v(nx_ + 1);
    for (std::size_t i = 0; i <= nx_; ++i) {
        Rational acc = 0;
        for (std::size_t j = ny_ + 1; j-- > 0;) acc = acc * y0 + (*this)(i, j);
        v[i] = acc;
    }
    return Series(std::move(v), nx_);
}

BiSeries biseries_reciprocal(const BiSeries& a) {
    require(sgn(a(0, 0)) != 0, "biseries_reciprocal: zero constant term");
    const std::size_t nx = a.order_x();
    const std::size_t ny = a.order_y();
    BiSeries r(nx, ny);
    const Rational inv0 = 1 / a(0, 0);
    for (std::size_t i = 0; i <= nx; ++i)
        for (std::size_t j = 0; j <= ny; ++j) {
            Rational acc = (i == 0 && j == 0) ? Rational(1) : Rational(0);
            for (std::size_t k = 0; k <= i; ++k)
                for (std::size_t l = 0; l <= j; ++l) {
                    if (k == 0 && l == 0) continue;
                    const Rational& u = a(k, l);
                    if (sgn(u) != 0) acc -= u * r(i - k, j - l);
                }
            r.at(i, j) = acc * inv0;
        }
    return r;
}

BiSeries biseries_compose(const Series& outer, const BiSeries& inner) {
    for (std::size_t j = 0; j <= inner.order_y(); ++j)
        require(sgn(inner(0, j)) == 0,
                "biseries_compose: inner series must vanish on x = 0");
    const std::size_t nx = inner.order_x();
    const std::size_t ny = inner.order_y();
    require(outer.order() >= nx, "biseries_compose: outer order below order_x of inner");
    BiSeries acc = BiSeries::constant(outer[nx], nx, ny);
    for (std::size_t k = nx; k-- > 0;) {
        acc = acc * inner;
        acc.at(0, 0) += outer[k];
    }
    return acc;
}

BiSeries substitute_x(const BiSeries& a, const Series& t) {
    require(sgn(t[0]) == 0, "substitute_x: substituted series needs zero constant term");
    const std::size_t nx = std::min(a.order_x(), t.order());
    const std::size_t ny = a.order_y();
    BiSeries r(nx, ny);
    Series power = Series::one(nx);
    const Series tt = t.truncated(nx);
    for (std::size_t i = 0; i <= nx; ++i) {
        for (std::size_t j = 0; j <= ny; ++j) {
            const Rational& c = a(i, j);
            if (sgn(c) == 0) continue;
            for (std::size_t k = 0; k <= nx; ++k)
                if (sgn(power[k]) != 0) r.at(k, j) += c * power[k];
        }
        power = power * tt;
    }
    return r;
}

}  // namespace lcd
