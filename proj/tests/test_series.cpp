#include "lcd/biseries.hpp"
#include "lcd/error.hpp"
#include "lcd/kernels.hpp"
#include "lcd/poly.hpp"
#include "lcd/rational_function.hpp"
#include "lcd/series.hpp"

#include <doctest.h>

#include <random>

using namespace lcd;

namespace {

Rational random_rational(std::mt19937& rng, int span = 9) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return make_rational(num(rng), den(rng));
}

Series random_series(std::mt19937& rng, std::size_t order, bool unit_constant = false) {
    std::vector<Rational> c(order + 1);
    for (auto& x : c) x = random_rational(rng);
    if (unit_constant) c[0] = 1;
    return Series(c, order);
}

Poly random_poly(std::mt19937& rng, std::size_t degree) {
    std::vector<Rational> c(degree + 1);
    for (auto& x : c) x = random_rational(rng);
    return Poly(c);
}

}  // namespace

TEST_CASE("rationals stay canonical and parse round-trips") {
    CHECK(make_rational(6, -4) == make_rational(-3, 2));
    CHECK(is_canonical(make_rational(6, -4)));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS_AS((make_rational(1, 0)), PreconditionError);
    CHECK_THROWS_AS(parse_rational("1/"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
    CHECK(double_factorial_odd(0) == 1);
    CHECK(double_factorial_odd(4) == 105);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(to_decimal(make_rational(-1, 3), 4) == "-0.3333");
    CHECK(to_decimal(make_rational(1, 200), 2) == "0.00");
}

TEST_CASE("polynomial arithmetic and evaluation") {
    const Poly p{1, 2, 3};
    const Poly q{0, 1};
    CHECK(p.degree() == 2);
    CHECK((p * q).coeffs() == Poly{0, 1, 2, 3}.coeffs());
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p(2) == 17);
    CHECK(p.derivative() == Poly{2, 6});
    CHECK(p.compose(Poly{1, 1}) == Poly{6, 8, 3});
    CHECK(Poly{0, 0, 5}.valuation() == 2);
    CHECK(Poly::monomial(3, 4).div_z_power(4) == Poly::constant(3));
    CHECK_THROWS_AS((Poly{1, 1}.div_z_power(1)), InvariantViolation);
    CHECK(Poly{-1, 0, 1}.to_string("z") == "-1 + z^2");
}

TEST_CASE("polynomial division and shifted bases, randomized") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const Poly a = random_poly(rng, 1 + trial % 7);
        Poly b = random_poly(rng, trial % 4);
        if (b.is_zero()) b = Poly{1};
        const auto [quot, rem] = divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < std::max(1L, b.degree()));

        const Rational scale = random_rational(rng) + 20;
        const Rational shift = random_rational(rng);
        const Poly basis = poly_in_shifted_basis(a, scale, shift);
        CHECK(poly_from_shifted_basis(basis, scale, shift) == a);
        // Direct reassembly: sum_k basis_k (shift + scale z)^k.
        Poly back;
        for (long k = 0; k <= basis.degree(); ++k)
            back += basis.coeff(k) * Poly::linear(shift, scale).pow(static_cast<unsigned>(k));
        CHECK(back == a);
    }
}

TEST_CASE("series truncation follows the smaller order") {
    const Series a = Series::from_poly(Poly{1, 1, 1}, 5);
    const Series b = Series::one(3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK(a.mul_z_power(2).order() == 7);
    CHECK(series_derivative(a).order() == 4);
    CHECK(series_integrate(a).order() == 6);
    CHECK_THROWS_AS(series_derivative(Series::one(0)), PreconditionError);
    CHECK(Series::zero(4).is_zero());
    CHECK(Series::zero(4).valuation() == 5);
}

TEST_CASE("series ring laws and inverses, randomized") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t order = 1 + trial % 9;
        const Series a = random_series(rng, order);
        const Series b = random_series(rng, order);
        const Series c = random_series(rng, order);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(series_mul(a, b, kernels::Exec::serial) == series_mul(a, b, kernels::Exec::parallel));

        const Series u = random_series(rng, order, true);
        CHECK(u * series_reciprocal(u) == Series::one(order));
        CHECK(series_divide(a, u) * u == a);
        CHECK(series_derivative(series_integrate(a)) == a);
    }
}

TEST_CASE("composition, powers and square roots, randomized") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t order = 2 + trial % 8;
        const Series a = random_series(rng, order);
        const Series z = Series::monomial(1, order);
        CHECK(series_compose(a, z) == a);

        Series inner = random_series(rng, order);
        inner = inner - Series::from_poly(Poly::constant(inner[0]), order);
        const Series outer = random_series(rng, order);
        // outer(inner) against the naive sum of powers
        Series naive = Series::zero(order);
        for (std::size_t k = 0; k <= order; ++k) naive += outer[k] * series_pow(inner, k);
        CHECK(series_compose(outer, inner) == naive);

        CHECK(series_pow(a, 3) == a * a * a);

        const Series u = random_series(rng, order, true);
        const Series r1 = series_sqrt_newton(u);
        const Series r2 = series_sqrt_binomial(u);
        CHECK(r1 == r2);
        CHECK(r1 * r1 == u);
        CHECK(r1[0] == 1);
    }
    CHECK_THROWS_AS((series_sqrt(Series::from_poly(Poly{0, 1}, 3))), PreconditionError);
}

TEST_CASE("composition tracks the order of inner arguments with high valuation") {
    // outer of order 3 composed with z^2 is exact through z^7.
    const Series outer = Series::from_poly(Poly{1, 1, 1, 1}, 3);
    const Series inner = Series::monomial(2, 20);
    const Series c = series_compose(outer, inner);
    CHECK(c.order() == 7);
    CHECK(c.to_poly() == Poly{1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("sqrt(1+z) coefficients are the binomial series") {
    const Series s = sqrt_one_plus_z(5);
    CHECK(s[0] == 1);
    CHECK(s[1] == make_rational(1, 2));
    CHECK(s[2] == make_rational(-1, 8));
    CHECK(s[3] == make_rational(1, 16));
    CHECK(s[4] == make_rational(-5, 128));
    CHECK(s[5] == make_rational(7, 256));
}

TEST_CASE("rational functions expand and combine") {
    const RationalFunction geometric{Poly{1}, Poly{1, -1}};
    const Series g = geometric.expand(6);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(g[k] == 1);
    const RationalFunction sq = geometric * geometric;
    CHECK(sq.expand(4)[4] == 5);
    CHECK((geometric / geometric).expand(3) == Series::one(3));
    CHECK(geometric(make_rational(1, 2)) == 2);
    CHECK_THROWS_AS(geometric(1), PreconditionError);
    CHECK(expand_rational(Poly{0, 1}, Poly{1, -1, -1}, 7).coeffs()[7] == 13);
}

TEST_CASE("bivariate series") {
    std::mt19937 rng(3);
    const std::size_t nx = 5, ny = 4;
    BiSeries u(nx, ny);
    for (std::size_t i = 0; i <= nx; ++i)
        for (std::size_t j = 0; j <= ny; ++j) u.at(i, j) = random_rational(rng);
    u.at(0, 0) = 2;
    CHECK(u * biseries_reciprocal(u) == BiSeries::constant(1, nx, ny));

    // A series in x alone composes exactly like the univariate composition.
    const Series outer = random_series(rng, nx);
    Series inner = random_series(rng, nx);
    inner = inner - Series::from_poly(Poly::constant(inner[0]), nx);
    const BiSeries lifted = biseries_compose(outer, BiSeries::from_series_x(inner, ny));
    CHECK(lifted == BiSeries::from_series_x(series_compose(outer, inner), ny));

    const BiSeries xy = BiSeries::monomial(1, 1, nx, ny);
    CHECK(xy.d_dx() == BiSeries::monomial(0, 1, nx - 1, ny));
    CHECK(xy.d_dy() == BiSeries::monomial(1, 0, nx, ny - 1));
    CHECK(xy.at_y_one() == Series::monomial(1, nx));
    CHECK_THROWS_AS((biseries_compose(outer, BiSeries::constant(1, nx, ny))), PreconditionError);
}

TEST_CASE("convolution kernels agree on large random input") {
    std::mt19937 rng(11);
    std::vector<Rational> a(300), b(300);
    for (auto& x : a) x = random_rational(rng, 1000);
    for (auto& x : b) x = random_rational(rng, 1000);
    CHECK(kernels::convolve_serial(a, b, 300) == kernels::convolve_parallel(a, b, 300));
    CHECK(kernels::max_threads() >= 1);
}

TEST_CASE("composition is associative, randomized") {
    std::mt19937 rng(2718);
    auto no_constant = [&](std::size_t order) {
        Series s = random_series(rng, order);
        return s - Series::from_poly(Poly::constant(s[0]), order);
    };
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t order = 10 + trial % 3;
        const Series a = random_series(rng, order);
        const Series b = no_constant(order);
        const Series c = no_constant(order);
        CHECK(series_compose(a, series_compose(b, c)) == series_compose(series_compose(a, b), c));
    }
}

TEST_CASE("every public result is canonical, randomized") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(rng, 8, true);
        const Series b = random_series(rng, 8);
        for (const Series& s : {a * b, a + b, series_reciprocal(a), series_sqrt(a), series_integrate(b),
                                series_compose(b, a - Series::one(8))})
            for (const Rational& x : s.coeffs()) CHECK(is_canonical(x));
    }
}
