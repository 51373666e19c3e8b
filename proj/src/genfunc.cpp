#include "lcd/genfunc.hpp"

#include "lcd/error.hpp"
#include "lcd/recurrences.hpp"

#include <string>

namespace lcd {

namespace {

std::string str(long v) { return std::to_string(v); }

// 1 - 4z
Poly one_minus_4z() { return Poly{1, -4}; }

}  // namespace

Series catalan_series(std::size_t order) {
    std::vector<Rational> v(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        const long ln = static_cast<long>(n);
        v[n] = make_rational(binomial(2 * ln, ln), Integer(ln + 1));
    }
    return Series(std::move(v), order);
}

Series catalan_series_closed_form(std::size_t order) {
    const Series root = series_sqrt(Series::from_poly(one_minus_4z(), order + 1));
    return make_rational(1, 2) * (Series::one(order + 1) - root).div_z_power(1);
}

Series catalan_series_reciprocal_form(std::size_t order) {
    const Series root = series_sqrt(Series::from_poly(one_minus_4z(), order));
    return Rational(2) * series_reciprocal(Series::one(order) + root);
}

Series cg_series(unsigned g, std::size_t order) {
    const GenusTable t = cg_table(g, static_cast<unsigned>(order));
    std::vector<Rational> v(order + 1);
    for (std::size_t n = 0; n <= order; ++n) v[n] = Rational(t.at(g, static_cast<unsigned>(n)));
    return Series(std::move(v), order);
}

void check_pg_invariants(unsigned g, const Poly& P) {
    const std::string who = "P_" + str(g);
    for (long k = 0; k <= P.degree(); ++k)
        ensure(is_integral(P.coeff(k)),
               who + ": non-integral coefficient of z^" + str(k) + " = " + to_string(P.coeff(k)));
    ensure(P.degree() <= 3L * g - 1, who + ": degree " + str(P.degree()) + " exceeds 3g-1 = " +
                                         str(3L * g - 1));
    for (long h = 0; h < 2L * g; ++h)
        ensure(sgn(P.coeff(h)) == 0,
               who + ": coefficient of z^" + str(h) + " should vanish, got " + to_string(P.coeff(h)));
    ensure(sgn(P.coeff(2L * g)) != 0, who + ": coefficient of z^" + str(2L * g) + " vanishes");
    ensure(sgn(P(make_rational(1, 4))) != 0, who + "(1/4) vanishes");
}

Poly pg_direct(unsigned g) {
    require(g >= 1, "P_g is defined for g >= 1");
    const std::size_t order = 3UL * g + 10;
    const Series cg = cg_series(g, order);
    // 1 - 2z C_0(z) = sqrt(1-4z)
    const Series root = Series::one(order) -
                        Rational(2) * catalan_series(order - 1).mul_z_power(1);
    const Series product = cg * series_pow(root, 6 * g - 1);
    for (std::size_t k = 0; k <= order; ++k)
        ensure(is_integral(product[k]), "P_" + str(g) + " direct: non-integral coefficient of z^" +
                                            str(static_cast<long>(k)) + " = " + to_string(product[k]));
    for (std::size_t k = 3UL * g; k <= order; ++k)
        ensure(sgn(product[k]) == 0, "P_" + str(g) + " direct: tail coefficient of z^" +
                                         str(static_cast<long>(k)) + " = " + to_string(product[k]) +
                                         " does not vanish");
    Poly P = product.truncated(3UL * g - 1).to_poly();
    check_pg_invariants(g, P);
    return P;
}

PgRecord pg_seed() {
    PgRecord rec;
    rec.g = 1;
    rec.P = Poly::monomial(1, 2);
    rec.R = Poly::constant(1);
    return rec;
}

Poly qg_from(const PgRecord& rec) {
    const long g = rec.g;
    const Poly w = one_minus_4z();
    const Poly& P = rec.P;
    const Poly P1 = w * P.derivative() + Rational(12 * g - 2) * P;
    const Poly P2 = w * P1.derivative() + Rational(12 * g + 2) * P1;
    const Poly P3 = w * P2.derivative() + Rational(12 * g + 6) * P2;
    return Poly::monomial(4, 5) * P3 + Poly::monomial(24, 4) * w * P2 +
           Poly::monomial(27, 3) * w.pow(2) * P1 + Poly::monomial(3, 2) * w.pow(3) * P;
}

PgRecord pg_pipeline_step(const PgRecord& rec) {
    const long g = rec.g;
    const std::string who = "Q_" + str(g);
    const Poly Q = qg_from(rec);

    ensure(sgn(Q.coeff(3 * g + 4)) == 0,
           who + ": coefficient of z^" + str(3 * g + 4) + " = " + to_string(Q.coeff(3 * g + 4)));
    ensure(sgn(Q.coeff(3 * g + 3)) == 0,
           who + ": coefficient of z^" + str(3 * g + 3) + " = " + to_string(Q.coeff(3 * g + 3)));
    ensure(Q.degree() <= 3 * g + 2, who + ": degree " + str(Q.degree()) + " exceeds 3g+2");
    for (long h = 0; h <= 2 * g + 1; ++h)
        ensure(sgn(Q.coeff(h)) == 0, who + ": coefficient of z^" + str(h) + " = " +
                                         to_string(Q.coeff(h)) + " should vanish");
    ensure(sgn(Q.coeff(2 * g + 2)) != 0, who + ": coefficient of z^" + str(2 * g + 2) + " vanishes");
    ensure(sgn(Q(make_rational(1, 4))) != 0, who + "(1/4) vanishes");

    // Q = sum_k q_k (1-4z)^k, so Q/(1-4z)^{3g+4} = sum_j A_j/(1-4z)^j with j = 3g+4-k.
    const Poly q = poly_in_shifted_basis(Q, -4, 1);
    ensure(q.degree() <= 3 * g + 2, who + ": rebasis degree mismatch");
    const long top = 3 * g + 4;
    std::map<unsigned, Rational> A;
    for (long j = 2; j <= top; ++j) A[static_cast<unsigned>(j)] = q.coeff(top - j);
    {
        Poly back;
        for (const auto& [j, a] : A) back += a * one_minus_4z().pow(static_cast<unsigned>(top - j));
        ensure(back == Q, who + ": partial fractions do not reassemble Q");
    }

    // z P_{g+1} = sum_j A_j/(4(j-1)) (1-4z)^{3g+4-j} + C (1-4z)^{3g+3}.
    Poly head;
    Rational c_formula = 0;
    for (const auto& [j, a] : A) {
        const Rational weight = a / Rational(4 * (static_cast<long>(j) - 1));
        head += weight * one_minus_4z().pow(static_cast<unsigned>(top - j));
        c_formula -= weight;
    }
    const Poly tail_basis = one_minus_4z().pow(static_cast<unsigned>(3 * g + 3));
    // C_{g+1}(0) = 0 forces the constant term of z P_{g+1} to vanish.
    const Rational c_derived = -head.coeff(0) / tail_basis.coeff(0);
    ensure(c_formula == c_derived, "integration constant mismatch at g=" + str(g) + ": formula " +
                                       to_string(c_formula) + ", derived " + to_string(c_derived));
    const Poly zP = head + c_formula * tail_basis;
    ensure(sgn(zP.coeff(0)) == 0, "P_" + str(g + 1) + ": coefficient of z^-1 = " +
                                      to_string(zP.coeff(0)) + " does not cancel");
    Poly next = zP.div_z_power(1);

    const Rational at_quarter = A.at(static_cast<unsigned>(top)) / Rational(3 * g + 3);
    ensure(next(make_rational(1, 4)) == at_quarter,
           "P_" + str(g + 1) + "(1/4) differs from A_{3g+4}/(3g+3)");
    check_pg_invariants(static_cast<unsigned>(g + 1), next);

    PgRecord out;
    out.g = static_cast<unsigned>(g + 1);
    out.R = next.div_z_power(static_cast<std::size_t>(2 * (g + 1)));
    out.P = std::move(next);
    out.Q_prev = Q;
    out.A = std::move(A);
    out.integration_constant = c_formula;
    return out;
}

std::vector<PgRecord> pg_pipeline(unsigned g_max) {
    std::vector<PgRecord> out;
    if (g_max == 0) return out;
    out.push_back(pg_seed());
    check_pg_invariants(1, out.back().P);
    while (out.back().g < g_max) out.push_back(pg_pipeline_step(out.back()));
    return out;
}

Poly pg(unsigned g) {
    require(g >= 1, "P_g is defined for g >= 1");
    return pg_pipeline(g).back().P;
}

Poly qg(unsigned g) {
    require(g >= 1, "Q_g is defined for g >= 1");
    return qg_from(pg_pipeline(g).back());
}

Poly rg(unsigned g) {
    require(g >= 1, "R_g is defined for g >= 1");
    const Poly R = pg(g).div_z_power(2UL * g);
    ensure(R.degree() <= static_cast<long>(g) - 1, "R_" + str(g) + " has degree above g-1");
    ensure(sgn(R(make_rational(1, 4))) != 0, "R_" + str(g) + "(1/4) vanishes");
    ensure(R.coeff(0) == Rational(cg_at_2g(g)), "R_" + str(g) + "(0) = " + to_string(R.coeff(0)) +
                                                   " differs from c_g(2g)");
    return R;
}

Series cg_series_from_closed_form(unsigned g, std::size_t order) {
    require(g >= 1, "closed form holds for g >= 1");
    const Series w = Series::from_poly(one_minus_4z(), order);
    const Series denom = series_pow(w, 3 * g);
    return Series::from_poly(pg(g), order) * series_sqrt(w) * series_reciprocal(denom);
}

Series ode_residual(unsigned g, std::size_t order) {
    require(g >= 1, "the ODE relates C_g to C_{g-1} for g >= 1");
    const Series c = cg_series(g, order + 1);
    const Series dc = series_derivative(c);
    const Series lhs = Series::from_poly(Poly{0, 1, -4}, order) * dc +
                       Series::from_poly(Poly{1, -2}, order) * c.truncated(order);

    const Series prev = cg_series(g - 1, order + 3);
    const Series d1 = series_derivative(prev);
    const Series d2 = series_derivative(d1);
    const Series d3 = series_derivative(d2);
    const Series phi = Rational(4) * d3.mul_z_power(5).truncated(order) +
                       Rational(24) * d2.mul_z_power(4).truncated(order) +
                       Rational(27) * d1.mul_z_power(3).truncated(order) +
                       Rational(3) * prev.mul_z_power(2).truncated(order);
    return lhs - phi;
}

namespace {

// 1/w and the composition prefactor/argument shared by C_g(x,y) and S_g(z,u).
BiSeries linear_xy(const Rational& c00, const Rational& c10, const Rational& c11, std::size_t nx,
                   std::size_t ny) {
    BiSeries w(nx, ny);
    w.at(0, 0) = c00;
    if (nx >= 1) {
        w.at(1, 0) = c10;
        if (ny >= 1) w.at(1, 1) = c11;
    }
    return w;
}

}  // namespace

BiSeries cg_bivariate(unsigned g, std::size_t order_x, std::size_t order_y) {
    // w = 1 + x - yx
    const BiSeries rw = biseries_reciprocal(linear_xy(1, 1, -1, order_x, order_y));
    const BiSeries inner = (rw * rw).mul_x_power(1).truncated(order_x, order_y);
    return rw * biseries_compose(cg_series(g, order_x), inner);
}

BiSeries sg_bivariate(unsigned g, std::size_t order_x, std::size_t order_y) {
    // w = 1 + 2z - zu
    const BiSeries rw = biseries_reciprocal(linear_xy(1, 2, -1, order_x, order_y));
    const BiSeries one_plus_z = linear_xy(1, 1, 0, order_x, order_y);
    const BiSeries inner = (one_plus_z * rw * rw).mul_x_power(1).truncated(order_x, order_y);
    return one_plus_z * rw * biseries_compose(cg_series(g, order_x), inner);
}

BiSeries pde_residual(unsigned g, std::size_t order_x, std::size_t order_y) {
    const BiSeries c = cg_bivariate(g, order_x + 1, order_y + 1);
    const BiSeries cy = c.d_dy();
    const BiSeries cx = c.d_dx();
    const BiSeries r = cy - cy.mul_x_power(1) - Rational(2) * cx.mul_x_power(2) - c.mul_x_power(1) +
                       cy.mul_x_power(1).mul_y_power(1);
    return r.truncated(order_x, order_y);
}

BiSeries table_as_biseries(const GenusTable& t, unsigned g) {
    require(t.with_one_chords(), "table must be refined by 1-chord count");
    BiSeries b(t.n_max(), t.n_max());
    for (unsigned n = 0; n <= t.n_max(); ++n)
        for (unsigned m = 0; m <= t.n_max(); ++m) b.at(n, m) = Rational(t.at(g, n, m));
    return b;
}

BiSeries fiber_c(unsigned s, unsigned t, std::size_t order_x, std::size_t order_y) {
    require(s >= 1 && t <= s, "fiber_c needs s >= 1 and t <= s");
    const Series base = expand_rational(Poly{0, 1}, Poly{1, -1}, order_x);
    return BiSeries::from_series_x(series_pow(base, s), order_y)
        .mul_y_power(t)
        .truncated(order_x, order_y);
}

namespace {

// z^{2 sigma} / ((1-z^2)(1-z)^2 - (2z-z^2) z^{2 sigma})
RationalFunction stack_block(unsigned sigma) {
    const Poly z2s = Poly::monomial(1, 2UL * sigma);
    return {z2s, Poly{1, 0, -1} * Poly{1, -1}.pow(2) - Poly{0, 2, -1} * z2s};
}

}  // namespace

Series fiber_d(unsigned s, unsigned m, unsigned sigma, std::size_t order) {
    require(sigma >= 1, "sigma must be at least 1");
    require(m <= s, "a shape has at most s 1-chords");
    const Series block = stack_block(sigma).expand(order);
    const Series lead = expand_rational(Poly::constant(1), Poly{1, -1}, order);
    return (lead * series_pow(block, s)).mul_z_power(m).truncated(order);
}

RationalFunction u_sigma(unsigned sigma) {
    require(sigma >= 1, "sigma must be at least 1");
    return {Poly::monomial(1, 2UL * (sigma - 1)),
            Poly::monomial(1, 2UL * sigma) - Poly::monomial(1, 2) + Poly::constant(1)};
}

namespace {

// u = a/b  =>  u z^2 - z + 1 = (a z^2 + b(1-z)) / b.
Poly shifted_denominator(const RationalFunction& u) {
    return u.numerator * Poly::monomial(1, 2) + u.denominator * Poly{1, -1};
}

}  // namespace

RationalFunction theta_sigma(unsigned sigma) {
    const RationalFunction u = u_sigma(sigma);
    const Poly d = shifted_denominator(u);
    return {u.numerator * Poly::monomial(1, 2) * u.denominator, d * d};
}

RationalFunction dg_prefactor(unsigned sigma) {
    const RationalFunction u = u_sigma(sigma);
    return {u.denominator, shifted_denominator(u)};
}

Series dg_sigma_series(unsigned g, unsigned sigma, std::size_t order) {
    const Series theta = theta_sigma(sigma).expand(order);
    return dg_prefactor(sigma).expand(order) * series_compose(cg_series(g, order), theta);
}

Series dg_from_fibers(const GenusTable& shapes, unsigned g, unsigned sigma, std::size_t order) {
    require(shapes.kind() == DiagramClass::shapes && shapes.with_one_chords(),
            "fiber sum needs a shapes table refined by 1-chord count");
    require(2UL * sigma * (shapes.n_max() + 1) > order,
            "shapes table too small: shapes with " + std::to_string(shapes.n_max() + 1) +
                " chords reach z^" + std::to_string(order));
    Series sum = Series::zero(order);
    for (unsigned s = 0; s <= shapes.n_max(); ++s)
        for (unsigned m = 0; m <= s; ++m) {
            const Integer count = shapes.at(g, s, m);
            if (count == 0) continue;
            const Series fiber = s == 0 ? expand_rational(Poly::constant(1), Poly{1, -1}, order)
                                        : fiber_d(s, m, sigma, order);
            sum += Rational(count) * fiber;
        }
    return sum;
}

BiSeries cg_from_fibers(const GenusTable& shapes, unsigned g, std::size_t order_x,
                        std::size_t order_y) {
    require(shapes.kind() == DiagramClass::shapes && shapes.with_one_chords(),
            "fiber sum needs a shapes table refined by 1-chord count");
    require(shapes.n_max() >= order_x, "shapes table must reach the x truncation order");
    BiSeries sum(order_x, order_y);
    for (unsigned s = 0; s <= order_x; ++s)
        for (unsigned m = 0; m <= s; ++m) {
            const Integer count = shapes.at(g, s, m);
            if (count == 0) continue;
            const BiSeries fiber = s == 0 ? BiSeries::constant(1, order_x, order_y)
                                          : fiber_c(s, m, order_x, order_y);
            sum = sum + Rational(count) * fiber;
        }
    return sum;
}

}  // namespace lcd
