#include "lcd/recurrences.hpp"

#include "lcd/error.hpp"

namespace lcd {

GenusTable cg_table(unsigned g_max, unsigned n_max) {
    GenusTable t(DiagramClass::full, g_max, n_max, false);
    t.set(0, 0, 1);
    for (unsigned n = 1; n <= n_max; ++n) {
        const long ln = n;
        for (unsigned g = 0; g <= g_max; ++g) {
            if (2 * g > n) {
                t.set(g, n, 0);
                continue;
            }
            Integer rhs = Integer(2 * (2 * ln - 1)) * t.at(g, n - 1);
            if (g >= 1 && n >= 2)
                rhs += Integer(2 * ln - 1) * Integer(ln - 1) * Integer(2 * ln - 3) * t.at(g - 1, n - 2);
            Integer q;
            Integer r;
            mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rhs.get_mpz_t(), n + 1);
            ensure(r == 0, "c_g(n) recursion: inexact division by n+1 at g=" + std::to_string(g) +
                               ", n=" + std::to_string(n));
            t.set(g, n, q);
        }
    }
    return t;
}

Integer cg_closed_form(unsigned g, unsigned n) {
    require(g >= 1 && g <= 3, "closed forms exist for g = 1, 2, 3 only");
    require(n >= 2 * g, "closed form for c_" + std::to_string(g) + "(n) needs n >= " +
                            std::to_string(2 * g));
    const long ln = n;
    const Integer odd = double_factorial_odd(ln);
    Rational v;
    switch (g) {
    case 1:
        v = make_rational(pow_int(2, n - 2) * odd, 3 * factorial(n - 2));
        break;
    case 2:
        v = make_rational(pow_int(2, n - 4) * Integer(5 * ln - 2) * odd, 90 * factorial(n - 4));
        break;
    default:
        v = make_rational(pow_int(2, n - 6) * Integer(35 * ln * ln - 77 * ln + 12) * odd,
                          5670 * factorial(n - 6));
        break;
    }
    ensure(is_integral(v), "closed form for c_" + std::to_string(g) + "(" + std::to_string(n) +
                               ") is not an integer: " + to_string(v));
    return v.get_num();
}

Integer cg_at_2g(unsigned g) {
    const Rational v = make_rational(factorial(4UL * g), pow_int(4, g) * factorial(2UL * g + 1));
    ensure(is_integral(v), "c_g(2g) formula is not an integer at g=" + std::to_string(g));
    return v.get_num();
}

EgfSides cg_2g_egf(std::size_t order) {
    std::vector<Rational> lhs(order + 1);
    for (std::size_t k = 0; 2 * k <= order; ++k)
        lhs[2 * k] = make_rational(cg_at_2g(static_cast<unsigned>(k)), factorial(2 * k));
    // (sqrt(1+2x) - sqrt(1-2x)) / (2x): expand to order+1, then divide by x.
    const std::size_t n = order + 1;
    const Series plus = series_sqrt(Series::from_poly(Poly{1, 2}, n));
    const Series minus = series_sqrt(Series::from_poly(Poly{1, -2}, n));
    const Series rhs = make_rational(1, 2) * (plus - minus).div_z_power(1);
    return {Series(std::move(lhs), order), rhs};
}

namespace {

// The unique polynomial p with p(0) = 0 and p(x) - p(x-1) = q(x).
Poly indefinite_sum(const Poly& q) {
    const long d = q.degree() + 1;
    if (d <= 0) return {};
    // p(x) - p(x-1) = sum_j a_j (x^j - (x-1)^j); [x^k] of x^j - (x-1)^j is
    // -C(j,k)(-1)^{j-k} for k < j, so solve from the top coefficient down.
    std::vector<Rational> a(static_cast<std::size_t>(d) + 1);
    for (long k = d - 1; k >= 0; --k) {
        Rational rest = q.coeff(k);
        for (long j = k + 2; j <= d; ++j) {
            const Rational term = Rational(binomial(j, k)) * a[static_cast<std::size_t>(j)];
            rest -= ((j - k) % 2 == 0) ? -term : term;
        }
        a[static_cast<std::size_t>(k + 1)] = rest / Rational(k + 1);
    }
    Poly p(std::move(a));
    ensure(p - p.shifted(-1) == q, "indefinite summation failed for " + q.to_string("x"));
    return p;
}

}  // namespace

HZPolyTable hz_polys(unsigned n_max) {
    HZPolyTable rows;
    rows.reserve(n_max + 1);
    rows.push_back(Poly{0, 1});
    for (unsigned n = 1; n <= n_max; ++n) {
        const Poly& prev = rows.back();
        rows.push_back(indefinite_sum(prev + prev.shifted(-1)));
    }
    return rows;
}

HZPolyTable hz_rhs(unsigned n_max) {
    // F(z) = exp(x L(z)), L(z) = log((1+z)/(1-z)), so F' = x L' F with
    // L'(z) = 2 / (1 - z^2) = 2 (1 + z^2 + z^4 + ...). Coefficients of F are
    // polynomials in x:  (k+1) F_{k+1} = x sum_{i} L'_i F_{k-i}.
    const std::size_t order = n_max + 1;
    std::vector<Poly> f(order + 1);
    f[0] = Poly::constant(1);
    const Poly x = Poly{0, 1};
    for (std::size_t k = 0; k < order; ++k) {
        Poly acc;
        for (std::size_t i = 0; i <= k; i += 2) acc += f[k - i];
        f[k + 1] = make_rational(2, static_cast<long>(k + 1)) * (x * acc);
    }
    HZPolyTable rows;
    rows.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) rows.push_back(make_rational(1, 2) * f[n + 1]);
    return rows;
}

}  // namespace lcd
