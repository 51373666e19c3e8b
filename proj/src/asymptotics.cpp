#include "lcd/asymptotics.hpp"

#include "lcd/error.hpp"
#include "lcd/genfunc.hpp"
#include "lcd/recurrences.hpp"

#include <algorithm>
#include <string>

namespace lcd {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    const Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p))};
}

Interval operator/(const Interval& a, const Interval& b) {
    require(sgn(b.lo) > 0 || sgn(b.hi) < 0, "interval division by an interval containing 0");
    return a * Interval{1 / b.hi, 1 / b.lo};
}

Interval abs(const Interval& a) {
    if (sgn(a.lo) >= 0) return a;
    if (sgn(a.hi) <= 0) return {-a.hi, -a.lo};
    return {0, std::max(Rational(-a.lo), a.hi)};
}

Interval sqrt_interval(const Rational& v, unsigned digits) {
    require(sgn(v) >= 0, "sqrt of a negative number");
    const Integer scale = pow_int(10, digits);
    const Integer scaled_floor = v.get_num() * scale * scale / v.get_den();
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled_floor.get_mpz_t());
    Interval out{make_rational(root, scale), make_rational(root + 1, scale)};
    // floor(v s^2) <= v s^2 < floor(v s^2) + 1 <= (root + 1)^2
    ensure(out.lo * out.lo <= v && v <= out.hi * out.hi, "sqrt enclosure failed");
    return out;
}

Interval pi_interval() {
    static const Integer digits("314159265358979323846264338327950288");
    const Integer scale = pow_int(10, 35);
    return {make_rational(digits, scale), make_rational(digits + 1, scale)};
}

Interval inv_sqrt_pi_interval() {
    const Interval pi = pi_interval();
    return {1 / sqrt_interval(pi.hi).hi, 1 / sqrt_interval(pi.lo).lo};
}

Rational gamma_half_integer_over_sqrt_pi(unsigned k) {
    return make_rational(factorial(2UL * k), pow_int(4, k) * factorial(k));
}

AsymptoticEstimate cg_leading_constant(unsigned g) {
    require(g >= 1, "leading constant is defined for g >= 1");
    AsymptoticEstimate est;
    est.g = g;
    est.exponent = make_rational(6L * g - 3, 2);
    est.growth_rate = Interval::point(4);
    est.constant_over_sqrt_pi = pg(g)(make_rational(1, 4)) / gamma_half_integer_over_sqrt_pi(3 * g - 1);
    est.constant = Interval::point(est.constant_over_sqrt_pi) * inv_sqrt_pi_interval();
    return est;
}

RatioCheck cg_ratio_check(unsigned g, unsigned n) {
    require(g >= 1 && n >= 1, "ratio check needs g >= 1 and n >= 1");
    RatioCheck out;
    out.g = g;
    out.n = n;
    const Integer c = cg_table(g, n).at(g, n);
    // n^{3g-3/2} = n^{3g-2} sqrt(n)
    const Interval scale = Interval::point(Rational(pow_int(n, 3UL * g - 2) * pow_int(4, n))) *
                           sqrt_interval(Rational(n));
    out.ratio = Interval::point(Rational(c)) / scale;
    out.constant = cg_leading_constant(g).constant;
    out.relative_error = abs(out.ratio / out.constant - Interval::point(1));
    return out;
}

bool ratio_error_decreasing(unsigned g, const std::vector<unsigned>& ns) {
    std::vector<Interval> errors;
    for (unsigned n : ns) errors.push_back(cg_ratio_check(g, n).relative_error);
    for (std::size_t i = 1; i < errors.size(); ++i)
        if (!(errors[i].hi < errors[i - 1].lo)) return false;
    return true;
}

namespace {

// Sturm chain with every member scaled to a positive leading coefficient of 1.
std::vector<Poly> sturm_chain(const Poly& p) {
    auto normalize = [](const Poly& q) {
        const Rational lead = q.coeff(q.degree());
        return Rational(1 / (sgn(lead) < 0 ? Rational(-lead) : lead)) * q;
    };
    std::vector<Poly> chain{p, p.derivative()};
    while (chain.back().degree() > 0) {
        Poly r = -divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(normalize(r));
    }
    return chain;
}

unsigned sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    unsigned changes = 0;
    int previous = 0;
    for (const Poly& q : chain) {
        const int s = sign_at(q, x);
        if (s == 0) continue;
        if (previous != 0 && s != previous) ++changes;
        previous = s;
    }
    return changes;
}

unsigned chain_count(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace

unsigned sturm_count(const Poly& p, const Rational& a, const Rational& b) {
    require(!p.is_zero(), "Sturm count of the zero polynomial");
    require(a < b, "Sturm count needs a < b");
    require(sign_at(p, a) != 0, "Sturm count needs p(a) != 0");
    return chain_count(sturm_chain(p), a, b);
}

RootIsolation isolate_smallest_root(const Poly& p, const Rational& lo, const Rational& hi,
                                    const Rational& width) {
    require(!p.is_zero() && p.degree() >= 1, "root isolation needs a nonconstant polynomial");
    require(lo < hi && sgn(width) > 0, "root isolation needs lo < hi and a positive width");
    require(sign_at(p, lo) != 0, "root isolation needs p(lo) != 0");
    const std::vector<Poly> chain = sturm_chain(p);
    require(chain_count(chain, lo, hi) >= 1,
            "no root of " + p.to_string("z") + " in (" + to_string(lo) + ", " + to_string(hi) + "]");

    Rational a = lo;
    Rational b = hi;
    // Invariant: no root in (lo, a], at least one root in (a, b].
    while (b - a > width) {
        const Rational mid = (a + b) / 2;
        if (chain_count(chain, a, mid) >= 1)
            b = mid;
        else
            a = mid;
    }
    RootIsolation out;
    out.polynomial = p;
    out.lo = a;
    out.hi = b;
    out.sign_change = sign_at(p, a) * sign_at(p, b) < 0;
    out.roots_below = a == lo ? 0 : chain_count(chain, lo, a);
    out.roots_inside = chain_count(chain, a, b);
    return out;
}

Poly theta_quarter_polynomial(unsigned sigma) {
    const RationalFunction theta = theta_sigma(sigma);
    return Rational(4) * theta.numerator - theta.denominator;
}

RootIsolation dominant_singularity(unsigned sigma, const Rational& width) {
    require(sigma >= 1, "sigma must be at least 1");
    return isolate_smallest_root(theta_quarter_polynomial(sigma), 0, 1, width);
}

Interval growth_rate(const RootIsolation& root) {
    require(sgn(root.lo) > 0, "growth rate needs a positive root enclosure");
    return {1 / root.hi, 1 / root.lo};
}

EmpiricalGrowth empirical_growth(unsigned g, unsigned sigma, unsigned n_max) {
    require(sigma >= 1, "sigma must be at least 1");
    const std::size_t order = n_max + 2UL * sigma + 2;
    const Series d = dg_sigma_series(g, sigma, order);
    for (std::size_t n = n_max; n < order; ++n)
        if (sgn(d[n]) != 0 && sgn(d[n + 1]) != 0)
            return {static_cast<unsigned>(n), d[n + 1] / d[n]};
    throw InvariantViolation("no consecutive nonzero coefficients of D_{" + std::to_string(g) + "," +
                             std::to_string(sigma) + "} after n = " + std::to_string(n_max));
}

EmpiricalGrowth catalan_growth(unsigned n) {
    const long ln = n;
    // C(n+1)/C(n) = 2(2n+1)/(n+2)
    return {n, make_rational(2 * (2 * ln + 1), ln + 2)};
}

bool within_relative(const Interval& value, const Interval& target, const Rational& tol) {
    return abs(value / target - Interval::point(1)).hi <= tol;
}

}  // namespace lcd
