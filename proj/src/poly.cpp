#include "lcd/poly.hpp"

#include "lcd/error.hpp"

#include <sstream>

namespace lcd {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Rational& a, const Rational& b) {
    return Poly(std::vector<Rational>{a, b});
}

void Poly::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

bool Poly::is_integral() const {
    for (const auto& v : c_)
        if (!lcd::is_integral(v)) return false;
    return true;
}

long Poly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (sgn(c_[k]) != 0) return static_cast<long>(k);
    return -1;
}

Rational Poly::operator()(const Rational& z) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return Poly(std::move(d));
}

Poly Poly::shifted(const Rational& delta) const { return compose_affine(delta, 1); }

Poly Poly::compose_affine(const Rational& a, const Rational& b) const {
    return compose(Poly::linear(a, b));
}

Poly Poly::compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly::constant(*it);
    return acc;
}

Poly Poly::mul_z_power(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> v(k, Rational(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
}

Poly Poly::div_z_power(std::size_t k) const {
    if (is_zero()) return {};
    for (std::size_t i = 0; i < k; ++i)
        ensure(i >= c_.size() || sgn(c_[i]) == 0,
               "div_z_power: z^" + std::to_string(k) + " does not divide " + to_string());
    if (k >= c_.size()) return {};
    return Poly(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
}

Poly Poly::pow(unsigned exp) const {
    Poly result = Poly::constant(1);
    Poly base = *this;
    while (exp > 0) {
        if (exp & 1U) result *= base;
        exp >>= 1U;
        if (exp > 0) base *= base;
    }
    return result;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a) {
    std::vector<Rational> v(a.c_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> v(p.c_);
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    require(!den.is_zero(), "polynomial division by zero");
    Poly rem = num;
    const long dd = den.degree();
    if (rem.degree() < dd) return {Poly{}, rem};
    std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - dd + 1));
    const Rational& lead = den.c_.back();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const auto shift = static_cast<std::size_t>(rem.degree() - dd);
        const Rational factor = rem.c_.back() / lead;
        quot[shift] = factor;
        rem -= Poly::monomial(factor, shift) * den;
    }
    return {Poly(std::move(quot)), rem};
}

std::vector<std::string> Poly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(lcd::to_string(v));
    return out;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        Rational v = c_[k];
        if (!first) {
            os << (sgn(v) < 0 ? " - " : " + ");
            v = abs(v);
        }
        first = false;
        if (k == 0) {
            os << v.get_str();
        } else {
            if (v != 1) os << v.get_str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly poly_in_shifted_basis(const Poly& p, const Rational& scale, const Rational& shift) {
    require(sgn(scale) != 0, "shifted basis needs a nonzero scale");
    // w = shift + scale z  =>  z = (w - shift) / scale
    const Rational inv = 1 / scale;
    return p.compose(Poly::linear(-shift * inv, inv));
}

Poly poly_from_shifted_basis(const Poly& q, const Rational& scale, const Rational& shift) {
    return q.compose(Poly::linear(shift, scale));
}

int sign_at(const Poly& p, const Rational& z) { return sgn(p(z)); }

}  // namespace lcd
