#include "lcd/number.hpp"

#include "lcd/error.hpp"

#include <cctype>

namespace lcd {

Rational make_rational(const Integer& num, const Integer& den) {
    require(den != 0, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

namespace {

bool is_decimal_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    require(is_decimal_integer(num) && is_decimal_integer(den), "malformed rational '" + text + "'");
    const std::string strip_num = num[0] == '+' ? num.substr(1) : num;
    const std::string strip_den = den[0] == '+' ? den.substr(1) : den;
    return make_rational(Integer(strip_num, 10), Integer(strip_den, 10));
}

std::string to_string(const Integer& v) { return v.get_str(10); }

std::string to_string(const Rational& v) { return v.get_str(10); }

bool is_integral(const Rational& v) { return v.get_den() == 1; }

bool is_canonical(const Rational& v) {
    if (v.get_den() <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return g == 1;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer double_factorial_odd(long n) {
    Integer r = 1;
    for (long k = 2 * n - 1; k > 1; k -= 2) r *= k;
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer pow_int(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow_rat(const Rational& base, unsigned long exp) {
    return make_rational(pow_int(base.get_num(), exp), pow_int(base.get_den(), exp));
}

double to_double(const Rational& v) { return v.get_d(); }

}  // namespace lcd

namespace lcd {

std::string to_decimal(const Rational& v, unsigned digits) {
    const Integer scale = pow_int(10, digits);
    Integer scaled = abs(v.get_num()) * scale / v.get_den();
    std::string body = scaled.get_str();
    if (digits > 0) {
        if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, ".");
    }
    return (sgn(v) < 0 ? "-" : "") + body;
}

}  // namespace lcd
