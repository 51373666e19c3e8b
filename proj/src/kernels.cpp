#include "lcd/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lcd::kernels {

namespace {

struct IntegerImage {
    std::vector<Integer> values;
    Integer denominator = 1;
};

// values[i] / denominator == src[i] for every i.
IntegerImage integer_image(std::span<const Rational> src, std::size_t len) {
    IntegerImage img;
    const std::size_t n = std::min(src.size(), len);
    for (std::size_t i = 0; i < n; ++i) {
        if (src[i].get_den() != 1)
            mpz_lcm(img.denominator.get_mpz_t(), img.denominator.get_mpz_t(),
                    src[i].get_den_mpz_t());
    }
    img.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(src[i]) == 0) continue;
        if (img.denominator == 1) {
            img.values[i] = src[i].get_num();
        } else {
            Integer scale;
            mpz_divexact(scale.get_mpz_t(), img.denominator.get_mpz_t(), src[i].get_den_mpz_t());
            img.values[i] = src[i].get_num() * scale;
        }
    }
    return img;
}

Integer convolve_one(const IntegerImage& a, const IntegerImage& b, std::size_t k) {
    Integer acc = 0;
    if (a.values.empty() || b.values.empty()) return acc;
    const std::size_t lo = k >= b.values.size() ? k - (b.values.size() - 1) : 0;
    const std::size_t hi = std::min(k, a.values.size() - 1);
    for (std::size_t i = lo; i <= hi && i <= k; ++i) {
        const Integer& x = a.values[i];
        const Integer& y = b.values[k - i];
        if (sgn(x) == 0 || sgn(y) == 0) continue;
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
    return acc;
}

Rational finish(Integer&& acc, const Integer& den) {
    if (den == 1) return Rational(acc);
    Rational r(acc, den);
    r.canonicalize();
    return r;
}

}  // namespace

std::vector<Rational> convolve_serial(std::span<const Rational> a, std::span<const Rational> b,
                                      std::size_t len) {
    const IntegerImage ia = integer_image(a, len);
    const IntegerImage ib = integer_image(b, len);
    const Integer den = ia.denominator * ib.denominator;
    std::vector<Rational> out(len);
    for (std::size_t k = 0; k < len; ++k) out[k] = finish(convolve_one(ia, ib, k), den);
    return out;
}

std::vector<Rational> convolve_parallel(std::span<const Rational> a,
                                        std::span<const Rational> b, std::size_t len) {
    const IntegerImage ia = integer_image(a, len);
    const IntegerImage ib = integer_image(b, len);
    const Integer den = ia.denominator * ib.denominator;
    std::vector<Rational> out(len);
    const long n = static_cast<long>(len);
    // High indices carry the most terms; dynamic scheduling balances them.
#pragma omp parallel for schedule(dynamic, 4)
    for (long k = 0; k < n; ++k)
        out[k] = finish(convolve_one(ia, ib, static_cast<std::size_t>(k)), den);
    return out;
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace lcd::kernels
