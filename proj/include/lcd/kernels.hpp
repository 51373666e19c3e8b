#pragma once

// Data-parallel coefficient kernels. Each kernel has a serial reference
// implementation and an OpenMP implementation; both must return identical
// results and the tests hold them to that.

#include "lcd/number.hpp"

#include <span>
#include <vector>

namespace lcd::kernels {

enum class Exec { serial, parallel };

// Truncated Cauchy product: out[k] = sum_{i+j=k} a[i] b[j] for k < len.
// Works on a common-denominator integer image of each operand so the inner
// loop is pure mpz multiply-add.
std::vector<Rational> convolve_serial(std::span<const Rational> a, std::span<const Rational> b,
                                      std::size_t len);
std::vector<Rational> convolve_parallel(std::span<const Rational> a,
                                        std::span<const Rational> b, std::size_t len);

inline std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b,
                                      std::size_t len, Exec exec = Exec::parallel) {
    return exec == Exec::serial ? convolve_serial(a, b, len) : convolve_parallel(a, b, len);
}

// Threads the parallel kernels will use (1 when built without OpenMP).
int max_threads();

}  // namespace lcd::kernels
