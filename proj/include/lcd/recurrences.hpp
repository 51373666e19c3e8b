#pragma once

#include "lcd/genus_table.hpp"
#include "lcd/number.hpp"
#include "lcd/poly.hpp"
#include "lcd/series.hpp"

#include <vector>

namespace lcd {

// c_g(n) for g <= g_max, n <= n_max from
//   (n+1) c_g(n) = 2(2n-1) c_g(n-1) + (2n-1)(n-1)(2n-3) c_{g-1}(n-2),
// with the Catalan row as base and stored zeros where 2g > n. Every division
// by (n+1) is checked to be exact.
GenusTable cg_table(unsigned g_max, unsigned n_max);

// Closed forms for g = 1, 2, 3; requires n >= 2g.
Integer cg_closed_form(unsigned g, unsigned n);

// c_g(2g) = (4g)! / (4^g (2g+1)!).
Integer cg_at_2g(unsigned g);

// Both sides of the exponential generating function identity for c_g(2g),
// as series in x to the given order:
//   sum_g c_g(2g) x^{2g} / (2g)!   and   (sqrt(1+2x) - sqrt(1-2x)) / (2x).
struct EgfSides {
    Series from_counts;
    Series closed_form;
};
EgfSides cg_2g_egf(std::size_t order);

// Rows p(0,x) .. p(n_max,x) of the Harer-Zagier polynomials, built from
//   p(n,x) = p(n,x-1) + p(n-1,x) + p(n-1,x-1),  p(0,x) = x,  p(n,0) = 0.
using HZPolyTable = std::vector<Poly>;
HZPolyTable hz_polys(unsigned n_max);

// Rows b(0,x) .. b(n_max,x) read off ((1+z)/(1-z))^x = 1 + 2 sum_n b(n,x) z^{n+1},
// computed as exp(x log((1+z)/(1-z))) with polynomial-in-x coefficients.
// Shares nothing with hz_polys.
HZPolyTable hz_rhs(unsigned n_max);

}  // namespace lcd
