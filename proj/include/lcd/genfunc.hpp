#pragma once

#include "lcd/biseries.hpp"
#include "lcd/genus_table.hpp"
#include "lcd/poly.hpp"
#include "lcd/rational_function.hpp"
#include "lcd/series.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lcd {

// ---- Catalan and C_g(z) --------------------------------------------------

// binomial(2n, n) / (n+1) for n <= order.
Series catalan_series(std::size_t order);
// (1 - sqrt(1-4z)) / (2z) via series_sqrt.
Series catalan_series_closed_form(std::size_t order);
// 2 / (1 + sqrt(1-4z)).
Series catalan_series_reciprocal_form(std::size_t order);

// C_g(z) = sum_n c_g(n) z^n from the recursion table.
Series cg_series(unsigned g, std::size_t order);

// ---- The polynomials P_g ---------------------------------------------------

// P_g = C_g(z) (1 - 2z C_0(z))^{6g-1}, expanded to order 3g+10. Throws
// InvariantViolation unless every coefficient is an integer and everything
// past degree 3g-1 vanishes.
Poly pg_direct(unsigned g);

struct PgRecord {
    unsigned g = 1;
    Poly P;
    Poly R;
    // Q_{g-1} and the partial-fraction coefficients A_j (2 <= j <= 3(g-1)+4)
    // that produced P; empty for the seed g = 1.
    std::optional<Poly> Q_prev;
    std::map<unsigned, Rational> A;
    // Integration constant from the closed formula and re-derived from the
    // vanishing constant term; equal whenever the record exists.
    std::optional<Rational> integration_constant;
};

// P_1 = z^2.
PgRecord pg_seed();
// One step of the constructive induction: derivatives P_{1g}, P_{2g}, P_{3g},
// then Q_g, its partial fractions in powers of (1-4z), and P_{g+1} from the
// Laurent polynomial. Every invariant of the record is asserted.
PgRecord pg_pipeline_step(const PgRecord& rec);
// Records for 1..g_max.
std::vector<PgRecord> pg_pipeline(unsigned g_max);
// Q_g for a record of genus g (the polynomial used by the next step).
Poly qg_from(const PgRecord& rec);

// Checks all record invariants, throwing InvariantViolation with the
// offending coefficient on failure.
void check_pg_invariants(unsigned g, const Poly& P);

// R_g = P_g / z^{2g}; asserts R_g(1/4) != 0 and R_g(0) = c_g(2g).
Poly rg(unsigned g);
// P_g from the pipeline.
Poly pg(unsigned g);
// Q_g from the pipeline.
Poly qg(unsigned g);

// P_g(z) sqrt(1-4z) / (1-4z)^{3g}, expanded.
Series cg_series_from_closed_form(unsigned g, std::size_t order);

// z(1-4z) C_g' + (1-2z) C_g - Phi_{g-1}, with
// Phi_{g-1} = 4z^5 C_{g-1}''' + 24z^4 C_{g-1}'' + 27z^3 C_{g-1}' + 3z^2 C_{g-1}.
Series ode_residual(unsigned g, std::size_t order);

// ---- Bivariate series ------------------------------------------------------

// C_g(x, y) = 1/(x+1-yx) C_g(x/(x+1-yx)^2); coefficient (n, m) is c_g(n, m).
BiSeries cg_bivariate(unsigned g, std::size_t order_x, std::size_t order_y);
// S_g(z, u) = (1+z)/(1+2z-zu) C_g(z(1+z)/(1+2z-zu)^2); coefficient (n, m) is s_g(n, m).
BiSeries sg_bivariate(unsigned g, std::size_t order_x, std::size_t order_y);
// dC/dy - x dC/dy - 2x^2 dC/dx - x C + x y dC/dy, truncated to (order_x, order_y).
BiSeries pde_residual(unsigned g, std::size_t order_x, std::size_t order_y);

// Bivariate series whose coefficients are a refined genus table.
BiSeries table_as_biseries(const GenusTable& t, unsigned g);

// ---- Fibers of the shape projection ---------------------------------------

// (x/(1-x))^s y^t: all diagrams projecting to one shape with s chords, t of them 1-chords.
BiSeries fiber_c(unsigned s, unsigned t, std::size_t order_x, std::size_t order_y);
// (1-z)^{-1} (z^{2 sigma} / ((1-z^2)(1-z)^2 - (2z-z^2) z^{2 sigma}))^s z^m.
Series fiber_d(unsigned s, unsigned m, unsigned sigma, std::size_t order);

// ---- Macromolecular diagrams ------------------------------------------------

// u_sigma(z) = z^{2(sigma-1)} / (z^{2 sigma} - z^2 + 1).
RationalFunction u_sigma(unsigned sigma);
// u_sigma z^2 / (u_sigma z^2 - z + 1)^2, the argument of C_g.
RationalFunction theta_sigma(unsigned sigma);
// 1 / (u_sigma z^2 - z + 1).
RationalFunction dg_prefactor(unsigned sigma);

// D_{g,sigma}(z) = prefactor * C_g(theta_sigma(z)).
Series dg_sigma_series(unsigned g, unsigned sigma, std::size_t order);

// Sum over shapes of genus g of fiber_d, weighted by the shape counts in a
// refined shapes table: the fiber decomposition of D_{g,sigma}.
Series dg_from_fibers(const GenusTable& shapes, unsigned g, unsigned sigma, std::size_t order);
// Sum over shapes of fiber_c: the fiber decomposition of C_g(x, y).
BiSeries cg_from_fibers(const GenusTable& shapes, unsigned g, std::size_t order_x,
                        std::size_t order_y);

}  // namespace lcd
