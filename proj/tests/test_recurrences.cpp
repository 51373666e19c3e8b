#include "lcd/error.hpp"
#include "lcd/recurrences.hpp"

#include <doctest.h>

using namespace lcd;

TEST_CASE("recursion table first values") {
    const GenusTable t = cg_table(3, 8);
    const long c1[] = {0, 0, 1, 10, 70, 420, 2310, 12012, 60060};
    for (unsigned n = 0; n <= 8; ++n) CHECK(t.at(1, n) == c1[n]);
    CHECK(t.at(2, 4) == 21);
    CHECK(t.at(2, 5) == 483);
    CHECK(t.at(3, 6) == 1485);
    CHECK(t.at(0, 8) == 1430);
}

TEST_CASE("genus sums are (2n-1)!!") {
    const GenusTable t = cg_table(20, 40);
    for (unsigned n = 0; n <= 40; ++n) CHECK(t.total(n) == double_factorial_odd(n));
}

TEST_CASE("closed forms") {
    const GenusTable t = cg_table(3, 30);
    for (unsigned g = 1; g <= 3; ++g)
        for (unsigned n = 2 * g; n <= 30; ++n) CHECK(cg_closed_form(g, n) == t.at(g, n));
    CHECK_THROWS_AS((cg_closed_form(4, 10)), PreconditionError);
    CHECK_THROWS_AS((cg_closed_form(2, 3)), PreconditionError);
    const long top[] = {1, 1, 21, 1485, 225225};
    for (unsigned g = 0; g <= 4; ++g) CHECK(cg_at_2g(g) == top[g]);
}

TEST_CASE("exponential generating function of the top coefficients") {
    const EgfSides s = cg_2g_egf(12);
    CHECK(s.from_counts == s.closed_form);
    CHECK(s.from_counts[0] == 1);
    CHECK(s.from_counts[1] == 0);
    CHECK(s.from_counts[2] == make_rational(1, 2));
}

TEST_CASE("Harer-Zagier polynomials") {
    const HZPolyTable p = hz_polys(10);
    const HZPolyTable b = hz_rhs(10);
    for (unsigned n = 0; n <= 10; ++n) CHECK(p[n] == b[n]);
    CHECK(p[0] == Poly{0, 1});
    CHECK(p[1] == Poly{0, 0, 1});
    // n = 2: (2x^3 + x) / 3
    CHECK(p[2] == Poly(std::vector<Rational>{0, make_rational(1, 3), 0, make_rational(2, 3)}));
    const GenusTable t = cg_table(5, 10);
    for (unsigned n = 0; n <= 10; ++n) {
        const Rational scale(double_factorial_odd(n));
        for (unsigned g = 0; 2 * g <= n; ++g) CHECK(p[n].coeff(n + 1 - 2 * g) * scale == t.at(g, n));
    }
}
