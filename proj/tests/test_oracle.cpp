#include "lcd/error.hpp"
#include "lcd/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace lcd;
using kernels::Exec;

TEST_CASE("enumeration visits each perfect matching exactly once") {
    for (unsigned n = 0; n <= 6; ++n) {
        const auto all = oracle::enumerate_chord_diagrams(n);
        CHECK(all.size() == double_factorial_odd(n).get_ui());
        std::set<std::vector<Vertex>> distinct;
        for (const auto& d : all) distinct.insert(d.partners());
        CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("partial enumeration counts involutions") {
    // Telephone numbers: involutions on v points.
    const unsigned expected[] = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620};
    for (unsigned v = 0; v < 10; ++v) {
        const auto all = oracle::enumerate_partial_diagrams(v);
        CHECK(all.size() == expected[v]);
        std::set<std::vector<Vertex>> distinct;
        for (const auto& d : all) distinct.insert(d.partners());
        CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("genus tables of small diagrams") {
    const GenusTable t = oracle::oracle_cg(6, Exec::serial);
    // genus 0 gives the Catalan numbers
    const unsigned catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (unsigned n = 0; n <= 6; ++n) CHECK(t.at(0, n) == catalan[n]);
    CHECK(t.at(1, 2) == 1);
    CHECK(t.at(1, 3) == 10);
    CHECK(t.at(1, 4) == 70);
    CHECK(t.at(2, 4) == 21);
    CHECK(t.at(3, 6) == 1485);
    for (unsigned n = 0; n <= 6; ++n) CHECK(t.total(n) == double_factorial_odd(n));
}

TEST_CASE("serial and parallel oracles agree") {
    CHECK(oracle::oracle_cg(7, Exec::serial) == oracle::oracle_cg(7, Exec::parallel));
    CHECK(oracle::oracle_cg_onechords(6, Exec::serial) == oracle::oracle_cg_onechords(6, Exec::parallel));
    CHECK(oracle::oracle_shapes(6, Exec::serial) == oracle::oracle_shapes(6, Exec::parallel));
    for (unsigned sigma = 1; sigma <= 2; ++sigma)
        CHECK(oracle::oracle_macromolecular(12, sigma, Exec::serial) ==
              oracle::oracle_macromolecular(12, sigma, Exec::parallel));
}

TEST_CASE("fast oracle predicates agree with the diagram model") {
    const GenusTable refined = oracle::oracle_cg_onechords(5, Exec::serial);
    GenusTable slow(DiagramClass::full, 2, 5, true);
    GenusTable slow_shapes(DiagramClass::shapes, 2, 5, true);
    for (unsigned n = 0; n <= 5; ++n)
        for (const auto& d : oracle::enumerate_chord_diagrams(n)) {
            const auto p = PartialDiagram::from(d);
            const auto m = static_cast<unsigned>(one_chord_count(p));
            slow.add(genus(d), n, m, 1);
            if (is_shape(d)) slow_shapes.add(genus(d), n, m, 1);
        }
    CHECK(refined == slow);
    CHECK(oracle::oracle_shapes(5, Exec::serial) == slow_shapes);

    GenusTable slow_mm(DiagramClass::macromolecular, 2, 10, false, 2);
    for (unsigned v = 0; v <= 10; ++v)
        for (const auto& d : oracle::enumerate_partial_diagrams(v))
            if (is_macromolecular(d, 2)) slow_mm.add(partial_genus(d), v, 0, 1);
    CHECK(oracle::oracle_macromolecular(10, 2, Exec::serial) == slow_mm);
}

TEST_CASE("1-chord refinement sums to the plain table") {
    const GenusTable refined = oracle::oracle_cg_onechords(6);
    const GenusTable plain = oracle::oracle_cg(6);
    CHECK(!first_mismatch(refined.marginal(), plain));
    // Every nonempty diagram has a 1-chord or a crossing; c_0(n, 0) = 0 for n >= 1.
    for (unsigned n = 1; n <= 6; ++n) CHECK(refined.at(0, n, 0) == 0);
}

TEST_CASE("enumeration caps") {
    oracle::EnumerationLimits small;
    small.max_chords = 4;
    small.max_partial_vertices = 6;
    CHECK_THROWS_AS((oracle::oracle_cg(5, Exec::serial, small)), CapExceeded);
    CHECK_NOTHROW(oracle::oracle_cg(4, Exec::serial, small));
    CHECK_THROWS_AS((oracle::oracle_macromolecular(7, 1, Exec::serial, small)), CapExceeded);
    CHECK_THROWS_AS((oracle::enumerate_chord_diagrams(5, small)), CapExceeded);
}

TEST_CASE("mismatch reporting names the first differing cell") {
    GenusTable a = oracle::oracle_cg(4);
    GenusTable b = a;
    b.set(1, 4, 71);
    const auto mm = first_mismatch(a, b);
    REQUIRE(mm);
    CHECK(mm->g == 1);
    CHECK(mm->n == 4);
    CHECK(mm->left == 70);
    CHECK(mm->right == 71);
    CHECK_THROWS_AS((GenusTable(DiagramClass::macromolecular, 1, 4, false)), PreconditionError);
    CHECK_THROWS_AS((GenusTable(DiagramClass::full, 1, 4, false, 2)), PreconditionError);
}

TEST_CASE("oracle zeros, subclass bounds and determinism") {
    const GenusTable c = oracle::oracle_cg_onechords(7);
    const GenusTable s = oracle::oracle_shapes(7);
    for (unsigned g = 0; g <= 3; ++g)
        for (unsigned n = 0; n <= 7; ++n) {
            CHECK((c.at(g, n) == 0) == (2 * g > n));
            for (unsigned m = 0; m <= n; ++m) CHECK(s.at(g, n, m) <= c.at(g, n, m));
        }
    CHECK(oracle::oracle_cg_onechords(7) == c);
    CHECK(oracle::oracle_shapes(7, Exec::serial) == s);
}
