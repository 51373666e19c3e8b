#include "lcd/diagram.hpp"
#include "lcd/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace lcd;

namespace {

// Uniform random perfect matching on 2n vertices.
ChordDiagram random_diagram(std::mt19937& rng, std::size_t n) {
    std::vector<Vertex> order(2 * n);
    std::iota(order.begin(), order.end(), Vertex{1});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Vertex> partner(2 * n);
    for (std::size_t k = 0; k < 2 * n; k += 2) {
        partner[order[k] - 1] = order[k + 1];
        partner[order[k + 1] - 1] = order[k];
    }
    return ChordDiagram(partner);
}

PartialDiagram random_partial(std::mt19937& rng, std::size_t vertices) {
    std::vector<Vertex> order(vertices);
    std::iota(order.begin(), order.end(), Vertex{1});
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<std::size_t> pick(0, vertices / 2);
    const std::size_t chords = pick(rng);
    std::vector<Vertex> partner(vertices, 0);
    for (std::size_t k = 0; k < 2 * chords; k += 2) {
        partner[order[k] - 1] = order[k + 1];
        partner[order[k + 1] - 1] = order[k];
    }
    return PartialDiagram(partner);
}

// Boundary cycles of tau∘iota written out as two explicit permutations.
unsigned reference_cycles(const ChordDiagram& d) {
    const std::size_t m = d.vertex_count();
    if (m == 0) return 1;
    std::vector<std::size_t> iota(m), tau(m);
    for (std::size_t v = 0; v < m; ++v) {
        iota[v] = d.partners()[v] - 1;
        tau[v] = (v + 1) % m;
    }
    std::vector<bool> seen(m, false);
    unsigned cycles = 0;
    for (std::size_t s = 0; s < m; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t v = s; !seen[v]; v = tau[iota[v]]) seen[v] = true;
    }
    return cycles;
}

bool crossing_free(const ChordDiagram& d) {
    const auto cs = d.chords();
    for (const auto& a : cs)
        for (const auto& b : cs)
            if (a.left < b.left && b.left < a.right && a.right < b.right) return false;
    return true;
}

}  // namespace

TEST_CASE("genus of small diagrams") {
    CHECK(genus(ChordDiagram{}) == 0);
    CHECK(boundary_cycles(ChordDiagram{}) == 1);
    CHECK(genus(ChordDiagram({2, 1})) == 0);
    CHECK(genus(ChordDiagram({3, 4, 1, 2})) == 1);
    CHECK(genus(ChordDiagram({4, 3, 2, 1})) == 0);
    // (1,4)(2,5)(3,6): the three pairwise crossing chords
    CHECK(genus(ChordDiagram({4, 5, 6, 1, 2, 3})) == 1);
    // (1,5)(2,6)(3,7)(4,8): four pairwise crossing chords, one boundary cycle
    CHECK(genus(ChordDiagram({5, 6, 7, 8, 1, 2, 3, 4})) == 2);
    // (1,3)(2,4)(5,7)(6,8): two genus-1 blocks side by side
    CHECK(genus(ChordDiagram({3, 4, 1, 2, 7, 8, 5, 6})) == 2);
    CHECK(genus(ChordDiagram({5, 7, 6, 8, 1, 3, 2, 4})) == 1);
}

TEST_CASE("invalid partner arrays are rejected") {
    CHECK_THROWS_AS((ChordDiagram({1, 2})), PreconditionError);
    CHECK_THROWS_AS((ChordDiagram({2, 3, 1})), PreconditionError);
    CHECK_THROWS_AS((ChordDiagram({2, 1, 0, 0})), PreconditionError);
    CHECK_THROWS_AS((PartialDiagram({3, 0, 2})), PreconditionError);
    CHECK_THROWS_AS((PartialDiagram({5, 0, 0, 0})), PreconditionError);
}

TEST_CASE("genus matches reference cycle count and planarity, randomized") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const ChordDiagram d = random_diagram(rng, 1 + trial % 9);
        const unsigned r = boundary_cycles(d);
        CHECK(r == reference_cycles(d));
        CHECK((d.chord_count() + 1 - r) % 2 == 0);
        CHECK(2 * genus(d) <= d.chord_count());
        CHECK((genus(d) == 0) == crossing_free(d));
    }
}

TEST_CASE("stacks, 1-chords and shapes") {
    // (1,6)(2,5)(3,4): one stack of three with a 1-chord inside
    const PartialDiagram nested = PartialDiagram::from(ChordDiagram({6, 5, 4, 3, 2, 1}));
    const auto st = stacks(nested);
    REQUIRE(st.size() == 1);
    CHECK(st[0].size() == 3);
    CHECK(st[0][0] == Chord{1, 6});
    CHECK(one_chord_count(nested) == 1);
    CHECK(project_shape(nested) == ChordDiagram({2, 1}));
    CHECK(is_shape(ChordDiagram({3, 4, 1, 2})));
    CHECK(!is_shape(ChordDiagram({6, 5, 4, 3, 2, 1})));

    // Unmatched vertices break parallelism: (1,5)(2,4) with 3 unmatched is still a stack
    // but (1,6)(3,4) with 2 and 5 unmatched only becomes one after deletion.
    const PartialDiagram gap = PartialDiagram({6, 0, 4, 3, 0, 1});
    CHECK(stacks(gap).size() == 2);
    CHECK(project_shape(gap) == ChordDiagram({2, 1}));

    // (1,8)(2,7)(3,6)(4,5) with no 1-chord-free condition: stack of 4 ending in a 1-chord.
    const PartialDiagram tall = PartialDiagram::from(ChordDiagram({8, 7, 6, 5, 4, 3, 2, 1}));
    CHECK(!is_macromolecular(tall, 1));
    const PartialDiagram mm = PartialDiagram({6, 5, 0, 0, 2, 1});
    CHECK(is_macromolecular(mm, 2));
    CHECK(!is_macromolecular(mm, 3));
    CHECK_THROWS_AS((is_macromolecular(mm, 0)), PreconditionError);
}

TEST_CASE("shape projection preserves genus and 1-chords, randomized") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const PartialDiagram d = random_partial(rng, 2 + trial % 14);
        const ChordDiagram s = project_shape(d);
        CHECK(is_shape(s));
        CHECK(genus(s) == partial_genus(d));
        CHECK(one_chord_count(PartialDiagram::from(s)) ==
              one_chord_count(PartialDiagram::from(delete_unmatched(d))));
        const DiagramStats st = stats(d);
        std::size_t total = 0;
        for (auto k : st.stack_sizes) total += k;
        CHECK(total == d.chord_count());
        CHECK(std::is_sorted(st.stack_sizes.begin(), st.stack_sizes.end()));
    }
}

TEST_CASE("text encoding round-trips bit-exactly") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const PartialDiagram d = random_partial(rng, trial % 12);
        const std::string text = encode(d);
        CHECK(decode_partial(text) == d);
        CHECK(encode(decode_partial(text)) == text);
    }
    CHECK(encode(ChordDiagram({2, 1})) == "2;2,1");
    CHECK(encode(PartialDiagram{}) == "0;");
    CHECK(decode_chord_diagram("4;3,4,1,2") == ChordDiagram({3, 4, 1, 2}));
    CHECK_THROWS_AS((decode_chord_diagram("3;2,1,0")), PreconditionError);
    CHECK_THROWS_AS((decode_partial("2;02,1")), PreconditionError);
    CHECK_THROWS_AS((decode_partial("3;2,1")), PreconditionError);
    CHECK_THROWS_AS(decode_partial("x"), PreconditionError);
}

#include "lcd/oracle.hpp"

namespace {

// Replaces chord (i, j) by the stack (i, j), (i+1, j-1) on two new vertices.
ChordDiagram double_chord(const ChordDiagram& d, const Chord& c) {
    const std::size_t m = d.vertex_count();
    // old vertex v moves to new position pos[v]
    std::vector<Vertex> pos(m + 1);
    Vertex next = 1;
    Vertex inner_left = 0, inner_right = 0;
    for (Vertex v = 1; v <= m; ++v) {
        if (v == c.right) inner_right = next++;
        pos[v] = next++;
        if (v == c.left) inner_left = next++;
    }
    std::vector<Vertex> partner(m + 2);
    for (Vertex v = 1; v <= m; ++v) partner[pos[v] - 1] = pos[d.partner(v)];
    partner[inner_left - 1] = inner_right;
    partner[inner_right - 1] = inner_left;
    return ChordDiagram(partner);
}

}  // namespace

TEST_CASE("exhaustive parity of boundary cycles, n <= 7") {
    for (unsigned n = 0; n <= 7; ++n)
        oracle::for_each_chord_diagram(n, [&](std::span<const Vertex> p) {
            const unsigned r = boundary_cycles(p);
            CHECK(r <= n + 1);
            CHECK((n + 1 - r) % 2 == 0);
        });
}

TEST_CASE("shape projection is idempotent and preserves invariants, exhaustively") {
    for (unsigned n = 0; n <= 5; ++n)
        for (const auto& d : oracle::enumerate_chord_diagrams(n)) {
            const ChordDiagram s = project_shape(PartialDiagram::from(d));
            CHECK(project_shape(PartialDiagram::from(s)) == s);
        }
    for (unsigned v = 0; v <= 8; ++v)
        for (const auto& d : oracle::enumerate_partial_diagrams(v)) {
            const ChordDiagram s = project_shape(d);
            CHECK(project_shape(PartialDiagram::from(s)) == s);
            CHECK(genus(s) == partial_genus(d));
            CHECK(one_chord_count(PartialDiagram::from(s)) ==
                  one_chord_count(PartialDiagram::from(delete_unmatched(d))));
        }
}

TEST_CASE("doubling a chord into a stack keeps the genus, randomized") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const ChordDiagram d = random_diagram(rng, 1 + trial % 6);
        const auto cs = d.chords();
        const Chord c = cs[static_cast<std::size_t>(trial) % cs.size()];
        const ChordDiagram doubled = double_chord(d, c);
        CHECK(doubled.chord_count() == d.chord_count() + 1);
        CHECK(genus(doubled) == genus(d));
        CHECK(stats(PartialDiagram::from(doubled)).stack_sizes.size() ==
              stats(PartialDiagram::from(d)).stack_sizes.size());
    }
}
