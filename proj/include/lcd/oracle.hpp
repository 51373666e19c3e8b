#pragma once

// Brute-force ground truth: exhaustive enumeration of chord diagrams and
// partial matchings, tabulated by genus (and 1-chord count).
//
// The search space is partitioned by the partner of vertex 1 (0 meaning
// unmatched for partial diagrams). The parallel kernels run one partition
// per task and sum the per-partition tables; the serial kernels walk the
// same partitions in order. Both produce identical tables.

#include "lcd/diagram.hpp"
#include "lcd/genus_table.hpp"
#include "lcd/kernels.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lcd::oracle {

struct EnumerationLimits {
    unsigned max_chords = 9;
    unsigned max_partial_vertices = 14;

    // Defaults overridden by LCD_MAX_CHORDS / LCD_MAX_PARTIAL_VERTICES.
    static EnumerationLimits from_environment();
};

// Hard ceiling from the 64-bit vertex masks used by the walkers.
inline constexpr unsigned kMaxVertices = 64;

namespace detail {

template <class Visitor>
void walk_perfect(std::vector<Vertex>& partner, std::uint64_t free_mask, Visitor& visit) {
    if (free_mask == 0) {
        visit(std::span<const Vertex>(partner));
        return;
    }
    const auto v = static_cast<Vertex>(__builtin_ctzll(free_mask));
    std::uint64_t rest = free_mask & (free_mask - 1);
    for (std::uint64_t cand = rest; cand != 0; cand &= cand - 1) {
        const auto w = static_cast<Vertex>(__builtin_ctzll(cand));
        partner[v] = w + 1;
        partner[w] = v + 1;
        walk_perfect(partner, rest & ~(std::uint64_t{1} << w), visit);
    }
    partner[v] = 0;
}

template <class Visitor>
void walk_partial(std::vector<Vertex>& partner, std::uint64_t free_mask, Visitor& visit) {
    if (free_mask == 0) {
        visit(std::span<const Vertex>(partner));
        return;
    }
    const auto v = static_cast<Vertex>(__builtin_ctzll(free_mask));
    std::uint64_t rest = free_mask & (free_mask - 1);
    partner[v] = 0;
    walk_partial(partner, rest, visit);
    for (std::uint64_t cand = rest; cand != 0; cand &= cand - 1) {
        const auto w = static_cast<Vertex>(__builtin_ctzll(cand));
        partner[v] = w + 1;
        partner[w] = v + 1;
        walk_partial(partner, rest & ~(std::uint64_t{1} << w), visit);
        partner[w] = 0;
    }
    partner[v] = 0;
}

inline std::uint64_t low_mask(unsigned bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace detail

// Throw CapExceeded with guidance when a size is above the configured cap.
void check_chord_cap(unsigned n, const EnumerationLimits& limits);
void check_partial_cap(unsigned vertices, const EnumerationLimits& limits);

// Partner choices for vertex 1 that index the partitions: 2..2n for chord
// diagrams (empty for n = 0), and 0, 2..n for partial diagrams.
std::vector<Vertex> chord_partitions(unsigned n);
std::vector<Vertex> partial_partitions(unsigned vertices);

// Visits every chord diagram on 2n vertices whose vertex 1 is paired with
// first_partner. For n = 0 the empty diagram is visited when first_partner is 0.
template <class Visitor>
void for_each_chord_diagram_in_partition(unsigned n, Vertex first_partner, Visitor&& visit) {
    std::vector<Vertex> partner(2 * n, 0);
    if (n == 0) {
        if (first_partner == 0) visit(std::span<const Vertex>(partner));
        return;
    }
    const Vertex w = first_partner - 1;
    partner[0] = first_partner;
    partner[w] = 1;
    const std::uint64_t mask = detail::low_mask(2 * n) & ~std::uint64_t{1} & ~(std::uint64_t{1} << w);
    detail::walk_perfect(partner, mask, visit);
}

// Visits every fixed-point-free involution on {1..2n} exactly once, as a
// partner array. The caller's limit is checked before anything is visited.
template <class Visitor>
void for_each_chord_diagram(unsigned n, Visitor&& visit, const EnumerationLimits& limits = {}) {
    check_chord_cap(n, limits);
    if (n == 0) {
        for_each_chord_diagram_in_partition(0, 0, visit);
        return;
    }
    for (Vertex p : chord_partitions(n)) for_each_chord_diagram_in_partition(n, p, visit);
}

template <class Visitor>
void for_each_partial_diagram_in_partition(unsigned vertices, Vertex first_partner,
                                           Visitor&& visit) {
    std::vector<Vertex> partner(vertices, 0);
    if (vertices == 0) {
        visit(std::span<const Vertex>(partner));
        return;
    }
    std::uint64_t mask = detail::low_mask(vertices) & ~std::uint64_t{1};
    if (first_partner != 0) {
        partner[0] = first_partner;
        partner[first_partner - 1] = 1;
        mask &= ~(std::uint64_t{1} << (first_partner - 1));
    }
    detail::walk_partial(partner, mask, visit);
}

// Visits every partial matching on {1..vertices} exactly once.
template <class Visitor>
void for_each_partial_diagram(unsigned vertices, Visitor&& visit,
                              const EnumerationLimits& limits = {}) {
    check_partial_cap(vertices, limits);
    for (Vertex p : partial_partitions(vertices))
        for_each_partial_diagram_in_partition(vertices, p, visit);
}

// All chord diagrams with n chords, materialized (small n only).
std::vector<ChordDiagram> enumerate_chord_diagrams(unsigned n, const EnumerationLimits& limits = {});
std::vector<PartialDiagram> enumerate_partial_diagrams(unsigned vertices,
                                                       const EnumerationLimits& limits = {});

// c_g(n) for n <= n_max.
GenusTable oracle_cg(unsigned n_max, kernels::Exec exec = kernels::Exec::parallel,
                     const EnumerationLimits& limits = {});
// c_g(n, m) refined by 1-chord count.
GenusTable oracle_cg_onechords(unsigned n_max, kernels::Exec exec = kernels::Exec::parallel,
                               const EnumerationLimits& limits = {});
// s_g(n, m) over shapes.
GenusTable oracle_shapes(unsigned n_max, kernels::Exec exec = kernels::Exec::parallel,
                         const EnumerationLimits& limits = {});
// d_{g,sigma}(n) over partial diagrams on n vertices.
GenusTable oracle_macromolecular(unsigned n_max, unsigned sigma,
                                 kernels::Exec exec = kernels::Exec::parallel,
                                 const EnumerationLimits& limits = {});

}  // namespace lcd::oracle
