#pragma once

#include "lcd/number.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcd {

enum class DiagramClass { full, shapes, macromolecular };

std::string to_string(DiagramClass c);

// Counts indexed by genus g and size n, optionally refined by the number m of
// 1-chords. For full diagrams and shapes n is the chord count; for
// macromolecular diagrams n is the number of backbone vertices. Every cell in
// the rectangle g <= g_max, n <= n_max (m <= n_max) is stored, zeros included.
class GenusTable {
public:
    GenusTable(DiagramClass kind, unsigned g_max, unsigned n_max, bool with_one_chords,
               std::optional<unsigned> sigma = std::nullopt);

    DiagramClass kind() const { return kind_; }
    std::optional<unsigned> sigma() const { return sigma_; }
    unsigned g_max() const { return g_max_; }
    unsigned n_max() const { return n_max_; }
    bool with_one_chords() const { return with_m_; }

    // Count for (g, n), summed over m when the table is refined. Out-of-range
    // g or n reads as zero.
    Integer at(unsigned g, unsigned n) const;
    // Requires a refined table.
    Integer at(unsigned g, unsigned n, unsigned m) const;
    Integer total(unsigned n) const;

    void set(unsigned g, unsigned n, const Integer& v);
    void set(unsigned g, unsigned n, unsigned m, const Integer& v);
    void add(unsigned g, unsigned n, unsigned m, const Integer& v);

    // Same class and parameters, counts summed cellwise.
    GenusTable& operator+=(const GenusTable& other);
    // Drops the m refinement.
    GenusTable marginal() const;

    friend bool operator==(const GenusTable&, const GenusTable&) = default;

private:
    std::size_t index(unsigned g, unsigned n, unsigned m) const;

    DiagramClass kind_;
    std::optional<unsigned> sigma_;
    unsigned g_max_;
    unsigned n_max_;
    bool with_m_;
    std::vector<Integer> cells_;
};

// First cell where two tables with the same rectangle disagree.
struct TableMismatch {
    unsigned g = 0;
    unsigned n = 0;
    std::optional<unsigned> m;
    Integer left;
    Integer right;
};
std::optional<TableMismatch> first_mismatch(const GenusTable& a, const GenusTable& b);

}  // namespace lcd
