#include "lcd/genus_table.hpp"

#include "lcd/error.hpp"

#include <algorithm>

namespace lcd {

std::string to_string(DiagramClass c) {
    switch (c) {
    case DiagramClass::full: return "full";
    case DiagramClass::shapes: return "shapes";
    case DiagramClass::macromolecular: return "macromolecular";
    }
    return "unknown";
}

GenusTable::GenusTable(DiagramClass kind, unsigned g_max, unsigned n_max, bool with_one_chords,
                       std::optional<unsigned> sigma)
    : kind_(kind),
      sigma_(sigma),
      g_max_(g_max),
      n_max_(n_max),
      with_m_(with_one_chords),
      cells_(static_cast<std::size_t>(g_max + 1) * (n_max + 1) *
             (with_one_chords ? n_max + 1 : 1)) {
    require((kind == DiagramClass::macromolecular) == sigma.has_value(),
            "sigma is required exactly for macromolecular tables");
}

std::size_t GenusTable::index(unsigned g, unsigned n, unsigned m) const {
    const std::size_t mdim = with_m_ ? n_max_ + 1 : 1;
    return (static_cast<std::size_t>(g) * (n_max_ + 1) + n) * mdim + m;
}

Integer GenusTable::at(unsigned g, unsigned n) const {
    if (g > g_max_ || n > n_max_) return 0;
    if (!with_m_) return cells_[index(g, n, 0)];
    Integer s = 0;
    for (unsigned m = 0; m <= n_max_; ++m) s += cells_[index(g, n, m)];
    return s;
}

Integer GenusTable::at(unsigned g, unsigned n, unsigned m) const {
    require(with_m_, "table is not refined by 1-chord count");
    if (g > g_max_ || n > n_max_ || m > n_max_) return 0;
    return cells_[index(g, n, m)];
}

Integer GenusTable::total(unsigned n) const {
    Integer s = 0;
    for (unsigned g = 0; g <= g_max_; ++g) s += at(g, n);
    return s;
}

void GenusTable::set(unsigned g, unsigned n, const Integer& v) {
    require(!with_m_, "refined table needs an m index");
    require(g <= g_max_ && n <= n_max_, "table cell out of range");
    cells_[index(g, n, 0)] = v;
}

void GenusTable::set(unsigned g, unsigned n, unsigned m, const Integer& v) {
    require(with_m_, "table is not refined by 1-chord count");
    require(g <= g_max_ && n <= n_max_ && m <= n_max_, "table cell out of range");
    cells_[index(g, n, m)] = v;
}

void GenusTable::add(unsigned g, unsigned n, unsigned m, const Integer& v) {
    require(g <= g_max_ && n <= n_max_ && (with_m_ ? m <= n_max_ : m == 0),
            "table cell out of range");
    cells_[index(g, n, m)] += v;
}

GenusTable& GenusTable::operator+=(const GenusTable& other) {
    require(kind_ == other.kind_ && sigma_ == other.sigma_ && g_max_ == other.g_max_ &&
                n_max_ == other.n_max_ && with_m_ == other.with_m_,
            "cannot merge tables with different shapes");
    for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
    return *this;
}

GenusTable GenusTable::marginal() const {
    GenusTable out(kind_, g_max_, n_max_, false, sigma_);
    for (unsigned g = 0; g <= g_max_; ++g)
        for (unsigned n = 0; n <= n_max_; ++n) out.set(g, n, at(g, n));
    return out;
}

std::optional<TableMismatch> first_mismatch(const GenusTable& a, const GenusTable& b) {
    const unsigned g_max = std::max(a.g_max(), b.g_max());
    const unsigned n_max = std::max(a.n_max(), b.n_max());
    const bool refined = a.with_one_chords() && b.with_one_chords();
    for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned g = 0; g <= g_max; ++g) {
            if (refined) {
                for (unsigned m = 0; m <= n_max; ++m)
                    if (a.at(g, n, m) != b.at(g, n, m))
                        return TableMismatch{g, n, m, a.at(g, n, m), b.at(g, n, m)};
            } else if (a.at(g, n) != b.at(g, n)) {
                return TableMismatch{g, n, std::nullopt, a.at(g, n), b.at(g, n)};
            }
        }
    return std::nullopt;
}

}  // namespace lcd
