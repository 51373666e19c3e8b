#include "lcd/diagram.hpp"

#include "lcd/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace lcd {

namespace {

void check_matching(const std::vector<Vertex>& partner, bool require_perfect) {
    const auto n = static_cast<Vertex>(partner.size());
    for (Vertex v = 1; v <= n; ++v) {
        const Vertex p = partner[v - 1];
        if (p == 0) {
            require(!require_perfect, "vertex " + std::to_string(v) + " is unmatched");
            continue;
        }
        require(p <= n, "vertex " + std::to_string(v) + " has out-of-range partner " +
                            std::to_string(p));
        require(p != v, "vertex " + std::to_string(v) + " is paired with itself");
        require(partner[p - 1] == v, "pairing is not symmetric at vertex " + std::to_string(v));
    }
}

std::vector<Vertex> partners_from_chords(std::size_t vertices, const std::vector<Chord>& chords) {
    std::vector<Vertex> partner(vertices, 0);
    for (const Chord& c : chords) {
        require(c.left >= 1 && c.right >= 1 && c.left <= vertices && c.right <= vertices,
                "chord endpoint out of range");
        require(partner[c.left - 1] == 0 && partner[c.right - 1] == 0,
                "chords share an endpoint");
        partner[c.left - 1] = c.right;
        partner[c.right - 1] = c.left;
    }
    return partner;
}

std::vector<Chord> chords_of(const std::vector<Vertex>& partner) {
    std::vector<Chord> out;
    for (Vertex v = 1; v <= partner.size(); ++v) {
        const Vertex p = partner[v - 1];
        if (p > v) out.push_back({v, p});
    }
    return out;
}

}  // namespace

ChordDiagram::ChordDiagram(std::vector<Vertex> partner) : partner_(std::move(partner)) {
    check_matching(partner_, true);
}

ChordDiagram ChordDiagram::from_chords(std::size_t n, const std::vector<Chord>& chords) {
    return ChordDiagram(partners_from_chords(2 * n, chords));
}

std::vector<Chord> ChordDiagram::chords() const { return chords_of(partner_); }

PartialDiagram::PartialDiagram(std::vector<Vertex> partner) : partner_(std::move(partner)) {
    check_matching(partner_, false);
}

PartialDiagram PartialDiagram::from_chords(std::size_t vertices, const std::vector<Chord>& chords) {
    return PartialDiagram(partners_from_chords(vertices, chords));
}

std::vector<Chord> PartialDiagram::chords() const { return chords_of(partner_); }

std::size_t PartialDiagram::chord_count() const {
    return static_cast<std::size_t>(
               std::count_if(partner_.begin(), partner_.end(), [](Vertex p) { return p != 0; })) /
           2;
}

unsigned boundary_cycles(std::span<const Vertex> partner) {
    const auto m = static_cast<Vertex>(partner.size());
    if (m == 0) return 1;
    std::vector<bool> seen(m + 1, false);
    unsigned cycles = 0;
    for (Vertex start = 1; start <= m; ++start) {
        if (seen[start]) continue;
        ++cycles;
        for (Vertex v = start; !seen[v];) {
            seen[v] = true;
            // tau(iota(v)) with tau = (1 2 ... 2n)
            v = partner[v - 1] % m + 1;
        }
    }
    return cycles;
}

unsigned boundary_cycles(const ChordDiagram& d) { return boundary_cycles(d.partners()); }

unsigned genus(const ChordDiagram& d) {
    const long n = static_cast<long>(d.chord_count());
    const long r = boundary_cycles(d);
    const long twice = n + 1 - r;
    ensure(twice >= 0 && twice % 2 == 0,
           "Euler relation violated: n + 1 - r = " + std::to_string(twice));
    return static_cast<unsigned>(twice / 2);
}

ChordDiagram delete_unmatched(const PartialDiagram& d) {
    const std::size_t n = d.vertex_count();
    std::vector<Vertex> relabel(n + 1, 0);
    Vertex next = 0;
    for (Vertex v = 1; v <= n; ++v)
        if (d.matched(v)) relabel[v] = ++next;
    std::vector<Vertex> partner(next);
    for (Vertex v = 1; v <= n; ++v)
        if (d.matched(v)) partner[relabel[v] - 1] = relabel[d.partner(v)];
    return ChordDiagram(std::move(partner));
}

unsigned partial_genus(const PartialDiagram& d) { return genus(delete_unmatched(d)); }

std::vector<std::vector<Chord>> stacks(const PartialDiagram& d) {
    std::vector<std::vector<Chord>> out;
    for (const Chord& c : d.chords()) {
        // Start only at the outermost chord of a chain.
        const bool has_outer = c.left > 1 && c.right < d.vertex_count() &&
                               d.partner(c.left - 1) == c.right + 1;
        if (has_outer) continue;
        std::vector<Chord> stack{c};
        for (Chord cur = c; cur.right > cur.left + 1;) {
            const Chord inner{cur.left + 1, cur.right - 1};
            if (inner.left >= inner.right || d.partner(inner.left) != inner.right) break;
            stack.push_back(inner);
            cur = inner;
        }
        out.push_back(std::move(stack));
    }
    return out;
}

std::size_t one_chord_count(const PartialDiagram& d) {
    std::size_t m = 0;
    for (Vertex v = 1; v < d.vertex_count(); ++v)
        if (d.partner(v) == v + 1) ++m;
    return m;
}

bool is_shape(const ChordDiagram& d) {
    for (const auto& s : stacks(PartialDiagram::from(d)))
        if (s.size() > 1) return false;
    return true;
}

bool is_macromolecular(const PartialDiagram& d, unsigned sigma) {
    require(sigma >= 1, "minimum stack size sigma must be at least 1");
    if (one_chord_count(d) != 0) return false;
    for (const auto& s : stacks(d))
        if (s.size() < sigma) return false;
    return true;
}

ChordDiagram project_shape(const PartialDiagram& d) {
    const PartialDiagram reduced = PartialDiagram::from(delete_unmatched(d));
    // Keep the outermost chord of each stack and drop the vertices of the rest.
    std::vector<Chord> kept;
    for (const auto& s : stacks(reduced)) kept.push_back(s.front());
    PartialDiagram sparse = PartialDiagram::from_chords(reduced.vertex_count(), kept);
    ChordDiagram shape = delete_unmatched(sparse);
    ensure(is_shape(shape), "projection produced a diagram with a nontrivial stack: " +
                                encode(shape));
    return shape;
}

DiagramStats stats(const PartialDiagram& d) {
    DiagramStats s;
    const ChordDiagram reduced = delete_unmatched(d);
    s.boundary_components = boundary_cycles(reduced);
    s.genus = genus(reduced);
    s.chord_count = d.chord_count();
    s.one_chord_count = one_chord_count(d);
    for (const auto& st : stacks(d)) s.stack_sizes.push_back(st.size());
    std::sort(s.stack_sizes.begin(), s.stack_sizes.end());
    return s;
}

std::string encode(const PartialDiagram& d) {
    std::string out = std::to_string(d.vertex_count()) + ";";
    for (std::size_t i = 0; i < d.vertex_count(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(d.partners()[i]);
    }
    return out;
}

std::string encode(const ChordDiagram& d) { return encode(PartialDiagram::from(d)); }

namespace {

Vertex parse_vertex(std::string_view tok, const std::string& text) {
    Vertex v = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    require(!tok.empty() && ec == std::errc() && ptr == end && (tok.size() == 1 || tok[0] != '0'),
            "malformed diagram text '" + text + "'");
    return v;
}

}  // namespace

PartialDiagram decode_partial(const std::string& text) {
    const auto semi = text.find(';');
    require(semi != std::string::npos, "diagram text needs 'n;' prefix: '" + text + "'");
    const std::string_view view(text);
    const Vertex n = parse_vertex(view.substr(0, semi), text);
    std::vector<Vertex> partner;
    std::string_view rest = view.substr(semi + 1);
    if (n > 0) {
        for (;;) {
            const auto comma = rest.find(',');
            partner.push_back(parse_vertex(rest.substr(0, comma), text));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    } else {
        require(rest.empty(), "empty diagram must be encoded as '0;'");
    }
    require(partner.size() == n, "diagram text lists " + std::to_string(partner.size()) +
                                     " partners for " + std::to_string(n) + " vertices");
    return PartialDiagram(std::move(partner));
}

ChordDiagram decode_chord_diagram(const std::string& text) {
    return ChordDiagram(decode_partial(text).partners());
}

}  // namespace lcd
