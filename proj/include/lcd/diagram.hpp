#pragma once

// Linear chord diagrams as permutation data. The backbone-collapsed fatgraph
// of a diagram on 2n vertices is the pair (tau, iota) where tau is the cycle
// (1, 2, ..., 2n) and iota the chord involution; only iota is stored.
// Vertices are numbered from 1 throughout the public interface.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lcd {

using Vertex = std::uint32_t;

struct Chord {
    Vertex left;   // smaller endpoint
    Vertex right;  // larger endpoint
    friend auto operator<=>(const Chord&, const Chord&) = default;
};

// Fixed-point-free involution on {1..2n}.
class ChordDiagram {
public:
    ChordDiagram() = default;
    // partner[v-1] is the partner of vertex v. Throws PreconditionError
    // unless this is a fixed-point-free involution.
    explicit ChordDiagram(std::vector<Vertex> partner);
    static ChordDiagram from_chords(std::size_t n, const std::vector<Chord>& chords);

    std::size_t chord_count() const { return partner_.size() / 2; }
    std::size_t vertex_count() const { return partner_.size(); }
    Vertex partner(Vertex v) const { return partner_.at(v - 1); }
    const std::vector<Vertex>& partners() const { return partner_; }
    // Chords sorted by left endpoint.
    std::vector<Chord> chords() const;

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

private:
    std::vector<Vertex> partner_;
};

// Partial matching on n backbone vertices; partner 0 marks an unmatched vertex.
class PartialDiagram {
public:
    PartialDiagram() = default;
    explicit PartialDiagram(std::vector<Vertex> partner);
    static PartialDiagram from_chords(std::size_t vertices, const std::vector<Chord>& chords);
    static PartialDiagram from(const ChordDiagram& d) { return PartialDiagram(d.partners()); }

    std::size_t vertex_count() const { return partner_.size(); }
    Vertex partner(Vertex v) const { return partner_.at(v - 1); }
    bool matched(Vertex v) const { return partner(v) != 0; }
    const std::vector<Vertex>& partners() const { return partner_; }
    std::vector<Chord> chords() const;
    std::size_t chord_count() const;

    friend bool operator==(const PartialDiagram&, const PartialDiagram&) = default;

private:
    std::vector<Vertex> partner_;
};

struct DiagramStats {
    unsigned genus = 0;
    unsigned boundary_components = 1;
    std::size_t chord_count = 0;
    std::size_t one_chord_count = 0;
    std::vector<std::size_t> stack_sizes;  // sorted ascending
};

// Number of cycles of tau∘iota; the empty diagram has one boundary component.
unsigned boundary_cycles(const ChordDiagram& d);
// Same, on a raw partner array that is known to be a valid perfect matching.
unsigned boundary_cycles(std::span<const Vertex> partner);
// (n + 1 - r) / 2.
unsigned genus(const ChordDiagram& d);
// Genus after deleting unmatched vertices.
unsigned partial_genus(const PartialDiagram& d);
// The chord diagram on the matched vertices, renumbered in backbone order.
ChordDiagram delete_unmatched(const PartialDiagram& d);

// Stacks: classes of the transitive closure of (i, j) ~ (i+1, j-1). Each
// stack lists its chords outermost first; stacks are ordered by the left
// endpoint of their outermost chord.
std::vector<std::vector<Chord>> stacks(const PartialDiagram& d);
std::size_t one_chord_count(const PartialDiagram& d);

bool is_shape(const ChordDiagram& d);
// No 1-chords and every stack holds at least sigma chords.
bool is_macromolecular(const PartialDiagram& d, unsigned sigma);

// Delete unmatched vertices, then collapse every stack onto one chord.
ChordDiagram project_shape(const PartialDiagram& d);

DiagramStats stats(const PartialDiagram& d);

// Text form "n;p(1),p(2),...,p(n)" with p(v) = 0 for unmatched vertices.
std::string encode(const PartialDiagram& d);
std::string encode(const ChordDiagram& d);
PartialDiagram decode_partial(const std::string& text);
// Throws PreconditionError if any vertex is unmatched.
ChordDiagram decode_chord_diagram(const std::string& text);

}  // namespace lcd
