#include "lcd/oracle.hpp"

#include "lcd/error.hpp"

#include <cstdlib>
#include <string>

namespace lcd::oracle {

namespace {

unsigned env_or(const char* name, unsigned fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    require(end != nullptr && *end == '\0', std::string("malformed value for ") + name);
    return static_cast<unsigned>(v);
}

// Raw-array statistics; the partner array is a valid matching by construction.

unsigned genus_of_perfect(std::span<const Vertex> partner) {
    const unsigned n = static_cast<unsigned>(partner.size() / 2);
    return (n + 1 - boundary_cycles(partner)) / 2;
}

unsigned one_chords(std::span<const Vertex> partner) {
    unsigned m = 0;
    for (std::size_t i = 0; i + 1 < partner.size(); ++i)
        if (partner[i] == i + 2) ++m;
    return m;
}

// True if some chord (i, j) has (i+1, j-1) as a chord too.
bool has_parallel_pair(std::span<const Vertex> partner) {
    for (std::size_t i = 0; i < partner.size(); ++i) {
        const Vertex j = partner[i];  // 1-based partner of vertex i+1
        if (j == 0 || j <= i + 1) continue;
        const std::size_t inner_left = i + 1;  // 0-based index of vertex i+2
        const Vertex inner_right = j - 1;      // 1-based
        if (inner_left + 1 < inner_right && partner[inner_left] == inner_right) return true;
    }
    return false;
}

// Minimum stack size over all stacks of a partial diagram; UINT_MAX if no chords.
unsigned min_stack_size(std::span<const Vertex> partner) {
    unsigned best = ~0U;
    const std::size_t n = partner.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex j = partner[i];
        if (j == 0 || j <= i + 1) continue;
        // Outermost chord of its stack?
        if (i > 0 && j < n && partner[i - 1] == j + 1) continue;
        unsigned size = 1;
        std::size_t l = i + 1;  // 1-based left of current chord
        Vertex r = j;
        while (l + 1 < r - 1 && partner[l] == r - 1) {
            ++size;
            ++l;
            --r;
        }
        if (size < best) best = size;
    }
    return best;
}

unsigned genus_of_partial(std::span<const Vertex> partner, std::vector<Vertex>& scratch_relabel,
                          std::vector<Vertex>& scratch_partner) {
    const std::size_t n = partner.size();
    scratch_relabel.assign(n + 1, 0);
    Vertex next = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (partner[v] != 0) scratch_relabel[v + 1] = ++next;
    scratch_partner.assign(next, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (partner[v] != 0) scratch_partner[scratch_relabel[v + 1] - 1] = scratch_relabel[partner[v]];
    return genus_of_perfect(scratch_partner);
}

// Flat counter for one partition: index (g * (n_max+1) + n) * mdim + m.
struct Counter {
    unsigned n_max;
    unsigned mdim;
    std::vector<std::uint64_t> counts;

    Counter(unsigned g_max, unsigned n_max_, bool with_m)
        : n_max(n_max_), mdim(with_m ? n_max_ + 1 : 1),
          counts(static_cast<std::size_t>(g_max + 1) * (n_max_ + 1) * mdim, 0) {}

    void bump(unsigned g, unsigned n, unsigned m) {
        ++counts[(static_cast<std::size_t>(g) * (n_max + 1) + n) * mdim + m];
    }

    void add_to(GenusTable& table) const {
        const unsigned g_max = table.g_max();
        for (unsigned g = 0; g <= g_max; ++g)
            for (unsigned n = 0; n <= n_max; ++n)
                for (unsigned m = 0; m < mdim; ++m) {
                    const std::uint64_t c = counts[(static_cast<std::size_t>(g) * (n_max + 1) + n) * mdim + m];
                    if (c != 0) table.add(g, n, m, Integer(static_cast<unsigned long>(c)));
                }
    }
};

enum class FullFilter { all, shapes };

// One (size, partition) work item.
struct Task {
    unsigned size;
    Vertex first_partner;
};

template <class CountOne>
GenusTable run_tasks(GenusTable table, const std::vector<Task>& tasks, kernels::Exec exec,
                     const CountOne& count_one) {
    const unsigned g_max = table.g_max();
    const unsigned n_max = table.n_max();
    const bool with_m = table.with_one_chords();
    std::vector<Counter> per_task(tasks.size(), Counter(g_max, n_max, with_m));
    const long count = static_cast<long>(tasks.size());
    if (exec == kernels::Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long t = 0; t < count; ++t) count_one(tasks[t], per_task[t]);
    } else {
        for (long t = 0; t < count; ++t) count_one(tasks[t], per_task[t]);
    }
    for (const Counter& c : per_task) c.add_to(table);
    return table;
}

std::vector<Task> chord_tasks(unsigned n_max) {
    std::vector<Task> tasks;
    // Largest sizes first so the dynamic schedule starts the long tasks early.
    for (unsigned n = n_max + 1; n-- > 0;) {
        if (n == 0) {
            tasks.push_back({0, 0});
            continue;
        }
        for (Vertex p : chord_partitions(n)) tasks.push_back({n, p});
    }
    return tasks;
}

std::vector<Task> partial_tasks(unsigned n_max) {
    std::vector<Task> tasks;
    for (unsigned n = n_max + 1; n-- > 0;)
        for (Vertex p : partial_partitions(n)) tasks.push_back({n, p});
    return tasks;
}

GenusTable full_oracle(unsigned n_max, bool with_m, FullFilter filter, kernels::Exec exec,
                       const EnumerationLimits& limits) {
    check_chord_cap(n_max, limits);
    const DiagramClass kind = filter == FullFilter::shapes ? DiagramClass::shapes : DiagramClass::full;
    GenusTable table(kind, n_max / 2, n_max, with_m);
    return run_tasks(std::move(table), chord_tasks(n_max), exec,
                     [&](const Task& task, Counter& counter) {
                         for_each_chord_diagram_in_partition(
                             task.size, task.first_partner, [&](std::span<const Vertex> p) {
                                 if (filter == FullFilter::shapes && has_parallel_pair(p)) return;
                                 counter.bump(genus_of_perfect(p), task.size,
                                              with_m ? one_chords(p) : 0);
                             });
                     });
}

}  // namespace

EnumerationLimits EnumerationLimits::from_environment() {
    EnumerationLimits l;
    l.max_chords = env_or("LCD_MAX_CHORDS", l.max_chords);
    l.max_partial_vertices = env_or("LCD_MAX_PARTIAL_VERTICES", l.max_partial_vertices);
    return l;
}

void check_chord_cap(unsigned n, const EnumerationLimits& limits) {
    if (n > limits.max_chords || 2 * n > kMaxVertices)
        throw CapExceeded("chord-diagram enumeration with n = " + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(limits.max_chords) +
                          " chords ((2n-1)!! diagrams); raise LCD_MAX_CHORDS to override, or use "
                          "the formula source");
}

void check_partial_cap(unsigned vertices, const EnumerationLimits& limits) {
    if (vertices > limits.max_partial_vertices || vertices > kMaxVertices)
        throw CapExceeded("partial-diagram enumeration on " + std::to_string(vertices) +
                          " vertices exceeds the cap of " +
                          std::to_string(limits.max_partial_vertices) +
                          "; raise LCD_MAX_PARTIAL_VERTICES to override, or use the formula source");
}

std::vector<Vertex> chord_partitions(unsigned n) {
    std::vector<Vertex> out;
    for (Vertex p = 2; p <= 2 * n; ++p) out.push_back(p);
    return out;
}

std::vector<Vertex> partial_partitions(unsigned vertices) {
    std::vector<Vertex> out{0};
    for (Vertex p = 2; p <= vertices; ++p) out.push_back(p);
    return out;
}

std::vector<ChordDiagram> enumerate_chord_diagrams(unsigned n, const EnumerationLimits& limits) {
    std::vector<ChordDiagram> out;
    for_each_chord_diagram(
        n, [&](std::span<const Vertex> p) { out.emplace_back(std::vector<Vertex>(p.begin(), p.end())); },
        limits);
    return out;
}

std::vector<PartialDiagram> enumerate_partial_diagrams(unsigned vertices,
                                                       const EnumerationLimits& limits) {
    std::vector<PartialDiagram> out;
    for_each_partial_diagram(
        vertices,
        [&](std::span<const Vertex> p) { out.emplace_back(std::vector<Vertex>(p.begin(), p.end())); },
        limits);
    return out;
}

GenusTable oracle_cg(unsigned n_max, kernels::Exec exec, const EnumerationLimits& limits) {
    return full_oracle(n_max, false, FullFilter::all, exec, limits);
}

GenusTable oracle_cg_onechords(unsigned n_max, kernels::Exec exec, const EnumerationLimits& limits) {
    return full_oracle(n_max, true, FullFilter::all, exec, limits);
}

GenusTable oracle_shapes(unsigned n_max, kernels::Exec exec, const EnumerationLimits& limits) {
    return full_oracle(n_max, true, FullFilter::shapes, exec, limits);
}

GenusTable oracle_macromolecular(unsigned n_max, unsigned sigma, kernels::Exec exec,
                                 const EnumerationLimits& limits) {
    require(sigma >= 1, "minimum stack size sigma must be at least 1");
    check_partial_cap(n_max, limits);
    GenusTable table(DiagramClass::macromolecular, n_max / 4, n_max, false, sigma);
    return run_tasks(std::move(table), partial_tasks(n_max), exec,
                     [&](const Task& task, Counter& counter) {
                         std::vector<Vertex> relabel;
                         std::vector<Vertex> reduced;
                         for_each_partial_diagram_in_partition(
                             task.size, task.first_partner, [&](std::span<const Vertex> p) {
                                 if (one_chords(p) != 0) return;
                                 const unsigned smallest = min_stack_size(p);
                                 if (smallest != ~0U && smallest < sigma) return;
                                 counter.bump(genus_of_partial(p, relabel, reduced), task.size, 0);
                             });
                     });
}

}  // namespace lcd::oracle
