#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "wlkit/graph.hpp"
#include "wlkit/tuple_type.hpp"

namespace wlkit {

/// Vertices that receive unique colors, in order, before refinement starts.
struct Individualization {
    std::vector<int> vertices;
};

/// Detailed name of a refined color: the color the class came from plus the
/// canonical (sorted) multiset observed from it. Elements are color tuples:
/// length 1 for vertex refinement, 2 for pair refinement, k for sift.
struct ColorDefinition {
    int previous = 0;
    std::vector<std::vector<int>> multiset;

    bool operator==(const ColorDefinition&) const = default;
};

/// One refinement round: new color id -> its detailed name.
using ColorDefinitionTable = std::vector<ColorDefinition>;

/// Detailed name of an initial color: the tuple isomorphism type together
/// with the individualization pre-colors of the entries (0 = none).
struct InitialColorCode {
    TupleTypeCode type;
    std::vector<int> pre;

    auto operator<=>(const InitialColorCode&) const = default;
};

/// Result of running refinement to stability on one graph. Colors index
/// k-tuples by row-major rank. When produced by a simultaneous run, ids and
/// definition tables live in a namespace shared with the partner coloring.
struct Coloring {
    int dimension = 1;
    int vertex_count = 0;
    std::vector<int> colors;
    std::vector<InitialColorCode> initial_definitions;
    std::vector<ColorDefinitionTable> rounds;
    bool stable = false;

    std::size_t tuple_rank(std::span<const int> tuple) const {
        if (static_cast<int>(tuple.size()) != dimension)
            throw PreconditionError("tuple length does not match coloring dimension");
        std::size_t rank = 0;
        for (int v : tuple) {
            if (v < 0 || v >= vertex_count) throw PreconditionError("tuple entry is not a vertex");
            rank = rank * static_cast<std::size_t>(vertex_count) + static_cast<std::size_t>(v);
        }
        return rank;
    }

    int color_of(std::span<const int> tuple) const { return colors[tuple_rank(tuple)]; }

    int color_of_vertex(int v) const {
        int t[1] = {v};
        return color_of(t);
    }

    int color_of_pair(int u, int v) const {
        int t[2] = {u, v};
        return color_of(t);
    }

    /// Size of the color namespace after the final round (for a simultaneous
    /// run this spans both graphs; ids absent from this graph may exist).
    int color_count() const {
        return rounds.empty() ? static_cast<int>(initial_definitions.size())
                              : static_cast<int>(rounds.back().size());
    }

    /// Stable color id -> number of tuples of this graph carrying it.
    std::vector<std::pair<int, std::int64_t>> histogram() const {
        std::map<int, std::int64_t> counts;
        for (int c : colors) ++counts[c];
        return {counts.begin(), counts.end()};
    }
};

/// A partition of k-tuples with dense class ids in first-occurrence order;
/// the shape used for cross-dimension comparisons, no definitions attached.
struct Partition {
    std::vector<int> class_of;
    int class_count = 0;

    bool operator==(const Partition&) const = default;
};

namespace detail {

inline Partition normalize_partition(std::span<const int> raw) {
    Partition p;
    p.class_of.resize(raw.size());
    std::map<int, int> ids;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, inserted] = ids.emplace(raw[i], p.class_count);
        if (inserted) ++p.class_count;
        p.class_of[i] = it->second;
    }
    return p;
}

}  // namespace detail

/// The stable partition of k-tuples induced by a coloring.
inline Partition to_partition(const Coloring& c) { return detail::normalize_partition(c.colors); }

/// Partition of k-tuples induced by a (k+1)-dimensional coloring via
/// repeating the last component: class(t1..tk) = color(t1..tk,tk).
inline Partition project_partition(const Coloring& c) {
    if (c.dimension < 2)
        throw PreconditionError("project_partition: coloring dimension must be at least 2");
    const std::size_t n = static_cast<std::size_t>(c.vertex_count);
    std::size_t low = 1;
    for (int i = 0; i + 1 < c.dimension; ++i) low *= n;  // n^k ranks to produce
    std::vector<int> raw(low == 0 ? 0 : low, 0);
    for (std::size_t r = 0; r < raw.size(); ++r) raw[r] = c.colors[r * n + r % n];
    return detail::normalize_partition(raw);
}

/// True when every class of `fine` lies inside a single class of `coarse`.
inline bool refines(const Partition& fine, const Partition& coarse) {
    if (fine.class_of.size() != coarse.class_of.size())
        throw PreconditionError("refines: partitions cover different tuple sets");
    std::vector<int> image(static_cast<std::size_t>(fine.class_count), -1);
    for (std::size_t i = 0; i < fine.class_of.size(); ++i) {
        int& slot = image[static_cast<std::size_t>(fine.class_of[i])];
        if (slot < 0) slot = coarse.class_of[i];
        else if (slot != coarse.class_of[i]) return false;
    }
    return true;
}

/// Everything a tuple's stable color pins down: the color itself plus every
/// definition reachable from it, back to the initial codes. Two tuples are
/// WL[k]-indistinguishable exactly when their chains compare equal.
struct KnowledgeChain {
    int stable_color = -1;
    std::vector<std::map<int, ColorDefinition>> rounds;
    std::map<int, InitialColorCode> initial;

    bool operator==(const KnowledgeChain&) const = default;
};

inline KnowledgeChain tuple_knows(const Coloring& c, std::span<const int> tuple) {
    KnowledgeChain chain;
    chain.stable_color = c.color_of(tuple);
    chain.rounds.resize(c.rounds.size());
    std::vector<char> needed(static_cast<std::size_t>(c.color_count()), 0);
    needed[static_cast<std::size_t>(chain.stable_color)] = 1;
    for (std::size_t r = c.rounds.size(); r-- > 0;) {
        const auto& table = c.rounds[r];
        std::vector<char> prev_needed;
        std::size_t prev_size =
            r == 0 ? c.initial_definitions.size() : c.rounds[r - 1].size();
        prev_needed.assign(prev_size, 0);
        for (std::size_t id = 0; id < table.size(); ++id) {
            if (!needed[id]) continue;
            const ColorDefinition& def = table[id];
            chain.rounds[r].emplace(static_cast<int>(id), def);
            prev_needed[static_cast<std::size_t>(def.previous)] = 1;
            for (const auto& elem : def.multiset)
                for (int color : elem) prev_needed[static_cast<std::size_t>(color)] = 1;
        }
        needed = std::move(prev_needed);
    }
    for (std::size_t id = 0; id < needed.size(); ++id)
        if (needed[id]) chain.initial.emplace(static_cast<int>(id), c.initial_definitions[id]);
    return chain;
}

}  // namespace wlkit
