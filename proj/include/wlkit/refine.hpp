#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wlkit/coloring.hpp"
#include "wlkit/graph.hpp"
#include "wlkit/tuple_type.hpp"

namespace wlkit {

struct RefineOptions {
    /// Total number of k-tuples the run may allocate (across both graphs of a
    /// simultaneous run).
    std::size_t max_tuples = 20'000'000;
};

namespace detail {

/// How a round's multiset is observed.
enum class SigMode {
    neighbors,  // k = 1: colors of adjacent vertices
    pairs,      // k = 2: (color(u,w), color(w,v)) over every w
    sift,       // k >= 2: color k-tuple from substituting w into each position
};

inline int chunk_size(SigMode mode, int k) {
    switch (mode) {
        case SigMode::neighbors: return 1;
        case SigMode::pairs: return 2;
        default: return k;
    }
}

struct EngineGraph {
    const Graph* graph;
    const Individualization* ind;
    std::size_t offset = 0;
    std::size_t tuples = 0;
};

inline std::size_t checked_tuple_count(const Graph& g, int k, std::size_t budget) {
    std::size_t n = static_cast<std::size_t>(g.vertex_count());
    std::size_t t = 1;
    for (int i = 0; i < k; ++i) {
        if (n != 0 && t > budget / n + 1) t = budget + 1;  // saturate, avoid overflow
        else t *= n;
    }
    if (t > budget)
        throw PreconditionError("refinement needs n^k = " + std::to_string(g.vertex_count()) + "^" +
                                std::to_string(k) + " tuples, exceeding the budget of " +
                                std::to_string(budget) + "; raise the memory budget to proceed");
    return t;
}

inline std::vector<int> pre_colors(const Graph& g, const Individualization& ind) {
    std::vector<int> pre(static_cast<std::size_t>(g.vertex_count()), 0);
    int next = 1;
    for (int v : ind.vertices) {
        if (!g.has_vertex(v))
            throw PreconditionError("individualized vertex " + std::to_string(v) + " out of range");
        if (pre[static_cast<std::size_t>(v)] != 0)
            throw PreconditionError("vertex " + std::to_string(v) + " individualized twice");
        pre[static_cast<std::size_t>(v)] = next++;
    }
    return pre;
}

inline void decode_tuple(std::size_t rank, int n, int k, std::vector<int>& out) {
    out.resize(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::size_t>(n));
        rank /= static_cast<std::size_t>(n);
    }
}

/// Signature of one tuple for the next round: [previous color, flattened
/// sorted multiset]. Lexicographic order on these vectors is exactly the
/// (previous color, multiset) order used for id assignment.
inline std::vector<int> build_signature(const EngineGraph& eg, const std::vector<int>& colors,
                                        std::size_t rank, int k, SigMode mode,
                                        std::vector<int>& tuple_buf) {
    const Graph& g = *eg.graph;
    const int n = g.vertex_count();
    const std::size_t base = eg.offset;
    std::vector<int> sig;
    switch (mode) {
        case SigMode::neighbors: {
            const int v = static_cast<int>(rank);
            sig.reserve(1 + g.neighbors(v).size());
            sig.push_back(colors[base + rank]);
            for (int w : g.neighbors(v)) sig.push_back(colors[base + static_cast<std::size_t>(w)]);
            std::sort(sig.begin() + 1, sig.end());
            return sig;
        }
        case SigMode::pairs: {
            const std::size_t u = rank / static_cast<std::size_t>(n);
            const std::size_t v = rank % static_cast<std::size_t>(n);
            std::vector<std::pair<int, int>> elems(static_cast<std::size_t>(n));
            for (std::size_t w = 0; w < static_cast<std::size_t>(n); ++w)
                elems[w] = {colors[base + u * static_cast<std::size_t>(n) + w],
                            colors[base + w * static_cast<std::size_t>(n) + v]};
            std::sort(elems.begin(), elems.end());
            sig.reserve(1 + elems.size() * 2);
            sig.push_back(colors[base + rank]);
            for (auto [a, b] : elems) {
                sig.push_back(a);
                sig.push_back(b);
            }
            return sig;
        }
        case SigMode::sift: {
            decode_tuple(rank, n, k, tuple_buf);
            std::vector<std::size_t> stride(static_cast<std::size_t>(k));
            std::size_t s = 1;
            for (int j = k - 1; j >= 0; --j) {
                stride[static_cast<std::size_t>(j)] = s;
                s *= static_cast<std::size_t>(n);
            }
            std::vector<std::vector<int>> elems(static_cast<std::size_t>(n),
                                                std::vector<int>(static_cast<std::size_t>(k)));
            for (int w = 0; w < n; ++w)
                for (int j = 0; j < k; ++j) {
                    std::size_t r = rank +
                                    (static_cast<std::size_t>(w) -
                                     static_cast<std::size_t>(tuple_buf[static_cast<std::size_t>(j)])) *
                                        stride[static_cast<std::size_t>(j)];
                    elems[static_cast<std::size_t>(w)][static_cast<std::size_t>(j)] =
                        colors[base + r];
                }
            std::sort(elems.begin(), elems.end());
            sig.reserve(1 + static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
            sig.push_back(colors[base + rank]);
            for (const auto& e : elems) sig.insert(sig.end(), e.begin(), e.end());
            return sig;
        }
    }
    return sig;  // unreachable
}

inline std::vector<Coloring> refine_together(
    const std::vector<std::pair<const Graph*, const Individualization*>>& inputs, int k,
    SigMode mode, const RefineOptions& opt) {
    if (k < 1) throw PreconditionError("refinement dimension must be at least 1");

    std::vector<EngineGraph> graphs;
    std::size_t total = 0;
    for (auto [g, ind] : inputs) {
        EngineGraph eg{g, ind, total, checked_tuple_count(*g, k, opt.max_tuples)};
        total += eg.tuples;
        graphs.push_back(eg);
    }

    // initial colors by (isomorphism type, pre-colors), ids in canonical order
    std::vector<int> colors(total, 0);
    std::vector<InitialColorCode> initial_defs;
    {
        std::map<InitialColorCode, int> ids;
        std::vector<int> tuple;
        for (const auto& eg : graphs) {
            auto pre = pre_colors(*eg.graph, *eg.ind);
            for (std::size_t r = 0; r < eg.tuples; ++r) {
                decode_tuple(r, eg.graph->vertex_count(), k, tuple);
                InitialColorCode code{tuple_type(*eg.graph, tuple), {}};
                code.pre.reserve(tuple.size());
                for (int v : tuple) code.pre.push_back(pre[static_cast<std::size_t>(v)]);
                ids.emplace(std::move(code), 0);
            }
        }
        int next = 0;
        initial_defs.reserve(ids.size());
        for (auto& [code, id] : ids) {
            id = next++;
            initial_defs.push_back(code);
        }
        std::vector<int> tuple2;
        for (const auto& eg : graphs) {
            auto pre = pre_colors(*eg.graph, *eg.ind);
            for (std::size_t r = 0; r < eg.tuples; ++r) {
                decode_tuple(r, eg.graph->vertex_count(), k, tuple2);
                InitialColorCode code{tuple_type(*eg.graph, tuple2), {}};
                code.pre.reserve(tuple2.size());
                for (int v : tuple2) code.pre.push_back(pre[static_cast<std::size_t>(v)]);
                colors[eg.offset + r] = ids.at(code);
            }
        }
    }

    // refine to stability; the final, splitting-nothing round stays logged
    int class_count = static_cast<int>(initial_defs.size());
    std::vector<ColorDefinitionTable> rounds;
    const int chunk = chunk_size(mode, k);
    while (true) {
        std::map<std::vector<int>, int> names;
        std::vector<std::map<std::vector<int>, int>::iterator> slot_name(total);
        std::vector<int> tuple_buf;
        for (const auto& eg : graphs)
            for (std::size_t r = 0; r < eg.tuples; ++r)
                slot_name[eg.offset + r] =
                    names.emplace(build_signature(eg, colors, r, k, mode, tuple_buf), 0).first;

        int next = 0;
        for (auto& [name, id] : names) id = next++;

        ColorDefinitionTable table(names.size());
        for (auto& [name, id] : names) {
            ColorDefinition def;
            def.previous = name[0];
            def.multiset.reserve((name.size() - 1) / static_cast<std::size_t>(chunk));
            for (std::size_t i = 1; i < name.size(); i += static_cast<std::size_t>(chunk))
                def.multiset.emplace_back(name.begin() + static_cast<long>(i),
                                          name.begin() + static_cast<long>(i) + chunk);
            table[static_cast<std::size_t>(id)] = std::move(def);
        }
        const bool split_nothing = next == class_count;
        rounds.push_back(std::move(table));
        if (split_nothing) break;  // ids of a no-split round equal the previous ids
        class_count = next;
        for (std::size_t s = 0; s < total; ++s) colors[s] = slot_name[s]->second;
    }

    std::vector<Coloring> out;
    out.reserve(graphs.size());
    for (const auto& eg : graphs) {
        Coloring c;
        c.dimension = k;
        c.vertex_count = eg.graph->vertex_count();
        c.colors.assign(colors.begin() + static_cast<long>(eg.offset),
                        colors.begin() + static_cast<long>(eg.offset + eg.tuples));
        c.initial_definitions = initial_defs;
        c.rounds = rounds;
        c.stable = true;
        out.push_back(std::move(c));
    }
    return out;
}

inline Coloring refine_single(const Graph& g, const Individualization& ind, int k, SigMode mode,
                              const RefineOptions& opt) {
    return refine_together({{&g, &ind}}, k, mode, opt)[0];
}

inline SigMode mode_for(int k) {
    return k == 1 ? SigMode::neighbors : (k == 2 ? SigMode::pairs : SigMode::sift);
}

}  // namespace detail

/// Vertex refinement: round 0 splits only by individualization, each round
/// then splits by (previous color, multiset of neighbor colors).
inline Coloring wl1_refine(const Graph& g, const Individualization& ind = {},
                           const RefineOptions& opt = {}) {
    return detail::refine_single(g, ind, 1, detail::SigMode::neighbors, opt);
}

/// Pair refinement over ordered pairs, the O(n^3)-per-round direct loop:
/// a pair (u,v) observes (color(u,w), color(w,v)) for every vertex w.
inline Coloring wl2_refine(const Graph& g, const Individualization& ind = {},
                           const RefineOptions& opt = {}) {
    return detail::refine_single(g, ind, 2, detail::SigMode::pairs, opt);
}

/// k-tuple refinement via the generic sift rule for k >= 2. The sift
/// multiset carries no adjacency at k = 1, so that case runs the vertex
/// rule instead, which this operation must agree with.
inline Coloring wlk_refine(const Graph& g, int k, const Individualization& ind = {},
                           const RefineOptions& opt = {}) {
    if (k < 1) throw PreconditionError("wlk_refine: dimension must be at least 1");
    return detail::refine_single(g, ind, k,
                                 k == 1 ? detail::SigMode::neighbors : detail::SigMode::sift, opt);
}

struct CompareOutcome {
    bool equal = false;
    Coloring first;   // shared color namespace
    Coloring second;  // shared color namespace
};

/// Refine both graphs in one shared color namespace and compare the
/// multisets of stable colors.
inline CompareOutcome compare_invariants(const Graph& g1, const Graph& g2, int k,
                                         const RefineOptions& opt = {}) {
    Individualization none;
    auto colorings =
        detail::refine_together({{&g1, &none}, {&g2, &none}}, k, detail::mode_for(k), opt);
    CompareOutcome out;
    out.first = std::move(colorings[0]);
    out.second = std::move(colorings[1]);
    out.equal = out.first.histogram() == out.second.histogram();
    return out;
}

}  // namespace wlkit
