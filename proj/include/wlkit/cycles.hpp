#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit {

/// Simple-cycle totals per length, index 1..max_length. Lengths 1 and 2 are
/// convention entries: 0 cycles of length 1, edge count at length 2.
struct CycleCensus {
    int max_length = 0;
    std::vector<std::int64_t> count_by_length;  // index 0 unused

    std::int64_t at(int length) const { return count_by_length[static_cast<std::size_t>(length)]; }
};

namespace detail {

/// Enumerates every simple cycle of length 3..max_length exactly once and
/// hands its vertex list to visit. Canonical form: the DFS root is the
/// cycle's minimum vertex and the second vertex is smaller than the last.
/// Desk scale: adjacency as 64-bit masks.
template <typename Visit>
void enumerate_cycles(const Graph& g, int max_length, Visit&& visit) {
    const int n = g.vertex_count();
    if (n > 64) throw PreconditionError("cycle enumeration handles at most 64 vertices");
    if (max_length > n) max_length = n;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(max_length));

    auto dfs = [&](auto&& self, int at, std::uint64_t visited, std::uint64_t allowed) -> void {
        path.push_back(at);
        const int root = path[0];
        const int length = static_cast<int>(path.size());
        if (length >= 3 && (adj[static_cast<std::size_t>(at)] >> root & 1) && path[1] < at)
            visit(path);
        if (length < max_length) {
            std::uint64_t cand = adj[static_cast<std::size_t>(at)] & allowed & ~visited;
            while (cand) {
                int w = std::countr_zero(cand);
                cand &= cand - 1;
                self(self, w, visited | (std::uint64_t{1} << w), allowed);
            }
        }
        path.pop_back();
    };

    for (int root = 0; root + 2 < n; ++root) {
        if (max_length < 3) break;
        // only vertices above the root may appear, so the root is the minimum
        std::uint64_t allowed = ~std::uint64_t{0} << (root + 1);
        if (n < 64) allowed &= (std::uint64_t{1} << n) - 1;
        dfs(dfs, root, std::uint64_t{1} << root, allowed);
    }
}

}  // namespace detail

/// Brute-force census of simple cycles of every length up to max_length.
inline CycleCensus count_cycles_brute(const Graph& g, int max_length) {
    if (max_length < 1) throw PreconditionError("count_cycles_brute: max_length must be >= 1");
    CycleCensus census;
    census.max_length = max_length;
    census.count_by_length.assign(static_cast<std::size_t>(max_length) + 1, 0);
    if (max_length >= 2) census.count_by_length[2] = g.edge_count();
    detail::enumerate_cycles(g, max_length, [&](const std::vector<int>& cycle) {
        ++census.count_by_length[cycle.size()];
    });
    return census;
}

/// C_L^v: per start vertex, the number of length-L simple cycles through it.
inline std::vector<std::int64_t> per_vertex_cycles(const Graph& g, int length) {
    if (length < 1) throw PreconditionError("per_vertex_cycles: length must be >= 1");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(g.vertex_count()), 0);
    if (length == 1) return counts;
    if (length == 2) {
        for (int v = 0; v < g.vertex_count(); ++v)
            counts[static_cast<std::size_t>(v)] = g.degree(v);  // one 2-entry per incident edge
        return counts;
    }
    detail::enumerate_cycles(g, length, [&](const std::vector<int>& cycle) {
        if (static_cast<int>(cycle.size()) != length) return;
        for (int v : cycle) ++counts[static_cast<std::size_t>(v)];
    });
    return counts;
}

}  // namespace wlkit
