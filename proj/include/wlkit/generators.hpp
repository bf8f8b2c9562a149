#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit {

/// G(n, p) with each of the C(n,2) pairs drawn independently; identical
/// output for identical (n, p, seed) on every platform (raw mt19937_64
/// stream, no library distributions).
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw PreconditionError("random_graph: n must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("random_graph: p must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            // 53 uniform bits -> [0, 1); strict < keeps p = 0 and p = 1 exact
            double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle_graph: need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

/// 3-cube: vertices are 3-bit words, edges flip one bit.
inline Graph cube_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit) {
            int u = v ^ (1 << bit);
            if (v < u) edges.emplace_back(v, u);
        }
    return Graph(8, edges);
}

}  // namespace wlkit
