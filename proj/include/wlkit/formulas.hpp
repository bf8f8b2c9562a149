#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wlkit/graph.hpp"
#include "wlkit/pair_profile.hpp"

namespace wlkit {

namespace detail {

inline std::int64_t exact_div(std::int64_t value, std::int64_t divisor, const char* what) {
    if (value % divisor != 0)
        throw ConsistencyError(std::string(what) + ": total " + std::to_string(value) +
                               " is not divisible by " + std::to_string(divisor));
    return value / divisor;
}

inline std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

}  // namespace detail

/// Triangles from edge participation counts: an edge {u,v} lies in p2(u,v)
/// triangles; binning edges by that count and summing count * bin size
/// meets every triangle three times.
inline std::int64_t formula_triangles(const Graph& g, const PairProfile& prof) {
    std::map<std::int64_t, std::int64_t> bins;  // triangles-per-edge -> edges
    for (auto [u, v] : g.edges()) ++bins[prof.p2(u, v)];
    std::int64_t total = 0;
    for (auto [j, edges] : bins) total += j * edges;
    return detail::exact_div(total, 3, "formula_triangles");
}

/// 4-cycles via diagonals: every unordered vertex pair is a potential
/// diagonal, closing one quadrangle per choice of two common neighbors;
/// each quadrangle has two diagonals.
inline std::int64_t formula_4cycles(const Graph& g, const PairProfile& prof) {
    std::int64_t total = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) total += detail::choose2(prof.p2(u, v));
    return detail::exact_div(total, 2, "formula_4cycles");
}

/// 5-cycles: an ordered adjacent pair closes one 5-cycle per simple 4-path
/// between its endpoints; each cycle is met once per ordered edge on it.
inline std::int64_t formula_5cycles(const Graph& g, const PairProfile& prof) {
    std::int64_t total = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (u != v && prof.p1(u, v)) total += prof.p4(u, v);
    return detail::exact_div(total, 10, "formula_5cycles");
}

/// 6-cycles per ordered pair (u, v) playing (v0, v4): pairs of a 4-path and
/// a 2-path, minus the configurations where the 2-path's interior vertex
/// coincides with one of the 4-path's interior vertices. The coincidence
/// with the middle vertex overcounts square-with-diagonal figures, which are
/// added back in one global pass over ordered adjacent pairs. Every 6-cycle
/// is met once per ordered vertex pair at cycle distance 2, that is 12 times.
inline std::int64_t formula_6cycles(const Graph& g, const PairProfile& prof) {
    const int n = g.vertex_count();
    std::int64_t total = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            const std::int64_t auv = prof.p1(u, v);
            std::int64_t sum = prof.p2(u, v) * prof.p4(u, v);
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v || !prof.p1(u, w) || !prof.p1(w, v)) continue;
                // w as v1=v5: 3-paths w..v, minus those whose interior uses u
                sum -= prof.p3(w, v) - (prof.p2(u, v) - 1) - auv * (prof.p2(u, w) - 1);
                // w as v3=v5, the mirror with u and v swapped
                sum -= prof.p3(w, u) - (prof.p2(u, v) - 1) - auv * (prof.p2(v, w) - 1);
                // w as v2=v5: independent choices of v1 and v3, each avoiding
                // the opposite endpoint; v1 = v3 repaired globally below
                sum -= (prof.p2(u, w) - auv) * (prof.p2(w, v) - auv);
            }
            total += sum;
        }
    // square-with-diagonal figures counted from their diagonal instead
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && prof.p1(u, v)) total += prof.p2(u, v) * (prof.p2(u, v) - 1);
    return detail::exact_div(total, 12, "formula_6cycles");
}

inline std::int64_t formula_triangles(const Graph& g) { return formula_triangles(g, PairProfile(g)); }
inline std::int64_t formula_4cycles(const Graph& g) { return formula_4cycles(g, PairProfile(g)); }
inline std::int64_t formula_5cycles(const Graph& g) { return formula_5cycles(g, PairProfile(g)); }
inline std::int64_t formula_6cycles(const Graph& g) { return formula_6cycles(g, PairProfile(g)); }

}  // namespace wlkit
