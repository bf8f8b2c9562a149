#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit {

namespace detail {

/// Stable vertex coloring of two graphs refined together so ids mean the
/// same thing on both sides. Seeds come in via `pre` (0 = uncolored).
struct SimColors {
    std::vector<int> a, b;
    int classes = 0;
};

inline SimColors wl1_simultaneous(const Graph& ga, const Graph& gb, const std::vector<int>& pre_a,
                                  const std::vector<int>& pre_b) {
    const int na = ga.vertex_count(), nb = gb.vertex_count();
    SimColors cur;
    {
        std::map<int, int> ids;
        for (int v : pre_a) ids.emplace(v, 0);
        for (int v : pre_b) ids.emplace(v, 0);
        int next = 0;
        for (auto& [_, id] : ids) id = next++;
        cur.classes = next;
        cur.a.resize(static_cast<std::size_t>(na));
        cur.b.resize(static_cast<std::size_t>(nb));
        for (int v = 0; v < na; ++v) cur.a[v] = ids[pre_a[v]];
        for (int v = 0; v < nb; ++v) cur.b[v] = ids[pre_b[v]];
    }
    while (true) {
        using Sig = std::pair<int, std::vector<int>>;
        auto signature = [](const Graph& g, const std::vector<int>& col, int v) {
            Sig s{col[static_cast<std::size_t>(v)], {}};
            for (int w : g.neighbors(v)) s.second.push_back(col[static_cast<std::size_t>(w)]);
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::map<Sig, int> ids;
        std::vector<Sig> sa(static_cast<std::size_t>(na)), sb(static_cast<std::size_t>(nb));
        for (int v = 0; v < na; ++v) ids.emplace(sa[v] = signature(ga, cur.a, v), 0);
        for (int v = 0; v < nb; ++v) ids.emplace(sb[v] = signature(gb, cur.b, v), 0);
        int next = 0;
        for (auto& [_, id] : ids) id = next++;
        if (next == cur.classes) return cur;
        cur.classes = next;
        for (int v = 0; v < na; ++v) cur.a[v] = ids[sa[v]];
        for (int v = 0; v < nb; ++v) cur.b[v] = ids[sb[v]];
    }
}

inline bool same_histogram(const SimColors& c) {
    std::vector<int> ha(static_cast<std::size_t>(c.classes), 0), hb = ha;
    for (int x : c.a) ++ha[static_cast<std::size_t>(x)];
    for (int x : c.b) ++hb[static_cast<std::size_t>(x)];
    return ha == hb;
}

inline bool valid_mapping(const Graph& a, const Graph& b, const std::vector<int>& map) {
    if (a.edge_count() != b.edge_count()) return false;
    for (auto [u, v] : a.edges())
        if (!b.adjacent(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

inline std::optional<std::vector<int>> iso_search(const Graph& ga, const Graph& gb,
                                                  std::vector<int>& pre_a, std::vector<int>& pre_b,
                                                  int next_mark) {
    SimColors col = wl1_simultaneous(ga, gb, pre_a, pre_b);
    if (!same_histogram(col)) return std::nullopt;

    // smallest class with more than one vertex on the a-side
    int target_class = -1, target_size = ga.vertex_count() + 1;
    std::vector<int> count(static_cast<std::size_t>(col.classes), 0);
    for (int x : col.a) ++count[static_cast<std::size_t>(x)];
    for (int c = 0; c < col.classes; ++c)
        if (count[static_cast<std::size_t>(c)] > 1 && count[static_cast<std::size_t>(c)] < target_size) {
            target_class = c;
            target_size = count[static_cast<std::size_t>(c)];
        }

    if (target_class < 0) {
        // discrete on both sides with equal histograms: the mapping is forced
        std::vector<int> where_b(static_cast<std::size_t>(col.classes), -1);
        for (int v = 0; v < gb.vertex_count(); ++v) where_b[static_cast<std::size_t>(col.b[v])] = v;
        std::vector<int> map(static_cast<std::size_t>(ga.vertex_count()));
        for (int v = 0; v < ga.vertex_count(); ++v) map[v] = where_b[static_cast<std::size_t>(col.a[v])];
        if (valid_mapping(ga, gb, map)) return map;
        return std::nullopt;
    }

    int u = 0;
    while (col.a[static_cast<std::size_t>(u)] != target_class) ++u;
    for (int v = 0; v < gb.vertex_count(); ++v) {
        if (col.b[static_cast<std::size_t>(v)] != target_class) continue;
        pre_a[static_cast<std::size_t>(u)] = next_mark;
        pre_b[static_cast<std::size_t>(v)] = next_mark;
        if (auto r = iso_search(ga, gb, pre_a, pre_b, next_mark + 1)) return r;
        pre_a[static_cast<std::size_t>(u)] = 0;
        pre_b[static_cast<std::size_t>(v)] = 0;
    }
    return std::nullopt;
}

}  // namespace detail

/// Desk-scale isomorphism decision: returns a verified vertex bijection from
/// g1 onto g2 (edges to edges, non-edges to non-edges), or nullopt. Refuses
/// graphs beyond 64 vertices rather than grinding.
inline std::optional<std::vector<int>> is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() > 64 || g2.vertex_count() > 64)
        throw PreconditionError("is_isomorphic: refusing graphs with more than 64 vertices");
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    std::vector<int> pre_a(static_cast<std::size_t>(g1.vertex_count()), 0);
    std::vector<int> pre_b(static_cast<std::size_t>(g2.vertex_count()), 0);
    return detail::iso_search(g1, g2, pre_a, pre_b, 1);
}

}  // namespace wlkit
