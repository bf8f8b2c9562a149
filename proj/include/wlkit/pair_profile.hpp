#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit {

/// Per ordered vertex pair: adjacency p1 and the simple-path counts p2, p3,
/// p4, plus vertex degrees. The symbol table all the closed-form counting
/// formulas read from. p4 comes from the path histogram identity, never from
/// path enumeration.
class PairProfile {
public:
    explicit PairProfile(const Graph& g);

    int n() const { return n_; }
    std::int64_t p1(int u, int v) const { return at(p1_, u, v); }
    std::int64_t p2(int u, int v) const { return at(p2_, u, v); }
    std::int64_t p3(int u, int v) const { return at(p3_, u, v); }
    std::int64_t p4(int u, int v) const { return at(p4_, u, v); }
    std::int64_t degree(int v) const { return deg_[static_cast<std::size_t>(v)]; }

private:
    std::int64_t at(const std::vector<std::int64_t>& m, int u, int v) const {
        return m[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(v)];
    }
    std::int64_t& at(std::vector<std::int64_t>& m, int u, int v) {
        return m[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(v)];
    }

    int n_ = 0;
    std::vector<std::int64_t> p1_, p2_, p3_, p4_;
    std::vector<std::int64_t> deg_;
};

/// Histogram over intermediate vertices w of (p1(u,w), p2(u,w), p1(w,v),
/// p2(w,v)); the entries sum to n - 2 for u != v.
using PathHistogram = std::map<std::array<std::int64_t, 4>, std::int64_t>;

inline PathHistogram path_histogram(const PairProfile& prof, int u, int v) {
    if (u == v) throw PreconditionError("path_histogram: endpoints must differ");
    PathHistogram hist;
    for (int w = 0; w < prof.n(); ++w) {
        if (w == u || w == v) continue;
        ++hist[{prof.p1(u, w), prof.p2(u, w), prof.p1(w, v), prof.p2(w, v)}];
    }
    return hist;
}

/// Simple 4-paths from u to v by the histogram identity: pairs of 2-paths
/// u..w and w..v, corrected for 2-paths through the opposite endpoint and
/// for the u, x, w, x, v walks.
inline std::int64_t pair_path4(const PairProfile& prof, int u, int v) {
    if (u == v) throw PreconditionError("pair_path4: endpoints must differ");
    const std::int64_t auv = prof.p1(u, v);
    std::int64_t total = 0;
    for (const auto& [key, count] : path_histogram(prof, u, v)) {
        auto [l1, l2, l1p, l2p] = key;
        total += count * (l2 - auv * l1p) * (l2p - auv * l1);
    }
    for (int x = 0; x < prof.n(); ++x) {
        if (x == u || x == v) continue;
        total -= prof.p1(u, x) * (prof.degree(x) - 2) * prof.p1(x, v);
    }
    return total;
}

inline std::int64_t pair_path4(const Graph& g, int u, int v) {
    return pair_path4(PairProfile(g), u, v);
}

/// Enumeration oracle: simple paths of edge-length len from u to v, by DFS
/// with on-path exclusion. Desk scale, len capped at 6.
inline std::int64_t count_paths_between(const Graph& g, int u, int v, int len) {
    if (u == v) throw PreconditionError("count_paths_between: endpoints must differ");
    if (len < 0 || len > 6)
        throw PreconditionError("count_paths_between: length must be between 0 and 6");
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    std::int64_t count = 0;
    auto dfs = [&](auto&& self, int at, int remaining) -> void {
        if (remaining == 0) {
            count += at == v;
            return;
        }
        on_path[static_cast<std::size_t>(at)] = 1;
        for (int w : g.neighbors(at))
            if (!on_path[static_cast<std::size_t>(w)]) self(self, w, remaining - 1);
        on_path[static_cast<std::size_t>(at)] = 0;
    };
    on_path[static_cast<std::size_t>(v)] = 0;
    dfs(dfs, u, len);
    return count;
}

inline PairProfile::PairProfile(const Graph& g) : n_(g.vertex_count()) {
    const std::size_t cells = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
    p1_.assign(cells, 0);
    p2_.assign(cells, 0);
    p3_.assign(cells, 0);
    p4_.assign(cells, 0);
    deg_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) deg_[static_cast<std::size_t>(v)] = g.degree(v);

    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) {
            if (u == v) continue;
            at(p1_, u, v) = g.adjacent(u, v) ? 1 : 0;
            at(p2_, u, v) = common_neighbors(g, u, v);
        }
    // p3(u,v): u - x - y - v with x, y outside {u, v}
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) {
            if (u == v) continue;
            std::int64_t total = 0;
            for (int x : g.neighbors(u)) {
                if (x == v) continue;
                total += common_neighbors(g, x, v) - (g.adjacent(u, v) ? 1 : 0);
            }
            at(p3_, u, v) = total;
        }
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (u != v) at(p4_, u, v) = pair_path4(*this, u, v);
}

}  // namespace wlkit
