#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit {

/// Number of k-subsets of vertices inducing a complete graph. Vertices are
/// chosen in increasing order over shrinking common-neighborhood masks, so
/// every clique is met once; branches without enough candidates are cut.
inline std::int64_t count_cliques(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("count_cliques: clique size must be >= 1");
    const int n = g.vertex_count();
    if (n > 64) throw PreconditionError("count_cliques handles at most 64 vertices");
    if (k == 1) return n;
    if (k > n) return 0;

    std::vector<std::uint64_t> higher(static_cast<std::size_t>(n), 0);  // neighbors above v
    for (auto [u, v] : g.edges()) higher[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;

    auto count = [&](auto&& self, std::uint64_t candidates, int remaining) -> std::int64_t {
        if (remaining == 0) return 1;
        if (std::popcount(candidates) < remaining) return 0;
        std::int64_t total = 0;
        while (candidates) {
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            total += self(self, candidates & higher[static_cast<std::size_t>(v)], remaining - 1);
        }
        return total;
    };

    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return count(count, all, k);
}

}  // namespace wlkit
