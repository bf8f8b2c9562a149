#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit {

/// Isomorphism type of a k-tuple of vertices: which positions coincide and
/// which position pairs are edges. Two tuples (in any graphs) get equal
/// codes exactly when some bijection of their entries preserves equality
/// and adjacency position-wise.
struct TupleTypeCode {
    /// Position -> class id in first-occurrence order, e.g. (a,b,a) -> [0,1,0].
    std::vector<int> equality;
    /// Sorted position pairs (i < j) whose entries are adjacent.
    std::vector<std::pair<int, int>> adjacent_pairs;

    auto operator<=>(const TupleTypeCode&) const = default;
};

inline TupleTypeCode tuple_type(const Graph& g, std::span<const int> tuple) {
    const int k = static_cast<int>(tuple.size());
    TupleTypeCode code;
    code.equality.resize(static_cast<std::size_t>(k));
    int next_class = 0;
    for (int i = 0; i < k; ++i) {
        if (!g.has_vertex(tuple[static_cast<std::size_t>(i)]))
            throw PreconditionError("tuple_type: entry is not a vertex");
        int cls = -1;
        for (int j = 0; j < i; ++j)
            if (tuple[static_cast<std::size_t>(j)] == tuple[static_cast<std::size_t>(i)]) {
                cls = code.equality[static_cast<std::size_t>(j)];
                break;
            }
        code.equality[static_cast<std::size_t>(i)] = cls >= 0 ? cls : next_class++;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(tuple[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>(j)]))
                code.adjacent_pairs.emplace_back(i, j);
    return code;
}

}  // namespace wlkit
