#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wlkit {

/// Input text could not be parsed; the message names the offending line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation was called outside its stated domain (size caps, bad
/// arguments, budget limits).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal cross-check failed; signals an implementation bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency is held both as sorted neighbor lists and as bit rows, so
/// membership tests are O(1) and common-neighbor counts are popcounts.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw PreconditionError("vertex count must be nonnegative");
        adj_.resize(static_cast<std::size_t>(n));
        rows_.resize(static_cast<std::size_t>(n) * words_per_row());
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_checked(u, v);
        finish();
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    bool adjacent(int u, int v) const {
        return (row(u)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
    }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    /// Edges as unordered pairs (u < v), sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// One bit row per vertex, words_per_row() words of 64 bits each.
    std::span<const std::uint64_t> row(int v) const {
        return {rows_.data() + static_cast<std::size_t>(v) * words_per_row(), words_per_row()};
    }

    std::size_t words_per_row() const { return (static_cast<std::size_t>(n_) + 63) / 64; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void add_edge_checked(int u, int v) {
        if (!has_vertex(u) || !has_vertex(v))
            throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (adjacent(u, v))
            throw PreconditionError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        set_bit(u, v);
        set_bit(v, u);
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }

    void finish() {
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
        std::sort(edges_.begin(), edges_.end());
    }

    void set_bit(int u, int v) {
        rows_[static_cast<std::size_t>(u) * words_per_row() + static_cast<std::size_t>(v) / 64] |=
            std::uint64_t{1} << (v % 64);
    }

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> rows_;
};

/// Number of common neighbors of u and v (never counts u or v themselves).
inline int common_neighbors(const Graph& g, int u, int v) {
    auto ru = g.row(u);
    auto rv = g.row(v);
    int total = 0;
    for (std::size_t i = 0; i < ru.size(); ++i) total += std::popcount(ru[i] & rv[i]);
    return total;
}

/// The image of g under a vertex permutation: vertex v becomes perm[v].
inline Graph permuted(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw PreconditionError("permutation size does not match vertex count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.vertex_count(), edges);
}

/// Disjoint union; vertices of b are shifted up by a.vertex_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    const int shift = a.vertex_count();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace wlkit
