#pragma once

#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wlkit/graph.hpp"
#include "wlkit/graph_io.hpp"

namespace wlkit {

/// The three ways to split gadget corners {0,1,2,3} into two pairs.
enum class PartitionLabel : int { a = 0, b = 1, c = 2 };

inline char label_letter(PartitionLabel l) { return static_cast<char>('a' + static_cast<int>(l)); }

/// First and second corner pair of each label:
///   a: Bottom {0,1} / Top {2,3}
///   b: Left {0,3} / Right {1,2}
///   c: Slash {0,2} / Backslash {1,3}
inline constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kLabelPairs = {{
    {{{0, 1}, {2, 3}}},
    {{{0, 3}, {1, 2}}},
    {{{0, 2}, {1, 3}}},
}};

/// A 3-regular template graph with one partition label per directed edge;
/// the three outgoing labels at every vertex are distinct.
class GlobalGraph {
public:
    GlobalGraph(Graph graph, std::map<std::pair<int, int>, PartitionLabel> labels)
        : graph_(std::move(graph)), labels_(std::move(labels)) {
        for (int v = 0; v < graph_.vertex_count(); ++v) {
            if (graph_.degree(v) != 3)
                throw PreconditionError("global graph must be 3-regular; vertex " +
                                        std::to_string(v) + " has degree " +
                                        std::to_string(graph_.degree(v)));
            std::set<PartitionLabel> seen;
            for (int w : graph_.neighbors(v)) {
                auto it = labels_.find({v, w});
                if (it == labels_.end())
                    throw PreconditionError("missing label on directed edge (" + std::to_string(v) +
                                            ", " + std::to_string(w) + ")");
                seen.insert(it->second);
            }
            if (seen.size() != 3)
                throw PreconditionError("outgoing labels at vertex " + std::to_string(v) +
                                        " are not three distinct partitions");
        }
        if (labels_.size() != static_cast<std::size_t>(2 * graph_.edge_count()))
            throw PreconditionError("label map carries labels for non-edges");
    }

    const Graph& graph() const { return graph_; }

    PartitionLabel label(int u, int v) const { return labels_.at({u, v}); }

    /// The edge whose outgoing label at v is l.
    std::pair<int, int> edge_with_label(int v, PartitionLabel l) const {
        for (int w : graph_.neighbors(v))
            if (label(v, w) == l) return {std::min(v, w), std::max(v, w)};
        throw PreconditionError("no outgoing label " + std::string(1, label_letter(l)) +
                                " at vertex " + std::to_string(v));
    }

private:
    Graph graph_;
    std::map<std::pair<int, int>, PartitionLabel> labels_;
};

/// The canonical K4 template: label a on (i, i+1 mod 4), c on (i+1 mod 4, i),
/// b on both directions of the diagonals {0,2} and {1,3}.
inline GlobalGraph k4_global() {
    Graph k4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
    std::map<std::pair<int, int>, PartitionLabel> labels;
    for (int i = 0; i < 4; ++i) {
        labels[{i, (i + 1) % 4}] = PartitionLabel::a;
        labels[{(i + 1) % 4, i}] = PartitionLabel::c;
    }
    labels[{0, 2}] = labels[{2, 0}] = PartitionLabel::b;
    labels[{1, 3}] = labels[{3, 1}] = PartitionLabel::b;
    return GlobalGraph(std::move(k4), std::move(labels));
}

/// Deterministic labeling for an arbitrary 3-regular graph: each vertex
/// labels its outgoing edges a, b, c in neighbor order.
inline GlobalGraph auto_label(const Graph& g) {
    std::map<std::pair<int, int>, PartitionLabel> labels;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 3)
            throw PreconditionError("auto_label: graph must be 3-regular; vertex " +
                                    std::to_string(v) + " has degree " +
                                    std::to_string(g.degree(v)));
        int i = 0;
        for (int w : g.neighbors(v)) labels[{v, w}] = static_cast<PartitionLabel>(i++);
    }
    return GlobalGraph(g, std::move(labels));
}

/// A built CFI instance: the 4|V|-vertex product with its template and flip
/// set kept for bookkeeping. Product vertex of (global v, corner j) is 4v+j.
struct CfiGraph {
    GlobalGraph global;
    std::set<std::pair<int, int>> flips;  // normalized u < v
    Graph product;

    static int corner_vertex(int global_v, int corner) { return 4 * global_v + corner; }
    static std::pair<int, int> corner_of(int product_v) { return {product_v / 4, product_v % 4}; }
};

/// Replace every template vertex by a 4-corner gadget (no internal edges)
/// and every template edge {u,v} by 8 edges: the first corner pair under
/// label(u,v) matches the first pair under label(v,u), second matches
/// second; a flipped edge matches first to second instead.
inline CfiGraph build_cfi(const GlobalGraph& h, const std::vector<std::pair<int, int>>& flips) {
    std::set<std::pair<int, int>> flip_set;
    for (auto [u, v] : flips) {
        auto e = std::minmax(u, v);
        if (!h.graph().has_vertex(u) || !h.graph().has_vertex(v) || !h.graph().adjacent(u, v))
            throw PreconditionError("flip edge {" + std::to_string(u) + ", " + std::to_string(v) +
                                    "} is not an edge of the global graph");
        flip_set.insert({e.first, e.second});
    }

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : h.graph().edges()) {
        const auto& up = kLabelPairs[static_cast<std::size_t>(h.label(u, v))];
        const auto& vp = kLabelPairs[static_cast<std::size_t>(h.label(v, u))];
        const bool flipped = flip_set.count({u, v}) != 0;
        for (int side = 0; side < 2; ++side) {
            const auto& pu = up[static_cast<std::size_t>(side)];
            const auto& pv = vp[static_cast<std::size_t>(flipped ? 1 - side : side)];
            for (int i : pu)
                for (int j : pv)
                    edges.emplace_back(CfiGraph::corner_vertex(u, i), CfiGraph::corner_vertex(v, j));
        }
    }
    Graph product(4 * h.graph().vertex_count(), edges);
    return CfiGraph{h, std::move(flip_set), std::move(product)};
}

inline CfiGraph build_cfi(const GlobalGraph& h) { return build_cfi(h, {}); }

enum class ExchangeKind { bottom_top, left_right };

namespace detail {

/// Corner involutions. Each exchanges the named pair sets and maps the other
/// two partitions' pairs onto pairs of the same partition.
inline constexpr std::array<int, 4> kBottomTopMap = {2, 3, 0, 1};  // {0,1} <-> {2,3}
inline constexpr std::array<int, 4> kLeftRightMap = {1, 0, 3, 2};  // {0,3} <-> {1,2}

inline const std::array<int, 4>& exchange_map(ExchangeKind kind) {
    return kind == ExchangeKind::bottom_top ? kBottomTopMap : kLeftRightMap;
}

}  // namespace detail

/// Product-vertex permutation swapping the named corner pairs inside the
/// gadget of global vertex v and fixing everything else.
inline std::vector<int> gadget_exchange(const CfiGraph& g, int v, ExchangeKind kind) {
    if (!g.global.graph().has_vertex(v))
        throw PreconditionError("gadget_exchange: no global vertex " + std::to_string(v));
    std::vector<int> perm(static_cast<std::size_t>(g.product.vertex_count()));
    for (int i = 0; i < g.product.vertex_count(); ++i) perm[static_cast<std::size_t>(i)] = i;
    const auto& m = detail::exchange_map(kind);
    for (int j = 0; j < 4; ++j)
        perm[static_cast<std::size_t>(CfiGraph::corner_vertex(v, j))] =
            CfiGraph::corner_vertex(v, m[static_cast<std::size_t>(j)]);
    return perm;
}

/// Global edges at v whose matching the exchange reverses: the exchange
/// swaps the sides of two of the three partitions, so exactly the two
/// incident edges carrying those outgoing labels toggle their flip state.
inline std::vector<std::pair<int, int>> exchange_toggled_edges(const CfiGraph& g, int v,
                                                               ExchangeKind kind) {
    const auto& m = detail::exchange_map(kind);
    std::vector<std::pair<int, int>> toggled;
    for (int l = 0; l < 3; ++l) {
        const auto& first = kLabelPairs[static_cast<std::size_t>(l)][0];
        // side swapped iff the image of the first pair is not the first pair
        bool swapped = !((m[static_cast<std::size_t>(first[0])] == first[0] ||
                          m[static_cast<std::size_t>(first[0])] == first[1]) &&
                         (m[static_cast<std::size_t>(first[1])] == first[0] ||
                          m[static_cast<std::size_t>(first[1])] == first[1]));
        if (swapped) toggled.push_back(g.global.edge_with_label(v, static_cast<PartitionLabel>(l)));
    }
    return toggled;
}

/// Graph file plus an annotation block so the instance round-trips: the
/// template's labeled directed edges, the flip set, and the gadget map.
inline std::string format_cfi(const CfiGraph& g) {
    std::ostringstream out;
    out << "# cfi global " << g.global.graph().vertex_count() << ' '
        << g.global.graph().edge_count() << '\n';
    for (int v = 0; v < g.global.graph().vertex_count(); ++v)
        for (int w : g.global.graph().neighbors(v))
            out << "# cfi label " << v << ' ' << w << ' ' << label_letter(g.global.label(v, w))
                << '\n';
    for (auto [u, v] : g.flips) out << "# cfi flip " << u << ' ' << v << '\n';
    for (int p = 0; p < g.product.vertex_count(); ++p) {
        auto [gv, corner] = CfiGraph::corner_of(p);
        out << "# cfi corner " << p << ' ' << gv << ' ' << corner << '\n';
    }
    out << format_graph(g.product);
    return out.str();
}

/// Rebuild a CfiGraph from format_cfi output. The product edge list in the
/// file must match the product rebuilt from the annotations.
inline CfiGraph parse_cfi(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int global_n = -1, global_m = -1;
    std::map<std::pair<int, int>, PartitionLabel> labels;
    std::vector<std::pair<int, int>> flips;
    std::map<int, std::pair<int, int>> corners;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string hash, tag, kind;
        if (!(ls >> hash) || hash != "#") continue;
        if (!(ls >> tag) || tag != "cfi") continue;
        ls >> kind;
        if (kind == "global") {
            if (!(ls >> global_n >> global_m))
                throw ParseError("line " + std::to_string(line_no) + ": malformed cfi global line");
        } else if (kind == "label") {
            int u, v;
            char l;
            if (!(ls >> u >> v >> l) || l < 'a' || l > 'c')
                throw ParseError("line " + std::to_string(line_no) + ": malformed cfi label line");
            labels[{u, v}] = static_cast<PartitionLabel>(l - 'a');
        } else if (kind == "flip") {
            int u, v;
            if (!(ls >> u >> v))
                throw ParseError("line " + std::to_string(line_no) + ": malformed cfi flip line");
            flips.emplace_back(u, v);
        } else if (kind == "corner") {
            int p, gv, corner;
            if (!(ls >> p >> gv >> corner))
                throw ParseError("line " + std::to_string(line_no) + ": malformed cfi corner line");
            corners[p] = {gv, corner};
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown cfi annotation '" +
                             kind + "'");
        }
    }
    if (global_n < 0) throw ParseError("missing 'cfi global' annotation");

    std::vector<std::pair<int, int>> global_edges;
    for (const auto& [dir, l] : labels)
        if (dir.first < dir.second) global_edges.push_back(dir);
    if (static_cast<int>(global_edges.size()) != global_m)
        throw ParseError("cfi annotations carry " + std::to_string(global_edges.size()) +
                         " labeled edges, header promises " + std::to_string(global_m));
    GlobalGraph h(Graph(global_n, global_edges), labels);
    CfiGraph rebuilt = build_cfi(h, flips);

    for (const auto& [p, loc] : corners)
        if (CfiGraph::corner_of(p) != loc)
            throw ParseError("cfi corner annotation for product vertex " + std::to_string(p) +
                             " does not match the 4v+j layout");
    Graph listed = parse_graph(text);
    if (!(listed == rebuilt.product))
        throw ParseError("product edge list does not match the annotated cfi construction");
    return rebuilt;
}

}  // namespace wlkit
