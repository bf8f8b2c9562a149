#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "corpus.hpp"
#include "wlkit/wlkit.hpp"

using namespace wlkit;

namespace {

std::vector<std::pair<int, int>> seeded_flip_set(const Graph& global, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> flips;
    for (auto e : global.edges())
        if (rng() & 1) flips.push_back(e);
    return flips;
}

std::set<std::pair<int, int>> symmetric_difference(std::set<std::pair<int, int>> a,
                                                   const std::vector<std::pair<int, int>>& b) {
    for (auto e : b) {
        if (a.count(e)) a.erase(e);
        else a.insert(e);
    }
    return a;
}

}  // namespace

TEST_CASE("the canonical K4 template carries the fixed labeling") {
    GlobalGraph h = k4_global();
    CHECK(h.graph().vertex_count() == 4);
    CHECK(h.graph().edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(h.graph().degree(v) == 3);
    CHECK(h.label(0, 1) == PartitionLabel::a);
    CHECK(h.label(1, 0) == PartitionLabel::c);
    CHECK(h.label(0, 2) == PartitionLabel::b);
    CHECK(h.label(2, 0) == PartitionLabel::b);
    for (int v = 0; v < 4; ++v) {
        std::set<PartitionLabel> outgoing;
        for (int w : h.graph().neighbors(v)) outgoing.insert(h.label(v, w));
        CHECK(outgoing.size() == 3);
    }
}

TEST_CASE("the untwisted product has 16 vertices, 48 edges, and is 6-regular") {
    Graph g = build_cfi(k4_global()).product;
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 48);
    for (int v = 0; v < 16; ++v) CHECK(g.degree(v) == 6);
}

TEST_CASE("gadgets are independent sets and each global edge becomes 8 edges") {
    CfiGraph cfi = build_cfi(k4_global(), {{0, 1}});
    for (int v = 0; v < 4; ++v)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                CHECK_FALSE(cfi.product.adjacent(CfiGraph::corner_vertex(v, i),
                                                 CfiGraph::corner_vertex(v, j)));
    for (auto [u, v] : cfi.global.graph().edges()) {
        int between = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                between += cfi.product.adjacent(CfiGraph::corner_vertex(u, i),
                                                CfiGraph::corner_vertex(v, j));
        CHECK(between == 8);
    }
}

TEST_CASE("a flipped edge crosses the pair matching") {
    // (0,1) is labeled a at 0 and c at 1: Bottom{0,1} meets Slash{0,2}
    Graph plain = build_cfi(k4_global()).product;
    Graph flipped = build_cfi(k4_global(), {{0, 1}}).product;
    CHECK(plain.adjacent(CfiGraph::corner_vertex(0, 0), CfiGraph::corner_vertex(1, 0)));
    CHECK(plain.adjacent(CfiGraph::corner_vertex(0, 0), CfiGraph::corner_vertex(1, 2)));
    CHECK_FALSE(plain.adjacent(CfiGraph::corner_vertex(0, 0), CfiGraph::corner_vertex(1, 1)));
    CHECK_FALSE(flipped.adjacent(CfiGraph::corner_vertex(0, 0), CfiGraph::corner_vertex(1, 0)));
    CHECK(flipped.adjacent(CfiGraph::corner_vertex(0, 0), CfiGraph::corner_vertex(1, 1)));
    CHECK(flipped.adjacent(CfiGraph::corner_vertex(0, 0), CfiGraph::corner_vertex(1, 3)));
}

TEST_CASE("a flip edge listed twice collapses to one flip") {
    Graph once = build_cfi(k4_global(), {{1, 3}}).product;
    Graph twice = build_cfi(k4_global(), {{1, 3}, {3, 1}}).product;
    CHECK(once == twice);
}

TEST_CASE("flips outside the global edge set are rejected") {
    CHECK_THROWS_AS(build_cfi(k4_global(), {{0, 4}}), PreconditionError);
    GlobalGraph cube = auto_label(cube_graph());
    CHECK_THROWS_AS(build_cfi(cube, {{0, 7}}), PreconditionError);  // antipodal, not an edge
}

TEST_CASE("non-3-regular global graphs are rejected") {
    CHECK_THROWS_AS(auto_label(cycle_graph(5)), PreconditionError);
    CHECK_THROWS_AS(auto_label(complete_graph(5)), PreconditionError);
}

TEST_CASE("a labeling with repeated outgoing labels is rejected") {
    Graph k4 = complete_graph(4);
    std::map<std::pair<int, int>, PartitionLabel> labels;
    for (int v = 0; v < 4; ++v)
        for (int w : k4.neighbors(v)) labels[{v, w}] = PartitionLabel::a;
    CHECK_THROWS_AS(GlobalGraph(k4, labels), PreconditionError);
}

TEST_CASE("vertex and edge counts scale with the template for the 3-regular corpus") {
    std::vector<Graph> templates = {complete_graph(4), complete_bipartite(3, 3), cube_graph(),
                                    petersen_graph()};
    for (const Graph& t : templates) {
        CfiGraph cfi = build_cfi(auto_label(t));
        CHECK(cfi.product.vertex_count() == 4 * t.vertex_count());
        CHECK(cfi.product.edge_count() == 8 * t.edge_count());
    }
}

TEST_CASE("gadget exchanges are involutions fixing everything outside the gadget") {
    CfiGraph cfi = build_cfi(k4_global());
    for (int v = 0; v < 4; ++v)
        for (ExchangeKind kind : {ExchangeKind::bottom_top, ExchangeKind::left_right}) {
            auto perm = gadget_exchange(cfi, v, kind);
            for (int p = 0; p < cfi.product.vertex_count(); ++p) {
                CHECK(perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] == p);
                if (CfiGraph::corner_of(p).first != v) CHECK(perm[static_cast<std::size_t>(p)] == p);
                else CHECK(perm[static_cast<std::size_t>(p)] != p);
            }
        }
}

TEST_CASE("an exchange relocates flips across the toggled incident edges") {
    GlobalGraph h = k4_global();
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        auto flips = seeded_flip_set(h.graph(), 7000 + seed);
        CfiGraph cfi = build_cfi(h, flips);
        for (int v = 0; v < 4; ++v)
            for (ExchangeKind kind : {ExchangeKind::bottom_top, ExchangeKind::left_right}) {
                auto perm = gadget_exchange(cfi, v, kind);
                auto toggled = exchange_toggled_edges(cfi, v, kind);
                CHECK(toggled.size() == 2);
                auto target = symmetric_difference(cfi.flips, toggled);
                Graph expected =
                    build_cfi(h, {target.begin(), target.end()}).product;
                CHECK(permuted(cfi.product, perm) == expected);
            }
    }
}

TEST_CASE("only the parity of the flips matters") {
    GlobalGraph h = k4_global();
    Graph plain = build_cfi(h).product;
    Graph twisted = build_cfi(h, {{1, 3}}).product;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto flips = seeded_flip_set(h.graph(), 9000 + seed);
        Graph g = build_cfi(h, flips).product;
        bool even = flips.size() % 2 == 0;
        CHECK(is_isomorphic(g, plain).has_value() == even);
        CHECK(is_isomorphic(g, twisted).has_value() == !even);
    }
}

TEST_CASE("a single flip can sit on any edge sharing a vertex with another") {
    GlobalGraph h = k4_global();
    const auto& edges = h.graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a != c && a != d && b != c && b != d) continue;  // no shared vertex
            Graph gi = build_cfi(h, {edges[i]}).product;
            Graph gj = build_cfi(h, {edges[j]}).product;
            CHECK(is_isomorphic(gi, gj).has_value());
        }
}

TEST_CASE("both CFI(K4) graphs look vertex-transitive to pair refinement") {
    std::vector<std::vector<std::pair<int, int>>> flip_choices = {{}, {{1, 3}}};
    for (const auto& flips : flip_choices) {
        Graph g = build_cfi(k4_global(), flips).product;
        Coloring c = wl2_refine(g);
        int loop0 = c.color_of_pair(0, 0);
        for (int v = 1; v < g.vertex_count(); ++v) CHECK(c.color_of_pair(v, v) == loop0);
    }
}

TEST_CASE("cfi files round-trip through the annotation block") {
    CfiGraph original = build_cfi(k4_global(), {{1, 3}, {0, 2}});
    std::string text = format_cfi(original);
    CfiGraph back = parse_cfi(text);
    CHECK(back.product == original.product);
    CHECK(back.flips == original.flips);
    CHECK(back.global.graph() == original.global.graph());
    for (int v = 0; v < 4; ++v)
        for (int w : original.global.graph().neighbors(v))
            CHECK(back.global.label(v, w) == original.global.label(v, w));
    // the annotated file still parses as a plain graph
    Graph plain = parse_graph(text);
    CHECK(plain == original.product);
}

TEST_CASE("tampered cfi annotations are rejected") {
    std::string text = format_cfi(build_cfi(k4_global()));
    auto pos = text.find("# cfi flip");
    REQUIRE(pos == std::string::npos);
    text.insert(text.find("16 48"), "# cfi flip 0 1\n");
    CHECK_THROWS_WITH_AS(parse_cfi(text), doctest::Contains("does not match"), ParseError);
}
