#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "wlkit/wlkit.hpp"

using namespace wlkit;

TEST_CASE("parse the triangle") {
    Graph g = parse_graph("3 3\n0 1\n1 2\n2 0");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(g.degree(2) == 2);
}

TEST_CASE("parse the edgeless graph") {
    Graph g = parse_graph("2 0");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("parse accepts comments, blank lines, and no trailing newline") {
    Graph g = parse_graph("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n2 0");
    CHECK(g.edge_count() == 3);
}

TEST_CASE("each malformed input gets its own parse error") {
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 0"), doctest::Contains("self-loop"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1\n1 0"), doctest::Contains("duplicate edge"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 3"), doctest::Contains("out of range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("x y\n"), doctest::Contains("malformed header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1"), doctest::Contains("unexpected end"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 1\n1 2"), doctest::Contains("trailing content"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_graph(""), doctest::Contains("missing header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 1 2"), doctest::Contains("expected 2 integers"),
                         ParseError);
}

TEST_CASE("parse names the offending line number") {
    CHECK_THROWS_WITH_AS(parse_graph("# comment\n3 3\n0 1\n1 1\n2 0"),
                         doctest::Contains("line 4"), ParseError);
}

TEST_CASE("parse, serialize, parse round-trips the edge set") {
    for (int seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(9, 0.4, static_cast<std::uint64_t>(seed));
        Graph back = parse_graph(format_graph(g));
        CHECK(back == g);
        CHECK(format_graph(back) == format_graph(g));
    }
}

TEST_CASE("random_graph edge probability extremes") {
    CHECK(random_graph(5, 0.0, 1).edge_count() == 0);
    CHECK(random_graph(5, 1.0, 1).edge_count() == 10);
}

TEST_CASE("random_graph is deterministic per seed") {
    CHECK(random_graph(8, 0.5, 7) == random_graph(8, 0.5, 7));
    CHECK(random_graph(8, 0.5, 7).edges() != random_graph(8, 0.5, 8).edges());
}

TEST_CASE("random_graph rejects bad parameters") {
    CHECK_THROWS_AS(random_graph(-1, 0.5, 1), PreconditionError);
    CHECK_THROWS_AS(random_graph(5, 1.5, 1), PreconditionError);
    CHECK_THROWS_AS(random_graph(5, -0.1, 1), PreconditionError);
}

TEST_CASE("tuple type codes for pairs") {
    Graph k3 = complete_graph(3);
    Graph e2 = Graph(2);

    int loop[] = {0, 0};
    int pair01[] = {0, 1};
    TupleTypeCode loop_code = tuple_type(k3, loop);
    CHECK(loop_code.equality == std::vector<int>{0, 0});
    CHECK(loop_code.adjacent_pairs.empty());

    TupleTypeCode edge_code = tuple_type(k3, pair01);
    TupleTypeCode non_edge_code = tuple_type(e2, pair01);
    CHECK(edge_code != non_edge_code);
    CHECK(edge_code.adjacent_pairs == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(non_edge_code.adjacent_pairs.empty());
    CHECK(edge_code.equality == non_edge_code.equality);
}

TEST_CASE("tuple type of a full triangle") {
    Graph k3 = complete_graph(3);
    int t[] = {0, 1, 2};
    TupleTypeCode code = tuple_type(k3, t);
    CHECK(code.equality == std::vector<int>{0, 1, 2});
    CHECK(code.adjacent_pairs == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("tuple type is invariant under automorphisms") {
    Graph c6 = cycle_graph(6);
    auto rotate = [](int v) { return (v + 1) % 6; };
    auto reflect = [](int v) { return (6 - v) % 6; };
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v)
            for (int w = 0; w < 6; ++w) {
                int t[] = {u, v, w};
                int rot[] = {rotate(u), rotate(v), rotate(w)};
                int ref[] = {reflect(u), reflect(v), reflect(w)};
                CHECK(tuple_type(c6, t) == tuple_type(c6, rot));
                CHECK(tuple_type(c6, t) == tuple_type(c6, ref));
            }
}

TEST_CASE("tuple type transfers along isomorphisms") {
    for (int seed = 0; seed < 5; ++seed) {
        Graph g = random_graph(7, 0.5, 40 + static_cast<std::uint64_t>(seed));
        auto perm = corpus::random_permutation(7, 90 + static_cast<std::uint64_t>(seed));
        Graph h = permuted(g, perm);
        for (int u = 0; u < 7; ++u)
            for (int v = 0; v < 7; ++v) {
                int t[] = {u, v};
                int im[] = {perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]};
                CHECK(tuple_type(g, t) == tuple_type(h, im));
            }
    }
}

TEST_CASE("is_isomorphic finds a bijection for a relabeled triangle") {
    Graph k3 = complete_graph(3);
    std::vector<int> perm = {2, 0, 1};
    auto mapping = is_isomorphic(k3, permuted(k3, perm));
    REQUIRE(mapping.has_value());
    for (auto [u, v] : k3.edges())
        CHECK(permuted(k3, perm).adjacent((*mapping)[static_cast<std::size_t>(u)],
                                          (*mapping)[static_cast<std::size_t>(v)]));
}

TEST_CASE("is_isomorphic succeeds on shuffled random graphs") {
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(4 + i % 7, 0.45, 300 + static_cast<std::uint64_t>(i));
        auto perm = corpus::random_permutation(g.vertex_count(), 500 + static_cast<std::uint64_t>(i));
        Graph h = permuted(g, perm);
        auto mapping = is_isomorphic(g, h);
        REQUIRE(mapping.has_value());
        for (auto [u, v] : g.edges())
            CHECK(h.adjacent((*mapping)[static_cast<std::size_t>(u)],
                             (*mapping)[static_cast<std::size_t>(v)]));
    }
}

TEST_CASE("is_isomorphic is symmetric in its arguments") {
    std::vector<std::pair<Graph, Graph>> pairs;
    pairs.emplace_back(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3)));
    pairs.emplace_back(path_graph(4), disjoint_union(complete_graph(3), Graph(1)));
    pairs.emplace_back(cycle_graph(5), cycle_graph(5));
    pairs.emplace_back(random_graph(8, 0.5, 11), random_graph(8, 0.5, 12));
    for (const auto& [a, b] : pairs)
        CHECK(is_isomorphic(a, b).has_value() == is_isomorphic(b, a).has_value());
}

TEST_CASE("is_isomorphic separates same-degree non-isomorphic graphs") {
    CHECK_FALSE(is_isomorphic(cycle_graph(6),
                              disjoint_union(complete_graph(3), complete_graph(3)))
                    .has_value());
}

TEST_CASE("is_isomorphic refuses graphs beyond 64 vertices") {
    CHECK_THROWS_AS(is_isomorphic(Graph(65), Graph(65)), PreconditionError);
}

TEST_CASE("graph construction rejects invalid edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), PreconditionError);
}

TEST_CASE("degree sum equals twice the edge count") {
    for (int seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(10, 0.4, 600 + static_cast<std::uint64_t>(seed));
        int sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}
