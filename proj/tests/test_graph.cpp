#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "oracles.hpp"
#include "prespec/enumerate.hpp"
#include "prespec/graph.hpp"
#include "prespec/graph_io.hpp"

using namespace prespec;

TEST_CASE("graph construction and accessors") {
    Graph k2 = make_graph(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.adjacent(0, 1));
    CHECK(k2.adjacent(1, 0));
    CHECK_FALSE(k2.adjacent(0, 0));

    SUBCASE("duplicate edges collapse") {
        Graph g(3);
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        g.add_edge(0, 1);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("self-loops and bad vertices rejected") {
        Graph g(3);
        CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
        CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
        CHECK_THROWS_AS(g.add_edge(-1, 0), std::invalid_argument);
    }
    SUBCASE("degrees and neighbors") {
        Graph star = star_graph(4);
        CHECK(star.degree(0) == 4);
        CHECK(star.degree(3) == 1);
        CHECK(star.neighbors(0) == std::vector<int>{1, 2, 3, 4});
        CHECK(star.neighbors(2) == std::vector<int>{0});
    }
    SUBCASE("edges sorted lexicographically") {
        Graph g(4);
        g.add_edge(2, 3);
        g.add_edge(0, 2);
        g.add_edge(0, 1);
        std::vector<std::pair<int, int>> want{{0, 1}, {0, 2}, {2, 3}};
        CHECK(g.edges() == want);
    }
    SUBCASE("equality ignores labels") {
        Graph a = path_graph(3);
        Graph b = path_graph(3);
        b.set_label(0, "root");
        CHECK(a == b);
    }
}

TEST_CASE("named families") {
    CHECK(path_graph(5).order() == 5);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(star_graph(4).order() == 5);
    CHECK(star_graph(4).edge_count() == 4);
    CHECK(empty_graph(1).order() == 1);
    CHECK(empty_graph(1).edge_count() == 0);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK_THROWS(cycle_graph(2));

    CHECK(named_graph(Family::Path, 5) == path_graph(5));
    CHECK(named_graph(Family::Star, 4) == star_graph(4));
    for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::Star, Family::Empty})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("mystery"), std::invalid_argument);
}

TEST_CASE("disjoint union") {
    Graph two_k2 = disjoint_union({make_graph(2, {{0, 1}}), make_graph(2, {{0, 1}})});
    CHECK(two_k2.order() == 4);
    CHECK(two_k2.edge_count() == 2);
    CHECK(two_k2.adjacent(2, 3));
    CHECK_FALSE(two_k2.adjacent(1, 2));

    Graph u = disjoint_union({make_graph(2, {{0, 1}}), star_graph(4)});
    CHECK(u.order() == 7);
    CHECK(u.edge_count() == 5);

    CHECK(disjoint_union(std::initializer_list<Graph>{}).order() == 0);
}

TEST_CASE("connectivity, bipartiteness, trees") {
    CHECK(is_connected(path_graph(5)));
    CHECK(is_connected(empty_graph(1)));
    CHECK_FALSE(is_connected(empty_graph(2)));
    CHECK_FALSE(is_connected(disjoint_union({path_graph(2), path_graph(2)})));

    CHECK_FALSE(is_bipartite(cycle_graph(3)));
    CHECK(is_bipartite(cycle_graph(4)));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(is_bipartite(path_graph(5)));

    CHECK(is_tree(path_graph(5)));
    CHECK(is_tree(star_graph(4)));
    CHECK(is_tree(empty_graph(1)));
    CHECK_FALSE(is_tree(cycle_graph(3)));
    CHECK_FALSE(is_tree(disjoint_union({path_graph(2), path_graph(2)})));

    SUBCASE("connectivity matches the matrix-power oracle, all graphs of order <= 5") {
        for (int n = 1; n <= 5; ++n)
            enumerate_labeled_graphs(n, [&](const Graph& g) {
                REQUIRE(is_connected(g) == oracle::connected_by_powers(g));
                return true;
            });
    }
    SUBCASE("bipartiteness matches the odd-walk oracle, all graphs of order <= 5") {
        for (int n = 1; n <= 5; ++n)
            enumerate_labeled_graphs(n, [&](const Graph& g) {
                REQUIRE(is_bipartite(g) == oracle::bipartite_by_walks(g));
                return true;
            });
    }
}

TEST_CASE("components and induced subgraphs") {
    Graph g = disjoint_union({path_graph(2), path_graph(2)});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});

    Graph c5 = cycle_graph(5);
    std::vector<int> keep{0, 1, 2};
    CHECK(induced_subgraph(c5, keep) == path_graph(3));
    std::vector<int> wrap{4, 0, 1};
    Graph p = induced_subgraph(c5, wrap);
    CHECK(p.adjacent(0, 1));
    CHECK(p.adjacent(1, 2));
    CHECK_FALSE(p.adjacent(0, 2));
}

TEST_CASE("graph6 format") {
    CHECK(emit_graph6(make_graph(2, {{0, 1}})) == "A_");
    CHECK(emit_graph6(star_graph(4)) == "Ds_");
    CHECK(parse_graph6("A_") == make_graph(2, {{0, 1}}));
    CHECK(parse_graph6(">>graph6<<A_") == make_graph(2, {{0, 1}}));
    CHECK(parse_graph6("A_\n") == make_graph(2, {{0, 1}}));

    SUBCASE("malformed input rejected") {
        CHECK_THROWS_AS(parse_graph6("garbage!"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);
    }
    SUBCASE("round trips, including multi-byte orders") {
        for (const Graph& g : {path_graph(5), cycle_graph(7), complete_graph(6), empty_graph(3),
                               star_graph(9), path_graph(62), path_graph(63), path_graph(100)})
            CHECK(parse_graph6(emit_graph6(g)) == g);
    }
    SUBCASE("round trips over every graph of order <= 4") {
        for (int n = 1; n <= 4; ++n)
            enumerate_labeled_graphs(n, [&](const Graph& g) {
                REQUIRE(parse_graph6(emit_graph6(g)) == g);
                return true;
            });
    }
}

TEST_CASE("edge list format") {
    Graph p3 = path_graph(3);
    std::string text = emit_edge_list(p3);
    CHECK(text == "3 2\n0 1\n1 2\n");
    CHECK(parse_edge_list(text) == p3);
    CHECK(parse_graph_auto(text) == p3);
    CHECK(parse_graph_auto("Bo") == star_graph(2)); // graph6 branch of the sniffer
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("not numbers"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), std::invalid_argument);
}
