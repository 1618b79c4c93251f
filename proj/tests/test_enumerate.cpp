#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "prespec/enumerate.hpp"
#include "prespec/graph.hpp"
#include "prespec/graph_io.hpp"
#include "prespec/types.hpp"

using namespace prespec;

namespace {

long long count_graphs(int n, bool connected_only = false) {
    long long count = 0;
    enumerate_labeled_graphs(n, [&](const Graph& g) {
        if (!connected_only || is_connected(g)) ++count;
        return true;
    });
    return count;
}

} // namespace

TEST_CASE("labeled graph enumeration") {
    CHECK(count_graphs(1) == 1);
    CHECK(count_graphs(2) == 2);
    CHECK(count_graphs(3) == 8);
    CHECK(count_graphs(4) == 64);
    CHECK(count_graphs(3, true) == 4);
    CHECK(count_graphs(4, true) == 38);

    SUBCASE("ascending edge-mask order") {
        std::vector<Graph> first_three;
        enumerate_labeled_graphs(3, [&](const Graph& g) {
            first_three.push_back(g);
            return first_three.size() < 3;
        });
        REQUIRE(first_three.size() == 3);
        CHECK(first_three[0].edge_count() == 0);
        CHECK(first_three[1].edge_count() == 1);
        CHECK(first_three[1].adjacent(0, 1)); // lowest bit is the (0,1) pair
        CHECK(first_three[2].edge_count() == 1);
        CHECK(first_three[2].adjacent(0, 2)); // column-major: (0,2) before (1,2)
    }
    SUBCASE("last graph is complete") {
        Graph last;
        enumerate_labeled_graphs(4, [&](const Graph& g) {
            last = g;
            return true;
        });
        CHECK(last == complete_graph(4));
    }
    SUBCASE("bounds") {
        CHECK_THROWS_AS(enumerate_labeled_graphs(0, [](const Graph&) { return true; }),
                        std::invalid_argument);
        try {
            enumerate_labeled_graphs(9, [](const Graph&) { return true; });
            FAIL("expected BoundError");
        } catch (const BoundError& e) {
            CHECK(e.bound() == 8);
        }
    }
}

TEST_CASE("tree enumeration") {
    SUBCASE("counts match the known sequence for n <= 10") {
        const auto& known = oracle::known_tree_counts();
        for (int n = 1; n <= 10; ++n)
            CHECK(static_cast<long long>(trees_of_order(n).size()) == known[n - 1]);
    }
    SUBCASE("counts match the Prufer canonicalization oracle for n <= 8") {
        for (int n = 1; n <= 8; ++n)
            CHECK(static_cast<long long>(trees_of_order(n).size()) ==
                  oracle::free_tree_count_prufer(n));
    }
    SUBCASE("emitted graphs are trees of the right order, pairwise non-isomorphic") {
        for (int n = 1; n <= 8; ++n) {
            std::set<std::string> codes;
            for (const Graph& t : trees_of_order(n)) {
                REQUIRE(t.order() == n);
                REQUIRE(t.edge_count() == static_cast<std::size_t>(n - 1));
                REQUIRE(is_tree(t));
                REQUIRE(codes.insert(oracle::tree_canonical_code(t)).second);
            }
        }
    }
    SUBCASE("order 4: the path, then the star") {
        auto trees = trees_of_order(4);
        REQUIRE(trees.size() == 2);
        std::vector<int> degs;
        for (int v = 0; v < 4; ++v) degs.push_back(trees[0].degree(v));
        std::sort(degs.begin(), degs.end());
        CHECK(degs == std::vector<int>{1, 1, 2, 2});
        CHECK(trees[1] == star_graph(3));
    }
    SUBCASE("deterministic across runs") {
        auto a = trees_of_order(7);
        auto b = trees_of_order(7);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(emit_graph6(a[i]) == emit_graph6(b[i]));
    }
    SUBCASE("early stop") {
        int seen = 0;
        enumerate_trees(8, [&](const Graph&) { return ++seen < 5; });
        CHECK(seen == 5);
    }
    SUBCASE("order caps") {
        CHECK_THROWS_AS(enumerate_trees(19, [](const Graph&) { return true; }), BoundError);
        CHECK_THROWS_AS(enumerate_trees(5, [](const Graph&) { return true; }, 4), BoundError);
        CHECK_NOTHROW(trees_of_order(3, 4));
        CHECK_THROWS_AS(enumerate_trees(0, [](const Graph&) { return true; }),
                        std::invalid_argument);
    }
}
