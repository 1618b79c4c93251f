#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "prespec/enumerate.hpp"
#include "prespec/graph.hpp"
#include "prespec/intpoly.hpp"
#include "prespec/products.hpp"
#include "prespec/spectral.hpp"

using namespace prespec;

namespace {

Graph k2() { return make_graph(2, {{0, 1}}); }

std::vector<Graph> connected_graphs_up_to(int max_order, int min_order = 1) {
    std::vector<Graph> out;
    for (int n = min_order; n <= max_order; ++n)
        enumerate_labeled_graphs(n, [&](const Graph& g) {
            if (is_connected(g)) out.push_back(g);
            return true;
        });
    return out;
}

} // namespace

TEST_CASE("cartesian sums") {
    Graph c4 = cartesian_sum(k2(), k2());
    CHECK(c4.order() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(charpoly(c4) == IntPoly{0, 0, -4, 0, 1});
    CHECK(charpoly(c4) == charpoly(cycle_graph(4)));

    CHECK(cartesian_sum(empty_graph(1), path_graph(4)) == path_graph(4));
    CHECK(cartesian_sum(path_graph(4), empty_graph(1)) == path_graph(4));

    SUBCASE("vertex numbering is (i, j) -> i * order(h) + j") {
        Graph p = cartesian_sum(k2(), path_graph(3));
        // copies of the path at rows 0 and 1, rungs between them
        CHECK(p.adjacent(0, 1));
        CHECK(p.adjacent(1, 2));
        CHECK(p.adjacent(3, 4));
        CHECK(p.adjacent(0, 3));
        CHECK(p.adjacent(2, 5));
        CHECK_FALSE(p.adjacent(0, 4));
    }
    SUBCASE("eigenvalues add: charpoly equals compose_sum of the factor charpolys") {
        std::vector<Graph> pool{empty_graph(1), k2(), path_graph(3), cycle_graph(3),
                                star_graph(3)};
        for (const Graph& g : pool)
            for (const Graph& h : pool)
                REQUIRE(charpoly(cartesian_sum(g, h)) == compose_sum(charpoly(g), charpoly(h)));
    }
    SUBCASE("connected iff both operands are connected, orders <= 4") {
        for (int ng = 1; ng <= 3; ++ng)
            enumerate_labeled_graphs(ng, [&](const Graph& g) {
                for (int nh = 1; nh <= 4; ++nh)
                    enumerate_labeled_graphs(nh, [&](const Graph& h) {
                        REQUIRE(is_connected(cartesian_sum(g, h)) ==
                                (is_connected(g) && is_connected(h)));
                        return true;
                    });
                return true;
            });
    }
    CHECK_THROWS_AS(cartesian_sum(Graph(), k2()), std::invalid_argument);
}

TEST_CASE("tensor products") {
    Graph t = tensor_product(k2(), k2());
    CHECK(t.order() == 4);
    CHECK(t.edge_count() == 2);
    CHECK_FALSE(is_connected(t)); // two disjoint edges

    Graph c6 = tensor_product(cycle_graph(3), k2());
    CHECK(c6.order() == 6);
    CHECK(c6.edge_count() == 6);
    CHECK(is_connected(c6));
    CHECK(is_bipartite(c6));
    CHECK(charpoly(c6) == charpoly(cycle_graph(6)));

    CHECK_FALSE(is_connected(tensor_product(path_graph(3), k2())));

    SUBCASE("integer spectra multiply pairwise") {
        // K2 x C3: {1,-1} x {2,-1,-1} -> (x^2-4)(x^2-1)^2
        CHECK(charpoly(tensor_product(k2(), cycle_graph(3))) ==
              IntPoly{-4, 0, 1} * IntPoly{-1, 0, 1} * IntPoly{-1, 0, 1});
        // K4 x K2: {3,-1,-1,-1} x {1,-1} -> (x^2-9)(x^2-1)^3
        CHECK(charpoly(tensor_product(complete_graph(4), k2())) ==
              IntPoly{-9, 0, 1} * IntPoly{-1, 0, 1} * IntPoly{-1, 0, 1} * IntPoly{-1, 0, 1});
        // K_{1,4} x K2: {2,0,0,0,-2} x {1,-1} -> (x^2-4)^2 x^6
        CHECK(charpoly(tensor_product(star_graph(4), k2())) ==
              IntPoly{-4, 0, 1} * IntPoly{-4, 0, 1} * IntPoly::monomial(6));
    }
    SUBCASE("connectivity follows bipartiteness, connected operands of orders 2..4") {
        auto pool = connected_graphs_up_to(4, 2);
        for (const Graph& g : pool)
            for (const Graph& h : pool)
                REQUIRE(is_connected(tensor_product(g, h)) ==
                        (!is_bipartite(g) || !is_bipartite(h)));
    }
    SUBCASE("order-5 spot checks of the same criterion") {
        for (const Graph& g : {cycle_graph(5), path_graph(5), complete_graph(5), star_graph(4)})
            for (const Graph& h : {cycle_graph(3), path_graph(3), cycle_graph(4)})
                REQUIRE(is_connected(tensor_product(g, h)) ==
                        (!is_bipartite(g) || !is_bipartite(h)));
    }
}

TEST_CASE("gadget graphs") {
    Graph small = gadget_graph(GadgetVariant::Small);
    CHECK(small.order() == 7);
    CHECK(small.edge_count() == 7);
    Graph large = gadget_graph(GadgetVariant::Large);
    CHECK(large.order() == 15);
    CHECK(large.edge_count() == 27);

    for (GadgetVariant v : {GadgetVariant::Small, GadgetVariant::Large}) {
        Graph g = gadget_graph(v);
        CHECK(is_connected(g));
        CHECK_FALSE(is_bipartite(g));
        CHECK(contains_root(g, IntPoly{0, 1}));  // eigenvalue 0
        CHECK(contains_root(g, IntPoly{-1, 1})); // eigenvalue 1
        CHECK(divides(IntPoly{0, -1, 0, 1}, charpoly(g))); // x(x^2-1) divides exactly
    }
    CHECK(gadget_from_name("small") == GadgetVariant::Small);
    CHECK(gadget_from_name("large") == GadgetVariant::Large);
    CHECK(gadget_name(GadgetVariant::Large) == std::string("large"));
    CHECK_THROWS_AS(gadget_from_name("medium"), std::invalid_argument);
}

TEST_CASE("zero augmentation") {
    Graph a = zero_augment(path_graph(3), GadgetVariant::Small);
    CHECK(a.order() == 21);
    CHECK(is_connected(a));
    CHECK(contains_root(a, IntPoly{0, 1}));
    CHECK(contains_root(a, IntPoly{-2, 0, 1})); // sqrt2 from P3, multiplied by gadget's 1

    Graph b = zero_augment(k2(), GadgetVariant::Small);
    CHECK(b.order() == 14);
    CHECK(is_connected(b));
    CHECK(contains_root(b, IntPoly{0, 1}));
    CHECK(contains_root(b, IntPoly{-1, 1}));
    CHECK(contains_root(b, IntPoly{1, 1}));

    Graph c = zero_augment(k2(), GadgetVariant::Large);
    CHECK(c.order() == 30);
    CHECK(is_connected(c));
    CHECK(contains_root(c, IntPoly{0, 1}));

    CHECK_THROWS_AS(zero_augment(disjoint_union({k2(), k2()}), GadgetVariant::Small),
                    std::invalid_argument);
    // a tensor with an edgeless operand cannot stay connected
    CHECK_THROWS_AS(zero_augment(empty_graph(1), GadgetVariant::Small), std::invalid_argument);
}
