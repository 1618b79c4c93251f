#include "prespec/products.hpp"

#include <stdexcept>

namespace prespec {

Graph cartesian_sum(const Graph& g, const Graph& h) {
    if (g.order() < 1 || h.order() < 1)
        throw std::invalid_argument("cartesian_sum needs operands of order >= 1");
    const int nh = h.order();
    Graph out(g.order() * nh);
    for (auto [u, v] : g.edges())
        for (int j = 0; j < nh; ++j) out.add_edge(u * nh + j, v * nh + j);
    for (int i = 0; i < g.order(); ++i)
        for (auto [a, b] : h.edges()) out.add_edge(i * nh + a, i * nh + b);
    return out;
}

Graph tensor_product(const Graph& g, const Graph& h) {
    if (g.order() < 1 || h.order() < 1)
        throw std::invalid_argument("tensor_product needs operands of order >= 1");
    const int nh = h.order();
    Graph out(g.order() * nh);
    for (auto [u, v] : g.edges()) {
        for (auto [a, b] : h.edges()) {
            out.add_edge(u * nh + a, v * nh + b);
            out.add_edge(u * nh + b, v * nh + a);
        }
    }
    return out;
}

Graph gadget_graph(GadgetVariant variant) {
    if (variant == GadgetVariant::Small) {
        // Triangle {0,1,2}; pendants 3,4 on vertex 0; path 0-5-6.
        return make_graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {5, 6}});
    }
    return cartesian_sum(path_graph(5), cycle_graph(3));
}

const char* gadget_name(GadgetVariant variant) {
    return variant == GadgetVariant::Small ? "small" : "large";
}

GadgetVariant gadget_from_name(const std::string& name) {
    if (name == "small") return GadgetVariant::Small;
    if (name == "large") return GadgetVariant::Large;
    throw std::invalid_argument("unknown gadget variant: " + name);
}

Graph zero_augment(const Graph& g, GadgetVariant variant) {
    if (!is_connected(g)) throw std::invalid_argument("zero_augment needs a connected graph");
    if (g.edge_count() == 0)
        throw std::invalid_argument("zero_augment needs a graph with an edge: a tensor product "
                                    "with an edgeless graph is edgeless");
    return tensor_product(gadget_graph(variant), g);
}

} // namespace prespec
