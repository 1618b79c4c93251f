#ifndef PRESPEC_PRODUCTS_HPP
#define PRESPEC_PRODUCTS_HPP

#include <string>

#include "prespec/graph.hpp"

namespace prespec {

/// Cartesian sum: A(G+H) = A(G) (x) I + I (x) A(H). Vertex (i, j) of the
/// product is numbered i*order(h) + j. Eigenvalues add pairwise. Both
/// operands need order >= 1.
Graph cartesian_sum(const Graph& g, const Graph& h);

/// Tensor product: A(GxH) = A(G) (x) A(H), same vertex numbering.
/// Eigenvalues multiply pairwise.
Graph tensor_product(const Graph& g, const Graph& h);

enum class GadgetVariant { Small, Large };

/// A connected non-bipartite graph with both 0 and 1 in its spectrum.
/// Small: 7 vertices — a triangle with two pendant vertices and a 2-vertex
/// path hung off the same triangle vertex. Large: P5 + C3, 15 vertices.
Graph gadget_graph(GadgetVariant variant);

const char* gadget_name(GadgetVariant variant);
GadgetVariant gadget_from_name(const std::string& name);

/// tensor_product(gadget, g) for connected g: the result is connected
/// (the gadget is non-bipartite), gains eigenvalue 0, and keeps every
/// eigenvalue of g (multiplied into the product by the gadget's eigenvalue
/// 1). Disconnected input rejected.
Graph zero_augment(const Graph& g, GadgetVariant variant);

} // namespace prespec

#endif
