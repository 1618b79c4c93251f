#ifndef PRESPEC_ENUMERATE_HPP
#define PRESPEC_ENUMERATE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "prespec/graph.hpp"

namespace prespec {

enum class SearchMode { Graphs, ConnectedGraphs, Trees };

struct SearchBound {
    int max_order = 10;
    SearchMode mode = SearchMode::Trees;
    std::optional<long long> budget; // cap on instances examined
};

/// All 2^(n(n-1)/2) labeled graphs of order n, each exactly once, in
/// ascending adjacency-mask order (mask bit k = upper-triangle pair k in
/// column-major order, matching the graph6 bit layout). n <= 8; larger
/// orders raise BoundError. The callback returns false to stop early.
void enumerate_labeled_graphs(int n, const std::function<bool(const Graph&)>& visit);

/// All unlabeled trees of order n, each isomorphism class exactly once, in
/// a fixed canonical order (level sequences of canonical rooted trees in
/// decreasing lexicographic order, filtered to centroid-canonical
/// rootings). n above the cap raises BoundError. The callback returns
/// false to stop early.
void enumerate_trees(int n, const std::function<bool(const Graph&)>& visit, int order_cap = 18);

/// Materialized enumerate_trees.
std::vector<Graph> trees_of_order(int n, int order_cap = 18);

} // namespace prespec

#endif
