#include "prespec/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "prespec/types.hpp"

namespace prespec {

void enumerate_labeled_graphs(int n, const std::function<bool(const Graph&)>& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_labeled_graphs: order must be >= 1");
    if (n > 8) throw BoundError("labeled graph enumeration capped at order 8", 8);
    std::vector<std::pair<int, int>> pairs; // column-major upper triangle: graph6 bit order
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) g.add_edge(pairs[k].first, pairs[k].second);
        if (!visit(g)) return;
    }
}

namespace {

// Rooted tree from a level sequence: parent of i is the nearest earlier
// vertex one level up.
std::vector<std::vector<int>> adjacency_of_levels(const std::vector<int>& levels) {
    const int n = static_cast<int>(levels.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 1; i < n; ++i) {
        int p = i - 1;
        while (levels[p] != levels[i] - 1) --p;
        adj[p].push_back(i);
        adj[i].push_back(p);
    }
    return adj;
}

std::string ahu_code(const std::vector<std::vector<int>>& adj, int v, int from) {
    std::vector<std::string> subs;
    for (int w : adj[v])
        if (w != from) subs.push_back(ahu_code(adj, w, v));
    std::sort(subs.begin(), subs.end(), std::greater<>());
    std::string out = "(";
    for (const std::string& s : subs) out += s;
    out += ")";
    return out;
}

std::vector<int> centroids(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> parent(n, -1), order, size(n, 1);
    order.reserve(n);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : adj[v])
            if (w != parent[v]) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    std::vector<int> best;
    int best_heavy = n + 1;
    for (int v = 0; v < n; ++v) {
        int heavy = n - size[v];
        for (int w : adj[v])
            if (w != parent[v]) heavy = std::max(heavy, size[w]);
        if (heavy < best_heavy) {
            best_heavy = heavy;
            best = {v};
        } else if (heavy == best_heavy) {
            best.push_back(v);
        }
    }
    return best;
}

// A rooted tree (always rooted at vertex 0 of its level sequence) stands
// for its free tree exactly when 0 is a centroid and, for a bicentroid,
// rooting at 0 gives the lexicographically largest canonical code. Equal
// codes mean the two rootings coincide as rooted trees, which the rooted
// generator emits only once, so ties are accepted.
bool centroid_canonical(const std::vector<std::vector<int>>& adj) {
    std::vector<int> cs = centroids(adj);
    if (std::find(cs.begin(), cs.end(), 0) == cs.end()) return false;
    if (cs.size() == 2) {
        int other = cs[0] == 0 ? cs[1] : cs[0];
        return ahu_code(adj, 0, -1) >= ahu_code(adj, other, -1);
    }
    return true;
}

Graph graph_of_adjacency(const std::vector<std::vector<int>>& adj) {
    Graph g(static_cast<int>(adj.size()));
    for (int v = 0; v < g.order(); ++v)
        for (int w : adj[v])
            if (v < w) g.add_edge(v, w);
    return g;
}

} // namespace

void enumerate_trees(int n, const std::function<bool(const Graph&)>& visit, int order_cap) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: order must be >= 1");
    if (n > order_cap) throw BoundError("tree enumeration order cap exceeded", order_cap);

    // Canonical rooted trees as level sequences in decreasing lexicographic
    // order, from the path down to the star (Beyer-Hedetniemi successor),
    // filtered to centroid-canonical rootings so each free tree appears
    // exactly once.
    std::vector<int> levels(n);
    for (int i = 0; i < n; ++i) levels[i] = i + 1;
    while (true) {
        std::vector<std::vector<int>> adj = adjacency_of_levels(levels);
        if (centroid_canonical(adj) && !visit(graph_of_adjacency(adj))) return;

        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (levels[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = p - 1;
        while (levels[q] != levels[p] - 1) --q;
        for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
    }
}

std::vector<Graph> trees_of_order(int n, int order_cap) {
    std::vector<Graph> out;
    enumerate_trees(
        n,
        [&](const Graph& t) {
            out.push_back(t);
            return true;
        },
        order_cap);
    return out;
}

} // namespace prespec
