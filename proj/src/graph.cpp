#include "prespec/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace prespec {

Graph::Graph(int order) : n_(order) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
    words_ = static_cast<std::size_t>((order + 63) / 64);
    rows_.assign(static_cast<std::size_t>(order) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (adjacent(u, v)) return;
    rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |=
        std::uint64_t{1} << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u >> 6)] |=
        std::uint64_t{1} << (u & 63);
    ++edge_count_;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (std::uint64_t w : row_bits(v)) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    auto row = row_bits(v);
    for (std::size_t wi = 0; wi < row.size(); ++wi) {
        std::uint64_t w = row[wi];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(wi * 64) + b);
            w &= w - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::set_label(int v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(static_cast<std::size_t>(n_));
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return make_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle order must be >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph order must be >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star must have >= 1 leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty graph order must be >= 1");
    return Graph(n);
}

Graph named_graph(Family family, int size) {
    switch (family) {
        case Family::Path: return path_graph(size);
        case Family::Cycle: return cycle_graph(size);
        case Family::Complete: return complete_graph(size);
        case Family::Star: return star_graph(size);
        case Family::Empty: return empty_graph(size);
    }
    throw std::invalid_argument("unknown graph family");
}

const char* family_name(Family family) {
    switch (family) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::Star: return "star";
        case Family::Empty: return "empty";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    if (name == "star") return Family::Star;
    if (name == "empty") return Family::Empty;
    throw std::invalid_argument("unknown graph family: " + name);
}

Graph disjoint_union(std::span<const Graph> parts) {
    int total = 0;
    for (const Graph& p : parts) total += p.order();
    Graph g(total);
    int offset = 0;
    for (const Graph& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(offset + u, offset + v);
        offset += p.order();
    }
    return g;
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
    return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

namespace {

// Iterative DFS from `start`; marks reached vertices in `seen`, returns count.
int flood(const Graph& g, int start, std::vector<char>& seen) {
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int v : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
        }
    }
    return reached;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("connectivity is undefined for the empty graph");
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    return flood(g, 0, seen) == g.order();
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.edge_count() == static_cast<std::size_t>(g.order()) - 1 &&
           is_connected(g);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<char> before = seen;
        flood(g, s, seen);
        std::vector<int> comp;
        for (int v = 0; v < g.order(); ++v)
            if (seen[static_cast<std::size_t>(v)] && !before[static_cast<std::size_t>(v)])
                comp.push_back(v);
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex index out of range");
        if (index[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("duplicate vertex in induced subgraph");
        index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) out.add_edge(static_cast<int>(i), j);
        }
    return out;
}

} // namespace prespec
