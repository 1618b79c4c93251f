#ifndef PRESPEC_GRAPH_HPP
#define PRESPEC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace prespec {

/// Simple undirected graph on vertices 0..n-1, stored as a packed symmetric
/// bit matrix with empty diagonal. Treat values as immutable once built;
/// construction helpers below return complete graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    int order() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }

    /// Adds an undirected edge; duplicate edges collapse. Throws on
    /// self-loops and out-of-range endpoints.
    void add_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    /// Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// Optional vertex annotations; empty when unused. Not part of equality.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(int v, std::string label);

    /// Equality is order plus adjacency; labels are ignored.
    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

    /// Raw adjacency row (bit j set iff adjacent to j); for inner loops.
    std::span<const std::uint64_t> row_bits(int v) const {
        return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::size_t words_ = 0; // 64-bit words per row
    std::size_t edge_count_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<std::string> labels_;
};

/// Builds a graph from an explicit edge list; duplicates collapse.
Graph make_graph(int n, std::span<const std::pair<int, int>> edges);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

enum class Family { Path, Cycle, Complete, Star, Empty };

Graph path_graph(int n);           // P_n
Graph cycle_graph(int n);          // C_n, n >= 3
Graph complete_graph(int n);       // K_n
Graph star_graph(int leaves);      // K_{1,k}, center at vertex 0
Graph empty_graph(int n);          // n isolated vertices

Graph named_graph(Family family, int size);
const char* family_name(Family family);
Family family_from_name(const std::string& name);

/// Concatenates vertex sets with offset relabeling, in the given order.
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);

bool is_connected(const Graph& g); // requires order >= 1
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);

/// Vertex sets of connected components, each sorted, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Subgraph induced by the given vertices, relabeled 0..k-1 in list order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

} // namespace prespec

#endif
