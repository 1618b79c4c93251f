#ifndef PRESPEC_TESTS_ORACLES_HPP
#define PRESPEC_TESTS_ORACLES_HPP

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately naive and uses different algorithms than
// the code under test: cofactor expansion instead of Berkowitz, Prufer
// decoding instead of level-sequence enumeration, matrix powers instead of
// BFS, odd closed walks instead of 2-coloring.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <set>
#include <string>
#include <vector>

#include "prespec/graph.hpp"
#include "prespec/intmatrix.hpp"
#include "prespec/intpoly.hpp"

namespace oracle {

using prespec::Graph;
using prespec::Int;
using prespec::IntPoly;
using prespec::IntegerMatrix;

/// det(xI - m) by Laplace cofactor expansion along the first remaining row,
/// memoized on the set of remaining columns.
inline IntPoly charpoly_cofactor(const IntegerMatrix& m) {
    int n = m.rows();
    if (n == 0) return IntPoly{1};
    std::vector<IntPoly> entry(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Int> c;
            c.push_back(-m.at(i, j));
            if (i == j) c.push_back(1);
            entry[static_cast<std::size_t>(i) * n + j] = IntPoly(std::move(c));
        }
    std::map<std::uint32_t, IntPoly> memo;
    auto det = [&](auto&& self, std::uint32_t cols) -> IntPoly {
        if (cols == 0) return IntPoly{1};
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        int row = n - std::popcount(cols);
        IntPoly acc;
        int seen = 0;
        for (int j = 0; j < n; ++j) {
            if (!(cols >> j & 1)) continue;
            const IntPoly& e = entry[static_cast<std::size_t>(row) * n + j];
            if (!e.is_zero()) {
                IntPoly minor = self(self, cols & ~(std::uint32_t(1) << j));
                IntPoly term = e * minor;
                acc = (seen % 2 == 0) ? acc + term : acc - term;
            }
            ++seen;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return det(det, n == 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << n) - 1);
}

inline IntPoly charpoly_cofactor(const Graph& g) {
    return charpoly_cofactor(IntegerMatrix::adjacency(g));
}

/// Connectivity via matrix powers: (I + A)^(n-1) has no zero entry iff the
/// graph is connected.
inline bool connected_by_powers(const Graph& g) {
    int n = g.order();
    if (n == 0) return false;
    IntegerMatrix p = IntegerMatrix::identity(n);
    IntegerMatrix step = IntegerMatrix::identity(n) + IntegerMatrix::adjacency(g);
    for (int k = 1; k < n; ++k) p = p * step;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.at(i, j) == 0) return false;
    return true;
}

/// Bipartiteness via closed walks: bipartite iff trace(A^k) = 0 for every
/// odd k <= n (an odd closed walk exists iff an odd cycle does).
inline bool bipartite_by_walks(const Graph& g) {
    int n = g.order();
    IntegerMatrix a = IntegerMatrix::adjacency(g);
    IntegerMatrix p = a;
    for (int k = 1; k <= n; ++k) {
        if (k % 2 == 1) {
            Int tr = 0;
            for (int i = 0; i < n; ++i) tr += p.at(i, i);
            if (tr != 0) return false;
        }
        if (k < n) p = p * a;
    }
    return true;
}

/// m(G,k) for all k, by checking every subset of the edge list for pairwise
/// vertex-disjointness. Requires <= 24 edges.
inline std::vector<long long> matching_counts(const Graph& g) {
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    if (m > 24) throw std::invalid_argument("matching_counts oracle: too many edges");
    std::vector<long long> counts(static_cast<std::size_t>(g.order()) / 2 + 1, 0);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
        std::uint64_t used = 0;
        bool ok = true;
        int size = 0;
        for (int e = 0; e < m && ok; ++e) {
            if (!(mask >> e & 1)) continue;
            std::uint64_t pair =
                (std::uint64_t(1) << edges[e].first) | (std::uint64_t(1) << edges[e].second);
            if (used & pair) ok = false;
            used |= pair;
            ++size;
        }
        if (ok) ++counts[size];
    }
    return counts;
}

/// Canonical code of a free tree: AHU parenthesis string rooted at each
/// centroid (centroids found by brute-force component sizes), smallest code
/// kept. Equal codes iff isomorphic.
inline std::string tree_canonical_code(const Graph& t) {
    int n = t.order();
    if (n == 1) return "()";
    auto component_max = [&](int removed) {
        std::vector<int> seen(n, 0);
        seen[removed] = 1;
        int largest = 0;
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            int size = 0;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++size;
                for (int w : t.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            largest = std::max(largest, size);
        }
        return largest;
    };
    int best = n + 1;
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v) {
        int h = component_max(v);
        if (h < best) {
            best = h;
            centroids.assign(1, v);
        } else if (h == best) {
            centroids.push_back(v);
        }
    }
    auto code = [&](auto&& self, int v, int parent) -> std::string {
        std::vector<std::string> subs;
        for (int w : t.neighbors(v))
            if (w != parent) subs.push_back(self(self, w, v));
        std::sort(subs.begin(), subs.end());
        std::string out = "(";
        for (const auto& s : subs) out += s;
        out += ")";
        return out;
    };
    std::string result;
    for (int c : centroids) {
        std::string s = code(code, c, -1);
        if (result.empty() || s < result) result = s;
    }
    return result;
}

/// Decodes a Prufer sequence over vertex set 0..n-1 into a labeled tree.
inline Graph prufer_decode(int n, const std::vector<int>& seq) {
    Graph t(n);
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::vector<int> rest = seq;
    std::uint64_t leaf_mask = 0;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaf_mask |= std::uint64_t(1) << v;
    for (int s : rest) {
        int leaf = std::countr_zero(leaf_mask);
        leaf_mask &= leaf_mask - 1;
        t.add_edge(leaf, s);
        if (--degree[s] == 1) leaf_mask |= std::uint64_t(1) << s;
    }
    int u = std::countr_zero(leaf_mask);
    leaf_mask &= leaf_mask - 1;
    int v = std::countr_zero(leaf_mask);
    t.add_edge(u, v);
    return t;
}

/// Number of pairwise non-isomorphic trees of order n, by decoding all
/// n^(n-2) Prufer sequences and collecting canonical codes. Exponential;
/// keep n <= 8 in routine runs.
inline long long free_tree_count_prufer(int n) {
    if (n <= 2) return 1;
    std::set<std::string> codes;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        codes.insert(tree_canonical_code(prufer_decode(n, seq)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return static_cast<long long>(codes.size());
}

/// Unlabeled tree counts for n = 1..12, cross-checked against the Prufer
/// oracle above for n <= 8 in the enumeration tests.
inline const std::vector<long long>& known_tree_counts() {
    static const std::vector<long long> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    return counts;
}

} // namespace oracle

#endif
