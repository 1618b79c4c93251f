#include "prespec/spectral.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace prespec {

namespace {

// Residual graph for the matching recursion: packed adjacency rows, row v
// occupying words [v*words, (v+1)*words).
struct MaskGraph {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit MaskGraph(int order)
        : n(order), words(order > 0 ? (order + 63) / 64 : 0),
          bits(static_cast<size_t>(n) * words) {}

    bool get(int u, int v) const {
        return bits[static_cast<size_t>(u) * words + v / 64] >> (v % 64) & 1;
    }
    void set_edge(int u, int v) {
        bits[static_cast<size_t>(u) * words + v / 64] |= std::uint64_t(1) << (v % 64);
        bits[static_cast<size_t>(v) * words + u / 64] |= std::uint64_t(1) << (u % 64);
    }
    void clear_edge(int u, int v) {
        bits[static_cast<size_t>(u) * words + v / 64] &= ~(std::uint64_t(1) << (v % 64));
        bits[static_cast<size_t>(v) * words + u / 64] &= ~(std::uint64_t(1) << (u % 64));
    }
    bool row_empty(int v) const {
        for (int w = 0; w < words; ++w)
            if (bits[static_cast<size_t>(v) * words + w]) return false;
        return true;
    }
    int first_neighbor(int v) const {
        for (int w = 0; w < words; ++w) {
            std::uint64_t word = bits[static_cast<size_t>(v) * words + w];
            if (word) return w * 64 + __builtin_ctzll(word);
        }
        return -1;
    }
};

// Order-preserving relabeling onto the listed vertices.
MaskGraph induced(const MaskGraph& g, const std::vector<int>& keep) {
    MaskGraph h(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.get(keep[i], keep[j])) h.set_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

using MatchMemo = std::map<std::vector<std::uint64_t>, IntPoly>;

IntPoly match_rec(const MaskGraph& g, MatchMemo& memo) {
    std::vector<int> keep;
    keep.reserve(g.n);
    for (int v = 0; v < g.n; ++v)
        if (!g.row_empty(v)) keep.push_back(v);
    const int iso = g.n - static_cast<int>(keep.size());
    if (keep.empty()) return IntPoly::monomial(g.n);

    MaskGraph h = static_cast<int>(keep.size()) == g.n ? g : induced(g, keep);
    auto hit = memo.find(h.bits);
    IntPoly core;
    if (hit != memo.end()) {
        core = hit->second;
    } else {
        const int v = h.first_neighbor(0);
        MaskGraph h1 = h;
        h1.clear_edge(0, v);
        std::vector<int> rest;
        rest.reserve(h.n - 2);
        for (int w = 0; w < h.n; ++w)
            if (w != 0 && w != v) rest.push_back(w);
        core = match_rec(h1, memo) - match_rec(induced(h, rest), memo);
        memo.emplace(h.bits, core);
    }
    return iso == 0 ? core : IntPoly::monomial(iso) * core;
}

} // namespace

IntPoly charpoly(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("charpoly needs at least one vertex");
    return charpoly(IntegerMatrix::adjacency(g));
}

IntPoly matching_poly(const Graph& g) {
    MaskGraph m(g.order());
    for (auto [u, v] : g.edges()) m.set_edge(u, v);
    MatchMemo memo;
    return match_rec(m, memo);
}

bool contains_root(const Graph& g, const IntPoly& mu) {
    if (mu.degree() < 1 || !mu.is_monic())
        throw std::invalid_argument("contains_root needs a monic nonconstant polynomial");
    IntegerMatrix a = IntegerMatrix::adjacency(g);
    return kernel_dimension(poly_at_matrix(mu, a)) >= mu.degree();
}

DividesVerdict spectrum_divides(const IntPoly& f, const Graph& g, DivideMode mode,
                                int factor_degree_cap) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("spectrum_divides needs a monic dividend");
    DividesVerdict v;
    if (mode == DivideMode::Exact) {
        v.level = CertLevel::ExactMultiplicity;
        v.charpoly = charpoly(g);
        v.satisfied = divides(f, v.charpoly);
        return v;
    }
    v.level = CertLevel::RootsPresent;
    v.satisfied = true;
    IntegerMatrix a = IntegerMatrix::adjacency(g);
    for (FactorPower& fp : factor_irreducible(f, factor_degree_cap)) {
        FactorEvidence ev;
        ev.multiplicity = fp.multiplicity;
        ev.kernel_dim = kernel_dimension(poly_at_matrix(fp.poly, a));
        ev.present = ev.kernel_dim >= fp.poly.degree();
        ev.factor = std::move(fp.poly);
        v.satisfied = v.satisfied && ev.present;
        v.evidence.push_back(std::move(ev));
    }
    return v;
}

NecessaryReport check_necessary(const IntPoly& f, int n) {
    if (n < 1 || f.degree() != n)
        throw std::invalid_argument("check_necessary needs deg f = n >= 1");
    if (!f.is_monic()) throw std::invalid_argument("check_necessary needs a monic polynomial");
    NecessaryReport rep;
    rep.order = n;
    // Item 1: an integer polynomial carries every conjugate of each root.
    rep.conjugates_closed = true;
    rep.p1 = power_sum(f, 1);
    rep.trace_zero = rep.p1 == 0;
    rep.p2 = power_sum(f, 2);
    rep.p2_bound = Int(n) * (n - 1);
    rep.power_sum_ok = rep.p2 <= rep.p2_bound;
    rep.totally_real = is_totally_real(f);
    rep.roots_above_limit = count_roots_above(f, Rat(n - 1));
    rep.largest_ok = rep.roots_above_limit == 0;
    if (rep.totally_real) {
        auto boxes = isolate_extreme_roots(f, Rat(1, 4));
        rep.largest_box = std::move(boxes.first);
        rep.smallest_box = std::move(boxes.second);
        // |smallest| <= largest iff the largest root of f(-x) does not
        // exceed the largest root of f.
        rep.reflect_cmp = compare_largest_roots(f.reflected(), f);
        rep.symmetric_ok = *rep.reflect_cmp != Cmp::Greater;
    }
    return rep;
}

bool verify_block_identity(const IntegerMatrix& a, const IntegerMatrix& b, const IntegerMatrix& e,
                           const IntegerMatrix& f) {
    if (!a.is_square() || !b.is_square())
        throw std::invalid_argument("blocks a and b must be square");
    const int k = a.rows();
    const int m = b.rows();
    if (e.rows() != m || e.cols() != k || f.rows() != k || f.cols() != m)
        throw std::invalid_argument("block dimension mismatch");

    auto paste = [](IntegerMatrix& dst, const IntegerMatrix& src, int r0, int c0, int scale = 1) {
        for (int i = 0; i < src.rows(); ++i)
            for (int j = 0; j < src.cols(); ++j) dst.at(r0 + i, c0 + j) = scale * src.at(i, j);
    };

    IntegerMatrix m3(k + 2 * m, k + 2 * m);
    paste(m3, a, 0, 0);
    paste(m3, f, 0, k);
    paste(m3, f, 0, k + m);
    paste(m3, e, k, 0);
    paste(m3, b, k, k);
    paste(m3, e, k + m, 0);
    paste(m3, b, k + m, k + m);

    IntegerMatrix m2(k + m, k + m);
    paste(m2, a, 0, 0);
    paste(m2, f, 0, k, 2);
    paste(m2, e, k, 0);
    paste(m2, b, k, k);

    return charpoly(m3) == charpoly(b) * charpoly(m2);
}

} // namespace prespec
