#include "prespec/witness.hpp"

#include <atomic>
#include <bit>
#include <climits>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <utility>

#include "prespec/factor.hpp"
#include "prespec/graph_io.hpp"
#include "prespec/spectral.hpp"
#include "prespec/sturm.hpp"
#include "prespec/types.hpp"

namespace prespec {

Graph integer_eigen_star(int k) {
    if (k < 1) throw std::invalid_argument("integer_eigen_star: k must be >= 1");
    if (k > 46340) throw BoundError("integer_eigen_star: k^2 leaves overflow", 46340);
    Graph star = star_graph(k * k);
    if (!contains_root(star, IntPoly{-static_cast<long>(k), 1}))
        throw std::logic_error("integer_eigen_star: star lost its integer eigenvalue");
    return star;
}

namespace {

// One order's shard of the canonical tree scan. Worker w tests trees whose
// canonical index i satisfies i % workers == w and i < idx_cap; every
// worker walks the same generator, so the tested set matches the serial
// scan exactly and the minimum hit index is scheduling-independent.
struct OrderScan {
    std::optional<Graph> hit;
    long long hit_idx = -1;
    long long stream_count = 0; // trees the serial scan would have covered
};

OrderScan scan_trees_of_order(int n, const IntPoly& mu, int order_cap, int workers,
                              long long idx_cap) {
    std::atomic<long long> best(LLONG_MAX);
    std::vector<std::optional<Graph>> hits(workers);
    std::vector<long long> hit_idx(workers, -1);
    std::vector<long long> counts(workers, 0);

    auto run = [&](int w) {
        long long idx = -1;
        enumerate_trees(
            n,
            [&](const Graph& t) {
                ++idx;
                if (idx_cap >= 0 && idx >= idx_cap) return false;
                counts[w] = idx + 1;
                if (idx % workers != w) return true;
                if (idx > best.load(std::memory_order_relaxed)) return false;
                if (contains_root(t, mu)) {
                    hits[w] = t;
                    hit_idx[w] = idx;
                    long long cur = best.load();
                    while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                    }
                    return false;
                }
                return true;
            },
            order_cap);
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (std::thread& t : pool) t.join();
    }

    OrderScan out;
    for (int w = 0; w < workers; ++w) {
        out.stream_count = std::max(out.stream_count, counts[w]);
        if (hits[w] && (out.hit_idx < 0 || hit_idx[w] < out.hit_idx)) {
            out.hit_idx = hit_idx[w];
            out.hit = hits[w];
        }
    }
    if (out.hit) out.stream_count = out.hit_idx + 1;
    return out;
}

long long count_trees(int n, int order_cap, long long idx_cap) {
    long long count = 0;
    enumerate_trees(
        n,
        [&](const Graph&) {
            ++count;
            return idx_cap < 0 || count < idx_cap;
        },
        order_cap);
    if (idx_cap >= 0 && count > idx_cap) count = idx_cap;
    return count;
}

} // namespace

WitnessOutcome find_tree_witness(const IntPoly& mu, const SearchBound& bound, int threads) {
    if (mu.degree() < 1 || !mu.is_monic())
        throw std::invalid_argument("find_tree_witness: polynomial must be monic and nonconstant");
    if (!is_totally_real(mu))
        throw std::invalid_argument("find_tree_witness: polynomial is not totally real");
    std::vector<FactorPower> parts = factor_irreducible(mu);
    if (parts.size() != 1 || parts[0].multiplicity != 1)
        throw std::invalid_argument("find_tree_witness: polynomial is reducible");
    if (bound.max_order < 1) throw std::invalid_argument("find_tree_witness: empty bound");

    const int workers = std::max(1, threads);
    const int order_cap = std::max(bound.max_order, 18);
    WitnessOutcome out;
    out.exhausted = bound;
    for (int n = 1; n <= bound.max_order; ++n) {
        long long remaining = -1;
        if (bound.budget) {
            remaining = *bound.budget - out.examined;
            if (remaining <= 0) return out;
        }
        if (n < mu.degree()) {
            // No tree below deg(mu) can host a full kernel; the scan still
            // consumes budget for the instances it covers.
            out.examined += count_trees(n, order_cap, remaining);
            continue;
        }
        OrderScan scan = scan_trees_of_order(n, mu, order_cap, workers, remaining);
        out.examined += scan.stream_count;
        if (scan.hit) {
            if (!contains_root(*scan.hit, mu))
                throw std::logic_error("find_tree_witness: hit failed re-verification");
            out.witness = Witness{std::move(*scan.hit), WitnessSource::Enumerated};
            return out;
        }
    }
    return out;
}

RefuteOutcome refute_spectrum(const IntPoly& f, int n) {
    if (n < 1) throw std::invalid_argument("refute_spectrum: order must be >= 1");
    if (f.degree() != n)
        throw std::invalid_argument("refute_spectrum: polynomial degree must equal the order");

    bool possible = f.is_monic();
    if (n >= 2 && f.coeff(n - 1) != 0) possible = false; // adjacency trace is 0
    Int edge_target = n >= 2 ? Int(-f.coeff(n - 2)) : Int(0);
    Int tri2_target = n >= 3 ? Int(-f.coeff(n - 3)) : Int(0); // = 2 * triangles
    if (n >= 2 && (edge_target < 0 || edge_target > Int(n) * (n - 1) / 2)) possible = false;
    if (n >= 3 && (tri2_target < 0 || tri2_target % 2 != 0)) possible = false;

    RefuteOutcome out;
    enumerate_labeled_graphs(n, [&](const Graph& g) {
        ++out.scanned;
        if (!possible) return true;
        if (edge_target != g.edge_count()) return true;
        long long tri3 = 0; // common-neighbour count per edge; 3 * triangles
        for (auto [u, v] : g.edges()) {
            auto ru = g.row_bits(u);
            auto rv = g.row_bits(v);
            for (std::size_t w = 0; w < ru.size(); ++w)
                tri3 += std::popcount(ru[w] & rv[w]);
        }
        if (tri2_target * 3 != Int(static_cast<long>(tri3)) * 2) return true;
        if (charpoly(g) == f) {
            out.realized = g;
            return false;
        }
        return true;
    });
    return out;
}

WitnessCache::WitnessCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return; // absent file: start empty, create on first store
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto tab = line.find('\t');
        bool ok = tab != std::string::npos;
        if (ok) {
            try {
                std::string csv = line.substr(0, tab);
                IntPoly mu = IntPoly::from_csv(csv);
                Graph g = parse_graph6(line.substr(tab + 1));
                ok = contains_root(g, mu);
                if (ok) entries_[csv] = std::move(g);
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok)
            std::cerr << "warning: witness cache " << path_ << " line " << lineno
                      << ": corrupt or failed verification, discarded\n";
    }
}

std::optional<Graph> WitnessCache::lookup(const IntPoly& mu) const {
    auto it = entries_.find(mu.to_csv());
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void WitnessCache::store(const IntPoly& mu, const Graph& g) {
    entries_[mu.to_csv()] = g;
    if (!path_.empty()) save();
}

void WitnessCache::save() const {
    std::ofstream outf(path_, std::ios::trunc);
    if (!outf) {
        std::cerr << "warning: witness cache " << path_ << ": cannot write\n";
        return;
    }
    for (const auto& [csv, g] : entries_) outf << csv << '\t' << emit_graph6(g) << '\n';
}

std::optional<Graph> find_zero_one_gadget(int max_order) {
    const IntPoly x = IntPoly::monomial(1);
    const IntPoly x_minus_1{-1, 1};
    for (int n = 1; n <= max_order; ++n) {
        std::optional<Graph> found;
        enumerate_labeled_graphs(n, [&](const Graph& g) {
            if (is_connected(g) && !is_bipartite(g) && contains_root(g, x) &&
                contains_root(g, x_minus_1)) {
                found = g;
                return false;
            }
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

namespace {

// x -> E1; x^k -> K_{1,k+1}; x -+ k -> K_{1,k^2}; x^2 - k -> K_{1,k}.
std::optional<Graph> closed_form_witness(const IntPoly& mu) {
    if (!mu.is_monic()) return std::nullopt;
    const int d = mu.degree();
    if (d >= 1 && mu == IntPoly::monomial(d))
        return d == 1 ? empty_graph(1) : star_graph(d + 1);
    auto small = [](const Int& v, int limit) -> std::optional<int> {
        if (v < 1 || v > limit) return std::nullopt;
        return static_cast<int>(v.get_si());
    };
    if (d == 1) {
        if (auto k = small(abs(mu.coeff(0)), 46340)) return star_graph(*k * *k);
    } else if (d == 2 && mu.coeff(1) == 0) {
        if (auto k = small(-mu.coeff(0), INT_MAX / 2)) return star_graph(*k);
    }
    return std::nullopt;
}

} // namespace

WitnessProvider chain_provider(std::map<std::string, Graph> user_witnesses, WitnessCache* cache,
                               SearchBound bound, int threads) {
    return [user = std::move(user_witnesses), cache, bound, threads](const IntPoly& mu) -> Witness {
        const std::string csv = mu.to_csv();
        if (auto it = user.find(csv); it != user.end()) {
            if (!contains_root(it->second, mu))
                throw std::invalid_argument("supplied witness has no root of " + csv);
            return {it->second, WitnessSource::UserSupplied};
        }
        if (cache) {
            if (std::optional<Graph> g = cache->lookup(mu)) {
                if (contains_root(*g, mu)) return {std::move(*g), WitnessSource::Cache};
            }
        }
        if (std::optional<Graph> g = closed_form_witness(mu)) {
            if (!contains_root(*g, mu))
                throw std::logic_error("closed-form witness failed verification for " + csv);
            if (cache) cache->store(mu, *g);
            return {std::move(*g), WitnessSource::ClosedForm};
        }
        WitnessOutcome found = find_tree_witness(mu, bound, threads);
        if (!found.witness)
            throw BoundError("no tree witness for " + csv + " within order bound",
                             bound.max_order);
        if (cache) cache->store(mu, found.witness->graph);
        return std::move(*found.witness);
    };
}

} // namespace prespec
