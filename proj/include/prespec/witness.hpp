#ifndef PRESPEC_WITNESS_HPP
#define PRESPEC_WITNESS_HPP

#include <map>
#include <optional>
#include <string>

#include "prespec/construct.hpp"
#include "prespec/enumerate.hpp"
#include "prespec/graph.hpp"
#include "prespec/intpoly.hpp"

namespace prespec {

/// K_{1,k^2}, which has eigenvalue k; membership is re-checked by kernel
/// rank before returning. k >= 1.
Graph integer_eigen_star(int k);

struct WitnessOutcome {
    std::optional<Witness> witness;
    SearchBound exhausted;  // the bound that ran out when no witness found
    long long examined = 0; // trees actually tested against mu
};

/// The canonically first tree within the bound whose spectrum contains a
/// root of mu, re-verified by kernel rank before return. mu must be monic,
/// irreducible, and totally real (reducible or non-real input rejected).
/// The scan shards across `threads` workers by canonical index; the result
/// is identical for every worker count. Not-found is an outcome, not an
/// error: it reports the exhausted bound and never claims nonexistence.
WitnessOutcome find_tree_witness(const IntPoly& mu, const SearchBound& bound, int threads = 1);

struct RefuteOutcome {
    std::optional<Graph> realized; // first graph whose charpoly equals f
    long long scanned = 0;         // labeled graphs covered by the scan
};

/// Scans all labeled graphs of order n in ascending adjacency-mask order
/// for one whose charpoly equals f exactly (deg f = n required). Edge and
/// triangle counts implied by f's coefficients prune non-matches before
/// any charpoly is computed; the pruned scan is still complete.
RefuteOutcome refute_spectrum(const IntPoly& f, int n);

/// Persistent polynomial -> graph6 map, one "<csv>\t<graph6>" line per
/// entry. Entries are verified by kernel rank on load; corrupt or failing
/// lines are discarded with a warning on stderr. A default-constructed
/// cache is in-memory only; a file-backed one rewrites its file on store.
class WitnessCache {
  public:
    WitnessCache() = default;
    explicit WitnessCache(std::string path);

    std::optional<Graph> lookup(const IntPoly& mu) const;
    void store(const IntPoly& mu, const Graph& g);
    int size() const { return static_cast<int>(entries_.size()); }

  private:
    std::string path_;
    std::map<std::string, Graph> entries_; // keyed by coefficient csv

    void save() const;
};

/// First connected non-bipartite graph with both 0 and 1 as eigenvalues,
/// scanning labeled graphs by order then adjacency mask; nullopt when no
/// such graph exists up to max_order. Settles whether any gadget smaller
/// than the 7-vertex one exists.
std::optional<Graph> find_zero_one_gadget(int max_order);

/// Witness strategy chain: user-supplied graphs (keyed by coefficient
/// csv), then the cache, then closed forms (x -> E1, x-+k -> K_{1,k^2},
/// x^2-k -> K_{1,k}), then bounded tree enumeration. Closed-form and
/// enumerated finds are written back to the cache when one is given.
/// Exhausted search surfaces as BoundError carrying the order bound.
WitnessProvider chain_provider(std::map<std::string, Graph> user_witnesses, WitnessCache* cache,
                               SearchBound bound, int threads = 1);

} // namespace prespec

#endif
