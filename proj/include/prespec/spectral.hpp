#ifndef PRESPEC_SPECTRAL_HPP
#define PRESPEC_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "prespec/factor.hpp"
#include "prespec/graph.hpp"
#include "prespec/intmatrix.hpp"
#include "prespec/intpoly.hpp"
#include "prespec/sturm.hpp"
#include "prespec/types.hpp"

namespace prespec {

/// Characteristic polynomial of the adjacency matrix; monic of degree =
/// order (order >= 1 required).
IntPoly charpoly(const Graph& g);

/// Matching polynomial sum_k (-1)^k m(G,k) x^(n-2k), where m(G,k) counts
/// k-matchings, via the edge deletion/removal recursion
/// m(G) = m(G-e) - m(G-{u,v}) with memoization.
IntPoly matching_poly(const Graph& g);

/// True iff mu divides charpoly(g), decided as kernel_dimension(mu(A)) >=
/// deg mu. Exact when mu is monic irreducible over Q and A symmetric;
/// irreducibility is the caller's responsibility.
bool contains_root(const Graph& g, const IntPoly& mu);

enum class DivideMode { Exact, Kernel };

/// What a positive spectrum_divides verdict certifies.
enum class CertLevel {
    ExactMultiplicity, // f divides charpoly(g) with multiplicity
    RootsPresent,      // each irreducible factor has a root in the spectrum
};

struct FactorEvidence {
    IntPoly factor;
    int multiplicity = 1; // multiplicity of the factor in the dividend
    int kernel_dim = 0;   // kernel dimension of factor(A)
    bool present = false; // kernel_dim >= deg factor
};

struct DividesVerdict {
    bool satisfied = false;
    CertLevel level = CertLevel::ExactMultiplicity;
    IntPoly charpoly;                     // exact mode only
    std::vector<FactorEvidence> evidence; // kernel mode only
};

/// Exact mode: tests f | charpoly(g) with multiplicity. Kernel mode:
/// factors f (BoundError past the degree cap) and certifies each
/// irreducible factor by kernel rank; kernel dimensions are reported as
/// multiplicity evidence but only root presence is certified.
DividesVerdict spectrum_divides(const IntPoly& f, const Graph& g, DivideMode mode,
                                int factor_degree_cap = 16);

/// The five necessary conditions for a monic integer polynomial of degree n
/// to be the spectrum of a graph of order n, each with the exact quantities
/// behind the verdict.
struct NecessaryReport {
    int order = 0;
    bool totally_real = false;     // premise: the root multiset is real
    bool conjugates_closed = true; // item 1; structural for integer input
    bool trace_zero = false;       // item 2: sum of roots is 0
    bool power_sum_ok = false;     // item 3: sum of squares <= n(n-1)
    bool largest_ok = false;       // item 4: no root above n-1
    bool symmetric_ok = false;     // item 5: |smallest| <= largest

    Int p1, p2, p2_bound;       // items 2-3: power sums and n(n-1)
    int roots_above_limit = 0;  // item 4: Sturm count on (n-1, +inf)
    std::optional<RootBox> largest_box, smallest_box;
    std::optional<Cmp> reflect_cmp; // item 5: largest root of f(-x) vs of f

    bool all_pass() const {
        return totally_real && conjugates_closed && trace_zero && power_sum_ok && largest_ok &&
               symmetric_ok;
    }
};

/// f must be monic of degree exactly n >= 1.
NecessaryReport check_necessary(const IntPoly& f, int n);

/// Exact charpoly identity for the doubling construction: with
/// M3 = [[A,F,F],[E,B,0],[E,0,B]] and M2 = [[A,2F],[E,B]], checks
/// charpoly(M3) = charpoly(B) * charpoly(M2). a is k x k, b is m x m,
/// e is m x k, f is k x m.
bool verify_block_identity(const IntegerMatrix& a, const IntegerMatrix& b, const IntegerMatrix& e,
                           const IntegerMatrix& f);

} // namespace prespec

#endif
