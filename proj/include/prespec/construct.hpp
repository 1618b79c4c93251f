#ifndef PRESPEC_CONSTRUCT_HPP
#define PRESPEC_CONSTRUCT_HPP

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "prespec/certificate.hpp"
#include "prespec/factor.hpp"
#include "prespec/graph.hpp"
#include "prespec/intpoly.hpp"
#include "prespec/products.hpp"

namespace prespec {

struct CompositionPart {
    Graph part;
    int part_vertex = 0; // distinguished vertex inside the part
    int base_vertex = 0; // vertex of the base graph to attach to
};

/// G o [H_1, ..., H_p]: every part is duplicated, and base vertex x_i is
/// joined to the distinguished vertex v_i in both copies (2p new edges).
/// Vertex layout: base first, then the first copies of all parts in order,
/// then the second copies, so the adjacency is [[A(G), E^T, E^T],
/// [E, A(H), 0], [E, 0, A(H)]] with H the disjoint union of the parts.
Graph double_composition(const Graph& g, std::span<const CompositionPart> parts);
Graph double_composition(const Graph& g, std::initializer_list<CompositionPart> parts);

/// How a witness graph was obtained; recorded for diagnostics.
enum class WitnessSource { UserSupplied, Cache, ClosedForm, Enumerated };

struct Witness {
    Graph graph;
    WitnessSource source = WitnessSource::Enumerated;
};

/// Maps a monic irreducible totally real polynomial to a connected graph
/// having one of its roots as an eigenvalue. Tree pipelines require the
/// returned graph to be a tree. Implementations throw BoundError when
/// their search bound is exhausted.
using WitnessProvider = std::function<Witness(const IntPoly&)>;

struct BuildOptions {
    GadgetVariant gadget = GadgetVariant::Small;
    // Outputs up to this order get an exact charpoly divisibility claim;
    // larger outputs are certified per-factor by kernel rank.
    int exact_order_cap = 160;
    int factor_degree_cap = 16;
};

/// Connected graph whose spectrum contains 0 and a root of every factor.
/// Induction over the factors in order: the accumulator starts as the
/// zero-augmented witness of the first factor and takes one cartesian_sum
/// with each further zero-augmented witness. Factor multiplicities do not
/// affect the output (membership claims only).
std::pair<Graph, Certificate> prescribe_connected(const PrescribedSpectrum& spec,
                                                  const WitnessProvider& witnesses,
                                                  const BuildOptions& opts = {});

/// Tree whose spectrum contains every factor's roots: the double
/// composition of a single vertex with one tree witness per factor
/// instance (a factor of multiplicity m contributes m copies). The
/// product of the witness charpolys divides the output charpoly; claimed
/// exactly within the order cap, per-factor by kernel rank otherwise.
std::pair<Graph, Certificate> prescribe_tree(const PrescribedSpectrum& spec,
                                             const WitnessProvider& witnesses,
                                             const BuildOptions& opts = {});

/// Tree T with charpoly(g) | charpoly(T) including multiplicity, by
/// factoring charpoly(g) and applying prescribe_tree; the divisibility is
/// always claimed in exact mode.
std::pair<Graph, Certificate> divisor_tree(const Graph& g, const WitnessProvider& witnesses,
                                           const BuildOptions& opts = {});

struct UnimodalResult {
    IntPoly cofactor; // g with f*g = charpoly(tree)
    Graph tree;
    Certificate certificate;
};

/// For monic totally real f: builds a tree T with f | charpoly(T), returns
/// g = charpoly(T)/f, and certifies that |coefficients| of f*g (structural
/// zeros removed) are unimodal — a failed unimodality check is a
/// logic_error, not an input error. With minimality_order set, enumerated
/// trees up to that order are searched first for the smallest T with
/// f | charpoly(T) exactly.
UnimodalResult unimodalize(const IntPoly& f, const WitnessProvider& witnesses,
                           const BuildOptions& opts = {},
                           std::optional<int> minimality_order = {});

} // namespace prespec

#endif
