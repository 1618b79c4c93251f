#include "prespec/construct.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "prespec/enumerate.hpp"
#include "prespec/graph_io.hpp"
#include "prespec/spectral.hpp"
#include "prespec/sturm.hpp"
#include "prespec/types.hpp"

namespace prespec {

Graph double_composition(const Graph& g, std::span<const CompositionPart> parts) {
    if (g.order() < 1) throw std::invalid_argument("double_composition: base graph is empty");
    if (parts.empty()) throw std::invalid_argument("double_composition: no parts given");
    int total = 0;
    for (const CompositionPart& p : parts) {
        if (p.part.order() < 1) throw std::invalid_argument("double_composition: empty part");
        if (p.part_vertex < 0 || p.part_vertex >= p.part.order())
            throw std::invalid_argument("double_composition: part vertex out of range");
        if (p.base_vertex < 0 || p.base_vertex >= g.order())
            throw std::invalid_argument("double_composition: base vertex out of range");
        total += p.part.order();
    }

    Graph out(g.order() + 2 * total);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    int off_first = g.order();
    int off_second = g.order() + total;
    for (const CompositionPart& p : parts) {
        for (auto [u, v] : p.part.edges()) {
            out.add_edge(off_first + u, off_first + v);
            out.add_edge(off_second + u, off_second + v);
        }
        out.add_edge(p.base_vertex, off_first + p.part_vertex);
        out.add_edge(p.base_vertex, off_second + p.part_vertex);
        off_first += p.part.order();
        off_second += p.part.order();
    }
    return out;
}

Graph double_composition(const Graph& g, std::initializer_list<CompositionPart> parts) {
    return double_composition(g, std::span<const CompositionPart>(parts.begin(), parts.size()));
}

namespace {

Witness checked_witness(const WitnessProvider& witnesses, const IntPoly& mu, bool need_tree) {
    Witness w = witnesses(mu);
    if (w.graph.order() < 1)
        throw std::invalid_argument("witness for " + mu.to_csv() + " is empty");
    if (need_tree) {
        if (!is_tree(w.graph))
            throw std::invalid_argument("witness for " + mu.to_csv() + " is not a tree");
    } else if (!is_connected(w.graph)) {
        throw std::invalid_argument("witness for " + mu.to_csv() + " is not connected");
    }
    if (!contains_root(w.graph, mu))
        throw std::invalid_argument("witness has no root of " + mu.to_csv() +
                                    " in its spectrum");
    return w;
}

ClaimProvenance claim_provenance(FactorProvenance p) {
    return p == FactorProvenance::VerifiedIrreducible ? ClaimProvenance::Verified
                                                      : ClaimProvenance::Assumed;
}

const IntPoly& poly_x() {
    static const IntPoly x = IntPoly::monomial(1);
    return x;
}

} // namespace

std::pair<Graph, Certificate> prescribe_connected(const PrescribedSpectrum& spec,
                                                  const WitnessProvider& witnesses,
                                                  const BuildOptions& opts) {
    Certificate cert;
    cert.gadget_variant = "none"; // flips once a ZeroAugment step is emitted

    int next_id = 0;
    Graph acc;
    int acc_id = -1;
    for (const SpectrumFactor& factor : spec.factors()) {
        Witness w = checked_witness(witnesses, factor.poly, false);

        // A one-vertex witness only ever certifies the factor x, and its
        // tensor with the gadget would be edgeless; the gadget alone already
        // carries the zero eigenvalue, so it stands in directly.
        Graph augmented;
        int augment_id;
        if (w.graph.order() == 1) {
            Step input;
            input.id = next_id++;
            input.op = StepOp::Input;
            input.graph6 = emit_graph6(gadget_graph(opts.gadget));
            cert.steps.push_back(input);
            augmented = gadget_graph(opts.gadget);
            augment_id = input.id;
        } else {
            Step input;
            input.id = next_id++;
            input.op = StepOp::Input;
            input.graph6 = emit_graph6(w.graph);
            cert.steps.push_back(input);

            Step augment;
            augment.id = next_id++;
            augment.op = StepOp::ZeroAugment;
            augment.operands = {input.id};
            augment.variant = opts.gadget;
            cert.steps.push_back(augment);
            augmented = zero_augment(w.graph, opts.gadget);
            augment_id = augment.id;
            cert.gadget_variant = gadget_name(opts.gadget);
        }

        if (acc_id < 0) {
            acc = std::move(augmented);
            acc_id = augment_id;
        } else {
            Step sum;
            sum.id = next_id++;
            sum.op = StepOp::CartesianSum;
            sum.operands = {acc_id, augment_id};
            cert.steps.push_back(sum);
            acc = cartesian_sum(acc, augmented);
            acc_id = sum.id;
        }
    }
    if (!is_connected(acc)) throw std::logic_error("product of augmented witnesses disconnected");
    cert.final_graph6 = emit_graph6(acc);

    bool spec_has_x = false;
    for (const SpectrumFactor& factor : spec.factors()) {
        if (factor.poly == poly_x()) spec_has_x = true;
        cert.claims.push_back(
            {factor.poly, acc_id, CertLevel::RootsPresent, claim_provenance(factor.provenance)});
    }
    if (!spec_has_x)
        cert.claims.push_back({poly_x(), acc_id, CertLevel::RootsPresent, ClaimProvenance::Verified});

    if (acc.order() <= opts.exact_order_cap) {
        // x and the distinct factors are pairwise coprime, so the product
        // divides the charpoly whenever each root is present.
        IntPoly product = poly_x();
        for (const SpectrumFactor& factor : spec.factors())
            if (factor.poly != poly_x()) product = product * factor.poly;
        cert.claims.push_back({product, acc_id, CertLevel::ExactMultiplicity,
                               ClaimProvenance::Composite});
    }
    return {std::move(acc), std::move(cert)};
}

std::pair<Graph, Certificate> prescribe_tree(const PrescribedSpectrum& spec,
                                             const WitnessProvider& witnesses,
                                             const BuildOptions& opts) {
    Certificate cert;
    cert.gadget_variant = "none";

    int next_id = 0;
    Step base;
    base.id = next_id++;
    base.op = StepOp::Named;
    base.family = Family::Empty;
    base.size = 1;
    cert.steps.push_back(base);

    std::vector<CompositionPart> parts;
    IntPoly union_poly = IntPoly::constant(1);
    std::vector<CompositionAttachment> attachments;
    for (const SpectrumFactor& factor : spec.factors()) {
        Witness w = checked_witness(witnesses, factor.poly, true);

        Step input;
        input.id = next_id++;
        input.op = StepOp::Input;
        input.graph6 = emit_graph6(w.graph);
        cert.steps.push_back(input);

        IntPoly witness_poly = charpoly(w.graph);
        for (int copy = 0; copy < factor.multiplicity; ++copy) {
            parts.push_back({w.graph, 0, 0});
            attachments.push_back({input.id, 0, 0});
            union_poly = union_poly * witness_poly;
        }
    }

    Step comp;
    comp.id = next_id++;
    comp.op = StepOp::DoubleComposition;
    comp.operands = {base.id};
    comp.attachments = attachments;
    cert.steps.push_back(comp);
    cert.attachment_choices = attachments;

    Graph tree = double_composition(empty_graph(1), parts);
    if (!is_tree(tree)) throw std::logic_error("double composition of trees is not a tree");
    cert.final_graph6 = emit_graph6(tree);

    if (tree.order() <= opts.exact_order_cap) {
        if (!divides(union_poly, charpoly(tree)))
            throw std::logic_error("witness union charpoly does not divide the composed tree's");
        cert.claims.push_back(
            {union_poly, comp.id, CertLevel::ExactMultiplicity, ClaimProvenance::Composite});
    } else {
        for (const SpectrumFactor& factor : spec.factors())
            cert.claims.push_back({factor.poly, comp.id, CertLevel::RootsPresent,
                                   claim_provenance(factor.provenance)});
    }
    return {std::move(tree), std::move(cert)};
}

std::pair<Graph, Certificate> divisor_tree(const Graph& g, const WitnessProvider& witnesses,
                                           const BuildOptions& opts) {
    if (g.order() < 1) throw std::invalid_argument("divisor_tree: empty graph");
    IntPoly cp = charpoly(g);
    PrescribedSpectrum spec = PrescribedSpectrum::of_polynomial(cp, opts.factor_degree_cap);
    auto [tree, cert] = prescribe_tree(spec, witnesses, opts);
    if (!divides(cp, charpoly(tree)))
        throw std::logic_error("constructed tree misses part of the prescribed spectrum");
    cert.claims.push_back({cp, cert.steps.back().id, CertLevel::ExactMultiplicity,
                           ClaimProvenance::Composite});
    return {std::move(tree), std::move(cert)};
}

UnimodalResult unimodalize(const IntPoly& f, const WitnessProvider& witnesses,
                           const BuildOptions& opts, std::optional<int> minimality_order) {
    if (f.degree() < 1 || !f.is_monic())
        throw std::invalid_argument("unimodalize: polynomial must be monic and nonconstant");
    if (!is_totally_real(f))
        throw std::invalid_argument("unimodalize: polynomial is not totally real");

    std::optional<Graph> tree;
    Certificate cert;
    if (minimality_order) {
        for (int n = f.degree(); n <= *minimality_order && !tree; ++n) {
            enumerate_trees(n, [&](const Graph& t) {
                if (divides(f, charpoly(t))) {
                    tree = t;
                    return false;
                }
                return true;
            });
        }
        if (tree) {
            Step input;
            input.id = 0;
            input.op = StepOp::Input;
            input.graph6 = emit_graph6(*tree);
            cert.steps.push_back(input);
            cert.final_graph6 = input.graph6;
            cert.gadget_variant = "none";
            cert.claims.push_back(
                {f, input.id, CertLevel::ExactMultiplicity, ClaimProvenance::Composite});
        }
    }
    if (!tree) {
        PrescribedSpectrum spec = PrescribedSpectrum::of_polynomial(f, opts.factor_degree_cap);
        auto built = prescribe_tree(spec, witnesses, opts);
        tree = std::move(built.first);
        cert = std::move(built.second);
        cert.claims.push_back({f, cert.steps.back().id, CertLevel::ExactMultiplicity,
                               ClaimProvenance::Composite});
    }

    IntPoly tree_poly = charpoly(*tree);
    if (!divides(f, tree_poly))
        throw std::logic_error("unimodalize: tree charpoly lost the prescribed factor");
    IntPoly cofactor = divide_exact(tree_poly, f);
    if (!is_unimodal(abs_profile(tree_poly)))
        throw std::logic_error("unimodalize: tree charpoly coefficients are not unimodal");
    return {std::move(cofactor), std::move(*tree), std::move(cert)};
}

} // namespace prespec
