#ifndef PRESPEC_CERTIFICATE_HPP
#define PRESPEC_CERTIFICATE_HPP

#include <map>
#include <string>
#include <vector>

#include "prespec/graph.hpp"
#include "prespec/intpoly.hpp"
#include "prespec/products.hpp"
#include "prespec/spectral.hpp"

#include "json.hpp"

namespace prespec {

enum class StepOp {
    Input,             // graph supplied from outside, embedded as graph6
    Named,             // standard family by name and size
    DisjointUnion,     // union of earlier steps
    CartesianSum,      // of two earlier steps
    TensorProduct,     // of two earlier steps
    ZeroAugment,       // tensor with a gadget variant
    DoubleComposition, // base step + attached duplicated parts
};

struct CompositionAttachment {
    int part_step = 0;   // step id of the part (duplicated on replay)
    int part_vertex = 0; // distinguished vertex inside the part
    int base_vertex = 0; // vertex of the base the copies attach to

    bool operator==(const CompositionAttachment&) const = default;
};

struct Step {
    int id = 0;
    StepOp op = StepOp::Input;
    std::string graph6;                              // Input
    Family family = Family::Path;                    // Named
    int size = 0;                                    // Named
    std::vector<int> operands;                       // earlier step ids
    GadgetVariant variant = GadgetVariant::Small;    // ZeroAugment
    std::vector<CompositionAttachment> attachments;  // DoubleComposition
};

/// How much is known about the irreducibility of a claimed divisor.
enum class ClaimProvenance { Verified, Assumed, Composite };

struct Claim {
    IntPoly poly;
    int target = 0; // step id the divisibility claim is about
    CertLevel level = CertLevel::RootsPresent;
    ClaimProvenance provenance = ClaimProvenance::Composite;
};

/// Replayable construction trace plus divisibility claims. Replaying the
/// steps must reproduce final_graph6 exactly, and every claim must
/// re-verify (exact division for ExactMultiplicity, kernel rank for
/// RootsPresent).
struct Certificate {
    std::vector<Step> steps;
    std::vector<Claim> claims;
    std::string final_graph6;
    std::string gadget_variant; // "small", "large", or "none"
    std::vector<CompositionAttachment> attachment_choices;
};

nlohmann::ordered_json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::ordered_json& j);

/// Rebuilds every step's graph; throws std::invalid_argument on dangling
/// references, duplicate ids, or malformed steps.
std::map<int, Graph> replay_steps(const Certificate& cert);

/// The last step's graph.
Graph replay(const Certificate& cert);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Replays and checks: final graph matches final_graph6, the recorded
/// gadget variant and attachment choices agree with the steps, and every
/// claim re-verifies against the replayed target graph.
VerifyReport verify_certificate(const Certificate& cert);

} // namespace prespec

#endif
