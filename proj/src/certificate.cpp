#include "prespec/certificate.hpp"

#include <stdexcept>
#include <utility>

#include "prespec/construct.hpp"
#include "prespec/graph_io.hpp"

namespace prespec {

namespace {

const char* op_name(StepOp op) {
    switch (op) {
    case StepOp::Input: return "input";
    case StepOp::Named: return "named";
    case StepOp::DisjointUnion: return "disjoint_union";
    case StepOp::CartesianSum: return "cartesian_sum";
    case StepOp::TensorProduct: return "tensor_product";
    case StepOp::ZeroAugment: return "zero_augment";
    case StepOp::DoubleComposition: return "double_composition";
    }
    throw std::logic_error("bad step op");
}

StepOp op_from_name(const std::string& name) {
    for (StepOp op : {StepOp::Input, StepOp::Named, StepOp::DisjointUnion, StepOp::CartesianSum,
                      StepOp::TensorProduct, StepOp::ZeroAugment, StepOp::DoubleComposition})
        if (name == op_name(op)) return op;
    throw std::invalid_argument("unknown step op: " + name);
}

const char* level_name(CertLevel level) {
    return level == CertLevel::ExactMultiplicity ? "exact-multiplicity" : "roots-present";
}

CertLevel level_from_name(const std::string& name) {
    if (name == "exact-multiplicity") return CertLevel::ExactMultiplicity;
    if (name == "roots-present") return CertLevel::RootsPresent;
    throw std::invalid_argument("unknown claim level: " + name);
}

const char* provenance_name(ClaimProvenance p) {
    switch (p) {
    case ClaimProvenance::Verified: return "verified";
    case ClaimProvenance::Assumed: return "assumed";
    case ClaimProvenance::Composite: return "composite";
    }
    throw std::logic_error("bad provenance");
}

ClaimProvenance provenance_from_name(const std::string& name) {
    if (name == "verified") return ClaimProvenance::Verified;
    if (name == "assumed") return ClaimProvenance::Assumed;
    if (name == "composite") return ClaimProvenance::Composite;
    throw std::invalid_argument("unknown claim provenance: " + name);
}

nlohmann::ordered_json attachment_json(const CompositionAttachment& at) {
    nlohmann::ordered_json ja;
    ja["step"] = at.part_step;
    ja["part_vertex"] = at.part_vertex;
    ja["base_vertex"] = at.base_vertex;
    return ja;
}

CompositionAttachment attachment_from_json(const nlohmann::ordered_json& ja) {
    CompositionAttachment at;
    at.part_step = ja.at("step").get<int>();
    at.part_vertex = ja.at("part_vertex").get<int>();
    at.base_vertex = ja.at("base_vertex").get<int>();
    return at;
}

} // namespace

nlohmann::ordered_json to_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["steps"] = nlohmann::ordered_json::array();
    for (const Step& s : cert.steps) {
        nlohmann::ordered_json js;
        js["id"] = s.id;
        js["op"] = op_name(s.op);
        switch (s.op) {
        case StepOp::Input: js["graph6"] = s.graph6; break;
        case StepOp::Named:
            js["family"] = family_name(s.family);
            js["size"] = s.size;
            break;
        case StepOp::DisjointUnion: js["parts"] = s.operands; break;
        case StepOp::CartesianSum:
        case StepOp::TensorProduct:
            js["left"] = s.operands.at(0);
            js["right"] = s.operands.at(1);
            break;
        case StepOp::ZeroAugment:
            js["operand"] = s.operands.at(0);
            js["variant"] = gadget_name(s.variant);
            break;
        case StepOp::DoubleComposition: {
            js["base"] = s.operands.at(0);
            auto parts = nlohmann::ordered_json::array();
            for (const CompositionAttachment& at : s.attachments) parts.push_back(attachment_json(at));
            js["parts"] = std::move(parts);
            break;
        }
        }
        j["steps"].push_back(std::move(js));
    }
    j["claims"] = nlohmann::ordered_json::array();
    for (const Claim& c : cert.claims) {
        nlohmann::ordered_json jc;
        jc["poly"] = c.poly.to_csv();
        jc["target"] = c.target;
        jc["level"] = level_name(c.level);
        jc["provenance"] = provenance_name(c.provenance);
        j["claims"].push_back(std::move(jc));
    }
    j["final_graph6"] = cert.final_graph6;
    j["gadget_variant"] = cert.gadget_variant;
    j["attachment_choices"] = nlohmann::ordered_json::array();
    for (const CompositionAttachment& at : cert.attachment_choices)
        j["attachment_choices"].push_back(attachment_json(at));
    return j;
}

Certificate certificate_from_json(const nlohmann::ordered_json& j) {
    Certificate cert;
    for (const auto& js : j.at("steps")) {
        Step s;
        s.id = js.at("id").get<int>();
        s.op = op_from_name(js.at("op").get<std::string>());
        switch (s.op) {
        case StepOp::Input: s.graph6 = js.at("graph6").get<std::string>(); break;
        case StepOp::Named:
            s.family = family_from_name(js.at("family").get<std::string>());
            s.size = js.at("size").get<int>();
            break;
        case StepOp::DisjointUnion: s.operands = js.at("parts").get<std::vector<int>>(); break;
        case StepOp::CartesianSum:
        case StepOp::TensorProduct:
            s.operands = {js.at("left").get<int>(), js.at("right").get<int>()};
            break;
        case StepOp::ZeroAugment:
            s.operands = {js.at("operand").get<int>()};
            s.variant = gadget_from_name(js.at("variant").get<std::string>());
            break;
        case StepOp::DoubleComposition:
            s.operands = {js.at("base").get<int>()};
            for (const auto& ja : js.at("parts")) s.attachments.push_back(attachment_from_json(ja));
            break;
        }
        cert.steps.push_back(std::move(s));
    }
    for (const auto& jc : j.at("claims")) {
        Claim c;
        c.poly = IntPoly::from_csv(jc.at("poly").get<std::string>());
        c.target = jc.at("target").get<int>();
        c.level = level_from_name(jc.at("level").get<std::string>());
        c.provenance = provenance_from_name(jc.at("provenance").get<std::string>());
        cert.claims.push_back(std::move(c));
    }
    cert.final_graph6 = j.at("final_graph6").get<std::string>();
    cert.gadget_variant = j.at("gadget_variant").get<std::string>();
    for (const auto& ja : j.at("attachment_choices"))
        cert.attachment_choices.push_back(attachment_from_json(ja));
    return cert;
}

std::map<int, Graph> replay_steps(const Certificate& cert) {
    if (cert.steps.empty()) throw std::invalid_argument("certificate has no steps");
    std::map<int, Graph> built;
    for (const Step& s : cert.steps) {
        if (built.count(s.id))
            throw std::invalid_argument("duplicate step id " + std::to_string(s.id));
        auto ref = [&](int id) -> const Graph& {
            auto it = built.find(id);
            if (it == built.end())
                throw std::invalid_argument("step " + std::to_string(s.id) +
                                            " references unknown step " + std::to_string(id));
            return it->second;
        };
        Graph g;
        switch (s.op) {
        case StepOp::Input: g = parse_graph6(s.graph6); break;
        case StepOp::Named: g = named_graph(s.family, s.size); break;
        case StepOp::DisjointUnion: {
            std::vector<Graph> parts;
            parts.reserve(s.operands.size());
            for (int id : s.operands) parts.push_back(ref(id));
            g = disjoint_union(std::span<const Graph>(parts));
            break;
        }
        case StepOp::CartesianSum:
            if (s.operands.size() != 2) throw std::invalid_argument("cartesian_sum step needs two operands");
            g = cartesian_sum(ref(s.operands[0]), ref(s.operands[1]));
            break;
        case StepOp::TensorProduct:
            if (s.operands.size() != 2) throw std::invalid_argument("tensor_product step needs two operands");
            g = tensor_product(ref(s.operands[0]), ref(s.operands[1]));
            break;
        case StepOp::ZeroAugment:
            if (s.operands.size() != 1) throw std::invalid_argument("zero_augment step needs one operand");
            g = zero_augment(ref(s.operands[0]), s.variant);
            break;
        case StepOp::DoubleComposition: {
            if (s.operands.size() != 1) throw std::invalid_argument("double_composition step needs a base");
            std::vector<CompositionPart> parts;
            parts.reserve(s.attachments.size());
            for (const CompositionAttachment& at : s.attachments)
                parts.push_back({ref(at.part_step), at.part_vertex, at.base_vertex});
            g = double_composition(ref(s.operands[0]), parts);
            break;
        }
        }
        built.emplace(s.id, std::move(g));
    }
    return built;
}

Graph replay(const Certificate& cert) {
    auto built = replay_steps(cert);
    return built.at(cert.steps.back().id);
}

VerifyReport verify_certificate(const Certificate& cert) {
    VerifyReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.failures.push_back(std::move(msg));
    };

    std::map<int, Graph> built;
    try {
        built = replay_steps(cert);
    } catch (const std::exception& ex) {
        fail(std::string("replay failed: ") + ex.what());
        return rep;
    }
    const Graph& fin = built.at(cert.steps.back().id);
    if (emit_graph6(fin) != cert.final_graph6)
        fail("replayed final graph does not match final_graph6");

    std::string used = "none";
    bool mixed = false;
    std::vector<CompositionAttachment> expected;
    for (const Step& s : cert.steps) {
        if (s.op == StepOp::ZeroAugment) {
            const char* name = gadget_name(s.variant);
            if (used == "none")
                used = name;
            else if (used != name)
                mixed = true;
        }
        if (s.op == StepOp::DoubleComposition)
            expected.insert(expected.end(), s.attachments.begin(), s.attachments.end());
    }
    if (mixed) fail("steps mix gadget variants");
    else if (used != cert.gadget_variant) fail("gadget_variant does not match the steps");
    if (expected != cert.attachment_choices) fail("attachment_choices do not match the steps");

    for (size_t i = 0; i < cert.claims.size(); ++i) {
        const Claim& c = cert.claims[i];
        const std::string tag = "claim " + std::to_string(i) + " (" + c.poly.to_csv() + ")";
        auto it = built.find(c.target);
        if (it == built.end()) {
            fail(tag + ": unknown target step " + std::to_string(c.target));
            continue;
        }
        try {
            if (c.level == CertLevel::ExactMultiplicity) {
                if (!spectrum_divides(c.poly, it->second, DivideMode::Exact).satisfied)
                    fail(tag + ": polynomial does not divide the charpoly exactly");
            } else {
                if (c.provenance == ClaimProvenance::Composite) {
                    fail(tag + ": kernel-level claim requires an irreducible polynomial");
                    continue;
                }
                if (!contains_root(it->second, c.poly))
                    fail(tag + ": no root present by kernel rank");
            }
        } catch (const std::exception& ex) {
            fail(tag + ": " + ex.what());
        }
    }
    return rep;
}

} // namespace prespec
