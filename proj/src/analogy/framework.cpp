#include "qanalogy/analogy/framework.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qanalogy::analogy {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return char(std::tolower(c)); });
    return out;
}

std::string_view kind_name(ConceptKind kind) {
    switch (kind) {
        case ConceptKind::Superposition:
            return "Superposition";
        case ConceptKind::Measurement:
            return "Measurement";
        case ConceptKind::Decoherence:
            return "Decoherence";
        case ConceptKind::Tunneling:
            return "Tunneling";
        case ConceptKind::Teleportation:
            return "Teleportation";
        case ConceptKind::Entanglement:
            return "Entanglement";
        case ConceptKind::Gate:
            return "Gate";
    }
    return "?";
}

}  // namespace

Concept::Concept(ConceptKind kind) : kind_(kind) {
    if (kind == ConceptKind::Gate) {
        throw std::invalid_argument("a gate concept needs a gate label");
    }
}

Concept Concept::gate(GateLabel label) { return Concept(ConceptKind::Gate, label); }

std::string to_string(const Concept& qc) {
    std::string out(kind_name(qc.kind()));
    if (qc.gate_label()) {
        out += ":";
        out += qcore::to_string(*qc.gate_label());
    }
    return out;
}

std::optional<Concept> parse_concept(std::string_view text) {
    std::string key = lower(text);
    std::string gate_part;
    if (auto colon = key.find(':'); colon != std::string::npos) {
        gate_part = key.substr(colon + 1);
        key = key.substr(0, colon);
    } else if (auto paren = key.find('('); paren != std::string::npos && key.back() == ')') {
        gate_part = key.substr(paren + 1, key.size() - paren - 2);
        key = key.substr(0, paren);
    }
    if (key == "gate") {
        if (auto label = qcore::parse_gate_label(gate_part)) return Concept::gate(*label);
        return std::nullopt;
    }
    if (!gate_part.empty()) return std::nullopt;
    for (ConceptKind kind : kAllConceptKinds) {
        if (kind != ConceptKind::Gate && lower(kind_name(kind)) == key) return Concept(kind);
    }
    if (auto label = qcore::parse_gate_label(key)) return Concept::gate(*label);
    return std::nullopt;
}

std::string_view to_string(Duality d) { return d == Duality::Dual ? "Dual" : "NonDual"; }

std::string_view to_string(ConceptType t) {
    switch (t) {
        case ConceptType::State:
            return "State";
        case ConceptType::Process:
            return "Process";
        case ConceptType::Operator:
            return "Operator";
    }
    return "?";
}

std::string_view to_string(Probability p) {
    return p == Probability::Probabilistic ? "Probabilistic" : "NonProbabilistic";
}

std::string_view to_string(Continuity c) { return c == Continuity::Continuous ? "Continuous" : "Discrete"; }

std::optional<Continuity> parse_continuity(std::string_view text) {
    const auto key = lower(text);
    if (key == "continuous") return Continuity::Continuous;
    if (key == "discrete") return Continuity::Discrete;
    return std::nullopt;
}

ConceptCharacterization characterize(const Concept& qc) {
    using enum Duality;
    using enum ConceptType;
    using enum Probability;
    switch (qc.kind()) {
        case ConceptKind::Superposition:
            return {1, Dual, State, NonProbabilistic};
        case ConceptKind::Measurement:
            return {1, NonDual, Operator, NonProbabilistic};
        case ConceptKind::Decoherence:
            return {1, NonDual, Process, NonProbabilistic};
        case ConceptKind::Tunneling:
            return {1, Dual, Process, NonProbabilistic};
        case ConceptKind::Teleportation:
            return {2, Dual, Process, NonProbabilistic};
        case ConceptKind::Entanglement:
            return {2, Dual, Process, NonProbabilistic};
        case ConceptKind::Gate:
            return {qcore::gate_arity(*qc.gate_label()), Dual, Operator, Probabilistic};
    }
    throw std::logic_error("unhandled concept kind");
}

ObjectProperties required_properties(const ConceptCharacterization& c) {
    return ObjectProperties{
        .num_objects = c.num_qubits,
        .rotation = c.duality == Duality::Dual,
        .translation = c.concept_type != ConceptType::State,
        .continuity = c.probability == Probability::Probabilistic ? Continuity::Continuous : Continuity::Discrete,
    };
}

std::vector<FrameworkRow> framework_table() {
    std::vector<Concept> concepts;
    for (ConceptKind kind : kAllConceptKinds) {
        if (kind != ConceptKind::Gate) concepts.emplace_back(kind);
    }
    for (GateLabel label : {GateLabel::Hadamard, GateLabel::CNOT, GateLabel::CSwap}) {
        concepts.push_back(Concept::gate(label));
    }
    std::vector<FrameworkRow> rows;
    rows.reserve(concepts.size());
    for (const auto& qc : concepts) {
        const auto c = characterize(qc);
        rows.push_back({qc, c, required_properties(c)});
    }
    return rows;
}

}  // namespace qanalogy::analogy
