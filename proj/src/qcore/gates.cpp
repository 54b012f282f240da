#include "qanalogy/qcore/gates.hpp"

#include <algorithm>
#include <cctype>

namespace qanalogy::qcore {

std::string_view to_string(GateLabel label) {
    switch (label) {
        case GateLabel::Identity:
            return "Identity";
        case GateLabel::PauliX:
            return "PauliX";
        case GateLabel::Hadamard:
            return "Hadamard";
        case GateLabel::CNOT:
            return "CNOT";
        case GateLabel::CSwap:
            return "CSwap";
    }
    return "?";
}

std::optional<GateLabel> parse_gate_label(std::string_view name) {
    auto lower = [](std::string_view s) {
        std::string out(s);
        std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return char(std::tolower(c)); });
        return out;
    };
    const std::string key = lower(name);
    for (GateLabel label : kAllGateLabels) {
        if (lower(to_string(label)) == key) return label;
    }
    if (key == "i") return GateLabel::Identity;
    if (key == "x" || key == "pauli-x") return GateLabel::PauliX;
    if (key == "h") return GateLabel::Hadamard;
    if (key == "cx") return GateLabel::CNOT;
    if (key == "fredkin") return GateLabel::CSwap;
    return std::nullopt;
}

}  // namespace qanalogy::qcore
