#ifndef QANALOGY_ANALOGY_FRAMEWORK_HPP
#define QANALOGY_ANALOGY_FRAMEWORK_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qanalogy/qcore/gates.hpp"

namespace qanalogy::analogy {

using qcore::GateLabel;

enum class ConceptKind { Superposition, Measurement, Decoherence, Tunneling, Teleportation, Entanglement, Gate };

inline constexpr std::array<ConceptKind, 7> kAllConceptKinds = {
    ConceptKind::Superposition, ConceptKind::Measurement,  ConceptKind::Decoherence, ConceptKind::Tunneling,
    ConceptKind::Teleportation, ConceptKind::Entanglement, ConceptKind::Gate};

/// A quantum-computing concept; gates carry their specific label.
class Concept {
  public:
    /// Throws std::invalid_argument for Gate; use Concept::gate() instead.
    explicit Concept(ConceptKind kind);
    static Concept gate(GateLabel label);

    ConceptKind kind() const { return kind_; }
    const std::optional<GateLabel>& gate_label() const { return gate_label_; }

    friend bool operator==(const Concept&, const Concept&) = default;

  private:
    Concept(ConceptKind kind, std::optional<GateLabel> label) : kind_(kind), gate_label_(label) {}

    ConceptKind kind_;
    std::optional<GateLabel> gate_label_;
};

std::string to_string(const Concept& qc);
/// Accepts "Superposition", "Gate:Hadamard", "Gate(Hadamard)" or a bare gate
/// name, case-insensitively.
std::optional<Concept> parse_concept(std::string_view text);

enum class Duality { Dual, NonDual };
enum class ConceptType { State, Process, Operator };
enum class Probability { Probabilistic, NonProbabilistic };
enum class Continuity { Continuous, Discrete };

std::string_view to_string(Duality d);
std::string_view to_string(ConceptType t);
std::string_view to_string(Probability p);
std::string_view to_string(Continuity c);
std::optional<Continuity> parse_continuity(std::string_view text);

/// The four characterization dimensions of a concept.
struct ConceptCharacterization {
    int num_qubits = 1;
    Duality duality = Duality::Dual;
    ConceptType concept_type = ConceptType::State;
    Probability probability = Probability::NonProbabilistic;

    friend bool operator==(const ConceptCharacterization&, const ConceptCharacterization&) = default;
};

/// The four daily-object properties a concept maps onto.
struct ObjectProperties {
    int num_objects = 1;
    bool rotation = false;
    bool translation = false;
    Continuity continuity = Continuity::Discrete;

    friend bool operator==(const ObjectProperties&, const ObjectProperties&) = default;
};

ConceptCharacterization characterize(const Concept& qc);

/// Maps characterization dimensions to the object properties an analogy
/// needs: objects per qubit, rotation for dual outputs, translation for
/// processes and operators, continuity for probabilistic concepts.
ObjectProperties required_properties(const ConceptCharacterization& c);

/// One row of the framework table.
struct FrameworkRow {
    Concept subject;
    ConceptCharacterization characterization;
    ObjectProperties properties;
};

/// Rows for the six non-gate concepts followed by gates at arities 1, 2, 3
/// (Hadamard, CNOT, CSwap).
std::vector<FrameworkRow> framework_table();

}  // namespace qanalogy::analogy

#endif  // QANALOGY_ANALOGY_FRAMEWORK_HPP
