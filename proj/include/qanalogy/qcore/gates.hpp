#ifndef QANALOGY_QCORE_GATES_HPP
#define QANALOGY_QCORE_GATES_HPP

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qanalogy/qcore/state_vector.hpp"

namespace qanalogy::qcore {

enum class GateLabel { Identity, PauliX, Hadamard, CNOT, CSwap };

inline constexpr std::array<GateLabel, 5> kAllGateLabels = {
    GateLabel::Identity, GateLabel::PauliX, GateLabel::Hadamard, GateLabel::CNOT, GateLabel::CSwap};

std::string_view to_string(GateLabel label);
std::optional<GateLabel> parse_gate_label(std::string_view name);

/// Number of qubits the labelled gate acts on.
constexpr int gate_arity(GateLabel label) {
    switch (label) {
        case GateLabel::CNOT:
            return 2;
        case GateLabel::CSwap:
            return 3;
        default:
            return 1;
    }
}

template <typename Real>
using AmplitudeMatrix = Eigen::Matrix<Amplitude<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Unitary acting on 1 to 3 qubits. Row/column index bits follow the same
/// most-significant-first convention as the target list passed to apply_gate.
template <typename Real>
class BasicGateMatrix {
  public:
    using Matrix = AmplitudeMatrix<Real>;

    BasicGateMatrix(GateLabel label, Matrix entries) : label_(label), entries_(std::move(entries)) {
        arity_ = gate_arity(label);
        const auto n = Eigen::Index(dimension(arity_));
        if (entries_.rows() != n || entries_.cols() != n) {
            throw std::domain_error("gate matrix shape does not match its arity");
        }
        const Real deviation = (entries_.adjoint() * entries_ - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
        if (!(deviation < tolerance<Real>())) {
            throw std::domain_error("gate matrix is not unitary");
        }
    }

    GateLabel label() const { return label_; }
    int arity() const { return arity_; }
    const Matrix& entries() const { return entries_; }

  private:
    GateLabel label_;
    int arity_ = 1;
    Matrix entries_;
};

using GateMatrix = BasicGateMatrix<double>;

template <typename Real>
BasicGateMatrix<Real> standard_gate(GateLabel label) {
    using Matrix = AmplitudeMatrix<Real>;
    const auto n = Eigen::Index(dimension(gate_arity(label)));
    Matrix m = Matrix::Zero(n, n);
    switch (label) {
        case GateLabel::Identity:
            m.setIdentity();
            break;
        case GateLabel::PauliX:
            m(0, 1) = m(1, 0) = Real(1);
            break;
        case GateLabel::Hadamard: {
            const Real h = Real(1) / std::sqrt(Real(2));
            m << h, h, h, -h;
            break;
        }
        case GateLabel::CNOT:
            // control = first target, flips the second
            m(0, 0) = m(1, 1) = Real(1);
            m(2, 3) = m(3, 2) = Real(1);
            break;
        case GateLabel::CSwap:
            // control = first target, swaps the other two
            for (Eigen::Index i = 0; i < 5; ++i) m(i, i) = Real(1);
            m(5, 6) = m(6, 5) = Real(1);
            m(7, 7) = Real(1);
            break;
        default:
            throw std::domain_error("unknown gate label");
    }
    return BasicGateMatrix<Real>(label, std::move(m));
}

inline GateMatrix standard_gate(GateLabel label) { return standard_gate<double>(label); }

namespace detail {

inline void check_targets(int num_qubits, int arity, std::span<const int> targets) {
    if (int(targets.size()) != arity) {
        throw std::domain_error("gate arity " + std::to_string(arity) + " does not match " +
                                std::to_string(targets.size()) + " targets");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= num_qubits) {
            throw std::domain_error("target qubit " + std::to_string(targets[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw std::domain_error("duplicate target qubit " + std::to_string(targets[i]));
            }
        }
    }
}

}  // namespace detail

/// Applies gate to the listed target qubits, identity on the rest.
///
/// targets[0] is the gate's most significant qubit. Works group by group:
/// each assignment of the non-target bits selects a 2^arity sub-vector that
/// is multiplied by the gate matrix in place.
template <typename Real>
BasicStateVector<Real> apply_gate(const BasicStateVector<Real>& state, const BasicGateMatrix<Real>& gate,
                                  std::span<const int> targets) {
    const int n = state.num_qubits();
    const int k = gate.arity();
    detail::check_targets(n, k, targets);

    std::vector<std::size_t> target_masks(static_cast<std::size_t>(k));
    std::size_t target_union = 0;
    for (int j = 0; j < k; ++j) {
        target_masks[std::size_t(j)] = std::size_t{1} << (n - 1 - targets[std::size_t(j)]);
        target_union |= target_masks[std::size_t(j)];
    }

    const auto dim = dimension(n);
    const auto local_dim = dimension(k);
    std::vector<std::size_t> offsets(local_dim);
    for (std::size_t local = 0; local < local_dim; ++local) {
        std::size_t offset = 0;
        for (int j = 0; j < k; ++j) {
            if (local & (std::size_t{1} << (k - 1 - j))) offset |= target_masks[std::size_t(j)];
        }
        offsets[local] = offset;
    }

    AmplitudeVector<Real> out = state.amplitudes();
    AmplitudeVector<Real> block(Eigen::Index(local_dim), 1);
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & target_union) continue;
        for (std::size_t local = 0; local < local_dim; ++local) {
            block[Eigen::Index(local)] = state[base | offsets[local]];
        }
        const AmplitudeVector<Real> mixed = gate.entries() * block;
        for (std::size_t local = 0; local < local_dim; ++local) {
            out[Eigen::Index(base | offsets[local])] = mixed[Eigen::Index(local)];
        }
    }
    return BasicStateVector<Real>(std::move(out));
}

template <typename Real>
BasicStateVector<Real> apply_gate(const BasicStateVector<Real>& state, const BasicGateMatrix<Real>& gate,
                                  std::initializer_list<int> targets) {
    return apply_gate(state, gate, std::span<const int>(targets.begin(), targets.size()));
}

}  // namespace qanalogy::qcore

#endif  // QANALOGY_QCORE_GATES_HPP
