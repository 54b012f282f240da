#ifndef QANALOGY_QCORE_STATES_HPP
#define QANALOGY_QCORE_STATES_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qanalogy/qcore/state_vector.hpp"

namespace qanalogy::qcore {

/// Single-qubit state whose |0> probability is the slider position s.
/// Amplitudes are real and non-negative: (sqrt(s), sqrt(1 - s)).
template <typename Real = double>
BasicStateVector<Real> state_from_slider(Real s) {
    if (!(s >= Real(0) && s <= Real(1))) {
        throw std::domain_error("slider position must lie in [0, 1], got " + std::to_string(s));
    }
    AmplitudeVector<Real> v(2);
    v << std::sqrt(s), std::sqrt(Real(1) - s);
    return BasicStateVector<Real>(std::move(v));
}

/// Born-rule probabilities |a_i|^2 per basis index.
template <typename Real>
RealVector<Real> probabilities(const BasicStateVector<Real>& state) {
    return state.amplitudes().cwiseAbs2();
}

/// Marginal (P(0), P(1)) of a single qubit.
template <typename Real>
std::array<Real, 2> qubit_probabilities(const BasicStateVector<Real>& state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw std::domain_error("qubit index " + std::to_string(qubit) + " out of range");
    }
    const std::size_t mask = std::size_t{1} << (state.num_qubits() - 1 - qubit);
    std::array<Real, 2> p{Real(0), Real(0)};
    for (std::size_t i = 0; i < state.size(); ++i) {
        p[(i & mask) ? 1 : 0] += std::norm(state[i]);
    }
    return p;
}

/// Kronecker product a (x) b; a's qubits become the leading ones.
template <typename Real>
BasicStateVector<Real> tensor_product(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
    if (a.num_qubits() + b.num_qubits() > kMaxQubits) {
        throw std::domain_error("tensor product would exceed " + std::to_string(kMaxQubits) + " qubits");
    }
    const auto nb = b.amplitudes().size();
    AmplitudeVector<Real> v(a.amplitudes().size() * nb);
    for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
        v.segment(i * nb, nb) = a.amplitudes()[i] * b.amplitudes();
    }
    return BasicStateVector<Real>(std::move(v));
}

/// The anti-correlated Bell state (|01> + |10>) / sqrt(2).
template <typename Real = double>
BasicStateVector<Real> bell_psi_plus() {
    const Real h = Real(1) / std::sqrt(Real(2));
    AmplitudeVector<Real> v(4);
    v << Real(0), h, h, Real(0);
    return BasicStateVector<Real>(std::move(v));
}

}  // namespace qanalogy::qcore

#endif  // QANALOGY_QCORE_STATES_HPP
