#ifndef QANALOGY_QCORE_MEASUREMENT_HPP
#define QANALOGY_QCORE_MEASUREMENT_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qanalogy/qcore/random_source.hpp"
#include "qanalogy/qcore/state_vector.hpp"

namespace qanalogy::qcore {

template <typename Real>
struct BasicMeasurementResult {
    std::size_t outcome = 0;
    std::vector<Real> prior_probabilities;
    BasicStateVector<Real> collapsed;
};

using MeasurementResult = BasicMeasurementResult<double>;

/// Samples a basis index with Born-rule weights and collapses onto it.
/// Consumes exactly one draw from rng.
template <typename Real>
BasicMeasurementResult<Real> measure_all(const BasicStateVector<Real>& state, RandomSource& rng) {
    std::vector<Real> probs(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) probs[i] = std::norm(state[i]);

    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t outcome = state.size();
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > Real(0)) last_nonzero = i;
        cumulative += double(probs[i]);
        if (outcome == state.size() && probs[i] > Real(0) && u < cumulative) outcome = i;
    }
    // rounding can leave u just above the final cumulative sum
    if (outcome == state.size()) outcome = last_nonzero;

    return {outcome, std::move(probs), BasicStateVector<Real>::basis(state.num_qubits(), outcome)};
}

/// Measures one qubit, keeping the conditional amplitudes of the others.
/// outcome is the measured bit; prior_probabilities is the qubit's marginal.
template <typename Real>
BasicMeasurementResult<Real> measure_qubit(const BasicStateVector<Real>& state, int qubit, RandomSource& rng) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw std::domain_error("qubit index " + std::to_string(qubit) + " out of range");
    }
    const std::size_t mask = std::size_t{1} << (state.num_qubits() - 1 - qubit);
    Real p0 = 0;
    Real p1 = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        ((i & mask) ? p1 : p0) += std::norm(state[i]);
    }

    const double u = rng.uniform();
    std::size_t bit = (u < double(p0)) ? 0 : 1;
    if (bit == 0 && p0 <= Real(0)) bit = 1;
    if (bit == 1 && p1 <= Real(0)) bit = 0;

    AmplitudeVector<Real> v = AmplitudeVector<Real>::Zero(Eigen::Index(state.size()));
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (bool(i & mask) == bool(bit)) v[Eigen::Index(i)] = state[i];
    }
    v.normalize();
    return {bit, {p0, p1}, BasicStateVector<Real>(std::move(v))};
}

}  // namespace qanalogy::qcore

#endif  // QANALOGY_QCORE_MEASUREMENT_HPP
