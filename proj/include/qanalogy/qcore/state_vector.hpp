#ifndef QANALOGY_QCORE_STATE_VECTOR_HPP
#define QANALOGY_QCORE_STATE_VECTOR_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qanalogy::qcore {

inline constexpr int kMaxQubits = 3;

/// Absolute tolerance used for normalization and unitarity checks.
template <typename Real>
constexpr Real tolerance() {
    if constexpr (sizeof(Real) <= sizeof(float)) {
        return Real(1e-5);
    } else {
        return Real(1e-9);
    }
}

template <typename Real>
using Amplitude = std::complex<Real>;

template <typename Real>
using AmplitudeVector = Eigen::Matrix<Amplitude<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

constexpr std::size_t dimension(int num_qubits) { return std::size_t{1} << num_qubits; }

/// Normalized pure state of 1 to 3 qubits.
///
/// Basis index i encodes the bitstring of |i>, qubit 0 being the most
/// significant bit. Construction validates length, finiteness and norm, so a
/// live instance always satisfies the state invariants.
template <typename Real>
class BasicStateVector {
  public:
    using Scalar = Amplitude<Real>;
    using Vector = AmplitudeVector<Real>;

    explicit BasicStateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
        const auto n = amplitudes_.size();
        num_qubits_ = 0;
        while (num_qubits_ <= kMaxQubits && Eigen::Index(dimension(num_qubits_)) < n) {
            ++num_qubits_;
        }
        if (num_qubits_ < 1 || num_qubits_ > kMaxQubits || Eigen::Index(dimension(num_qubits_)) != n) {
            throw std::domain_error("state vector length must be 2, 4 or 8, got " + std::to_string(n));
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!std::isfinite(amplitudes_[i].real()) || !std::isfinite(amplitudes_[i].imag())) {
                throw std::domain_error("state vector amplitude " + std::to_string(i) + " is not finite");
            }
        }
        const Real norm2 = amplitudes_.squaredNorm();
        if (std::abs(norm2 - Real(1)) > tolerance<Real>()) {
            throw std::domain_error("state vector is not normalized (squared norm " + std::to_string(norm2) + ")");
        }
    }

    /// Computational basis state |index> on num_qubits qubits.
    static BasicStateVector basis(int num_qubits, std::size_t index) {
        if (num_qubits < 1 || num_qubits > kMaxQubits) {
            throw std::domain_error("num_qubits must be in [1, 3]");
        }
        if (index >= dimension(num_qubits)) {
            throw std::domain_error("basis index out of range");
        }
        Vector v = Vector::Zero(Eigen::Index(dimension(num_qubits)));
        v[Eigen::Index(index)] = Scalar(1);
        return BasicStateVector(std::move(v));
    }

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return std::size_t(amplitudes_.size()); }
    const Vector& amplitudes() const { return amplitudes_; }
    const Scalar& operator[](std::size_t i) const { return amplitudes_[Eigen::Index(i)]; }

    friend bool operator==(const BasicStateVector& a, const BasicStateVector& b) {
        return a.num_qubits_ == b.num_qubits_ && a.amplitudes_ == b.amplitudes_;
    }

  private:
    Vector amplitudes_;
    int num_qubits_ = 0;
};

using StateVector = BasicStateVector<double>;

/// Largest componentwise |a_i - b_i| between two states of equal size.
template <typename Real>
Real max_deviation(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
    if (a.size() != b.size()) {
        throw std::domain_error("cannot compare states of different size");
    }
    return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

}  // namespace qanalogy::qcore

#endif  // QANALOGY_QCORE_STATE_VECTOR_HPP
