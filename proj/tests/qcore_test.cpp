#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "qanalogy/qcore.hpp"

using namespace qanalogy::qcore;
namespace oracle = qanalogy::testing;

namespace {

constexpr double kTol = 1e-9;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector from_oracle(const std::vector<oracle::Complex>& v) {
    AmplitudeVector<double> a(Eigen::Index(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) a[Eigen::Index(i)] = v[i];
    return StateVector(std::move(a));
}

StateVector make(std::initializer_list<std::complex<double>> amps) {
    AmplitudeVector<double> a(Eigen::Index(amps.size()));
    Eigen::Index i = 0;
    for (auto x : amps) a[i++] = x;
    return StateVector(std::move(a));
}

StateVector plus() { return make({kInvSqrt2, kInvSqrt2}); }

}  // namespace

TEST(StateVector, RejectsBadShapesAndNorms) {
    EXPECT_THROW(make({1.0}), std::domain_error);
    EXPECT_THROW(make({1.0, 0.0, 0.0}), std::domain_error);
    EXPECT_THROW(make({1.0, 1.0}), std::domain_error);
    EXPECT_THROW(make({std::nan(""), 0.0}), std::domain_error);
    EXPECT_THROW(StateVector(AmplitudeVector<double>::Zero(16)), std::domain_error);
    EXPECT_NO_THROW(make({0.6, std::complex<double>(0, 0.8)}));
}

TEST(StateVector, FloatScalarUsesLooserTolerance) {
    auto s = state_from_slider<float>(0.3f);
    auto h = apply_gate(s, standard_gate<float>(GateLabel::Hadamard), {0});
    EXPECT_NEAR(probabilities(h).sum(), 1.0f, 1e-5f);
}

TEST(StateFromSlider, EndpointsAndQuarter) {
    auto top = state_from_slider(1.0);
    EXPECT_EQ(top, StateVector::basis(1, 0));
    auto bottom = state_from_slider(0.0);
    EXPECT_EQ(bottom, StateVector::basis(1, 1));

    // sqrt(0.25), sqrt(0.75) from a 30-digit mpmath evaluation
    auto quarter = state_from_slider(0.25);
    EXPECT_NEAR(quarter[0].real(), 0.5, kTol);
    EXPECT_NEAR(quarter[1].real(), 0.866025403784438646763723170753, kTol);
    EXPECT_EQ(quarter[0].imag(), 0.0);
    EXPECT_EQ(quarter[1].imag(), 0.0);
}

TEST(StateFromSlider, OutOfRangeIsDomainError) {
    EXPECT_THROW(state_from_slider(-0.01), std::domain_error);
    EXPECT_THROW(state_from_slider(1.2), std::domain_error);
    EXPECT_THROW(state_from_slider(std::nan("")), std::domain_error);
}

TEST(Probabilities, Examples) {
    auto p = probabilities(plus());
    EXPECT_NEAR(p[0], 0.5, kTol);
    EXPECT_NEAR(p[1], 0.5, kTol);

    auto b = probabilities(StateVector::basis(1, 0));
    EXPECT_EQ(b[0], 1.0);
    EXPECT_EQ(b[1], 0.0);

    auto q = probabilities(state_from_slider(0.25));
    EXPECT_NEAR(q[0], 0.25, kTol);
    EXPECT_NEAR(q[1], 0.75, kTol);
}

TEST(ApplyGate, ExamplesFromLessons) {
    auto h1 = apply_gate(StateVector::basis(1, 1), standard_gate(GateLabel::Hadamard), {0});
    EXPECT_NEAR(probabilities(h1)[0], 0.5, kTol);
    EXPECT_NEAR(probabilities(h1)[1], 0.5, kTol);

    auto x1 = apply_gate(StateVector::basis(1, 1), standard_gate(GateLabel::PauliX), {0});
    EXPECT_LT(max_deviation(x1, StateVector::basis(1, 0)), kTol);

    // 30-digit mpmath: H (1/2, sqrt(3)/2)
    auto hq = apply_gate(state_from_slider(0.25), standard_gate(GateLabel::Hadamard), {0});
    EXPECT_NEAR(hq[0].real(), 0.965925826289068286749743199729, kTol);
    EXPECT_NEAR(hq[1].real(), -0.258819045102520762348898837624, kTol);
    EXPECT_NEAR(probabilities(hq)[0], 0.933012701892219323381861585376, kTol);
    EXPECT_NEAR(probabilities(hq)[1], 0.0669872981077806766181384146235, kTol);
}

TEST(ApplyGate, TargetValidation) {
    auto s = StateVector::basis(2, 0);
    const auto cnot = standard_gate(GateLabel::CNOT);
    EXPECT_THROW(apply_gate(s, cnot, {0}), std::domain_error);
    EXPECT_THROW(apply_gate(s, cnot, {0, 0}), std::domain_error);
    EXPECT_THROW(apply_gate(s, cnot, {0, 2}), std::domain_error);
    EXPECT_THROW(apply_gate(s, cnot, {-1, 1}), std::domain_error);
    EXPECT_THROW(apply_gate(s, standard_gate(GateLabel::CSwap), {0, 1, 2}), std::domain_error);
}

TEST(ApplyGate, CnotControlIsFirstTarget) {
    // |10> -> |11> with control 0; with control 1 nothing changes
    auto s = StateVector::basis(2, 0b10);
    const auto cnot = standard_gate(GateLabel::CNOT);
    EXPECT_EQ(apply_gate(s, cnot, {0, 1}), StateVector::basis(2, 0b11));
    EXPECT_EQ(apply_gate(s, cnot, {1, 0}), s);
}

TEST(ApplyGate, CswapSwapsUnderControl) {
    auto s = StateVector::basis(3, 0b101);
    const auto cswap = standard_gate(GateLabel::CSwap);
    EXPECT_EQ(apply_gate(s, cswap, {0, 1, 2}), StateVector::basis(3, 0b110));
    EXPECT_EQ(apply_gate(StateVector::basis(3, 0b001), cswap, {0, 1, 2}), StateVector::basis(3, 0b001));
    // control on qubit 2, swap qubits 0 and 1: |101> -> |011>
    EXPECT_EQ(apply_gate(s, cswap, {2, 0, 1}), StateVector::basis(3, 0b011));
}

TEST(ApplyGate, MatchesDenseOracle) {
    std::mt19937_64 gen(20241016);
    double worst = 0;
    for (int n = 1; n <= 3; ++n) {
        for (std::size_t g = 0; g < kAllGateLabels.size(); ++g) {
            const auto label = kAllGateLabels[g];
            const int k = gate_arity(label);
            if (k > n) continue;
            const auto gate = standard_gate(label);
            const auto dense_gate = oracle::textbook_gate(int(g));
            for (const auto& targets : oracle::target_tuples(n, k)) {
                const auto full = oracle::embed(dense_gate, targets, n);
                for (int trial = 0; trial < 50; ++trial) {
                    const auto v = oracle::random_state(gen, n);
                    const auto expected = from_oracle(oracle::multiply(full, v));
                    const auto got = apply_gate(from_oracle(v), gate, std::span<const int>(targets));
                    worst = std::max(worst, max_deviation(got, expected));
                }
            }
        }
    }
    EXPECT_LT(worst, kTol);
}

TEST(StandardGate, UnitaryAndHadamardEntries) {
    for (auto label : kAllGateLabels) {
        const auto g = standard_gate(label);
        EXPECT_EQ(g.arity(), gate_arity(label));
        const auto n = g.entries().rows();
        EXPECT_LT((g.entries().adjoint() * g.entries() - AmplitudeMatrix<double>::Identity(n, n)).cwiseAbs().maxCoeff(),
                  kTol);
    }
    const auto h = standard_gate(GateLabel::Hadamard).entries();
    for (Eigen::Index i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(h(i)), kInvSqrt2, kTol);
    const auto hh = h * h;
    EXPECT_LT((hh - AmplitudeMatrix<double>::Identity(2, 2)).cwiseAbs().maxCoeff(), kTol);
}

TEST(StandardGate, NonUnitaryRejected) {
    AmplitudeMatrix<double> m(2, 2);
    m << 1, 1, 0, 1;
    EXPECT_THROW(GateMatrix(GateLabel::PauliX, m), std::domain_error);
    EXPECT_THROW(standard_gate(static_cast<GateLabel>(42)), std::domain_error);
}

TEST(StandardGate, ParseLabels) {
    EXPECT_EQ(parse_gate_label("hadamard"), GateLabel::Hadamard);
    EXPECT_EQ(parse_gate_label("PauliX"), GateLabel::PauliX);
    EXPECT_EQ(parse_gate_label("CSwap"), GateLabel::CSwap);
    EXPECT_FALSE(parse_gate_label("Toffoli").has_value());
}

TEST(TensorProduct, Examples) {
    const auto zero = StateVector::basis(1, 0);
    const auto one = StateVector::basis(1, 1);
    EXPECT_EQ(tensor_product(zero, one), StateVector::basis(2, 0b01));
    EXPECT_EQ(tensor_product(one, one), StateVector::basis(2, 0b11));
    auto pz = tensor_product(plus(), zero);
    EXPECT_LT(max_deviation(pz, make({kInvSqrt2, 0, kInvSqrt2, 0})), kTol);
    EXPECT_THROW(tensor_product(StateVector::basis(2, 0), StateVector::basis(2, 0)), std::domain_error);
}

TEST(BellPsiPlus, AmplitudesAndBranches) {
    const auto bell = bell_psi_plus();
    EXPECT_LT(max_deviation(bell, make({0, kInvSqrt2, kInvSqrt2, 0})), kTol);
    auto p = probabilities(bell);
    EXPECT_NEAR(p[0], 0.0, kTol);
    EXPECT_NEAR(p[1], 0.5, kTol);
    EXPECT_NEAR(p[2], 0.5, kTol);
    EXPECT_NEAR(p[3], 0.0, kTol);
}

TEST(MeasureAll, BasisStateIsDeterministic) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RandomSource rng(seed);
        auto r = measure_all(StateVector::basis(1, 0), rng);
        EXPECT_EQ(r.outcome, 0U);
        EXPECT_EQ(r.collapsed, StateVector::basis(1, 0));
    }
}

TEST(MeasureAll, ReproducibleForSeed) {
    RandomSource a(7);
    RandomSource b(7);
    for (int i = 0; i < 50; ++i) {
        auto ra = measure_all(plus(), a);
        auto rb = measure_all(plus(), b);
        EXPECT_EQ(ra.outcome, rb.outcome);
        EXPECT_EQ(ra.collapsed, rb.collapsed);
        EXPECT_EQ(ra.prior_probabilities, rb.prior_probabilities);
    }
    EXPECT_EQ(a, b);
}

TEST(MeasureAll, BornFrequency) {
    RandomSource rng(12345);
    int zeros = 0;
    for (int i = 0; i < 10000; ++i) zeros += measure_all(plus(), rng).outcome == 0 ? 1 : 0;
    const double f = zeros / 10000.0;
    EXPECT_GE(f, 0.48);
    EXPECT_LE(f, 0.52);
}

TEST(MeasureAll, CollapsedHasSingleUnitAmplitude) {
    std::mt19937_64 gen(3);
    RandomSource rng(3);
    for (int n = 1; n <= 3; ++n) {
        for (int t = 0; t < 100; ++t) {
            auto r = measure_all(from_oracle(oracle::random_state(gen, n)), rng);
            int ones = 0;
            for (std::size_t i = 0; i < r.collapsed.size(); ++i) ones += std::abs(r.collapsed[i]) == 1.0 ? 1 : 0;
            EXPECT_EQ(ones, 1);
            double sum = 0;
            for (double p : r.prior_probabilities) sum += p;
            EXPECT_NEAR(sum, 1.0, kTol);
        }
    }
}

TEST(MeasureQubit, PsiPlusBranches) {
    bool saw[2] = {false, false};
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        RandomSource rng(seed);
        auto r = measure_qubit(bell_psi_plus(), 0, rng);
        saw[r.outcome] = true;
        const auto expected = r.outcome == 1 ? StateVector::basis(2, 0b10) : StateVector::basis(2, 0b01);
        EXPECT_LT(max_deviation(r.collapsed, expected), kTol);
    }
    EXPECT_TRUE(saw[0]);
    EXPECT_TRUE(saw[1]);
}

TEST(MeasureQubit, ProductStateKeepsOtherQubit) {
    // marginal and conditional by brute-force enumeration of the 4 basis states
    const auto product = tensor_product(StateVector::basis(1, 0), plus());
    double p0 = 0;
    for (std::size_t i = 0; i < 4; ++i) p0 += ((i >> 1) & 1U) == 0 ? std::norm(product[i]) : 0.0;
    ASSERT_NEAR(p0, 1.0, kTol);
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
        RandomSource rng(seed);
        auto r = measure_qubit(product, 0, rng);
        EXPECT_EQ(r.outcome, 0U);
        EXPECT_LT(max_deviation(r.collapsed, product), kTol);
    }
}

TEST(MeasureQubit, IndexOutOfRange) {
    RandomSource rng(1);
    EXPECT_THROW(measure_qubit(bell_psi_plus(), 2, rng), std::domain_error);
    EXPECT_THROW(measure_qubit(bell_psi_plus(), -1, rng), std::domain_error);
}

// Property suite over randomized states.

TEST(Properties, NormalizationAndInvolutions) {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto x = standard_gate(GateLabel::PauliX);
    const auto h = standard_gate(GateLabel::Hadamard);
    double worst = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + trial % 3;
        const auto s = from_oracle(oracle::random_state(gen, n));
        const int q = int(gen() % std::uint64_t(n));
        auto xx = apply_gate(apply_gate(s, x, {q}), x, {q});
        auto hh = apply_gate(apply_gate(s, h, {q}), h, {q});
        worst = std::max({worst, max_deviation(xx, s), max_deviation(hh, s)});
        for (auto label : kAllGateLabels) {
            if (gate_arity(label) > n) continue;
            std::vector<int> targets(std::size_t(gate_arity(label)));
            for (int j = 0; j < gate_arity(label); ++j) targets[std::size_t(j)] = j;
            auto out = apply_gate(s, standard_gate(label), std::span<const int>(targets));
            worst = std::max(worst, std::abs(out.amplitudes().norm() - 1.0));
        }
        auto slider = state_from_slider(unit(gen));
        worst = std::max(worst, std::abs(probabilities(slider).sum() - 1.0));
    }
    EXPECT_LT(worst, kTol);
}

TEST(Properties, AntiCorrelationSweep) {
    int left_tail = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        RandomSource rng(seed);
        auto first = measure_qubit(bell_psi_plus(), 0, rng);
        auto second = measure_qubit(first.collapsed, 1, rng);
        ASSERT_NE(first.outcome, second.outcome) << "seed " << seed;
        left_tail += int(first.outcome);
    }
    EXPECT_NEAR(left_tail / 10000.0, 0.5, 0.02);
}

TEST(RandomSource, UniformRangeAndDeterminism) {
    RandomSource a(42);
    RandomSource b(42);
    RandomSource c(43);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_EQ(u, b.uniform());
        differs = differs || (u != c.uniform());
    }
    EXPECT_TRUE(differs);
    EXPECT_EQ(a.draws(), 1000U);
}

TEST(RandomSource, MatchesStandardMt19937Sequence) {
    // 10000th output of a default-seeded mt19937_64 is fixed by the C++ standard
    RandomSource rng(5489);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) x = rng.next_u64();
    EXPECT_EQ(x, 9981545732273789042ULL);
}
