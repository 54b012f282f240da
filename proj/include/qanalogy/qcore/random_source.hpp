#ifndef QANALOGY_QCORE_RANDOM_SOURCE_HPP
#define QANALOGY_QCORE_RANDOM_SOURCE_HPP

#include <cstdint>
#include <random>

namespace qanalogy::qcore {

/// Seeded draw stream backed by std::mt19937_64.
///
/// The engine's output sequence is fixed by the C++ standard, and uniform()
/// converts raw words itself instead of going through a std distribution, so
/// a given seed yields the same draws on every platform.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t draws() const { return draws_; }

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 bits of resolution.
    double uniform();

    friend bool operator==(const RandomSource&, const RandomSource&) = default;

  private:
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
    std::mt19937_64 engine_;
};

}  // namespace qanalogy::qcore

#endif  // QANALOGY_QCORE_RANDOM_SOURCE_HPP
