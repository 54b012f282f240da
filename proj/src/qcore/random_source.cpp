#include "qanalogy/qcore/random_source.hpp"

namespace qanalogy::qcore {

std::uint64_t RandomSource::next_u64() {
    ++draws_;
    return engine_();
}

double RandomSource::uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

}  // namespace qanalogy::qcore
