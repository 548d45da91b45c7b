#pragma once

#include <cstdint>
#include <random>

namespace gcode {

/// Independent generator for trial `index` under a master seed. Trials can run
/// in any order or on any thread and still see the same stream.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace gcode
