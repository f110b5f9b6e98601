#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "ipls/interval.hpp"
#include "ipls/system.hpp"

namespace ipls {

/// Componentwise hull of sampled point solutions; a lower bound on the
/// interval hull of the solution set.
struct SampleHull {
    IntervalVector hull_lower_bound;
    std::size_t sample_count = 0;    ///< points requested
    std::size_t singular_count = 0;  ///< points skipped
    std::uint64_t seed = 0;
};

enum class SampleStrategy { Uniform, VerticesPlusUniform };
std::string to_string(SampleStrategy s);
SampleStrategy sample_strategy_from_string(const std::string& s);

/// Samples are drawn in fixed chunks of 4096; chunk c uses an mt19937_64
/// seeded with seed + c * 0x9E3779B97F4A7C15 and maps each output u to
/// (u >> 11) * 2^-53 in [0, 1). With VerticesPlusUniform the first
/// min(count, 2^K) samples are the box vertices in binary order (bit k set
/// means the upper endpoint of parameter k), the rest are uniform.
/// Throws OracleError when more than 1% of the samples are singular.
SampleHull sample_hull(const ParametricLinearSystem& sys, std::size_t count, std::uint64_t seed,
                       SampleStrategy strategy = SampleStrategy::Uniform);

}  // namespace ipls
