#pragma once

#include <cstdint>

namespace heatgraph {

/// Counter-based PRNG: the state is a counter advanced by the splitmix64
/// increment and hashed per draw (Steele et al. mixing constants). Output is
/// reproducible across platforms for a given (seed, domain). Substreams are
/// derived by domain separation so e.g. internal and measurement noise of a
/// simulation never share draws.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t domain = 0) noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_uniform() noexcept;

private:
    std::uint64_t counter_;
};

/// Standard normal draws via Box-Muller on top of CounterRng.
/// Deterministic draw order: two uniforms consumed per pair of normals.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed, std::uint64_t domain = 0) noexcept
        : rng_(seed, domain) {}

    double next() noexcept;

private:
    CounterRng rng_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

namespace rng_domain {
// Fixed substream tags; changing these changes every seeded output.
inline constexpr std::uint64_t sim_internal = 0;
inline constexpr std::uint64_t sim_measurement = 1;
inline constexpr std::uint64_t sim_initial_state = 2;
inline constexpr std::uint64_t graph_generation = 3;
} // namespace rng_domain

} // namespace heatgraph
