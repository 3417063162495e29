#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heatgraph/graph.hpp"
#include "heatgraph/rng.hpp"

namespace heatgraph {

/// Multichannel record: values is n_channels x n_steps, one column per sample,
/// columns dt seconds apart. channel_names may be empty.
struct DataMatrix {
    Matrix values;
    double dt = 0.0;
    std::vector<std::string> channel_names;

    Index n_channels() const { return values.rows(); }
    Index n_steps() const { return values.cols(); }
};

/// sigma is the internal (driving) noise scale: per-step internal noise has
/// standard deviation sigma*dt per component. sigma_prime is the measurement
/// noise standard deviation.
struct SimConfig {
    Laplacian laplacian;
    double dt = 0.0;
    double sigma = 0.0;
    double sigma_prime = 0.0;
    long n_steps = 0;
    Vector x0;
    std::uint64_t seed = 0;
    std::vector<std::string> channel_names;
};

struct NoiseStreams {
    GaussianStream internal;
    GaussianStream measurement;

    explicit NoiseStreams(std::uint64_t seed)
        : internal(seed, rng_domain::sim_internal),
          measurement(seed, rng_domain::sim_measurement) {}
};

struct StepResult {
    Vector internal; // next system-internal state, no measurement noise
    Vector observed; // internal + measurement noise
};

/// One sampling interval: internal_next = propagator*(x + e) with
/// e ~ N(0, sigma_dt^2 I), observed = internal_next + e' with
/// e' ~ N(0, sigma_prime^2 I).
StepResult step(const Vector& x, const Matrix& propagator, NoiseStreams& noise,
                double sigma_dt, double sigma_prime);

/// Runs the sampled recursion for n_steps columns. Column 0 is x0 plus a
/// measurement-noise draw; column k is the observed state after k steps.
/// Deterministic for a given config.
DataMatrix simulate(const SimConfig& config);

/// Noise-free solution e^{-tL} x0.
Vector exact_deterministic_solution(const Laplacian& laplacian, const Vector& x0, double t);

} // namespace heatgraph
