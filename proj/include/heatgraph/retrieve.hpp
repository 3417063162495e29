#pragma once

#include "heatgraph/graph.hpp"
#include "heatgraph/simulate.hpp"

namespace heatgraph {

enum class NoiseCorrection { paper, none };
enum class ProjectionMode { on, off };

struct RetrievalConfig {
    double dt = 0.0;
    NoiseCorrection noise_correction = NoiseCorrection::paper;
    double ridge_eps = 1e-8;
    ProjectionMode projection = ProjectionMode::on;
    ProjectionExponent projection_exponent = ProjectionExponent::as_derived;
};

struct RetrievalDiagnostics {
    double condition_number = 0.0;   // cond_2 of the inverted moment matrix
    double discarded_imag_max = 0.0; // from the matrix logarithm
    bool log_branch_ok = false;
};

struct RetrievalResult {
    Matrix laplacian_raw;           // -(1/dt) log of the moment ratio, unconstrained
    Laplacian laplacian;            // projected (or symmetrized-only when projection off)
    double alpha = 0.0;             // graph thermal diffusivity, 1/s
    Laplacian normalized_laplacian; // laplacian / alpha (unchanged when alpha = 0)
    RetrievalDiagnostics diagnostics;
};

struct LaggedSplits {
    Matrix x0; // columns 0 .. N_t-2
    Matrix x1; // columns 1 .. N_t-1
};

LaggedSplits lagged_splits(const DataMatrix& x);

/// (1/3) (X1-X0)(X1-X0)^T, the shared estimate of every noise outer product
/// under the sigma*dt ~ sigma' assumption. Symmetric PSD by construction.
Matrix noise_outer_estimate(const Matrix& x0, const Matrix& x1);

/// Core closed-form retrieval on an explicit lagged pair:
///   G = (X1 X0^T + N) (X0 X0^T + 2N + ridge)^{-1},  Lraw = -log(G)/dt,
/// with N the noise estimate (zero when correction is off), then projection.
RetrievalResult retrieve_laplacian_from_pair(const Matrix& x0, const Matrix& x1,
                                             const RetrievalConfig& config);

/// Retrieval from a recorded DataMatrix (lagged splits of consecutive columns).
/// Requires n_steps >= n_channels + 1 so the inverted moment can be full rank.
RetrievalResult retrieve_laplacian(const DataMatrix& x, const RetrievalConfig& config);

/// alpha = spectral norm of the Laplacian, units 1/s.
double graph_thermal_diffusivity(const Laplacian& laplacian);

} // namespace heatgraph
