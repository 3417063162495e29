#pragma once

#include <vector>

#include "heatgraph/simulate.hpp"

namespace heatgraph {

enum class FilterMode { zero_phase, forward_only };

/// Butterworth bandpass specification. `order` is the analog prototype order
/// (the bandpass has 2*order poles). zero_phase runs the filter forward then
/// backward: squared magnitude, no net phase.
struct FilterSpec {
    double low_hz = 0.0;
    double high_hz = 0.0;
    int order = 4;
    FilterMode mode = FilterMode::zero_phase;
};

/// One second-order section, H(z) = (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2).
struct Biquad {
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

// Filter design (bilinear transform with prewarped edges). Exposed for the
// response-oracle tests.
std::vector<Biquad> design_butterworth_bandpass(double low_hz, double high_hz,
                                                double fs, int order);
std::vector<Biquad> design_butterworth_lowpass(double cutoff_hz, double fs, int order);

/// Cascade magnitude response at frequency hz.
double sos_magnitude(const std::vector<Biquad>& sections, double hz, double fs);

DataMatrix butterworth_bandpass(const DataMatrix& x, const FilterSpec& spec);
DataMatrix butterworth_lowpass(const DataMatrix& x, double cutoff_hz, int order,
                               FilterMode mode = FilterMode::zero_phase);

/// Keep every factor-th column starting at 0; dt scales by factor. No
/// anti-alias filtering of its own.
DataMatrix decimate(const DataMatrix& x, int factor);

/// Fixed-length segmentation; trailing partial window discarded. hop equal to
/// length gives non-overlapping windows.
std::vector<DataMatrix> window(const DataMatrix& x, double length_seconds,
                               double hop_seconds);

} // namespace heatgraph
