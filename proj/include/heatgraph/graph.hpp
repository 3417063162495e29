#pragma once

#include <cstdint>

#include "heatgraph/matfun.hpp"

namespace heatgraph {

/// L = D - A for an undirected non-negative graph. Valid instances are
/// symmetric, PSD, have non-positive off-diagonals and zero row sums; entries
/// are rates (1/s) when the adjacency is rate-scaled.
struct Laplacian {
    Matrix mat;

    Index n() const { return mat.rows(); }
};

/// Degrees and adjacency split out of a raw (unconstrained) Laplacian:
/// degrees = diag(Lraw), adjacency = diag(degrees) - Lraw with zero diagonal.
/// Neither is guaranteed valid until projected.
struct RawAdjacency {
    Vector degrees;
    Matrix adjacency;
};

/// How the degree-mixing scale enters the projected adjacency. The mixing
/// matrix De already contains a square root; `as_derived` applies
/// A~ = De*A*De, which hits the degree target (D + D_s+)/2 in the homogeneous
/// case. `as_printed` applies a further half power, A~ = De^{1/2}*A*De^{1/2}.
enum class ProjectionExponent { as_derived, as_printed };

/// L = diag(A*1) - A. Degrees use compensated summation so rows of the result
/// cancel exactly. Input must be a valid adjacency (square, finite, symmetric,
/// non-negative, zero diagonal).
Laplacian laplacian_from_adjacency(const Matrix& adjacency);

RawAdjacency adjacency_from_raw_laplacian(const Matrix& lraw);

/// Projection of an arbitrary square matrix onto valid graph Laplacians:
/// symmetrize the split-out adjacency, clamp negatives to zero, then rescale
/// by the degree-mixing factors sqrt((max(D,0) + D_s+) / (2 D_s+)) (isolated
/// nodes keep scale 1). Idempotent on valid Laplacians.
Laplacian project_to_valid_laplacian(const Matrix& lraw,
                                     ProjectionExponent exponent = ProjectionExponent::as_derived);

/// Validity probe used by tests and loaders.
bool is_valid_laplacian(const Matrix& m, double tol = 1e-9);

// Graph constructors (unit edge weights). erdos_renyi draws each edge with
// probability p from the seeded graph-generation stream.
Matrix ring_adjacency(Index n);
Matrix complete_adjacency(Index n);
Matrix erdos_renyi_adjacency(Index n, double p, std::uint64_t seed);

} // namespace heatgraph
