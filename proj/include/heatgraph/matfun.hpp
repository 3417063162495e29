#pragma once

#include <Eigen/Dense>

namespace heatgraph {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Dense eigendecomposition, complex in general. For symmetric input the
/// eigenvalues are real and the eigenvector matrix is orthogonal.
struct Spectrum {
    Eigen::VectorXcd eigenvalues;
    Eigen::MatrixXcd eigenvectors; // columns
};

Spectrum spectrum(const Matrix& a);

/// ||M - M^T||_F <= rel_tol * ||M||_F (zero matrix counts as symmetric).
bool is_symmetric(const Matrix& m, double rel_tol = 1e-12);

/// e^{tA}. Symmetric A goes through the spectral factorization; the general
/// case uses Higham-style scaling and squaring with a degree-13 Pade
/// approximant. Relative Frobenius accuracy ~1e-13 for ||tA||_2 <= 10.
Matrix mat_exp(const Matrix& a, double t = 1.0);

struct MatLogResult {
    Matrix value;                    // real part of the principal logarithm
    double discarded_imag_max = 0.0; // largest |imag| dropped from the result
    double eigvec_condition = 1.0;   // cond_2 of the spectral factor
};

/// Principal matrix logarithm via complex spectral factorization, per-eigenvalue
/// principal branch. Eigenvalues on the closed negative real axis make the
/// principal branch undefined (LogUndefined); a near-singular eigenvector
/// matrix raises IllConditioned with the condition estimate.
MatLogResult mat_log_principal_full(const Matrix& m);
Matrix mat_log_principal(const Matrix& m);

/// (M + eps*(trace(M)/n)*I)^{-1}. The trace scaling makes the regularization
/// invariant under global amplitude scaling of M. eps = 0 is the exact inverse
/// and raises SingularMatrix on rank-deficient input.
Matrix ridge_inverse(const Matrix& m, double eps);

/// Largest eigenvalue magnitude of a symmetric matrix. Asymmetry beyond
/// 1e-9 relative Frobenius raises NotSymmetric.
double spectral_norm_sym(const Matrix& m);

} // namespace heatgraph
