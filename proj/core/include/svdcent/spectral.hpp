#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "svdcent/graph.hpp"

namespace svdcent {

/// How pseudoinverse denominators are stabilized.
///
/// matrix_level replaces B with M = sqrt(lambda)*B + sqrt(1-lambda)*I~ before
/// decomposition, where I~ is the identity-like partial isometry on the range
/// of B (U_r * V_r^T). That choice shifts every positive singular value to
/// sqrt(lambda)*sigma + sqrt(1-lambda) while leaving the kernel alone; a
/// diagonal-of-the-rectangle I~ instead lifts kernel directions into the
/// spectrum and the lifted modes dominate every 1/sigma^2 sum.
///
/// tikhonov decomposes B itself and adds tau to the squared singular values
/// in the denominators. none uses raw 1/sigma^2 over the positive spectrum.
enum class RegularizationMode { none, matrix_level, tikhonov };

struct RegularizationConfig {
    RegularizationMode mode = RegularizationMode::matrix_level;
    double lambda = 0.99; // matrix_level blend; 1 keeps B unchanged
    double tau = 1e-8;    // tikhonov shift, also the score-inversion guard

    /// Throws spectral_error unless lambda is in [0,1] and tau > 0.
    void validate() const;
};

const char* to_string(RegularizationMode mode);
std::optional<RegularizationMode> regularization_mode_from_string(const std::string& name);

/// Compact SVD triple plus rank/truncation metadata. U is n x r with left
/// singular vectors u_k as columns, V is m x r with right singular vectors
/// v_k, sigma holds the retained singular values in non-increasing order.
/// Sign convention: the largest-magnitude entry of each u_k is positive
/// (ties broken toward the lowest index) and v_k follows u_k, so repeated
/// runs produce identical matrices.
struct SpectralDecomposition {
    Eigen::MatrixXd U;
    Eigen::VectorXd sigma;
    Eigen::MatrixXd V;
    Eigen::Index numerical_rank = 0;
    std::optional<Eigen::Index> truncated_to;
    /// sqrt(sum of discarded sigma_i^2); 0 for an untruncated decomposition.
    double frobenius_tail = 0.0;
};

/// Compact SVD keeping singular values above rank_tol * sigma_max * max(n,m).
/// rank_tol defaults to machine epsilon, the standard pseudoinverse cutoff.
/// Degenerate inputs (0 rows or columns, or a zero matrix) yield an empty
/// decomposition with rank 0. Throws spectral_error on non-finite entries.
SpectralDecomposition compact_svd(const IncidenceMatrix& b,
                                  std::optional<double> rank_tol = std::nullopt);

/// Same contract for an arbitrary dense matrix (used on regularized copies).
SpectralDecomposition compact_svd(const Eigen::MatrixXd& matrix,
                                  std::optional<double> rank_tol = std::nullopt);

/// Materializes M = sqrt(lambda)*B + sqrt(1-lambda)*I~ with I~ = U_r V_r^T
/// from the compact SVD of B. lambda=1 returns B unchanged; lambda=0 returns
/// the pure partial isometry. Requires cfg.mode == matrix_level.
Eigen::MatrixXd regularize_incidence(const IncidenceMatrix& b, const RegularizationConfig& cfg);

/// Top-k singular triplets. k >= numerical_rank degrades to compact_svd with
/// a zero tail. Dense inputs truncate an exact decomposition; large sparse
/// inputs use Golub-Kahan-Lanczos bidiagonalization with the tail recovered
/// from the Frobenius identity ||B||_F^2 = sum sigma_i^2.
SpectralDecomposition truncated_svd(const IncidenceMatrix& b, Eigen::Index k);

/// Lanczos path exposed for direct testing against the dense decomposition.
SpectralDecomposition truncated_svd_lanczos(const Eigen::SparseMatrix<double>& b, Eigen::Index k,
                                            std::optional<double> rank_tol = std::nullopt);

enum class PseudoinverseSide { vertex, edge };

/// Diagonal of the pseudoinverse Laplacian: vertex side gives
/// [L0+]_ii = sum_k u_{k,i}^2 / w_k, edge side gives
/// [L1+]_ee = sum_k v_{k,e}^2 / w_k. Weights are w_k = sigma_k^2 for modes
/// none and matrix_level (matrix_level is already baked into the decomposed
/// matrix) and w_k = sigma_k^2 + tau for tikhonov.
Eigen::VectorXd pseudoinverse_diagonal(const SpectralDecomposition& d, PseudoinverseSide side,
                                       const RegularizationConfig& cfg);

/// Full pipeline entry: applies cfg (decomposing the regularized matrix for
/// matrix_level) and optionally truncates to rank k.
SpectralDecomposition decompose(const IncidenceMatrix& b, const RegularizationConfig& cfg,
                                std::optional<Eigen::Index> k = std::nullopt);

} // namespace svdcent
