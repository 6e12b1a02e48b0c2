#include "svdcent/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/SVD>

namespace svdcent {

void RegularizationConfig::validate() const {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw spectral_error("lambda must lie in [0,1], got " + std::to_string(lambda));
    if (!(tau > 0.0))
        throw spectral_error("tau must be positive, got " + std::to_string(tau));
}

const char* to_string(RegularizationMode mode) {
    switch (mode) {
    case RegularizationMode::none:
        return "none";
    case RegularizationMode::matrix_level:
        return "matrix";
    case RegularizationMode::tikhonov:
        return "tikhonov";
    }
    return "unknown";
}

std::optional<RegularizationMode> regularization_mode_from_string(const std::string& name) {
    if (name == "none")
        return RegularizationMode::none;
    if (name == "matrix" || name == "matrix_level")
        return RegularizationMode::matrix_level;
    if (name == "tikhonov")
        return RegularizationMode::tikhonov;
    return std::nullopt;
}

namespace {

/// Largest-magnitude entry of each left vector made positive, ties toward
/// the lowest index; the paired right vector flips with it so B v_k stays
/// equal to sigma_k u_k.
void apply_sign_convention(Eigen::MatrixXd& U, Eigen::MatrixXd& V) {
    for (Eigen::Index k = 0; k < U.cols(); ++k) {
        Eigen::Index pivot = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < U.rows(); ++i) {
            const double magnitude = std::abs(U(i, k));
            if (magnitude > best) {
                best = magnitude;
                pivot = i;
            }
        }
        if (U(pivot, k) < 0.0) {
            U.col(k) *= -1.0;
            V.col(k) *= -1.0;
        }
    }
}

SpectralDecomposition empty_decomposition(Eigen::Index n, Eigen::Index m) {
    SpectralDecomposition d;
    d.U = Eigen::MatrixXd::Zero(n, 0);
    d.sigma = Eigen::VectorXd::Zero(0);
    d.V = Eigen::MatrixXd::Zero(m, 0);
    d.numerical_rank = 0;
    return d;
}

SpectralDecomposition svd_of_dense(const Eigen::MatrixXd& matrix, std::optional<double> rank_tol) {
    if (!matrix.allFinite())
        throw spectral_error("matrix has non-finite entries");
    const Eigen::Index n = matrix.rows();
    const Eigen::Index m = matrix.cols();
    if (n == 0 || m == 0)
        return empty_decomposition(n, m);

    // Jacobi is the most accurate dense kernel and cheap at small sizes;
    // divide-and-conquer takes over when either dimension grows.
    Eigen::MatrixXd U, V;
    Eigen::VectorXd values;
    if (std::min(n, m) <= 32) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
        U = svd.matrixU();
        V = svd.matrixV();
        values = svd.singularValues();
    } else {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
        U = svd.matrixU();
        V = svd.matrixV();
        values = svd.singularValues();
    }

    const double tol = rank_tol.value_or(std::numeric_limits<double>::epsilon());
    const double sigma_max = values.size() > 0 ? values(0) : 0.0;
    const double cutoff = tol * sigma_max * static_cast<double>(std::max(n, m));
    Eigen::Index r = 0;
    while (r < values.size() && values(r) > cutoff)
        ++r;
    if (r == 0)
        return empty_decomposition(n, m);

    SpectralDecomposition d;
    d.U = U.leftCols(r);
    d.sigma = values.head(r);
    d.V = V.leftCols(r);
    d.numerical_rank = r;
    apply_sign_convention(d.U, d.V);
    return d;
}

SpectralDecomposition truncate_decomposition(SpectralDecomposition d, Eigen::Index k) {
    const Eigen::Index kept = std::min(k, d.numerical_rank);
    double tail_sq = 0.0;
    for (Eigen::Index i = kept; i < d.numerical_rank; ++i)
        tail_sq += d.sigma(i) * d.sigma(i);
    d.U = d.U.leftCols(kept).eval();
    d.sigma = d.sigma.head(kept).eval();
    d.V = d.V.leftCols(kept).eval();
    d.numerical_rank = kept;
    d.truncated_to = kept;
    d.frobenius_tail = std::sqrt(tail_sq);
    return d;
}

} // namespace

SpectralDecomposition compact_svd(const Eigen::MatrixXd& matrix, std::optional<double> rank_tol) {
    return svd_of_dense(matrix, rank_tol);
}

SpectralDecomposition compact_svd(const IncidenceMatrix& b, std::optional<double> rank_tol) {
    return svd_of_dense(b.dense(), rank_tol);
}

Eigen::MatrixXd regularize_incidence(const IncidenceMatrix& b, const RegularizationConfig& cfg) {
    cfg.validate();
    if (cfg.mode != RegularizationMode::matrix_level)
        throw spectral_error("regularize_incidence requires matrix_level mode");
    const Eigen::MatrixXd dense = b.dense();
    if (cfg.lambda == 1.0)
        return dense;
    const SpectralDecomposition base = compact_svd(dense);
    Eigen::MatrixXd identity_like;
    if (base.numerical_rank == 0)
        identity_like = Eigen::MatrixXd::Zero(dense.rows(), dense.cols());
    else
        identity_like = base.U * base.V.transpose();
    return std::sqrt(cfg.lambda) * dense + std::sqrt(1.0 - cfg.lambda) * identity_like;
}

SpectralDecomposition truncated_svd(const IncidenceMatrix& b, Eigen::Index k) {
    if (k < 1)
        throw spectral_error("truncation rank must be at least 1, got " + std::to_string(k));
    if (!b.is_dense())
        return truncated_svd_lanczos(b.sparse(), k);
    return truncate_decomposition(compact_svd(b), k);
}

namespace {

/// Re-orthogonalizes v against the first `count` columns of basis (twice:
/// classical Gram-Schmidt loses orthogonality in single precision steps).
void reorthogonalize(Eigen::VectorXd& v, const Eigen::MatrixXd& basis, Eigen::Index count) {
    for (int pass = 0; pass < 2; ++pass)
        if (count > 0)
            v.noalias() -= basis.leftCols(count) * (basis.leftCols(count).transpose() * v);
}

} // namespace

SpectralDecomposition truncated_svd_lanczos(const Eigen::SparseMatrix<double>& b, Eigen::Index k,
                                            std::optional<double> rank_tol) {
    if (k < 1)
        throw spectral_error("truncation rank must be at least 1, got " + std::to_string(k));
    const Eigen::Index n = b.rows();
    const Eigen::Index m = b.cols();
    if (n == 0 || m == 0)
        return empty_decomposition(n, m);

    const double frob_sq = b.squaredNorm();
    if (frob_sq == 0.0)
        return empty_decomposition(n, m);

    // Golub-Kahan bidiagonalization with full reorthogonalization. The
    // Krylov space is padded past k so clustered singular values converge;
    // the pad is capped by the exact maximum rank.
    const Eigen::Index max_rank = std::min(n, m);
    const Eigen::Index steps = std::min(max_rank, std::max<Eigen::Index>(2 * k + 10, k + 15));

    Eigen::MatrixXd P(m, steps); // right Lanczos vectors
    Eigen::MatrixXd Q(n, steps); // left Lanczos vectors
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(steps);
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(steps);

    // Deterministic start vector: a fixed-seed Gaussian draw avoids starting
    // inside the kernel, which the all-ones vector does for oriented rows.
    std::mt19937 rng(0x51a3c0de);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd v(m);
    for (Eigen::Index i = 0; i < m; ++i)
        v(i) = gauss(rng);
    v.normalize();

    Eigen::Index built = 0;
    Eigen::VectorXd u(n);
    for (Eigen::Index j = 0; j < steps; ++j) {
        P.col(j) = v;
        u.noalias() = b * v;
        if (j > 0)
            u.noalias() -= beta(j - 1) * Q.col(j - 1);
        reorthogonalize(u, Q, j);
        alpha(j) = u.norm();
        if (alpha(j) == 0.0) {
            built = j;
            break;
        }
        u /= alpha(j);
        Q.col(j) = u;

        v.noalias() = b.transpose() * u;
        v.noalias() -= alpha(j) * P.col(j);
        reorthogonalize(v, P, j + 1);
        beta(j) = v.norm();
        built = j + 1;
        if (beta(j) == 0.0)
            break;
        v /= beta(j);
    }

    if (built == 0)
        return empty_decomposition(n, m);

    // SVD of the upper-bidiagonal projection: alpha on the diagonal, beta on
    // the superdiagonal of the (built x built) core matrix.
    Eigen::MatrixXd bidiagonal = Eigen::MatrixXd::Zero(built, built);
    for (Eigen::Index j = 0; j < built; ++j) {
        bidiagonal(j, j) = alpha(j);
        if (j + 1 < built)
            bidiagonal(j, j + 1) = beta(j);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> core(bidiagonal, Eigen::ComputeThinU | Eigen::ComputeThinV);

    const double tol = rank_tol.value_or(std::numeric_limits<double>::epsilon());
    const double cutoff =
        tol * core.singularValues()(0) * static_cast<double>(std::max(n, m));
    Eigen::Index usable = 0;
    while (usable < built && core.singularValues()(usable) > cutoff)
        ++usable;
    const Eigen::Index kept = std::min(k, usable);
    if (kept == 0)
        return empty_decomposition(n, m);

    SpectralDecomposition d;
    d.U = Q.leftCols(built) * core.matrixU().leftCols(kept);
    d.sigma = core.singularValues().head(kept);
    d.V = P.leftCols(built) * core.matrixV().leftCols(kept);
    d.numerical_rank = kept;
    d.truncated_to = kept;
    // Frobenius identity ||B||_F^2 = sum_i sigma_i^2 recovers the discarded
    // energy without forming the residual; clamp guards rounding.
    const double tail_sq = std::max(0.0, frob_sq - d.sigma.squaredNorm());
    d.frobenius_tail = std::sqrt(tail_sq);
    apply_sign_convention(d.U, d.V);
    return d;
}

Eigen::VectorXd pseudoinverse_diagonal(const SpectralDecomposition& d, PseudoinverseSide side,
                                       const RegularizationConfig& cfg) {
    cfg.validate();
    const Eigen::MatrixXd& basis = side == PseudoinverseSide::vertex ? d.U : d.V;
    Eigen::ArrayXd weights = d.sigma.array().square();
    if (cfg.mode == RegularizationMode::tikhonov)
        weights += cfg.tau;
    if (d.numerical_rank == 0)
        return Eigen::VectorXd::Zero(basis.rows());
    return (basis.array().square().rowwise() * weights.inverse().transpose()).rowwise().sum();
}

SpectralDecomposition decompose(const IncidenceMatrix& b, const RegularizationConfig& cfg,
                                std::optional<Eigen::Index> k) {
    cfg.validate();
    if (cfg.mode == RegularizationMode::matrix_level) {
        SpectralDecomposition d = compact_svd(regularize_incidence(b, cfg));
        if (k)
            d = truncate_decomposition(std::move(d), *k);
        return d;
    }
    if (k)
        return truncated_svd(b, *k);
    return compact_svd(b);
}

} // namespace svdcent
