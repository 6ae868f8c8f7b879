#pragma once

#include <cmath>

#include "authsim/rng.hpp"
#include "authsim/types.hpp"

namespace authsim::linalg {

/// Force exact Hermitian symmetry: M <- (M + M^H)/2.
inline CMat hermitize(const CMat& m) { return 0.5 * (m + m.adjoint()); }

inline bool is_hermitian(const CMat& m, double tol = 1e-10) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

/// Smallest eigenvalue of a Hermitian matrix (0 for empty input).
inline double min_eigenvalue(const CMat& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

inline bool is_psd(const CMat& m, double tol = 1e-10) {
    return is_hermitian(m, tol) && min_eigenvalue(m) >= -tol;
}

/// True when all off-diagonal mass is negligible against the diagonal scale.
inline bool is_numerically_diagonal(const CMat& m, double rel_tol = 1e-14) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) return false;
    const double scale = 1.0 + m.diagonal().cwiseAbs().maxCoeff();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i != j && std::abs(m(i, j)) > rel_tol * scale) return false;
        }
    }
    return true;
}

/// Inverse of a Hermitian positive definite matrix via Cholesky, with jitter
/// escalation (1e-12 * trace/n * 10^attempt on the diagonal, 3 attempts)
/// before giving up.
inline CMat inverse_psd_with_jitter(const CMat& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return m;
    const CMat h = hermitize(m);
    const double base = 1e-12 * std::max(h.trace().real() / static_cast<double>(n), 1e-300);
    for (int attempt = 0; attempt < 4; ++attempt) {
        CMat trial = h;
        if (attempt > 0) {
            trial += base * std::pow(10.0, attempt - 1) * CMat::Identity(n, n);
        }
        Eigen::LLT<CMat> llt(trial);
        if (llt.info() == Eigen::Success) {
            return llt.solve(CMat::Identity(n, n));
        }
    }
    throw SingularInnovation("matrix singular beyond jitter escalation");
}

/// Sampler for CN(0, Sigma) with Sigma Hermitian PSD.
///
/// Stores a factor F with F F^H = Sigma; eigenvalues below zero are clipped
/// (construction rejects anything below -1e-10 elsewhere, this only absorbs
/// roundoff). Diagonal covariances use a per-component scale.
class CovSampler {
public:
    CovSampler() = default;

    explicit CovSampler(const CMat& sigma) {
        const Eigen::Index n = sigma.rows();
        dim_ = n;
        if (n == 0) return;
        if (is_numerically_diagonal(sigma)) {
            diag_ = sigma.diagonal().real().cwiseMax(0.0).cwiseSqrt();
            diagonal_ = true;
            return;
        }
        Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(sigma));
        RVec ev = es.eigenvalues().cwiseMax(0.0);
        factor_ = es.eigenvectors() * ev.cwiseSqrt().asDiagonal();
    }

    Eigen::Index dim() const { return dim_; }

    CVec draw(rng::Stream& stream) const {
        CVec xi(dim_);
        for (Eigen::Index i = 0; i < dim_; ++i) xi(i) = stream.cnormal();
        if (diagonal_) return diag_.asDiagonal() * xi;
        if (dim_ == 0) return xi;
        return factor_ * xi;
    }

private:
    Eigen::Index dim_ = 0;
    bool diagonal_ = false;
    RVec diag_;
    CMat factor_;
};

/// Precomputed evaluator for the quadratic form e^H V e with V Hermitian PSD.
///
/// Factors V = F F^H once so each evaluation is a matrix-vector product
/// (or a component-wise scale when V is diagonal).
class QuadForm {
public:
    QuadForm() = default;

    explicit QuadForm(const CMat& v) {
        const Eigen::Index n = v.rows();
        dim_ = n;
        if (n == 0) return;
        if (is_numerically_diagonal(v)) {
            diag_ = v.diagonal().real().cwiseMax(0.0);
            diagonal_ = true;
            return;
        }
        Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(v));
        RVec ev = es.eigenvalues().cwiseMax(0.0);
        factor_adj_ = (es.eigenvectors() * ev.cwiseSqrt().asDiagonal()).adjoint();
    }

    double operator()(const CVec& e) const {
        if (dim_ == 0) return 0.0;
        if (diagonal_) return (diag_.array() * e.array().abs2()).sum();
        return (factor_adj_ * e).squaredNorm();
    }

private:
    Eigen::Index dim_ = 0;
    bool diagonal_ = false;
    RVec diag_;
    CMat factor_adj_;
};

}  // namespace authsim::linalg
