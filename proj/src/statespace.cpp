#include "authsim/statespace.hpp"

#include <cmath>
#include <utility>

namespace authsim::statespace {

namespace {

/// exp(z) - 1 without cancellation for small |z|.
Complex cexpm1(Complex z) {
    if (std::abs(z) < 1e-4) {
        return z * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0))));
    }
    return std::exp(z) - 1.0;
}

void require_hermitian_psd(const CMat& m, const char* name) {
    if (!linalg::is_hermitian(m, 1e-10)) {
        throw DomainError(std::string(name) + " is not Hermitian within tolerance");
    }
    if (linalg::min_eigenvalue(m) < -1e-10) {
        throw DomainError(std::string(name) + " is not positive semidefinite");
    }
}

}  // namespace

StateSpaceModel::StateSpaceModel(CMat a, CMat u, std::vector<CMat> outputs, CMat n)
    : a_(std::move(a)), u_(std::move(u)), n_(std::move(n)), c_(std::move(outputs)) {
    const Eigen::Index dim = a_.rows();
    if (a_.cols() != dim) throw DimensionMismatch("state matrix must be square");
    if (u_.rows() != dim || u_.cols() != dim) {
        throw DimensionMismatch("input-noise covariance does not match the state dimension");
    }
    require_hermitian_psd(u_, "input-noise covariance");
    u_ = linalg::hermitize(u_);
    const Eigen::Index m = n_.rows();
    if (n_.cols() != m) throw DimensionMismatch("output-noise covariance must be square");
    require_hermitian_psd(n_, "output-noise covariance");
    n_ = linalg::hermitize(n_);
    for (const CMat& c : c_) {
        if (c.rows() != m || c.cols() != dim) {
            throw DimensionMismatch("output matrix dimensions do not match");
        }
    }

    Eigen::ComplexEigenSolver<CMat> es(a_);
    if (es.info() != Eigen::Success) throw NonDiagonalizable("eigendecomposition failed");
    w_ = es.eigenvectors();
    lambda_ = es.eigenvalues();
    w_inv_ = w_.fullPivLu().solve(CMat::Identity(dim, dim));
    const double a_norm = a_.norm();
    const double residual = (w_ * lambda_.asDiagonal() * w_inv_ - a_).norm();
    if (residual > 1e-8 * (a_norm > 0 ? a_norm : 1.0)) {
        throw NonDiagonalizable("eigendecomposition residual exceeds tolerance");
    }
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (lambda_(i).real() >= 0.0) throw Unstable("state matrix has a non-negative eigenvalue");
    }

    const CMat g = w_inv_ * u_ * w_inv_.adjoint();
    xddot_.resize(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            xddot_(i, j) = -g(i, j) / (lambda_(i) + std::conj(lambda_(j)));
        }
    }
    x_ = linalg::hermitize(w_ * xddot_ * w_.adjoint());

    output_noise_ = linalg::CovSampler(n_);
    stationary_ = linalg::CovSampler(x_);
}

const CMat& StateSpaceModel::c(std::size_t g) const {
    if (g >= c_.size()) throw UnknownSensor("sensor index out of range");
    return c_[g];
}

Transition StateSpaceModel::transition(double dt) const {
    if (dt < 0.0) throw DomainError("transition: dt must be >= 0");
    const Eigen::Index dim = a_.rows();
    CVec phase(dim);
    for (Eigen::Index i = 0; i < dim; ++i) phase(i) = std::exp(lambda_(i) * dt);
    Transition t;
    t.phi = w_ * phase.asDiagonal() * w_inv_;
    CMat decayed(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            // X - X^{(dt)} entrywise in the eigenbasis: -expm1((l_i+l_j*)dt) Xddot_ij
            decayed(i, j) = -cexpm1((lambda_(i) + std::conj(lambda_(j))) * dt) * xddot_(i, j);
        }
    }
    t.qdt = linalg::hermitize(w_ * decayed * w_.adjoint());
    return t;
}

StateSample StateSpaceModel::initial_sample(rng::Stream& stream, double t) const {
    return {stationary_.draw(stream), t};
}

StateSample StateSpaceModel::evolve(const StateSample& s, double dt, rng::Stream& stream) const {
    if (dt == 0.0) return s;
    const Transition tr = transition(dt);
    const linalg::CovSampler noise(tr.qdt);
    return {tr.phi * s.x + noise.draw(stream), s.t + dt};
}

CVec StateSpaceModel::sample_output(std::size_t g, const StateSample& s, rng::Stream& stream) const {
    return c(g) * s.x + output_noise_.draw(stream);
}

EvolutionOp::EvolutionOp(const StateSpaceModel& model, double dt)
    : dt_(dt), trans_(model.transition(dt)), noise_(trans_.qdt) {}

StateSample EvolutionOp::apply(const StateSample& s, rng::Stream& stream) const {
    if (dt_ == 0.0) return s;
    return {trans_.phi * s.x + noise_.draw(stream), s.t + dt_};
}

}  // namespace authsim::statespace
