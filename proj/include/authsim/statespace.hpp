#pragma once

#include <vector>

#include "authsim/linalg.hpp"
#include "authsim/rng.hpp"
#include "authsim/types.hpp"

namespace authsim::statespace {

struct StateSample {
    CVec x;
    double t = 0.0;
};

/// Exact discretization of the continuous-time model over a step dt:
/// x(t+dt) = phi x(t) + w,  w ~ CN(0, qdt).
struct Transition {
    CMat phi;
    CMat qdt;
};

/// Stable continuous-time Gauss-Markov model
///   dx/dt = A x + u,   u ~ CN(0, U),
///   y_g   = C_g x + n,  n ~ CN(0, N),
/// with A diagonalizable and Re(lambda_i) < 0. The eigendecomposition is
/// cached at construction and drives the stationary covariance and all
/// transition matrices. Immutable after construction.
class StateSpaceModel {
public:
    StateSpaceModel(CMat a, CMat u, std::vector<CMat> outputs, CMat n);

    Eigen::Index state_dim() const { return a_.rows(); }
    Eigen::Index output_dim() const { return n_.rows(); }
    std::size_t sensor_count() const { return c_.size(); }

    const CMat& a() const { return a_; }
    const CMat& u() const { return u_; }
    const CMat& n() const { return n_; }
    const CMat& c(std::size_t g) const;

    const CVec& eigenvalues() const { return lambda_; }
    const CMat& eigenvectors() const { return w_; }

    /// Stationary state covariance X (solution of A X + X A^H + U = 0).
    const CMat& stationary_cov() const { return x_; }

    Transition transition(double dt) const;

    StateSample initial_sample(rng::Stream& stream, double t = 0.0) const;
    StateSample evolve(const StateSample& s, double dt, rng::Stream& stream) const;
    CVec sample_output(std::size_t g, const StateSample& s, rng::Stream& stream) const;

private:
    CMat a_, u_, n_;
    std::vector<CMat> c_;
    CMat w_, w_inv_;
    CVec lambda_;
    CMat xddot_;  // W^{-1} U W^{-H} scaled by -1/(lambda_i + conj(lambda_j))
    CMat x_;
    linalg::CovSampler output_noise_;
    linalg::CovSampler stationary_;
};

/// Precomputed fixed-step evolution (transition + factored process noise),
/// for hot loops that advance many samples by the same dt.
class EvolutionOp {
public:
    EvolutionOp(const StateSpaceModel& model, double dt);

    double dt() const { return dt_; }
    const Transition& transition() const { return trans_; }

    StateSample apply(const StateSample& s, rng::Stream& stream) const;

private:
    double dt_;
    Transition trans_;
    linalg::CovSampler noise_;
};

}  // namespace authsim::statespace
