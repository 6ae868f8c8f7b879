#pragma once

#include <utility>

#include "authsim/statespace.hpp"
#include "authsim/types.hpp"

namespace authsim::kalman {

/// Kalman state estimate. t_last is the timestamp of the most recently
/// authenticated packet; -1 means "no packet yet", in which case the belief
/// is the stationary prior (mean 0, cov X) and prediction is the identity.
/// mean_cov tracks the variance of the estimate's mean (used only by the
/// channel-hardening approximation; starts at zero).
struct GaussianBelief {
    CVec mean;
    CMat cov;
    double t_last = -1.0;
    CMat mean_cov;
};

struct Innovation {
    CVec e;
    CMat cov_e;
};

struct InnovationStats {
    CMat cov_e;          // C Zhat C^H + N
    CMat cov_e_mean;     // (Ct - C) mean_cov (Ct - C)^H
};

GaussianBelief initial_belief(const statespace::StateSpaceModel& model);

/// Propagate a posterior belief at t_last to a prior at time t.
GaussianBelief predict(const GaussianBelief& b, const statespace::StateSpaceModel& model, double t);

/// Same, with a caller-cached transition for the step t - t_last.
GaussianBelief predict_with(const GaussianBelief& b, const statespace::Transition& tr, double t);

/// Measurement update at time t with sensor g's output y. The belief must
/// already be predicted to t. Returns the posterior and the innovation.
std::pair<GaussianBelief, Innovation> update(const GaussianBelief& b,
                                             const statespace::StateSpaceModel& model,
                                             std::size_t g, const CVec& y, double t,
                                             bool joseph_form = false);

/// Innovation covariance and the covariance of the innovation's mean under
/// an adversary with knowledge matrix c_tilde (0 or C).
InnovationStats innovation_stats(const GaussianBelief& b,
                                 const statespace::StateSpaceModel& model, std::size_t g,
                                 const CMat& c_tilde);

}  // namespace authsim::kalman
