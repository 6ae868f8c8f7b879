#pragma once

#include "authsim/adversary.hpp"
#include "authsim/kalman.hpp"
#include "authsim/types.hpp"

namespace authsim::engine {

enum class Method { ChiSquare, Gaussian, Asymptotic };

struct ThresholdPair {
    double eta_p = 0.0;
    double eta_c = 0.0;
};

struct MethodConfig {
    Method method = Method::ChiSquare;
    double alpha = 0.5;  // chi-square eigenvalue-surrogate design parameter
};

struct DecisionProbabilities {
    double p_tn = 0.0;
    double p_fn_1 = 0.0;
    double p_fn_2 = 0.0;
};

/// Weight matrix V = (C Zhat C^H + N)^{-1} for the quadratic-form test.
CMat weight_matrix(const kalman::GaussianBelief& predicted,
                   const statespace::StateSpaceModel& model, std::size_t g);

/// s = e^H V e (real, non-negative).
double test_statistic(const CVec& e, const CMat& v);

/// H0 (accept) iff both statistics are strictly below their thresholds;
/// ties reject.
bool decide_h0(double s_p, double s_c, const ThresholdPair& thr);

/// Eigenvalue surrogate Lbar = ((1/M) sum mu_i^alpha)^{1/alpha} over the
/// spectrum of V*cov (computed from the Hermitian similarity form).
double chi_square_lbar(const CMat& v, const CMat& cov, double alpha);

/// Acceptance probability P[s < eta] under the noncentral chi-square model
/// with surrogate variance lbar and noncentrality quad = e_mean^H V e_mean.
double chi_square_accept_prob(int m, double lbar, double e_mean_quad, double eta);

struct GaussianMoments {
    double mean = 0.0;
    double var = 0.0;
};

/// Moments of s = e^H V e for e ~ CN(e_mean, cov):
///   mean = tr(V cov) + e_mean^H V e_mean
///   var  = tr((V cov)^2) + 2 e_mean^H V cov V e_mean
GaussianMoments gaussian_branch_stats(const CMat& v, const CMat& cov, const CVec& e_mean);

/// Acceptance P[s <= eta] for s ~ N(mean, var); a degenerate branch
/// (var <= 0) falls back to the step function 1{eta > mean}.
double gaussian_accept_prob(double s_mean, double s_var, double eta);

/// Channel-hardening variant: the innovation-mean offset is replaced by its
/// distribution, folding cov_e_mean into the covariance and dropping the
/// realized offset.
GaussianMoments asymptotic_branch_stats(const CMat& v, const CMat& attack_cov,
                                        const CMat& cov_e_mean);

/// Per-branch inputs for the analytic approximations. m == 0 disables the
/// branch (acceptance probability 1, statistic skipped).
struct BranchInput {
    int m = 0;
    CMat v;
    CVec e_mean;       // innovation mean: dist.mean - C zhat (zero if legitimate)
    CMat cov;          // innovation covariance (legit: C Zhat C^H + N; attack: Ytilde)
    CMat cov_e_mean;   // (C~ - C) mean_cov (C~ - C)^H; zero for legitimate branches
};

BranchInput make_branch_input(const kalman::GaussianBelief& predicted,
                              const statespace::StateSpaceModel& model, std::size_t g,
                              const CMat& v, const adversary::BranchDistribution& dist);

/// Branch summary under one approximation method.
struct BranchStats {
    Method method = Method::ChiSquare;
    int m = 0;
    bool disabled = false;
    double lbar = 1.0;   // chi-square only
    double quad = 0.0;   // chi-square only
    double s_mean = 0.0;  // gaussian/asymptotic
    double s_var = 0.0;
};

BranchStats branch_stats(const MethodConfig& cfg, const BranchInput& input);

double accept_prob(const BranchStats& stats, double eta);

struct OriginBranchStats {
    BranchStats process;
    BranchStats channel;
};

/// Joint acceptance probabilities: each transmitter's probability is the
/// product of its two branch acceptance probabilities (the two measurements
/// are uncorrelated).
DecisionProbabilities decision_probabilities(const OriginBranchStats& legitimate,
                                             const OriginBranchStats& attacker1,
                                             const OriginBranchStats& attacker2,
                                             const ThresholdPair& thr);

}  // namespace authsim::engine
