#include "authsim/kalman.hpp"

#include "authsim/linalg.hpp"

namespace authsim::kalman {

GaussianBelief initial_belief(const statespace::StateSpaceModel& model) {
    const Eigen::Index n = model.state_dim();
    GaussianBelief b;
    b.mean = CVec::Zero(n);
    b.cov = model.stationary_cov();
    b.t_last = -1.0;
    b.mean_cov = CMat::Zero(n, n);
    return b;
}

GaussianBelief predict(const GaussianBelief& b, const statespace::StateSpaceModel& model,
                       double t) {
    if (b.t_last < 0.0) return b;  // stationary prior predicts to itself
    if (t < b.t_last) throw TimeReversal("predict: target time precedes the last update");
    if (t == b.t_last) return b;
    return predict_with(b, model.transition(t - b.t_last), t);
}

GaussianBelief predict_with(const GaussianBelief& b, const statespace::Transition& tr, double t) {
    if (b.t_last < 0.0) return b;
    if (t < b.t_last) throw TimeReversal("predict: target time precedes the last update");
    GaussianBelief out;
    out.mean = tr.phi * b.mean;
    out.cov = linalg::hermitize(tr.phi * b.cov * tr.phi.adjoint()) + tr.qdt;
    out.mean_cov = linalg::hermitize(tr.phi * b.mean_cov * tr.phi.adjoint());
    out.t_last = b.t_last;
    return out;
}

std::pair<GaussianBelief, Innovation> update(const GaussianBelief& b,
                                             const statespace::StateSpaceModel& model,
                                             std::size_t g, const CVec& y, double t,
                                             bool joseph_form) {
    if (t < b.t_last) throw TimeReversal("update: measurement time precedes the last update");
    const CMat& c = model.c(g);
    if (y.size() != c.rows()) throw DimensionMismatch("measurement size does not match C");

    const CMat cov_e = linalg::hermitize(c * b.cov * c.adjoint() + model.n());
    const CMat e_inv = linalg::inverse_psd_with_jitter(cov_e);
    const CMat k = b.cov * c.adjoint() * e_inv;

    Innovation innov;
    innov.e = y - c * b.mean;
    innov.cov_e = cov_e;

    GaussianBelief post;
    post.mean = b.mean + k * innov.e;
    if (joseph_form) {
        const CMat ikc = CMat::Identity(b.cov.rows(), b.cov.cols()) - k * c;
        post.cov = linalg::hermitize(ikc * b.cov * ikc.adjoint() + k * model.n() * k.adjoint());
    } else {
        post.cov = linalg::hermitize(b.cov - k * c * b.cov);
    }
    post.mean_cov = linalg::hermitize(b.mean_cov + k * cov_e * k.adjoint());
    post.t_last = t;
    return {std::move(post), std::move(innov)};
}

InnovationStats innovation_stats(const GaussianBelief& b,
                                 const statespace::StateSpaceModel& model, std::size_t g,
                                 const CMat& c_tilde) {
    const CMat& c = model.c(g);
    if (c_tilde.rows() != c.rows() || c_tilde.cols() != c.cols()) {
        throw DimensionMismatch("knowledge matrix dimensions do not match C");
    }
    InnovationStats s;
    s.cov_e = linalg::hermitize(c * b.cov * c.adjoint() + model.n());
    const CMat diff = c_tilde - c;
    s.cov_e_mean = linalg::hermitize(diff * b.mean_cov * diff.adjoint());
    return s;
}

}  // namespace authsim::kalman
