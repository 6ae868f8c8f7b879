#include "authsim/adversary.hpp"

namespace authsim::adversary {

CMat stationary_output_cov(const statespace::StateSpaceModel& model, std::size_t g) {
    const CMat& c = model.c(g);
    return linalg::hermitize(c * model.stationary_cov() * c.adjoint() + model.n());
}

PacketGenerator::PacketGenerator(const statespace::StateSpaceModel* process,
                                 const statespace::StateSpaceModel& channel,
                                 AdversaryModel attacker1, AdversaryModel attacker2)
    : process_(process), channel_(channel), att1_(attacker1), att2_(attacker2) {
    const std::size_t sensors = channel_.sensor_count();
    if (process_ && process_->sensor_count() != sensors) {
        throw DimensionMismatch("process and channel models disagree on the sensor count");
    }
    p_cov_.resize(2);
    c_cov_.resize(2);
    p_sampler_.resize(2);
    c_sampler_.resize(2);
    for (int a = 0; a < 2; ++a) {
        const AdversaryModel& adv = a == 0 ? att1_ : att2_;
        for (std::size_t g = 0; g < sensors; ++g) {
            if (process_) {
                CMat yp = adv.process_cov_scale * stationary_output_cov(*process_, g);
                p_sampler_[a].emplace_back(yp);
                p_cov_[a].push_back(std::move(yp));
            }
            CMat yc = adv.channel_cov_scale * stationary_output_cov(channel_, g);
            c_sampler_[a].emplace_back(yc);
            c_cov_[a].push_back(std::move(yc));
        }
    }
}

const AdversaryModel& PacketGenerator::attacker(Origin o) const {
    switch (o) {
        case Origin::Attacker1: return att1_;
        case Origin::Attacker2: return att2_;
        default: throw DomainError("legitimate origin has no adversary model");
    }
}

Packet PacketGenerator::generate(Origin origin, const statespace::StateSample* x_p,
                                 const statespace::StateSample& x_c, std::size_t g, double t,
                                 rng::Stream& stream) const {
    if (g >= channel_.sensor_count()) throw UnknownSensor("sensor index out of range");
    Packet pkt;
    pkt.sensor = g;
    pkt.t = t;
    pkt.origin = origin;

    const int a = origin == Origin::Attacker1 ? 0 : 1;
    const AdversaryModel* adv = origin == Origin::Legitimate ? nullptr : &attacker(origin);

    if (process_) {
        if (!adv || adv->process == BranchBehavior::LegitimatePassthrough) {
            pkt.y_p = process_->sample_output(g, *x_p, stream);
        } else {
            pkt.y_p = p_sampler_[a][g].draw(stream);
        }
    }
    if (!adv || adv->channel == BranchBehavior::LegitimatePassthrough) {
        pkt.y_c = channel_.sample_output(g, x_c, stream);
    } else {
        pkt.y_c = c_sampler_[a][g].draw(stream);
    }
    return pkt;
}

namespace {

BranchDistribution make_branch(const statespace::StateSpaceModel& model, std::size_t g,
                               const AdversaryModel* adv, BranchBehavior behavior,
                               const CMat& attack_cov) {
    BranchDistribution d;
    const CMat& c = model.c(g);
    if (!adv || behavior == BranchBehavior::LegitimatePassthrough) {
        d.legitimate = true;
        d.c_tilde = c;  // a passthrough reproduces the legitimate data exactly
        return d;
    }
    d.legitimate = false;
    d.mean = CVec::Zero(model.output_dim());
    d.cov = attack_cov;
    d.c_tilde = adv->full_knowledge ? c : CMat::Zero(c.rows(), c.cols());
    return d;
}

}  // namespace

BranchDistribution PacketGenerator::process_branch(Origin origin, std::size_t g) const {
    if (!process_) throw DomainError("process measurements are disabled in this scenario");
    if (g >= channel_.sensor_count()) throw UnknownSensor("sensor index out of range");
    if (origin == Origin::Legitimate) {
        return make_branch(*process_, g, nullptr, BranchBehavior::LegitimatePassthrough, {});
    }
    const int a = origin == Origin::Attacker1 ? 0 : 1;
    const AdversaryModel& adv = attacker(origin);
    return make_branch(*process_, g, &adv, adv.process, p_cov_[a][g]);
}

BranchDistribution PacketGenerator::channel_branch(Origin origin, std::size_t g) const {
    if (g >= channel_.sensor_count()) throw UnknownSensor("sensor index out of range");
    if (origin == Origin::Legitimate) {
        return make_branch(channel_, g, nullptr, BranchBehavior::LegitimatePassthrough, {});
    }
    const int a = origin == Origin::Attacker1 ? 0 : 1;
    const AdversaryModel& adv = attacker(origin);
    return make_branch(channel_, g, &adv, adv.channel, c_cov_[a][g]);
}

}  // namespace authsim::adversary
