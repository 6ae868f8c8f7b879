#pragma once

#include <vector>

#include "authsim/linalg.hpp"
#include "authsim/statespace.hpp"
#include "authsim/types.hpp"

namespace authsim::adversary {

enum class Origin { Legitimate = 0, Attacker1 = 1, Attacker2 = 2 };

/// How one measurement branch of an adversarial packet is produced.
///  - LegitimatePassthrough: the value a legitimate transmitter would send
///    (drawn from the true state through the output equation).
///  - ZeroMeanStationary: CN(0, scale * (C X C^H + N)), independent of the
///    true state.
enum class BranchBehavior { LegitimatePassthrough, ZeroMeanStationary };

/// Attack strategy for one adversary class. Defaults follow the two classes
/// from the threat model: an infiltrated sensor node keeps the legitimate
/// channel and fakes the process data; a device in the environment mimics
/// the process data but transmits over its own channel.
struct AdversaryModel {
    BranchBehavior process = BranchBehavior::ZeroMeanStationary;
    BranchBehavior channel = BranchBehavior::LegitimatePassthrough;
    double process_cov_scale = 1.0;
    double channel_cov_scale = 1.0;
    bool full_knowledge = false;  // knowledge matrix C~ = C instead of 0

    static AdversaryModel infiltrated_sensor() { return {}; }
    static AdversaryModel device() {
        AdversaryModel m;
        m.process = BranchBehavior::LegitimatePassthrough;
        m.channel = BranchBehavior::ZeroMeanStationary;
        return m;
    }
};

struct Packet {
    std::size_t sensor = 0;
    double t = 0.0;
    CVec y_p;  // empty when the process measurement is disabled
    CVec y_c;
    Origin origin = Origin::Legitimate;
};

/// Stationary output covariance C_g X C_g^H + N of a model.
CMat stationary_output_cov(const statespace::StateSpaceModel& model, std::size_t g);

/// Analytic parameters of one branch's measurement distribution, as consumed
/// by the acceptance-probability approximations.
struct BranchDistribution {
    bool legitimate = true;  // distribution equals the legitimate one
    CVec mean;               // attack-measurement mean (zero for the defaults)
    CMat cov;                // attack-measurement covariance
    CMat c_tilde;            // adversary knowledge matrix for the asymptotic method
};

/// Packet source for one scenario: caches the per-sensor attack samplers so
/// the Monte-Carlo fan-out can draw packets cheaply. The process model may be
/// null (channel-only authentication); packets then carry an empty y_p.
class PacketGenerator {
public:
    PacketGenerator(const statespace::StateSpaceModel* process,
                    const statespace::StateSpaceModel& channel, AdversaryModel attacker1,
                    AdversaryModel attacker2);

    const AdversaryModel& attacker(Origin o) const;

    Packet generate(Origin origin, const statespace::StateSample* x_p,
                    const statespace::StateSample& x_c, std::size_t g, double t,
                    rng::Stream& stream) const;

    /// Distribution of y_p for the given origin at sensor g (process model
    /// must be present).
    BranchDistribution process_branch(Origin origin, std::size_t g) const;
    BranchDistribution channel_branch(Origin origin, std::size_t g) const;

private:
    const statespace::StateSpaceModel* process_;
    const statespace::StateSpaceModel& channel_;
    AdversaryModel att1_, att2_;
    // Attack covariances and samplers per sensor, [attacker][sensor].
    std::vector<std::vector<CMat>> p_cov_, c_cov_;
    std::vector<std::vector<linalg::CovSampler>> p_sampler_, c_sampler_;
};

}  // namespace authsim::adversary
