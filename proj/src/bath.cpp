#include "qtt/bath.hpp"

#include <cmath>
#include <string>

#include "qtt/errors.hpp"

namespace qtt::bath {

std::array<BathSpec, 3> bath_specs(const spectrum::TransistorSpec& spec, double T_S,
                                   double T_M, double T_D, double Q, double R) {
    if (!(T_S > 0.0) || !(T_M > 0.0) || !(T_D > 0.0)) {
        throw ValidationError("bath temperatures must be positive");
    }
    if (!(Q > 0.0) || !(R > 0.0)) {
        throw ValidationError("bath Q and R must be positive");
    }
    return {BathSpec{BathId::S, spec.omega2, T_S, Q, R},
            BathSpec{BathId::M, spec.omega1, T_M, Q, R},
            BathSpec{BathId::D, spec.omega3, T_D, Q, R}};
}

double spectral_density(double omega, const BathSpec& b) {
    if (omega == 0.0) {
        throw DomainError("spectral density is singular at omega = 0");
    }
    const double x = omega / b.Omega_f - b.Omega_f / omega;
    const double lorentz = 1.0 / (1.0 + b.Q * b.Q * x * x);
    // 1 - e^(-w/T) is negative for w < 0, cancelling the sign of 2Rw; the
    // closed form carries S(-w) = e^(-w/T) S(w) (KMS) automatically.
    return lorentz * 2.0 * b.R * omega / (1.0 - std::exp(-omega / b.T));
}

std::vector<RatePair> golden_rule_rates(const std::vector<spectrum::CollapseChannel>& channels,
                                        const std::array<BathSpec, 3>& baths, double coupling,
                                        double swap_g, double weak_coupling_max) {
    if (!(coupling > 0.0)) {
        throw ValidationError("bath coupling must be positive");
    }
    if (!(swap_g > 0.0) || coupling / swap_g > weak_coupling_max) {
        throw WeakCouplingViolation("weak coupling limit requires alpha/g <= " +
                                    std::to_string(weak_coupling_max) + ", got " +
                                    std::to_string(coupling / swap_g));
    }

    const double pref = 2.0 * M_PI * coupling * coupling;
    std::vector<RatePair> out;
    out.reserve(channels.size());
    for (const auto& ch : channels) {
        const BathSpec* b = nullptr;
        for (const auto& cand : baths) {
            if (cand.id == ch.bath) b = &cand;
        }
        if (b == nullptr) throw ValidationError("no bath spec for channel bath id");
        RatePair rp{};
        rp.bath = ch.bath;
        rp.index = ch.index;
        rp.frequency = ch.frequency;
        rp.alpha_rate = pref * ch.rate_weight * spectral_density(ch.frequency, *b);
        rp.beta_rate = pref * ch.rate_weight * spectral_density(-ch.frequency, *b);
        out.push_back(rp);
    }
    return out;
}

}  // namespace qtt::bath
