#pragma once

#include <array>
#include <vector>

#include "qtt/spectrum.hpp"
#include "qtt/types.hpp"

namespace qtt::bath {

/// One RLC thermal bath: a band-pass filtered noisy resistor.
struct BathSpec {
    BathId id;
    double Omega_f;  // filter resonance frequency
    double T;        // temperature
    double Q;        // quality factor
    double R;        // resistance (overall scale)
};

/// The three baths with the filter assignment Omega_S = w2, Omega_M = w1,
/// Omega_D = w3 (each pinned to its transition's central frequency; the
/// +-g sidebands pass through the same Lorentzian).
std::array<BathSpec, 3> bath_specs(const spectrum::TransistorSpec& spec,
                                   double T_S, double T_M, double T_D,
                                   double Q, double R);

/// Spectral density of one bath,
///   S(w) = [1 + Q^2 (w/Of - Of/w)^2]^-1 * 2 R w / (1 - e^(-w/T)),
/// defined for negative w by the same closed form, which carries the KMS
/// relation S(-w) = e^(-w/T) S(w). Throws DomainError at w = 0.
double spectral_density(double omega, const BathSpec& bath);

/// Golden-rule rates of one channel at +frequency (alpha_rate, emission)
/// and -frequency (beta_rate, absorption).
struct RatePair {
    BathId bath;
    int index;
    double frequency;
    double alpha_rate;  // Gamma(+w)
    double beta_rate;   // Gamma(-w)
};

/// Gamma_mul(+-w) = 2 pi coupling^2 w_ch S_mu(+-w), where w_ch is the
/// channel's squared-matrix-element weight (1/2 for the 1/sqrt(2) channels,
/// 1 otherwise), reproducing the pi vs 2 pi prefactors of the rate list.
/// Enforces the weak-coupling limit coupling/swap_g <= weak_coupling_max.
std::vector<RatePair> golden_rule_rates(const std::vector<spectrum::CollapseChannel>& channels,
                                        const std::array<BathSpec, 3>& baths,
                                        double coupling, double swap_g,
                                        double weak_coupling_max = 0.1);

}  // namespace qtt::bath
