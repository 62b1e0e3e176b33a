#pragma once

#include <array>
#include <vector>

#include "qtt/types.hpp"

namespace qtt::spectrum {

/// The four numbers defining the working Hamiltonian, plus bookkeeping.
/// omega1 = omega3 - omega2 exactly (resonance is enforced by the factories);
/// lambda is the anharmonicity of the omega3 = (10 - lambda) Omega
/// parametrization. Aggregate on purpose: tests may construct degenerate
/// instances directly, the factories validate.
struct TransistorSpec {
    double omega1, omega2, omega3;  // excitation energies
    double g;                       // |11><02| swap coupling
    double Omega;                   // overall energy scale
    double lambda;                  // 10 - omega3/Omega
};

/// Builds a spec from absolute energies; omega1 is set to omega3 - omega2.
TransistorSpec make_spec(double omega2, double omega3, double g, double Omega,
                         double g_ratio_max = 0.1);

/// Builds a spec from the relative parametrization: omega2 given in units of
/// Omega, omega3 = (10 - lambda) Omega, g = g_over_omega1 * omega1.
TransistorSpec make_spec_relative(double omega2_over_Omega, double lambda,
                                  double g_over_omega1, double Omega = 1.0,
                                  double g_ratio_max = 0.1);

void validate_spec(const TransistorSpec& spec, double g_ratio_max = 0.1);

/// Eigensystem in the fixed labeling E = (w1+w3, w3-g, w1, w3+g, w2, 0).
/// Column i of `states` is |E_{i+1}> over the product basis; the dressed
/// pair uses |E2> = (|11> - |02>)/sqrt(2), |E4> = (|11> + |02>)/sqrt(2).
struct EigenSystem {
    std::array<double, 6> energies;
    Matrix6d states;
};

/// 6x6 main-circuit Hamiltonian in the product basis:
/// H = w1 P(|1>_1) + w2 P(|1>_2) + w3 P(|2>_2) + g(|11><02| + h.c.).
Matrix6d build_hamiltonian(const TransistorSpec& spec);

/// Analytic eigensystem (closed-form states, no numeric eigensolver).
/// Residual ||H v - E v|| is verified to 1e-12 * max(1, ||H||).
EigenSystem eigensystem(const Matrix6d& H, const TransistorSpec& spec);

/// One dissipation channel: eigenoperator of the main circuit connecting
/// eigenstates separated by `frequency`, expressed in the eigenbasis.
struct CollapseChannel {
    BathId bath;
    int index;              // l in {1,2,3}
    Matrix6d matrix;        // real matrix in the eigenbasis (rows/cols = E_i)
    double frequency;       // transition energy, > 0
    int degeneracy_weight;  // number of degenerate transitions (1 or 2)
    double rate_weight;     // sum of squared matrix elements (1/2 or 1)
};

/// The nine eigenoperators (three per bath), frequencies computed as
/// eigenenergy differences:
///   S: {w2-g, w2, w2+g},  M: {w1, w1-g, w1+g},  D: {w3-g, w3+g, w3}.
/// Throws FrequencyCollision if two channels of one bath share a frequency
/// (g = 0), where the eigenoperator decomposition breaks down.
std::vector<CollapseChannel> collapse_channels(const EigenSystem& es,
                                               const TransistorSpec& spec);

/// Channel matrix rotated to the product basis: V A V^T.
Matrix6d to_product_basis(const CollapseChannel& ch, const EigenSystem& es);

}  // namespace qtt::spectrum
