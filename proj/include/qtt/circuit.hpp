#pragma once

#include "qtt/types.hpp"

namespace qtt::circuit {

/// Lumped-element values of the physical device. Natural units
/// (hbar = c = k = 1, 2e = 1): capacitances and inductance carry inverse
/// energy, Josephson energies carry energy.
struct RawCircuitParams {
    double C1, C2, C3;    // node capacitances
    double Cg1, Cg2;      // coupling capacitances
    double L2;            // resonator inductance
    double EJ1, EJ3;      // Josephson energies
};

/// Validity thresholds for the approximations behind the effective model.
/// The regimes are stated only qualitatively by the theory, so the bounds
/// are configurable with conservative defaults.
struct RegimeOptions {
    double transmon_ratio_max = 0.05;   // E_C/E_J
    double dispersive_ratio_max = 0.1;  // |g/Delta|
    double resonance_rel_tol = 1e-9;    // |w1 + w2 - w3| / w3
};

struct DerivedDeviceParams {
    double EC1, EC2, EC3;  // charging energies, EC_i = (C^-1)_ii
    double EL2;            // inductive energy, 1/(2 L2)
    double alpha1, beta1;  // qubit oscillator / anharmonicity coefficients
    double alpha3, beta3;  // qutrit coefficients
    double omega_r;        // resonator frequency
    double g1, g3;         // transmon-resonator couplings
    double Delta1, Delta2, Delta3;  // detunings from the resonator
};

struct TransmonLevels {
    double omega1;  // qubit excitation energy
    double omega2;  // qutrit first excitation energy
    double omega3;  // qutrit second excitation energy
};

struct SuppressionCheck {
    double lhs;  // g1/g3
    double rhs;  // (lambda/5)/(1 - beta)
    bool pass;
};

/// 3x3 capacitance matrix of the flux coordinates (phi1, phi2, phi3).
Matrix3d capacitance_matrix(const RawCircuitParams& p);

/// Closed-form inverse of the capacitance matrix. Agrees with direct
/// numerical inversion to better than 1e-12 relative; the returned matrix
/// is exactly symmetric. Throws SingularMatrix when the determinant is not
/// strictly positive (degenerate circuit input).
Matrix3d invert_capacitance_matrix(const RawCircuitParams& p);

/// Maps lumped-element values to the effective device quantities and checks
/// the transmon and dispersive regimes (RegimeViolation on failure).
/// The (C^-1)_13 transmon-transmon cross coupling is dropped.
DerivedDeviceParams derive_device_params(const RawCircuitParams& p,
                                         const RegimeOptions& opt = {});

/// Level energies of the truncated transmons:
///   omega1 = alpha1 - 12 beta1
///   omega2 = 6 beta3 + sqrt((alpha3 - 18 beta3)^2 + 72 beta3^2)
///   omega3 = 2 sqrt((alpha3 - 18 beta3)^2 + 72 beta3^2)
/// Requires alpha_i > 18 beta_i (validity of the quartic expansion).
TransmonLevels transmon_levels(const DerivedDeviceParams& dp);

/// Effective |11><02| swap coupling in the dispersive regime,
///   g = g01 g12 (Delta1 + Delta3) / (2 Delta1 Delta3),
/// with g01 = g1 and g12 = sqrt(2) g3. Requires the resonance condition
/// |omega1 + omega2 - omega3| within tolerance (ResonanceViolation), under
/// which Delta1 = Delta3 and the expression reduces to g01 g12 / Delta.
double dispersive_coupling(const DerivedDeviceParams& dp, const TransmonLevels& lv,
                           const RegimeOptions& opt = {});

/// Checks g1/g3 >> (lambda/5)/(1-beta), the condition suppressing the
/// two-photon |0><2| term relative to the swap term. beta = omega_r/omega2
/// in (0,1); ">>" means lhs >= dominance * rhs.
SuppressionCheck check_suppression(double g1, double g3, double anharmonicity,
                                   double detuning_beta, double dominance = 10.0);

/// Inverts omega1(EJ) for a target qubit energy: EJ = (omega + EC)^2/(8 EC).
double solve_josephson_for_target(double omega_target, double EC);

}  // namespace qtt::circuit
