#include "qtt/circuit.hpp"

#include <cmath>
#include <string>

#include "qtt/errors.hpp"

namespace qtt::circuit {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ValidationError(std::string("circuit parameter ") + name +
                              " must be strictly positive and finite");
    }
}

void validate_raw(const RawCircuitParams& p) {
    require_positive(p.C1, "C1");
    require_positive(p.C2, "C2");
    require_positive(p.C3, "C3");
    require_positive(p.Cg1, "Cg1");
    require_positive(p.Cg2, "Cg2");
    require_positive(p.L2, "L2");
    require_positive(p.EJ1, "EJ1");
    require_positive(p.EJ3, "EJ3");
}

}  // namespace

Matrix3d capacitance_matrix(const RawCircuitParams& p) {
    Matrix3d C;
    C << p.C1 + p.Cg1, -p.Cg1, 0.0,
         -p.Cg1, p.C2 + p.Cg1 + p.Cg2, -p.Cg2,
         0.0, -p.Cg2, p.C3 + p.Cg2;
    return C;
}

Matrix3d invert_capacitance_matrix(const RawCircuitParams& p) {
    validate_raw(p);
    const double C1 = p.C1, C2 = p.C2, C3 = p.C3, g1 = p.Cg1, g2 = p.Cg2;

    // Determinant of the tridiagonal capacitance matrix, expanded so every
    // summand is positive (no cancellation for positive inputs).
    const double det = C1 * (C2 * C3 + C2 * g2 + C3 * g1 + C3 * g2 + g1 * g2) +
                       C2 * (C3 * g1 + g1 * g2) + C3 * g1 * g2;
    if (!(det > 0.0) || !std::isfinite(det)) {
        throw SingularMatrix("capacitance matrix is not invertible (det = " +
                             std::to_string(det) + ")");
    }

    // Closed forms for the inverse elements. The last numerator term of the
    // (1,1) element is Cg1*Cg2, the partner of the Cg1*Cg2 term in (3,3);
    // this is what makes C * C^-1 = 1 hold (enforced by the oracle tests).
    Matrix3d inv;
    inv(0, 0) = (C2 * C3 + C2 * g2 + C3 * g1 + C3 * g2 + g1 * g2) / det;
    inv(0, 1) = g1 * (C3 + g2) / det;
    inv(0, 2) = g1 * g2 / det;
    inv(1, 1) = (C1 + g1) * (C3 + g2) / det;
    inv(1, 2) = g2 * (C1 + g1) / det;
    inv(2, 2) = (C1 * C2 + C1 * g1 + C1 * g2 + C2 * g1 + g1 * g2) / det;
    inv(1, 0) = inv(0, 1);
    inv(2, 0) = inv(0, 2);
    inv(2, 1) = inv(1, 2);
    return inv;
}

DerivedDeviceParams derive_device_params(const RawCircuitParams& p, const RegimeOptions& opt) {
    const Matrix3d inv = invert_capacitance_matrix(p);

    DerivedDeviceParams dp{};
    dp.EC1 = inv(0, 0);
    dp.EC2 = inv(1, 1);
    dp.EC3 = inv(2, 2);
    dp.EL2 = 1.0 / (2.0 * p.L2);

    if (dp.EC1 / p.EJ1 > opt.transmon_ratio_max || dp.EC3 / p.EJ3 > opt.transmon_ratio_max) {
        throw RegimeViolation("transmon regime violated: E_C/E_J = " +
                              std::to_string(dp.EC1 / p.EJ1) + ", " +
                              std::to_string(dp.EC3 / p.EJ3) + " exceeds " +
                              std::to_string(opt.transmon_ratio_max));
    }

    dp.alpha1 = std::sqrt(8.0 * dp.EC1 * p.EJ1);
    dp.beta1 = dp.EC1 / 12.0;
    dp.alpha3 = std::sqrt(8.0 * dp.EC3 * p.EJ3);
    dp.beta3 = dp.EC3 / 12.0;
    dp.omega_r = 4.0 * std::sqrt(dp.EC2 * dp.EL2);
    dp.g1 = inv(0, 1) * std::pow(8.0 * p.EJ1 * dp.EL2 / (dp.EC1 * dp.EC2), 0.25);
    dp.g3 = inv(1, 2) * std::pow(8.0 * p.EJ3 * dp.EL2 / (dp.EC2 * dp.EC3), 0.25);

    const TransmonLevels lv = transmon_levels(dp);
    dp.Delta1 = lv.omega1 - dp.omega_r;
    dp.Delta2 = lv.omega2 - dp.omega_r;
    dp.Delta3 = lv.omega3 - lv.omega2 - dp.omega_r;

    if (std::abs(dp.g1 / dp.Delta1) > opt.dispersive_ratio_max ||
        std::abs(dp.g3 / dp.Delta3) > opt.dispersive_ratio_max) {
        throw RegimeViolation("dispersive regime violated: |g1/Delta1| = " +
                              std::to_string(std::abs(dp.g1 / dp.Delta1)) +
                              ", |g3/Delta3| = " + std::to_string(std::abs(dp.g3 / dp.Delta3)) +
                              " exceeds " + std::to_string(opt.dispersive_ratio_max));
    }
    return dp;
}

TransmonLevels transmon_levels(const DerivedDeviceParams& dp) {
    if (!(dp.alpha1 > 18.0 * dp.beta1) || !(dp.alpha3 > 18.0 * dp.beta3)) {
        throw RegimeViolation("transmon_levels requires alpha_i > 18 beta_i "
                              "(quartic expansion regime)");
    }
    TransmonLevels lv{};
    lv.omega1 = dp.alpha1 - 12.0 * dp.beta1;
    const double root = std::sqrt((dp.alpha3 - 18.0 * dp.beta3) * (dp.alpha3 - 18.0 * dp.beta3) +
                                  72.0 * dp.beta3 * dp.beta3);
    lv.omega2 = 6.0 * dp.beta3 + root;
    lv.omega3 = 2.0 * root;
    return lv;
}

double dispersive_coupling(const DerivedDeviceParams& dp, const TransmonLevels& lv,
                           const RegimeOptions& opt) {
    const double mismatch = std::abs(lv.omega1 + lv.omega2 - lv.omega3);
    if (mismatch > opt.resonance_rel_tol * lv.omega3) {
        throw ResonanceViolation("resonance condition w1 + w2 = w3 violated by " +
                                 std::to_string(mismatch) + " (the |11>-|02> swap would be "
                                 "energetically suppressed)");
    }
    if (std::abs(dp.g1 / dp.Delta1) > opt.dispersive_ratio_max ||
        std::abs(dp.g3 / dp.Delta3) > opt.dispersive_ratio_max) {
        throw RegimeViolation("dispersive regime violated in dispersive_coupling");
    }
    const double g01 = dp.g1;
    const double g12 = dp.g3 * std::sqrt(2.0);  // g_{m,m+1} = g sqrt(m+1)
    return g01 * g12 * (dp.Delta1 + dp.Delta3) / (2.0 * dp.Delta1 * dp.Delta3);
}

SuppressionCheck check_suppression(double g1, double g3, double anharmonicity,
                                   double detuning_beta, double dominance) {
    if (!(detuning_beta > 0.0) || !(detuning_beta < 1.0)) {
        throw ValidationError("detuning parameter beta must lie in (0, 1)");
    }
    if (!(anharmonicity >= 0.0)) {
        throw ValidationError("anharmonicity must be nonnegative");
    }
    SuppressionCheck out{};
    out.lhs = g1 / g3;
    out.rhs = (anharmonicity / 5.0) / (1.0 - detuning_beta);
    out.pass = out.lhs >= dominance * out.rhs;
    return out;
}

double solve_josephson_for_target(double omega_target, double EC) {
    if (!(omega_target > 0.0) || !(EC > 0.0)) {
        throw ValidationError("solve_josephson_for_target requires positive inputs");
    }
    return (omega_target + EC) * (omega_target + EC) / (8.0 * EC);
}

}  // namespace qtt::circuit
