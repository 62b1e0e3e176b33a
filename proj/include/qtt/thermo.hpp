#pragma once

#include <array>
#include <vector>

#include "qtt/bath.hpp"
#include "qtt/lindblad.hpp"
#include "qtt/spectrum.hpp"

namespace qtt::thermo {

/// Steady-state heat currents in raw model units. Sign convention:
/// J_mu > 0 means energy flows from bath mu into the main circuit, so at
/// steady state J_S + J_M + J_D = 0 identically.
struct HeatCurrents {
    double J_S, J_M, J_D;
};

/// Closed-form currents (per-transition energy-weighted net flows), checked
/// against the trace form tr(H L_mu(rho)) built from the channels; a
/// disagreement beyond tolerance raises DefinitionMismatch (transcription
/// error guard).
HeatCurrents heat_currents(const lindblad::SteadyState& ss,
                           const std::vector<spectrum::CollapseChannel>& channels,
                           const std::vector<bath::RatePair>& rates,
                           const std::array<double, 6>& energies);

/// Bath-side settings shared by every operating point of a sweep.
struct BathSettings {
    double T_S = 2.0, T_D = 0.2;   // units of Omega
    double Q = 100.0, R = 1.0;
    double coupling_ratio = 0.01;  // alpha / g
};

/// Immutable per-device data reused across the T_M grid.
struct Device {
    spectrum::TransistorSpec spec;
    spectrum::EigenSystem es;
    std::vector<spectrum::CollapseChannel> channels;
};

Device make_device(const spectrum::TransistorSpec& spec);

/// One operating point: currents reported as J/(R Omega^4) (dimensionless).
struct HeatReport {
    double T_M;            // units of Omega
    double J_S, J_M, J_D;  // normalized
    lindblad::SteadyState state;
};

HeatReport evaluate_point(const Device& dev, const BathSettings& baths, double T_M_over_Omega);

struct AmplificationOptions {
    // A grid point resolves the modulator response when |dJ_M/dT_M| is at
    // least floor_rel times the largest derivative on the grid; below that
    // the amplification factor is undefined (dead region of the device).
    double floor_rel = 1e-3;
    // Strict mode (default) throws FlatModulator at unresolvable interior
    // points; mask mode emits NaN there instead (used by the sweep, whose
    // grid legitimately extends into the dead region).
    bool mask_unresolved = false;
};

/// alpha_{S,D}(T_M) = (dJ_{S,D}/dT_M) / (dJ_M/dT_M), central differences in
/// the interior, second-order one-sided at the ends. alpha_S + alpha_D = -1
/// pointwise wherever defined.
struct AmplificationCurve {
    std::vector<double> T_M;
    std::vector<double> alpha_S, alpha_D;
};

AmplificationCurve amplification(const std::vector<HeatReport>& reports,
                                 const AmplificationOptions& opt = {});

/// Largest alpha_S over the resolvable points (NaN entries skipped); the
/// normalization reference for the relative-amplification figures.
double peak_alpha(const AmplificationCurve& curve);

struct SwitchResult {
    double J_S_off, J_S_on;
    double contrast;  // J_S_on / J_S_off
};

/// Evaluates the source current at the two modulator temperatures defining
/// the off/on states (defaults 0.25 and 0.50 in units of Omega).
SwitchResult switch_characterize(const Device& dev, const BathSettings& baths,
                                 double T_off, double T_on);

}  // namespace qtt::thermo
