#include "qtt/thermo.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

#include "qtt/errors.hpp"

namespace qtt::thermo {

namespace {

struct Transition {
    int upper, lower;  // eigenbasis indices (0-based)
    double flow;       // 2 c^2: population flow factor of the bracket convention
};

std::vector<Transition> transitions_of(const spectrum::CollapseChannel& ch) {
    std::vector<Transition> out;
    for (int j = 0; j < kDim; ++j) {
        for (int i = 0; i < kDim; ++i) {
            if (ch.matrix(j, i) != 0.0) {
                out.push_back(Transition{i, j, 2.0 * ch.matrix(j, i) * ch.matrix(j, i)});
            }
        }
    }
    return out;
}

}  // namespace

HeatCurrents heat_currents(const lindblad::SteadyState& ss,
                           const std::vector<spectrum::CollapseChannel>& channels,
                           const std::vector<bath::RatePair>& rates,
                           const std::array<double, 6>& E) {
    const Vector6d& p = ss.populations;
    auto r = [&](BathId b, int l) -> const bath::RatePair& {
        for (const auto& rp : rates) {
            if (rp.bath == b && rp.index == l) return rp;
        }
        throw ValidationError("missing rate pair for channel " + std::string(to_string(b)) +
                              std::to_string(l));
    };
    const auto &S1 = r(BathId::S, 1), &S2 = r(BathId::S, 2), &S3 = r(BathId::S, 3);
    const auto &M1 = r(BathId::M, 1), &M2 = r(BathId::M, 2), &M3 = r(BathId::M, 3);
    const auto &D1 = r(BathId::D, 1), &D2 = r(BathId::D, 2), &D3 = r(BathId::D, 3);

    // Closed forms: each term is (E_lower - E_upper)(alpha rho_upper - beta rho_lower)
    // with the degeneracy factor 2 on the unit-element channels.
    HeatCurrents J{};
    J.J_S = (E[2] - E[1]) * (S1.alpha_rate * p(1) - S1.beta_rate * p(2)) +
            2.0 * (E[5] - E[4]) * (S2.alpha_rate * p(4) - S2.beta_rate * p(5)) +
            (E[2] - E[3]) * (S3.alpha_rate * p(3) - S3.beta_rate * p(2));
    J.J_M = 2.0 * (E[5] - E[2]) * (M1.alpha_rate * p(2) - M1.beta_rate * p(5)) +
            (E[3] - E[0]) * (M2.alpha_rate * p(0) - M2.beta_rate * p(3)) +
            (E[4] - E[1]) * (M2.alpha_rate * p(1) - M2.beta_rate * p(4)) +
            (E[1] - E[0]) * (M3.alpha_rate * p(0) - M3.beta_rate * p(1)) +
            (E[4] - E[3]) * (M3.alpha_rate * p(3) - M3.beta_rate * p(4));
    J.J_D = (E[5] - E[1]) * (D1.alpha_rate * p(1) - D1.beta_rate * p(5)) +
            (E[5] - E[3]) * (D2.alpha_rate * p(3) - D2.beta_rate * p(5)) +
            2.0 * (E[2] - E[0]) * (D3.alpha_rate * p(0) - D3.beta_rate * p(2));

    // Adjoint definition J_mu = tr(H L_mu(rho)): on the diagonal steady state the
    // commutator is traceless and the bath-mu dissipator reduces to energy-weighted
    // population flows built directly from the channel matrices.
    double trace_form[3] = {0.0, 0.0, 0.0};
    double term_scale = 0.0;
    for (const auto& ch : channels) {
        const auto& rp = r(ch.bath, ch.index);
        double acc = 0.0;
        for (const auto& tr : transitions_of(ch)) {
            const double de = E[size_t(tr.lower)] - E[size_t(tr.upper)];
            acc += de * tr.flow *
                   (rp.alpha_rate * p(tr.upper) - rp.beta_rate * p(tr.lower));
            term_scale += std::abs(de) * tr.flow *
                          (rp.alpha_rate * p(tr.upper) + rp.beta_rate * p(tr.lower));
        }
        trace_form[static_cast<int>(ch.bath)] += acc;
    }

    const double closed[3] = {J.J_S, J.J_M, J.J_D};
    const double scale = std::max({std::abs(J.J_S), std::abs(J.J_M), std::abs(J.J_D)});
    // Dead operating points have currents at the cancellation-noise floor of the
    // summed terms; the agreement bound must not demand more than the arithmetic
    // can represent there.
    const double tol = std::max(1e-10 * scale, 100.0 * DBL_EPSILON * term_scale);
    for (int b = 0; b < 3; ++b) {
        if (std::abs(closed[b] - trace_form[b]) > tol) {
            throw DefinitionMismatch("closed-form and trace-form heat currents disagree for bath " +
                                     std::string(b == 0 ? "S" : b == 1 ? "M" : "D") + ": " +
                                     std::to_string(closed[b]) + " vs " +
                                     std::to_string(trace_form[b]));
        }
    }
    return J;
}

Device make_device(const spectrum::TransistorSpec& spec) {
    Device dev;
    dev.spec = spec;
    dev.es = spectrum::eigensystem(spectrum::build_hamiltonian(spec), spec);
    dev.channels = spectrum::collapse_channels(dev.es, spec);
    return dev;
}

HeatReport evaluate_point(const Device& dev, const BathSettings& bs, double T_M_over_Omega) {
    const double Om = dev.spec.Omega;
    const auto baths = bath::bath_specs(dev.spec, bs.T_S * Om, T_M_over_Omega * Om,
                                        bs.T_D * Om, bs.Q, bs.R);
    const double coupling = bs.coupling_ratio * dev.spec.g;
    const auto rates = bath::golden_rule_rates(dev.channels, baths, coupling, dev.spec.g);
    const auto rm = lindblad::build_rate_matrix(dev.channels, rates);
    const auto ss = lindblad::steady_state(rm);
    const auto J = heat_currents(ss, dev.channels, rates, dev.es.energies);

    const double norm = bs.R * Om * Om * Om * Om;
    HeatReport rep{};
    rep.T_M = T_M_over_Omega;
    rep.J_S = J.J_S / norm;
    rep.J_M = J.J_M / norm;
    rep.J_D = J.J_D / norm;
    rep.state = ss;
    return rep;
}

AmplificationCurve amplification(const std::vector<HeatReport>& reports,
                                 const AmplificationOptions& opt) {
    const std::size_t n = reports.size();
    if (n < 3) {
        throw ValidationError("amplification requires at least 3 grid points");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(reports[i].T_M > reports[i - 1].T_M)) {
            throw ValidationError("amplification requires a strictly increasing T_M grid");
        }
    }

    auto diff = [&](auto get) {
        std::vector<double> d(n);
        d[0] = (-3.0 * get(0) + 4.0 * get(1) - get(2)) / (reports[2].T_M - reports[0].T_M);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            d[i] = (get(i + 1) - get(i - 1)) / (reports[i + 1].T_M - reports[i - 1].T_M);
        }
        d[n - 1] = (3.0 * get(n - 1) - 4.0 * get(n - 2) + get(n - 3)) /
                   (reports[n - 1].T_M - reports[n - 3].T_M);
        return d;
    };
    const auto dJS = diff([&](std::size_t i) { return reports[i].J_S; });
    const auto dJM = diff([&](std::size_t i) { return reports[i].J_M; });
    const auto dJD = diff([&](std::size_t i) { return reports[i].J_D; });

    double dJM_max = 0.0;
    for (double v : dJM) dJM_max = std::max(dJM_max, std::abs(v));
    const double floor = opt.floor_rel * dJM_max;

    AmplificationCurve curve;
    curve.T_M.resize(n);
    curve.alpha_S.resize(n);
    curve.alpha_D.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        curve.T_M[i] = reports[i].T_M;
        if (std::abs(dJM[i]) < floor || dJM_max == 0.0) {
            if (!opt.mask_unresolved) {
                throw FlatModulator("dJ_M/dT_M below resolvability floor at T_M = " +
                                    std::to_string(reports[i].T_M) +
                                    " (amplification undefined there)");
            }
            curve.alpha_S[i] = std::numeric_limits<double>::quiet_NaN();
            curve.alpha_D[i] = std::numeric_limits<double>::quiet_NaN();
        } else {
            curve.alpha_S[i] = dJS[i] / dJM[i];
            curve.alpha_D[i] = dJD[i] / dJM[i];
        }
    }
    return curve;
}

double peak_alpha(const AmplificationCurve& curve) {
    double peak = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (double a : curve.alpha_S) {
        if (std::isnan(a)) continue;
        peak = std::max(peak, a);
        any = true;
    }
    if (!any) {
        throw FlatModulator("no resolvable grid point in amplification curve");
    }
    return peak;
}

SwitchResult switch_characterize(const Device& dev, const BathSettings& bs, double T_off,
                                 double T_on) {
    if (!(T_off > 0.0) || !(T_on > 0.0) || T_off > T_on) {
        throw ValidationError("switch_characterize requires 0 < T_off <= T_on");
    }
    SwitchResult out{};
    out.J_S_off = evaluate_point(dev, bs, T_off).J_S;
    out.J_S_on = evaluate_point(dev, bs, T_on).J_S;
    out.contrast = out.J_S_on / out.J_S_off;
    return out;
}

}  // namespace qtt::thermo
