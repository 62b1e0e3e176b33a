#include "qtt/spectrum.hpp"

#include <cmath>
#include <string>

#include "qtt/errors.hpp"

namespace qtt::spectrum {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;

// Product-basis indices.
enum : int { k00 = 0, k01 = 1, k02 = 2, k10 = 3, k11 = 4, k12 = 5 };
}  // namespace

TransistorSpec make_spec(double omega2, double omega3, double g, double Omega,
                         double g_ratio_max) {
    TransistorSpec s{};
    s.omega2 = omega2;
    s.omega3 = omega3;
    s.omega1 = omega3 - omega2;  // resonance enforced at construction
    s.g = g;
    s.Omega = Omega;
    s.lambda = 10.0 - omega3 / Omega;
    validate_spec(s, g_ratio_max);
    return s;
}

TransistorSpec make_spec_relative(double omega2_over_Omega, double lambda,
                                  double g_over_omega1, double Omega, double g_ratio_max) {
    const double w2 = omega2_over_Omega * Omega;
    const double w3 = (10.0 - lambda) * Omega;
    const double w1 = w3 - w2;
    return make_spec(w2, w3, g_over_omega1 * w1, Omega, g_ratio_max);
}

void validate_spec(const TransistorSpec& s, double g_ratio_max) {
    if (!(s.Omega > 0.0)) throw ValidationError("Omega must be positive");
    if (!(s.omega1 > 0.0) || !(s.omega2 > 0.0) || !(s.omega3 > 0.0)) {
        throw ValidationError("all excitation energies must be positive "
                              "(requires omega3 > omega2)");
    }
    if (s.omega1 != s.omega3 - s.omega2) {
        throw ValidationError("resonance violated: omega1 must equal omega3 - omega2");
    }
    if (!(s.g > 0.0)) throw ValidationError("swap coupling g must be positive");
    if (s.g / s.omega1 > g_ratio_max) {
        throw ValidationError("g/omega1 = " + std::to_string(s.g / s.omega1) +
                              " exceeds the bound " + std::to_string(g_ratio_max));
    }
}

Matrix6d build_hamiltonian(const TransistorSpec& s) {
    Matrix6d H = Matrix6d::Zero();
    H(k01, k01) = s.omega2;
    H(k02, k02) = s.omega3;
    H(k10, k10) = s.omega1;
    H(k11, k11) = s.omega1 + s.omega2;
    H(k12, k12) = s.omega1 + s.omega3;
    H(k11, k02) = s.g;
    H(k02, k11) = s.g;
    return H;
}

EigenSystem eigensystem(const Matrix6d& H, const TransistorSpec& s) {
    const double mismatch = std::abs(s.omega1 + s.omega2 - s.omega3);
    if (mismatch > 1e-9 * s.omega3) {
        throw ResonanceViolation("eigensystem requires the resonance condition");
    }

    EigenSystem es{};
    es.energies = {s.omega1 + s.omega3, s.omega3 - s.g, s.omega1,
                   s.omega3 + s.g, s.omega2, 0.0};

    Matrix6d V = Matrix6d::Zero();
    V(k12, 0) = 1.0;                                   // |E1> = |12>
    V(k11, 1) = kInvSqrt2; V(k02, 1) = -kInvSqrt2;     // |E2> = (|11>-|02>)/sqrt2
    V(k10, 2) = 1.0;                                   // |E3> = |10>
    V(k11, 3) = kInvSqrt2; V(k02, 3) = kInvSqrt2;      // |E4> = (|11>+|02>)/sqrt2
    V(k01, 4) = 1.0;                                   // |E5> = |01>
    V(k00, 5) = 1.0;                                   // |E6> = |00>
    es.states = V;

    const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
    for (int i = 0; i < kDim; ++i) {
        const double resid = (H * V.col(i) - es.energies[i] * V.col(i)).norm();
        if (resid > 1e-12 * scale) {
            throw ResonanceViolation("analytic eigensystem residual " + std::to_string(resid) +
                                     " for E" + std::to_string(i + 1));
        }
    }
    return es;
}

std::vector<CollapseChannel> collapse_channels(const EigenSystem& es, const TransistorSpec& s) {
    const auto& E = es.energies;

    // The nine eigenoperators over the eigenbasis, signs as produced by the
    // projective construction sum_{Ei-Ej=w} P(Ej) D_mu P(Ei) under the fixed
    // dressed-state phase convention. (Each operator's global sign is
    // physically inert.) Entry (j, i) connects E_{i+1} -> E_{j+1}.
    std::vector<CollapseChannel> out;
    out.reserve(9);

    struct Elem {
        int to, from;
        double value;
    };
    auto add = [&](BathId bath, int index, std::initializer_list<Elem> elems, double freq,
                   int deg, double weight) {
        CollapseChannel ch{};
        ch.bath = bath;
        ch.index = index;
        ch.matrix = Matrix6d::Zero();
        for (const auto& e : elems) ch.matrix(e.to, e.from) = e.value;
        ch.frequency = freq;
        ch.degeneracy_weight = deg;
        ch.rate_weight = weight;
        out.push_back(ch);
    };

    // Source: qutrit 0<->1 transitions.
    add(BathId::S, 1, {{2, 1, kInvSqrt2}}, E[1] - E[2], 1, 0.5);   // |E3><E2|, w2-g
    add(BathId::S, 2, {{5, 4, 1.0}}, E[4] - E[5], 1, 1.0);         // |E6><E5|, w2
    add(BathId::S, 3, {{2, 3, kInvSqrt2}}, E[3] - E[2], 1, 0.5);   // |E3><E4|, w2+g
    // Modulator: qubit 0<->1 transitions.
    add(BathId::M, 1, {{5, 2, 1.0}}, E[2] - E[5], 1, 1.0);         // |E6><E3|, w1
    add(BathId::M, 2, {{4, 1, kInvSqrt2}, {3, 0, kInvSqrt2}},      // (|E5><E2|+|E4><E1|)/sqrt2
        E[1] - E[4], 2, 1.0);                                      // w1-g
    add(BathId::M, 3, {{4, 3, kInvSqrt2}, {1, 0, -kInvSqrt2}},     // (|E5><E4|-|E2><E1|)/sqrt2
        E[3] - E[4], 2, 1.0);                                      // w1+g
    // Drain: qutrit 0<->2 transitions.
    add(BathId::D, 1, {{5, 1, -kInvSqrt2}}, E[1] - E[5], 1, 0.5);  // -|E6><E2|/sqrt2, w3-g
    add(BathId::D, 2, {{5, 3, kInvSqrt2}}, E[3] - E[5], 1, 0.5);   // |E6><E4|/sqrt2, w3+g
    add(BathId::D, 3, {{2, 0, 1.0}}, E[0] - E[2], 1, 1.0);         // |E3><E1|, w3

    const double tol = 1e-12 * std::max(1.0, s.omega3);
    for (const auto& ch : out) {
        if (!(ch.frequency > tol)) {
            throw FrequencyCollision("channel " + std::string(to_string(ch.bath)) +
                                     std::to_string(ch.index) + " has nonpositive frequency");
        }
    }
    for (int b = 0; b < 3; ++b) {
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                const auto& a = out[size_t(3 * b + i)];
                const auto& c = out[size_t(3 * b + j)];
                if (std::abs(a.frequency - c.frequency) <= tol) {
                    throw FrequencyCollision(
                        "bath " + std::string(to_string(a.bath)) + " channels " +
                        std::to_string(a.index) + " and " + std::to_string(c.index) +
                        " share frequency " + std::to_string(a.frequency) +
                        " (g = 0 degenerate case: eigenoperators unresolvable)");
                }
            }
        }
    }
    return out;
}

Matrix6d to_product_basis(const CollapseChannel& ch, const EigenSystem& es) {
    return es.states * ch.matrix * es.states.transpose();
}

}  // namespace qtt::spectrum
