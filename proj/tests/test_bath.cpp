#include <doctest.h>

#include <cmath>
#include <random>

#include "qtt/bath.hpp"
#include "qtt/errors.hpp"
#include "qtt/spectrum.hpp"

using namespace qtt;
using namespace qtt::bath;

namespace {

BathSpec make_bath(double Om, double T, double Q = 100.0, double R = 1.0) {
    return BathSpec{BathId::S, Om, T, Q, R};
}

std::vector<spectrum::CollapseChannel> table_channels(double lambda = 4.0) {
    const auto s = spectrum::make_spec_relative(5.0, lambda, 0.01);
    const auto es = spectrum::eigensystem(spectrum::build_hamiltonian(s), s);
    return spectrum::collapse_channels(es, s);
}

}  // namespace

TEST_CASE("spectral_density: on-resonance value and frozen point") {
    const auto b = make_bath(5.0, 2.0);
    // Lorentzian factor is exactly 1 on resonance
    CHECK(spectral_density(5.0, b) ==
          doctest::Approx(2.0 * 5.0 / (1.0 - std::exp(-2.5))).epsilon(1e-14));
    CHECK(spectral_density(5.0, b) == doctest::Approx(10.894254898338520121).epsilon(1e-14));
    CHECK_THROWS_AS((void)spectral_density(0.0, b), DomainError);
}

TEST_CASE("spectral_density: KMS relation and nonnegativity") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> Om(0.5, 10.0), T(0.1, 5.0), Q(10.0, 300.0),
        w(0.05, 12.0);
    for (int it = 0; it < 200; ++it) {
        const auto b = make_bath(Om(rng), T(rng), Q(rng));
        const double omega = w(rng);
        const double sp = spectral_density(omega, b);
        const double sm = spectral_density(-omega, b);
        CHECK(sp >= 0.0);
        CHECK(sm >= 0.0);
        CHECK(sm == doctest::Approx(std::exp(-omega / b.T) * sp).epsilon(1e-12));
    }
}

TEST_CASE("spectral_density: even Lorentzian filter factor") {
    const auto b = make_bath(3.0, 1.0, 50.0);
    for (double w : {0.4, 1.1, 2.7, 3.0, 6.5}) {
        const double thermal_p = 2.0 * b.R * w / (1.0 - std::exp(-w / b.T));
        const double thermal_m = 2.0 * b.R * -w / (1.0 - std::exp(w / b.T));
        const double filt_p = spectral_density(w, b) / thermal_p;
        const double filt_m = spectral_density(-w, b) / thermal_m;
        CHECK(filt_p == doctest::Approx(filt_m).epsilon(1e-13));
    }
}

TEST_CASE("spectral_density: off-resonant suppression by the filter") {
    // At 10% detuning the filter factor is exactly 1/(1 + Q^2 x^2) with
    // x = 0.1 * 2.1 / 1.1; the thermal factor grows by at most 1.1, so the
    // suppressed bound holds with that margin.
    const double x = 0.1 * (2.0 + 0.1) / 1.1;
    for (double T : {0.4, 2.0, 8.0}) {
        const auto b = make_bath(5.0, T);
        const double bound = 1.1 * spectral_density(5.0, b) / (1.0 + b.Q * b.Q * x * x);
        CHECK(spectral_density(5.5, b) < bound);
        // and the suppression is at least two orders of magnitude at Q = 100
        CHECK(spectral_density(5.5, b) < spectral_density(5.0, b) / 100.0);
    }
}

TEST_CASE("golden_rule_rates: pi vs 2pi prefactors of the rate list") {
    const auto s = spectrum::make_spec_relative(5.0, 4.0, 0.01);
    const auto channels = table_channels();
    const auto baths = bath_specs(s, 2.0, 0.5, 0.2, 100.0, 1.0);
    const double alpha = 0.01 * s.g;
    const auto rates = golden_rule_rates(channels, baths, alpha, s.g);
    REQUIRE(rates.size() == 9);

    auto rate = [&](BathId b, int l) -> const RatePair& {
        for (const auto& rp : rates) {
            if (rp.bath == b && rp.index == l) return rp;
        }
        FAIL("missing rate");
        return rates[0];
    };
    const BathSpec& S = baths[0];
    const BathSpec& M = baths[1];

    // Gamma_S1 = pi alpha^2 S(w_S1); Gamma_M2 = 2 pi alpha^2 S(w_M2)
    const double wS1 = s.omega2 - s.g;
    CHECK(rate(BathId::S, 1).alpha_rate ==
          doctest::Approx(M_PI * alpha * alpha * spectral_density(wS1, S)).epsilon(1e-13));
    const double wM2 = s.omega1 - s.g;
    CHECK(rate(BathId::M, 2).alpha_rate ==
          doctest::Approx(2.0 * M_PI * alpha * alpha * spectral_density(wM2, M)).epsilon(1e-13));

    // filter assignment per bath
    CHECK(baths[0].Omega_f == s.omega2);
    CHECK(baths[1].Omega_f == s.omega1);
    CHECK(baths[2].Omega_f == s.omega3);
}

TEST_CASE("golden_rule_rates: detailed balance across random bath draws") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> TS(0.2, 4.0), TM(0.05, 2.0), TD(0.05, 1.0),
        Q(10.0, 500.0), R(0.2, 5.0);
    const auto s = spectrum::make_spec_relative(5.0, 3.0, 0.01);
    const auto channels = table_channels(3.0);
    for (int it = 0; it < 100; ++it) {
        const auto baths = bath_specs(s, TS(rng), TM(rng), TD(rng), Q(rng), R(rng));
        const auto rates = golden_rule_rates(channels, baths, 0.01 * s.g, s.g);
        for (const auto& rp : rates) {
            const double T = rp.bath == BathId::S   ? baths[0].T
                             : rp.bath == BathId::M ? baths[1].T
                                                    : baths[2].T;
            CHECK(rp.alpha_rate >= 0.0);
            CHECK(rp.beta_rate >= 0.0);
            CHECK(rp.beta_rate ==
                  doctest::Approx(std::exp(-rp.frequency / T) * rp.alpha_rate).epsilon(1e-12));
        }
    }
}

TEST_CASE("golden_rule_rates: alpha^2 and R scaling") {
    const auto s = spectrum::make_spec_relative(5.0, 4.0, 0.01);
    const auto channels = table_channels();
    const auto baths1 = bath_specs(s, 2.0, 0.5, 0.2, 100.0, 1.0);
    const auto baths2 = bath_specs(s, 2.0, 0.5, 0.2, 100.0, 2.5);
    const double a = 0.01 * s.g;

    const auto r1 = golden_rule_rates(channels, baths1, a, s.g);
    const auto r2 = golden_rule_rates(channels, baths1, 3.0 * a, s.g);
    const auto rR = golden_rule_rates(channels, baths2, a, s.g);
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r2[i].alpha_rate == doctest::Approx(9.0 * r1[i].alpha_rate).epsilon(1e-12));
        CHECK(rR[i].alpha_rate == doctest::Approx(2.5 * r1[i].alpha_rate).epsilon(1e-12));
        CHECK(rR[i].beta_rate == doctest::Approx(2.5 * r1[i].beta_rate).epsilon(1e-12));
    }
}

TEST_CASE("golden_rule_rates: weak-coupling gate") {
    const auto s = spectrum::make_spec_relative(5.0, 4.0, 0.01);
    const auto channels = table_channels();
    const auto baths = bath_specs(s, 2.0, 0.5, 0.2, 100.0, 1.0);
    CHECK_THROWS_AS((void)golden_rule_rates(channels, baths, 0.5 * s.g, s.g),
                    WeakCouplingViolation);
    CHECK_THROWS_AS((void)golden_rule_rates(channels, baths, -1.0, s.g), ValidationError);
}
