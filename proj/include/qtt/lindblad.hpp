#pragma once

#include <cstddef>
#include <vector>

#include "qtt/bath.hpp"
#include "qtt/spectrum.hpp"
#include "qtt/types.hpp"

namespace qtt::lindblad {

/// Generator of the closed population dynamics dp/dt = M p in the eigenbasis.
/// Columns sum to zero, off-diagonal entries are nonnegative.
struct PopulationRateMatrix {
    Matrix6d M;
};

/// Projects the dissipator onto populations, channel by channel, and asserts
/// the result against the hard-coded closed-form template (gamma_i diagonal
/// composition); TemplateMismatch signals a channel/weight bug. Requires all
/// nine rate pairs; channels must be in the eigenbasis.
PopulationRateMatrix build_rate_matrix(const std::vector<spectrum::CollapseChannel>& channels,
                                       const std::vector<bath::RatePair>& rates);

struct SteadyState {
    Vector6d populations;  // unit sum, nonnegative
    double residual;       // ||M p||_inf
};

/// Kernel vector of M normalized to unit sum. Solved by replacing one row
/// with the normalization row (well conditioned here), then refined; the
/// kernel dimension is checked via singular values first (DegenerateKernel
/// if it is not one-dimensional). Entries below -1e-10 raise
/// NegativePopulation; tiny negatives are clamped to zero with a warning.
SteadyState steady_state(const PopulationRateMatrix& rm);

/// Smallest nonzero |Re eigenvalue| of M; 1/rate is the slowest relaxation
/// timescale (used to pick ODE horizons).
double slowest_relaxation_rate(const PopulationRateMatrix& rm);

struct EvolveOptions {
    double rel_tol = 1e-11;
    double abs_tol = 1e-14;
    double trace_tol = 1e-9;          // |tr rho - 1| bound checked at the end
    std::size_t max_steps = 20000000;
};

/// Integrates the full master equation
///   drho/dt = -i[H, rho]
///     + sum_ch Gamma(+w)[2 A rho A+ - {A+A, rho}]
///     + Gamma(-w)[2 A+ rho A - {A A+, rho}]
/// over `duration`. rho0, H and the channel matrices must share one basis
/// (pass to_product_basis(ch) alongside a product-basis H, or the eigenbasis
/// forms with a diagonal H). The commutator is handled exactly by an
/// integrating factor built from a numeric diagonalization of H; the
/// dissipator is integrated by an adaptive embedded Dormand-Prince 5(4)
/// stepper. Throws IntegrationFailure if step control cannot meet tolerance.
Matrix6cd evolve(const Matrix6cd& rho0, double duration,
                 const std::vector<spectrum::CollapseChannel>& channels,
                 const std::vector<bath::RatePair>& rates, const Matrix6d& H,
                 const EvolveOptions& opt = {});

/// Hermiticity / unit trace / positivity (eigenvalues >= -1e-10 by default).
void validate_density_matrix(const Matrix6cd& rho, double tol = 1e-10);

}  // namespace qtt::lindblad
