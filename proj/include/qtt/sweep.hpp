#pragma once

#include <array>
#include <string>
#include <vector>

#include "qtt/config.hpp"
#include "qtt/spectrum.hpp"
#include "qtt/thermo.hpp"

namespace qtt::cli {

/// One (lambda, T_M) grid point of the sweep table. Currents are
/// J/(R Omega^4); alpha columns are NaN where the modulator response is
/// unresolvable (dead region) or the grid is too short to differentiate.
struct SweepRow {
    double lambda;
    double T_M;
    double J_S, J_M, J_D;
    double alpha_S, alpha_D;
    std::array<double, 6> p;
    double residual;
};

/// The TransistorSpec a config describes for a given anharmonicity: direct
/// parametrization, or the full circuit derivation in circuit mode (where
/// lambda comes from the derived levels and the argument is ignored).
spectrum::TransistorSpec spec_from_config(const RunConfig& cfg, double lambda);

thermo::BathSettings bath_settings_from_config(const RunConfig& cfg);

/// Grid values for the modulator temperature sweep.
std::vector<double> sweep_grid(const RunConfig& cfg);

/// Anharmonicity blocks of the sweep (circuit mode has a single block at
/// the circuit-derived lambda).
std::vector<double> sweep_lambdas(const RunConfig& cfg);

/// Runs the full pipeline over every (lambda, T_M) grid point. Points are
/// dispatched over `workers` threads; rows are assembled in grid order, so
/// the output is deterministic regardless of scheduling.
std::vector<SweepRow> run_sweep(const RunConfig& cfg, int workers = 0);

/// UTF-8 CSV with the fixed header
/// lambda,T_M,J_S,J_M,J_D,alpha_S,alpha_D,p1..p6,residual
/// and `precision` significant digits; byte-identical for identical input.
std::string to_csv(const std::vector<SweepRow>& rows, int precision = 12);

enum class PlotKind { currents, currents_by_lambda, amplification };

PlotKind plot_kind_from_string(const std::string& s);

/// Static SVG: T_M/Omega on the x axis, one polyline per series, legend
/// labeling bath and lambda. `currents` plots the cfg.lambda block,
/// `currents_by_lambda` all blocks, `amplification` the normalized
/// alpha_S(T_M) per lambda (peak-relative to the smallest lambda).
std::string emit_plot(const std::vector<SweepRow>& rows, PlotKind kind,
                      const RunConfig& cfg);

}  // namespace qtt::cli
