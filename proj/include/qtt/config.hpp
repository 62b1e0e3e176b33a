#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtt/circuit.hpp"

namespace qtt::cli {

enum class Mode { direct, circuit };

/// Flat sectioned key-value configuration. An empty document yields the
/// reference defaults: g = 0.01 w1, alpha = 0.01 g, Q = 100, T_S = 2,
/// T_D = 0.2, w2 = 5 (all in units of Omega), lambda = 4, sweep
/// T_M/Omega in [0.05, 1.0] with 200 points over lambdas {1,2,3,4}.
struct RunConfig {
    Mode mode = Mode::direct;

    // [spec]
    double omega2 = 5.0;        // omega2 / Omega
    double lambda = 4.0;        // anharmonicity for single-point commands
    double g_ratio = 0.01;      // g / omega1
    double alpha_ratio = 0.01;  // alpha / g
    double omega_scale = 1.0;   // Omega

    // [baths]
    double T_S = 2.0;  // / Omega
    double T_D = 0.2;  // / Omega
    double Q = 100.0;
    double R = 1.0;

    // [sweep]
    double T_M_min = 0.05;  // / Omega
    double T_M_max = 1.0;   // / Omega
    int T_M_points = 200;
    std::vector<double> lambdas = {1.0, 2.0, 3.0, 4.0};

    // [output]
    std::string csv_path = "sweep.csv";
    std::string svg_path;
    int precision = 12;  // significant digits in CSV output

    // [circuit], required in circuit mode
    std::optional<circuit::RawCircuitParams> circuit_params;
};

/// Parses the sectioned key=value text ('#' comments). Unknown sections or
/// keys are rejected with line diagnostics (ParseError); invariant
/// violations raise ValidationError naming the offending key.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

/// Canonical serialization; parse(serialize(c)) == c exactly.
std::string serialize_config(const RunConfig& cfg);

void validate(const RunConfig& cfg);

}  // namespace qtt::cli
