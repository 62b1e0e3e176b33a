#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qtt/errors.hpp"
#include "qtt/sweep.hpp"
#include "qtt/thermo.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw qtt::ValidationError("cannot open output file: " + path);
    }
    out << content;
}

int cmd_run(const std::string& config_path, std::string out_path, std::string plot_path,
            const std::string& plot_kind, int workers) {
    auto cfg = qtt::cli::load_config(config_path);
    if (!out_path.empty()) cfg.csv_path = out_path;
    if (!plot_path.empty()) cfg.svg_path = plot_path;

    const auto rows = qtt::cli::run_sweep(cfg, workers);
    write_file(cfg.csv_path, qtt::cli::to_csv(rows, cfg.precision));
    std::cout << "wrote " << rows.size() << " rows to " << cfg.csv_path << "\n";
    if (!cfg.svg_path.empty()) {
        const auto kind = qtt::cli::plot_kind_from_string(plot_kind);
        write_file(cfg.svg_path, qtt::cli::emit_plot(rows, kind, cfg));
        std::cout << "wrote " << plot_kind << " plot to " << cfg.svg_path << "\n";
    }
    return 0;
}

int cmd_validate(const std::string& config_path) {
    const auto cfg = qtt::cli::load_config(config_path);
    std::cout << "config ok (" << (cfg.mode == qtt::cli::Mode::direct ? "direct" : "circuit")
              << " mode)\n";
    for (double lam : qtt::cli::sweep_lambdas(cfg)) {
        const auto spec = qtt::cli::spec_from_config(cfg, lam);
        std::printf("lambda = %g: omega1 = %.6g, omega2 = %.6g, omega3 = %.6g, g = %.6g "
                    "(units of Omega = %.6g)\n",
                    spec.lambda, spec.omega1 / spec.Omega, spec.omega2 / spec.Omega,
                    spec.omega3 / spec.Omega, spec.g / spec.Omega, spec.Omega);
    }
    return 0;
}

int cmd_switch(const std::string& config_path, double t_off, double t_on) {
    const auto cfg = qtt::cli::load_config(config_path);
    const auto dev = qtt::thermo::make_device(qtt::cli::spec_from_config(cfg, cfg.lambda));
    const auto bs = qtt::cli::bath_settings_from_config(cfg);
    const auto sw = qtt::thermo::switch_characterize(dev, bs, t_off, t_on);
    std::printf("J_S(off, T_M = %.6g Omega) = %.12g\n", t_off, sw.J_S_off);
    std::printf("J_S(on,  T_M = %.6g Omega) = %.12g\n", t_on, sw.J_S_on);
    std::printf("contrast = %.12g\n", sw.contrast);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superconducting quantum thermal transistor simulator"};
    app.require_subcommand(1);

    std::string config_path, out_path, plot_path, plot_kind = "currents";
    int workers = 0;
    double t_off = 0.25, t_on = 0.50;

    auto* run = app.add_subcommand("run", "run the sweep and write CSV (and optional SVG)");
    run->add_option("--config", config_path, "config file path")->required();
    run->add_option("--out", out_path, "CSV output path (overrides [output] csv)");
    run->add_option("--plot", plot_path, "SVG output path (overrides [output] svg)");
    run->add_option("--plot-kind", plot_kind,
                    "currents | currents-by-lambda | amplification");
    run->add_option("--workers", workers, "worker thread count (default: hardware)");

    auto* validate = app.add_subcommand("validate", "parse and validate a config");
    validate->add_option("--config", config_path, "config file path")->required();

    auto* sw = app.add_subcommand("switch", "evaluate the on/off switch contrast");
    sw->add_option("--config", config_path, "config file path")->required();
    sw->add_option("--t-off", t_off, "off-state T_M in units of Omega");
    sw->add_option("--t-on", t_on, "on-state T_M in units of Omega");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, out_path, plot_path, plot_kind, workers);
        if (validate->parsed()) return cmd_validate(config_path);
        return cmd_switch(config_path, t_off, t_on);
    } catch (const qtt::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qtt::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
