#include "qtt/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qtt/errors.hpp"

namespace qtt::cli {

spectrum::TransistorSpec spec_from_config(const RunConfig& cfg, double lambda) {
    if (cfg.mode == Mode::circuit) {
        const auto dp = circuit::derive_device_params(*cfg.circuit_params);
        const auto lv = circuit::transmon_levels(dp);
        const double g = circuit::dispersive_coupling(dp, lv);
        // Omega is defined by the omega2 = 5 Omega convention of the
        // relative parametrization.
        return spectrum::make_spec(lv.omega2, lv.omega3, g, lv.omega2 / 5.0);
    }
    return spectrum::make_spec_relative(cfg.omega2, lambda, cfg.g_ratio, cfg.omega_scale);
}

thermo::BathSettings bath_settings_from_config(const RunConfig& cfg) {
    thermo::BathSettings bs;
    bs.T_S = cfg.T_S;
    bs.T_D = cfg.T_D;
    bs.Q = cfg.Q;
    bs.R = cfg.R;
    bs.coupling_ratio = cfg.alpha_ratio;
    return bs;
}

std::vector<double> sweep_grid(const RunConfig& cfg) {
    std::vector<double> grid(size_t(cfg.T_M_points));
    if (cfg.T_M_points == 1) {
        grid[0] = cfg.T_M_min;
        return grid;
    }
    const double h = (cfg.T_M_max - cfg.T_M_min) / double(cfg.T_M_points - 1);
    for (int i = 0; i < cfg.T_M_points; ++i) grid[size_t(i)] = cfg.T_M_min + h * i;
    grid.back() = cfg.T_M_max;
    return grid;
}

std::vector<double> sweep_lambdas(const RunConfig& cfg) {
    if (cfg.mode == Mode::circuit) {
        return {spec_from_config(cfg, 0.0).lambda};
    }
    return cfg.lambdas;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg, int workers) {
    validate(cfg);
    const auto grid = sweep_grid(cfg);
    const auto lambdas = sweep_lambdas(cfg);
    const auto bs = bath_settings_from_config(cfg);

    if (workers <= 0) {
        workers = int(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }

    struct Block {
        double lambda;
        thermo::Device device;
        std::vector<thermo::HeatReport> reports;
    };
    std::vector<Block> blocks;
    blocks.reserve(lambdas.size());
    for (double lam : lambdas) {
        blocks.push_back(Block{lam, thermo::make_device(spec_from_config(cfg, lam)), {}});
        blocks.back().reports.resize(grid.size());
    }

    // All (lambda, T_M) points are independent; dispatch them over a flat
    // index and assemble in grid order so the table is deterministic.
    const std::size_t total = blocks.size() * grid.size();
    std::atomic<std::size_t> next{0};
    std::vector<std::string> failures(static_cast<std::size_t>(workers));
    auto work = [&](int w) {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= total) return;
            auto& blk = blocks[k / grid.size()];
            const std::size_t gi = k % grid.size();
            try {
                blk.reports[gi] = thermo::evaluate_point(blk.device, bs, grid[gi]);
            } catch (const std::exception& e) {
                failures[size_t(w)] = "at lambda = " + std::to_string(blk.lambda) +
                                      ", T_M = " + std::to_string(grid[gi]) + ": " + e.what();
                return;
            }
        }
    };
    if (workers == 1 || total == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    for (const auto& f : failures) {
        if (!f.empty()) throw Error("sweep failed " + f);
    }

    std::vector<SweepRow> rows;
    rows.reserve(total);
    const double nan = std::nan("");
    for (auto& blk : blocks) {
        thermo::AmplificationCurve curve;
        bool have_curve = false;
        if (grid.size() >= 3) {
            curve = thermo::amplification(blk.reports, {.mask_unresolved = true});
            have_curve = true;
        }
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto& rep = blk.reports[i];
            SweepRow row{};
            row.lambda = blk.lambda;
            row.T_M = rep.T_M;
            row.J_S = rep.J_S;
            row.J_M = rep.J_M;
            row.J_D = rep.J_D;
            row.alpha_S = have_curve ? curve.alpha_S[i] : nan;
            row.alpha_D = have_curve ? curve.alpha_D[i] : nan;
            for (int j = 0; j < 6; ++j) row.p[size_t(j)] = rep.state.populations(j);
            row.residual = rep.state.residual;
            rows.push_back(row);
        }
    }
    return rows;
}

namespace {

std::string fmt_sig(double v, int precision) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

}  // namespace

std::string to_csv(const std::vector<SweepRow>& rows, int precision) {
    std::ostringstream out;
    out << "lambda,T_M,J_S,J_M,J_D,alpha_S,alpha_D,p1,p2,p3,p4,p5,p6,residual\n";
    for (const auto& r : rows) {
        out << fmt_sig(r.lambda, precision) << ',' << fmt_sig(r.T_M, precision) << ','
            << fmt_sig(r.J_S, precision) << ',' << fmt_sig(r.J_M, precision) << ','
            << fmt_sig(r.J_D, precision) << ',' << fmt_sig(r.alpha_S, precision) << ','
            << fmt_sig(r.alpha_D, precision);
        for (double p : r.p) out << ',' << fmt_sig(p, precision);
        out << ',' << fmt_sig(r.residual, precision) << '\n';
    }
    return out.str();
}

PlotKind plot_kind_from_string(const std::string& s) {
    if (s == "currents") return PlotKind::currents;
    if (s == "currents-by-lambda") return PlotKind::currents_by_lambda;
    if (s == "amplification") return PlotKind::amplification;
    throw ValidationError("unknown plot kind '" + s +
                          "' (expected currents, currents-by-lambda or amplification)");
}

}  // namespace qtt::cli
