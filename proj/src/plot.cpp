#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "qtt/errors.hpp"
#include "qtt/sweep.hpp"
#include "qtt/thermo.hpp"

namespace qtt::cli {

namespace {

struct Series {
    std::string label;
    std::string color;
    std::vector<double> x, y;  // NaN y entries are skipped when drawing
};

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                          "#bcbd22", "#17becf", "#aec7e8", "#ffbb78"};

std::string num(double v, const char* spec = "%.2f") {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::vector<double> distinct_lambdas(const std::vector<SweepRow>& rows) {
    std::vector<double> out;
    for (const auto& r : rows) {
        if (out.empty() || out.back() != r.lambda) out.push_back(r.lambda);
    }
    return out;
}

std::vector<const SweepRow*> block_of(const std::vector<SweepRow>& rows, double lambda) {
    std::vector<const SweepRow*> out;
    for (const auto& r : rows) {
        if (r.lambda == lambda) out.push_back(&r);
    }
    return out;
}

std::string lambda_label(double lam) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", lam);
    return buf;
}

}  // namespace

std::string emit_plot(const std::vector<SweepRow>& rows, PlotKind kind, const RunConfig& cfg) {
    if (rows.empty()) {
        throw EmptyTable("cannot plot an empty sweep table");
    }
    const auto lambdas = distinct_lambdas(rows);

    std::vector<Series> series;
    std::string y_label;
    int color = 0;
    auto add_currents = [&](double lam, bool tag_lambda) {
        const auto block = block_of(rows, lam);
        const char* names[3] = {"J_S", "J_M", "J_D"};
        for (int j = 0; j < 3; ++j) {
            Series s;
            s.label = names[j];
            if (tag_lambda) s.label += " (lambda=" + lambda_label(lam) + ")";
            s.color = kPalette[color++ % 12];
            for (const auto* r : block) {
                s.x.push_back(r->T_M);
                s.y.push_back(j == 0 ? r->J_S : j == 1 ? r->J_M : r->J_D);
            }
            series.push_back(std::move(s));
        }
    };

    if (kind == PlotKind::currents) {
        y_label = "J / (R Omega^4)";
        double lam = lambdas.front();
        for (double cand : lambdas) {
            if (cand == cfg.lambda) lam = cand;
        }
        add_currents(lam, false);
    } else if (kind == PlotKind::currents_by_lambda) {
        y_label = "J / (R Omega^4)";
        for (double lam : lambdas) add_currents(lam, true);
    } else {
        y_label = "normalized alpha_S";
        // Peak-relative normalization against the lowest-anharmonicity block.
        const double lam_ref = *std::min_element(lambdas.begin(), lambdas.end());
        double peak_ref = -std::numeric_limits<double>::infinity();
        for (const auto* r : block_of(rows, lam_ref)) {
            if (!std::isnan(r->alpha_S)) peak_ref = std::max(peak_ref, r->alpha_S);
        }
        if (!std::isfinite(peak_ref) || peak_ref == 0.0) {
            throw FlatModulator("reference amplification curve has no resolvable points");
        }
        for (double lam : lambdas) {
            Series s;
            s.label = "lambda=" + lambda_label(lam);
            s.color = kPalette[color++ % 12];
            for (const auto* r : block_of(rows, lam)) {
                s.x.push_back(r->T_M);
                s.y.push_back(r->alpha_S / peak_ref);
            }
            series.push_back(std::move(s));
        }
    }

    // Data ranges over finite points.
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (std::isnan(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!std::isfinite(xmin) || !std::isfinite(ymin)) {
        throw EmptyTable("no finite data points to plot");
    }
    if (xmax == xmin) { xmin -= 1.0; xmax += 1.0; }
    if (ymax == ymin) { ymin -= 1.0; ymax += 1.0; }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double W = 800, H = 520;
    const double L = 80, R = 640, T = 30, B = 470;
    auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (R - L); };
    auto py = [&](double y) { return B - (y - ymin) / (ymax - ymin) * (B - T); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    svg << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << R - L << "\" height=\""
        << B - T << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        const double yv = ymin + (ymax - ymin) * i / 5.0;
        svg << "<line x1=\"" << num(px(xv)) << "\" y1=\"" << B << "\" x2=\"" << num(px(xv))
            << "\" y2=\"" << B + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << num(px(xv)) << "\" y=\"" << B + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << num(xv, "%.3g") << "</text>\n";
        svg << "<line x1=\"" << L - 5 << "\" y1=\"" << num(py(yv)) << "\" x2=\"" << L
            << "\" y2=\"" << num(py(yv)) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << L - 8 << "\" y=\"" << num(py(yv) + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << num(yv, "%.3g") << "</text>\n";
    }
    svg << "<text x=\"" << (L + R) / 2 << "\" y=\"" << H - 10
        << "\" font-size=\"14\" text-anchor=\"middle\">T_M / Omega</text>\n";
    svg << "<text x=\"20\" y=\"" << (T + B) / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << (T + B) / 2 << ")\">" << y_label << "</text>\n";

    for (const auto& s : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (std::isnan(s.y[i])) continue;
            if (!first) svg << ' ';
            svg << num(px(s.x[i])) << ',' << num(py(s.y[i]));
            first = false;
        }
        svg << "\"/>\n";
    }

    double ly = T + 14;
    for (const auto& s : series) {
        svg << "<line x1=\"" << R + 12 << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << R + 34
            << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << s.color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << R + 40 << "\" y=\"" << num(ly)
            << "\" font-size=\"12\">" << s.label << "</text>\n";
        ly += 18;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace qtt::cli
