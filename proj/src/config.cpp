#include "qtt/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qtt/errors.hpp"

namespace qtt::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view v, int line) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ParseError("line " + std::to_string(line) + ": invalid number '" +
                         std::string(v) + "'");
    }
    return out;
}

int parse_int(std::string_view v, int line) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ParseError("line " + std::to_string(line) + ": invalid integer '" +
                         std::string(v) + "'");
    }
    return out;
}

std::vector<double> parse_list(std::string_view v, int line) {
    std::vector<double> out;
    while (!v.empty()) {
        const auto comma = v.find(',');
        const std::string_view item = trim(v.substr(0, comma));
        if (item.empty()) {
            throw ParseError("line " + std::to_string(line) + ": empty list element");
        }
        out.push_back(parse_double(item, line));
        if (comma == std::string_view::npos) break;
        v.remove_prefix(comma + 1);
    }
    if (out.empty()) {
        throw ParseError("line " + std::to_string(line) + ": empty list");
    }
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    circuit::RawCircuitParams cp{};
    bool have_circuit_key = false;

    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                              : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError("line " + std::to_string(line_no) + ": unterminated section");
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "spec" && section != "baths" && section != "sweep" &&
                section != "output" && section != "circuit") {
                throw ParseError("line " + std::to_string(line_no) + ": unknown section [" +
                                 section + "]");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": empty key or value");
        }

        auto unknown = [&]() -> ParseError {
            return ParseError("line " + std::to_string(line_no) + ": unknown key '" + key +
                              "' in section [" + section + "]");
        };

        if (section.empty()) {
            if (key == "mode") {
                if (value == "direct") cfg.mode = Mode::direct;
                else if (value == "circuit") cfg.mode = Mode::circuit;
                else throw ParseError("line " + std::to_string(line_no) +
                                      ": mode must be 'direct' or 'circuit'");
            } else {
                throw unknown();
            }
        } else if (section == "spec") {
            if (key == "omega2") cfg.omega2 = parse_double(value, line_no);
            else if (key == "lambda") cfg.lambda = parse_double(value, line_no);
            else if (key == "g_ratio") cfg.g_ratio = parse_double(value, line_no);
            else if (key == "alpha_ratio") cfg.alpha_ratio = parse_double(value, line_no);
            else if (key == "omega_scale") cfg.omega_scale = parse_double(value, line_no);
            else throw unknown();
        } else if (section == "baths") {
            if (key == "T_S") cfg.T_S = parse_double(value, line_no);
            else if (key == "T_D") cfg.T_D = parse_double(value, line_no);
            else if (key == "Q") cfg.Q = parse_double(value, line_no);
            else if (key == "R") cfg.R = parse_double(value, line_no);
            else throw unknown();
        } else if (section == "sweep") {
            if (key == "T_M_min") cfg.T_M_min = parse_double(value, line_no);
            else if (key == "T_M_max") cfg.T_M_max = parse_double(value, line_no);
            else if (key == "T_M_points") cfg.T_M_points = parse_int(value, line_no);
            else if (key == "lambdas") cfg.lambdas = parse_list(value, line_no);
            else throw unknown();
        } else if (section == "output") {
            if (key == "csv") cfg.csv_path = std::string(value);
            else if (key == "svg") cfg.svg_path = std::string(value);
            else if (key == "precision") cfg.precision = parse_int(value, line_no);
            else throw unknown();
        } else {  // circuit
            have_circuit_key = true;
            if (key == "C1") cp.C1 = parse_double(value, line_no);
            else if (key == "C2") cp.C2 = parse_double(value, line_no);
            else if (key == "C3") cp.C3 = parse_double(value, line_no);
            else if (key == "Cg1") cp.Cg1 = parse_double(value, line_no);
            else if (key == "Cg2") cp.Cg2 = parse_double(value, line_no);
            else if (key == "L2") cp.L2 = parse_double(value, line_no);
            else if (key == "EJ1") cp.EJ1 = parse_double(value, line_no);
            else if (key == "EJ3") cp.EJ3 = parse_double(value, line_no);
            else throw unknown();
        }
    }

    if (have_circuit_key) cfg.circuit_params = cp;
    validate(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open config file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "mode = " << (cfg.mode == Mode::direct ? "direct" : "circuit") << "\n\n";
    out << "[spec]\n";
    out << "omega2 = " << fmt(cfg.omega2) << "\n";
    out << "lambda = " << fmt(cfg.lambda) << "\n";
    out << "g_ratio = " << fmt(cfg.g_ratio) << "\n";
    out << "alpha_ratio = " << fmt(cfg.alpha_ratio) << "\n";
    out << "omega_scale = " << fmt(cfg.omega_scale) << "\n\n";
    out << "[baths]\n";
    out << "T_S = " << fmt(cfg.T_S) << "\n";
    out << "T_D = " << fmt(cfg.T_D) << "\n";
    out << "Q = " << fmt(cfg.Q) << "\n";
    out << "R = " << fmt(cfg.R) << "\n\n";
    out << "[sweep]\n";
    out << "T_M_min = " << fmt(cfg.T_M_min) << "\n";
    out << "T_M_max = " << fmt(cfg.T_M_max) << "\n";
    out << "T_M_points = " << cfg.T_M_points << "\n";
    out << "lambdas = ";
    for (std::size_t i = 0; i < cfg.lambdas.size(); ++i) {
        out << (i ? ", " : "") << fmt(cfg.lambdas[i]);
    }
    out << "\n\n[output]\n";
    out << "csv = " << cfg.csv_path << "\n";
    if (!cfg.svg_path.empty()) out << "svg = " << cfg.svg_path << "\n";
    out << "precision = " << cfg.precision << "\n";
    if (cfg.circuit_params) {
        const auto& p = *cfg.circuit_params;
        out << "\n[circuit]\n";
        out << "C1 = " << fmt(p.C1) << "\nC2 = " << fmt(p.C2) << "\nC3 = " << fmt(p.C3) << "\n";
        out << "Cg1 = " << fmt(p.Cg1) << "\nCg2 = " << fmt(p.Cg2) << "\n";
        out << "L2 = " << fmt(p.L2) << "\n";
        out << "EJ1 = " << fmt(p.EJ1) << "\nEJ3 = " << fmt(p.EJ3) << "\n";
    }
    return out.str();
}

void validate(const RunConfig& cfg) {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) {
            throw ValidationError(std::string(name) + " must be strictly positive");
        }
    };
    positive(cfg.omega_scale, "omega_scale");
    positive(cfg.omega2, "omega2");
    positive(cfg.T_S, "T_S");
    positive(cfg.T_D, "T_D");
    positive(cfg.Q, "Q");
    positive(cfg.R, "R");
    positive(cfg.T_M_min, "T_M_min");
    positive(cfg.T_M_max, "T_M_max");
    positive(cfg.g_ratio, "g_ratio");
    positive(cfg.alpha_ratio, "alpha_ratio");
    if (cfg.T_M_min > cfg.T_M_max) {
        throw ValidationError("T_M_min must not exceed T_M_max");
    }
    if (cfg.T_M_points < 1) {
        throw ValidationError("T_M_points must be at least 1");
    }
    if (cfg.T_M_points == 1 && cfg.T_M_min != cfg.T_M_max) {
        throw ValidationError("a single-point sweep requires T_M_min == T_M_max");
    }
    if (cfg.T_M_points > 1 && !(cfg.T_M_min < cfg.T_M_max)) {
        throw ValidationError("a multi-point sweep requires T_M_min < T_M_max");
    }
    if (cfg.precision < 3 || cfg.precision > 17) {
        throw ValidationError("precision must lie in [3, 17]");
    }
    if (cfg.mode == Mode::direct) {
        if (cfg.lambdas.empty()) {
            throw ValidationError("sweep lambda list must not be empty");
        }
        for (double lam : cfg.lambdas) {
            if (!(10.0 - lam > cfg.omega2)) {
                throw ValidationError("lambda = " + std::to_string(lam) +
                                      " leaves no positive qubit energy "
                                      "(requires 10 - lambda > omega2)");
            }
        }
        if (!(10.0 - cfg.lambda > cfg.omega2)) {
            throw ValidationError("spec lambda leaves no positive qubit energy");
        }
    } else {
        if (!cfg.circuit_params) {
            throw ValidationError("circuit mode requires a [circuit] section");
        }
        // Circuit-mode configs must describe a device inside the model's
        // validity regime; surfaced as a config failure, not a numerical one.
        try {
            const auto dp = circuit::derive_device_params(*cfg.circuit_params);
            const auto lv = circuit::transmon_levels(dp);
            (void)circuit::dispersive_coupling(dp, lv);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ValidationError(std::string("[circuit] section rejected: ") + e.what());
        }
    }
}

}  // namespace qtt::cli
