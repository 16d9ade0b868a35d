#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tigre/experiments.hpp"

namespace tigre {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_times(const std::string& v) {
    std::vector<double> out;
    std::istringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    return out;
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::invalid_argument("config: bad boolean value '" + v + "'");
}

} // namespace

void config_apply(ExperimentConfig& cfg, const std::string& key,
                  const std::string& value) {
    if (key == "preset") cfg.preset = value;
    else if (key == "model") cfg.model = value;
    else if (key == "scheme") cfg.scheme = value;
    else if (key == "nx") cfg.nx = std::stoi(value);
    else if (key == "ny") cfg.ny = std::stoi(value);
    else if (key == "t_end") cfg.t_end = std::stod(value);
    else if (key == "cfl") cfg.cfl = std::stod(value);
    else if (key == "gamma") cfg.gamma = std::stod(value);
    else if (key == "c_v") cfg.c_v = std::stod(value);
    else if (key == "kappa") cfg.kappa = std::stod(value);
    else if (key == "alpha_coef") cfg.alpha_coef = std::stod(value);
    else if (key == "beta_coef") cfg.beta_coef = std::stod(value);
    else if (key == "alpha") cfg.alpha_override = std::stod(value);
    else if (key == "beta") cfg.beta_override = std::stod(value);
    else if (key == "tol") cfg.tol = std::stod(value);
    else if (key == "max_sweeps") cfg.max_sweeps = std::stoi(value);
    else if (key == "fidelity_verbatim_stencils") cfg.verbatim_stencils = parse_bool(value);
    else if (key == "acoustic_eps") cfg.acoustic_eps = std::stod(value);
    else if (key == "out") cfg.out_dir = value;
    else if (key == "snapshots") cfg.snapshot_times = parse_times(value);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

void parse_config_file(const std::string& path, ExperimentConfig& cfg) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not 'key = value'");
        config_apply(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

} // namespace tigre
