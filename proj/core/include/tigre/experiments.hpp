#ifndef TIGRE_EXPERIMENTS_HPP
#define TIGRE_EXPERIMENTS_HPP

#include <map>
#include <string>
#include <vector>

#include "tigre/stepper.hpp"

namespace tigre {

// Flat run configuration, mirrored 1:1 by CLI flags; flags override file keys.
struct ExperimentConfig {
    std::string preset = "sod";  // sod | acoustic | kh | custom
    std::string model = "tigre"; // euler | igr | tigre
    std::string scheme = "lw";   // lw | lf (lf: Euler baseline only)
    int nx = 0;                  // 0 -> preset default
    int ny = 0;
    double t_end = -1.0;         // < 0 -> preset default
    double cfl = 0.4;
    double gamma = 1.4;
    double c_v = 2.5;
    double kappa = 1.0;
    double alpha_coef = 1.0;     // alpha = alpha_coef * dx^2
    double beta_coef = 1.0;      // beta  = beta_coef  * dx^2
    double alpha_override = -1.0; // >= 0 replaces the dx^2 scaling
    double beta_override = -1.0;
    double tol = 1e-10;
    int max_sweeps = 200;
    bool verbatim_stencils = false;
    double acoustic_eps = 0.01;  // b1 support scale, printed value
    std::string out_dir = "out";
    std::vector<double> snapshot_times; // empty -> preset defaults
};

// Apply `key = value`; unknown keys throw std::invalid_argument.
void config_apply(ExperimentConfig& cfg, const std::string& key,
                  const std::string& value);
// INI-style file: one key = value per line, '#' comments, blank lines ok.
void parse_config_file(const std::string& path, ExperimentConfig& cfg);

struct ResolvedRun {
    Model model;
    Grid grid;
    ConservedState init;
    StepControl control;
};

ResolvedRun resolve(const ExperimentConfig& cfg);

// Preset initial states. Experiments specified via (rho0, p0, u0) are bridged
// to E or pi by the model's closure.
ConservedState init_sod(const Grid& grid, const Model& model);
ConservedState init_acoustic(const Grid& grid, const Model& model,
                             double eps_b1 = 0.01);
ConservedState init_kh(const Grid& grid, const Model& model);

struct RunOutputs {
    int exit_code = 0;          // 0 clean, 3 aborted mid-run
    std::string abort_reason;
    RunResult result;
    std::vector<std::string> files; // paths relative to out_dir
};

// Execute a resolved run and write diagnostics CSV, spectrum CSV, raster
// snapshots, and the manifest into cfg.out_dir.
RunOutputs run_experiment(const ExperimentConfig& cfg);

std::string code_version();

} // namespace tigre

#endif
