#include "tigre/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "tigre/diagnostics.hpp"
#include "tigre/manifest.hpp"
#include "tigre/raster_io.hpp"

namespace tigre {

std::string code_version() { return "tigre 0.1.0"; }

ConservedState init_sod(const Grid& grid, const Model& model) {
    if (grid.dim != 1)
        throw std::invalid_argument("init_sod: 1D preset");
    constexpr double x_l = 0.25, x_r = 0.75, eps = 0.03;
    constexpr double rho_l = 1.0, rho_r = 0.125, p_l = 1.0, p_r = 0.1;
    ScalarField rho0(grid), p0(grid);
    VectorField u0(grid);
    for (int i = 0; i < grid.nx; ++i) {
        const double x = grid.x(i);
        const double psi = 0.5 * (std::tanh((x - x_l) / eps) - std::tanh((x - x_r) / eps));
        rho0(i, 0) = rho_l - (rho_l - rho_r) * psi;
        p0(i, 0) = p_l - (p_l - p_r) * psi;
    }
    return state_from_primitives(model, rho0, u0, p0);
}

namespace {

double bump(double r_sq) {
    return r_sq < 1.0 ? std::exp(-1.0 / (1.0 - r_sq)) : 0.0;
}

// Entropy-form presets hand (rho0, pi0) directly; energy-form models go
// through the pressure closure p0 = p(rho0, pi0/rho0).
ConservedState state_from_rho_pi(const Model& model, const ScalarField& rho0,
                                 const VectorField& u0, const ScalarField& pi0) {
    const Grid& g = rho0.grid();
    if (model.state_form() == StateForm::Entropy) {
        ConservedState st(StateForm::Entropy, g);
        for (int n = 0; n < g.cells(); ++n) {
            st.rho[n] = rho0[n];
            st.mom.x[n] = rho0[n] * u0.x[n];
            st.mom.y[n] = rho0[n] * u0.y[n];
            st.ez[n] = pi0[n];
        }
        return st;
    }
    ScalarField p0(g);
    for (int n = 0; n < g.cells(); ++n)
        p0[n] = pressure_from_entropy(model.eos, rho0[n], pi0[n] / rho0[n]);
    return state_from_primitives(model, rho0, u0, p0);
}

} // namespace

ConservedState init_acoustic(const Grid& grid, const Model& model, double eps_b1) {
    if (grid.dim != 2)
        throw std::invalid_argument("init_acoustic: 2D preset");
    ScalarField rho0(grid), pi0(grid);
    VectorField u0(grid);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i), y = grid.y(j);
            const double r1_sq =
                ((x - 0.3) * (x - 0.3) + (y - 0.4) * (y - 0.4)) / (eps_b1 * eps_b1);
            const double b1 = bump(r1_sq);
            const double theta = std::atan2(y - 0.6, x - 0.7);
            const double eps_t = 0.1 * (1.0 + 0.18 * std::cos(4.0 * theta));
            const double q2_sq =
                ((x - 0.7) * (x - 0.7) + (y - 0.6) * (y - 0.6)) / (eps_t * eps_t);
            const double b2 = bump(q2_sq);
            rho0(i, j) = 1.0 + 0.1 * (b1 + b2);
            pi0(i, j) = 0.2 + 0.1 * (b1 + b2);
        }
    return state_from_rho_pi(model, rho0, u0, pi0);
}

ConservedState init_kh(const Grid& grid, const Model& model) {
    if (grid.dim != 2)
        throw std::invalid_argument("init_kh: 2D preset");
    constexpr double y0 = 0.5, w = 0.1, h = 0.01, amp = 0.01;
    ScalarField rho0(grid), pi0(grid);
    VectorField u0(grid);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i), y = grid.y(j);
            const double dy = std::fmod(y - y0 + 0.5, 1.0) - 0.5;
            u0.x(i, j) = 0.25 * std::tanh((dy + w) / h) - 0.25 * std::tanh((dy - w) / h);
            u0.y(i, j) = amp * std::sin(2.0 * std::numbers::pi * x) * std::exp(-dy * dy / h);
            rho0(i, j) = 1.0;
            pi0(i, j) = 0.2;
        }
    return state_from_rho_pi(model, rho0, u0, pi0);
}

ResolvedRun resolve(const ExperimentConfig& cfg) {
    Model model;
    if (cfg.model == "euler") model.kind = ModelKind::Euler;
    else if (cfg.model == "igr") model.kind = ModelKind::Igr;
    else if (cfg.model == "tigre") model.kind = ModelKind::Tigre;
    else throw std::invalid_argument("resolve: unknown model '" + cfg.model + "'");
    model.eos = EosParams{cfg.gamma, cfg.c_v, cfg.kappa};
    model.eos.validate();

    int nx = cfg.nx, ny = cfg.ny;
    double t_end = cfg.t_end;
    std::vector<double> snaps = cfg.snapshot_times;
    int dim;
    if (cfg.preset == "sod") {
        dim = 1;
        if (nx == 0) nx = 500;
        ny = 1;
        if (t_end < 0.0) t_end = 0.5;
        if (snaps.empty()) snaps = {0.0, 0.125, 0.25, t_end};
    } else if (cfg.preset == "acoustic" || cfg.preset == "kh") {
        dim = 2;
        if (nx == 0) nx = 256;
        if (ny == 0) ny = nx;
        if (t_end < 0.0) t_end = cfg.preset == "kh" ? 4.0 : 1.0;
        if (snaps.empty()) snaps = {0.0, t_end};
    } else if (cfg.preset == "custom") {
        if (nx == 0) throw std::invalid_argument("resolve: custom preset needs nx");
        dim = ny > 1 ? 2 : 1;
        if (dim == 1) ny = 1;
        if (t_end < 0.0) throw std::invalid_argument("resolve: custom preset needs t_end");
        if (snaps.empty()) snaps = {0.0, t_end};
    } else {
        throw std::invalid_argument("resolve: unknown preset '" + cfg.preset + "'");
    }

    ResolvedRun rr;
    rr.model = model;
    rr.grid = make_grid(dim, nx, ny);

    RegParams reg;
    reg.alpha = cfg.alpha_override >= 0.0 ? cfg.alpha_override
                                          : cfg.alpha_coef * rr.grid.dx * rr.grid.dx;
    reg.beta = cfg.beta_override >= 0.0 ? cfg.beta_override
                                        : cfg.beta_coef * rr.grid.dx * rr.grid.dx;
    reg.tol = cfg.tol;
    reg.max_sweeps = cfg.max_sweeps;
    reg.stencil.verbatim = cfg.verbatim_stencils;
    reg.validate();
    rr.model.reg = reg;

    if (cfg.preset == "sod") {
        rr.init = init_sod(rr.grid, rr.model);
    } else if (cfg.preset == "acoustic") {
        rr.init = init_acoustic(rr.grid, rr.model, cfg.acoustic_eps);
    } else if (cfg.preset == "kh") {
        rr.init = init_kh(rr.grid, rr.model);
    } else {
        ScalarField rho0(rr.grid, 1.0), p0(rr.grid, 1.0);
        VectorField u0(rr.grid);
        rr.init = state_from_primitives(rr.model, rho0, u0, p0);
    }

    rr.control.cfl = cfg.cfl;
    rr.control.t_end = t_end;
    rr.control.snapshot_times = snaps;
    if (cfg.scheme == "lf") rr.control.scheme = Scheme::LaxFriedrichs;
    else if (cfg.scheme != "lw")
        throw std::invalid_argument("resolve: unknown scheme '" + cfg.scheme + "'");
    rr.control.validate();
    return rr;
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string config_echo(const ExperimentConfig& cfg, const ResolvedRun& rr) {
    std::ostringstream os;
    os << "preset = " << cfg.preset << "\n"
       << "model = " << cfg.model << "\n"
       << "scheme = " << cfg.scheme << "\n"
       << "nx = " << rr.grid.nx << "\n"
       << "ny = " << rr.grid.ny << "\n"
       << "t_end = " << fmt17(rr.control.t_end) << "\n"
       << "cfl = " << fmt17(rr.control.cfl) << "\n"
       << "gamma = " << fmt17(cfg.gamma) << "\n"
       << "c_v = " << fmt17(cfg.c_v) << "\n"
       << "kappa = " << fmt17(cfg.kappa) << "\n"
       << "alpha = " << fmt17(rr.model.reg.alpha) << "\n"
       << "beta = " << fmt17(rr.model.reg.beta) << "\n"
       << "tol = " << fmt17(rr.model.reg.tol) << "\n"
       << "max_sweeps = " << rr.model.reg.max_sweeps << "\n"
       << "fidelity_verbatim_stencils = " << (cfg.verbatim_stencils ? "true" : "false") << "\n"
       << "acoustic_eps = " << fmt17(cfg.acoustic_eps) << "\n";
    os << "snapshots = ";
    for (size_t k = 0; k < rr.control.snapshot_times.size(); ++k)
        os << (k ? "," : "") << fmt17(rr.control.snapshot_times[k]);
    os << "\n";
    return os.str();
}

} // namespace

RunOutputs run_experiment(const ExperimentConfig& cfg) {
    namespace fs = std::filesystem;
    const ResolvedRun rr = resolve(cfg);
    fs::create_directories(cfg.out_dir);

    RunOutputs out;
    std::ofstream spec_csv;
    int snap_idx = 0;

    auto dump_field = [&](const ScalarField& f, double t, const std::string& name) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "snap%03d_%s.tigr", snap_idx, name.c_str());
        write_raster(cfg.out_dir + "/" + buf, f, t);
        out.files.push_back(buf);
    };

    SnapshotSink sink = [&](const ConservedState& st, const Potentials& pots) {
        const double t = st.time;
        dump_field(st.rho, t, "rho");
        const VectorField u = velocity(st);
        dump_field(u.x, t, "ux");
        if (st.grid().dim == 2) dump_field(u.y, t, "uy");
        const ScalarField p = pressure_field(rr.model, st);
        dump_field(p, t, "pressure");
        dump_field(st.ez, t, st.form == StateForm::Entropy ? "pi" : "energy");
        if (rr.model.has_potentials()) {
            dump_field(pots.sigma, t, "sigma");
            if (rr.model.kind == ModelKind::Tigre) dump_field(pots.chi, t, "chi");
        }
        if (st.grid().dim == 2) {
            if (!spec_csv.is_open()) {
                spec_csv.open(cfg.out_dir + "/spectra.csv");
                spec_csv << "t,b,P_pressure,E_kinetic\n";
            }
            const SpectrumRecord ps = shell_spectrum(p);
            const SpectrumRecord ks = shell_spectrum(u);
            for (size_t b = 0; b < ps.shell_power.size(); ++b)
                spec_csv << fmt17(t) << "," << b << "," << fmt17(ps.shell_power[b])
                         << "," << fmt17(ks.shell_power[b]) << "\n";
        }
        ++snap_idx;
    };

    const auto wall0 = std::chrono::steady_clock::now();
    const std::clock_t cpu0 = std::clock();
    try {
        out.result = run(rr.model, rr.init, rr.control, sink);
    } catch (const SimulationAbort& e) {
        out.exit_code = 3;
        out.abort_reason = e.what();
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
    const double cpu = double(std::clock() - cpu0) / CLOCKS_PER_SEC;

    {
        std::ofstream csv(cfg.out_dir + "/diagnostics.csv");
        csv << "step,t,dt,mass,momentum_x,momentum_y,energy,entropy,tv_rho,sweeps,residual\n";
        for (const StepRecord& r : out.result.series)
            csv << r.step << "," << fmt17(r.t) << "," << fmt17(r.dt) << ","
                << fmt17(r.mass) << "," << fmt17(r.momentum_x) << ","
                << fmt17(r.momentum_y) << "," << fmt17(r.energy) << ","
                << fmt17(r.entropy) << "," << fmt17(r.tv_rho) << "," << r.sweeps
                << "," << fmt17(r.residual) << "\n";
    }
    out.files.push_back("diagnostics.csv");
    if (spec_csv.is_open()) {
        spec_csv.close();
        out.files.push_back("spectra.csv");
    }

    std::string echo = config_echo(cfg, rr);
    if (out.exit_code != 0)
        echo += "abort_reason = " + out.abort_reason + "\n";
    write_manifest(cfg.out_dir, echo, wall, cpu, out.files);
    return out;
}

} // namespace tigre
