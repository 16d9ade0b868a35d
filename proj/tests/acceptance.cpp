// Acceptance gate: one criterion per invocation (argv[1] = 1..8), printing a
// single pass/fail line per criterion plus supporting detail. Full-scale
// reference runs are cached under acceptance_cache/ and shared between
// criteria, keyed by preset/model/resolution.
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tigre/diagnostics.hpp"
#include "tigre/elliptic.hpp"
#include "tigre/experiments.hpp"
#include "tigre/manifest.hpp"
#include "tigre/operators.hpp"
#include "tigre/raster_io.hpp"
#include "tigre/stepper.hpp"

using namespace tigre;
namespace fs = std::filesystem;

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

std::vector<std::string> failures;
std::vector<std::string> notes;

void expect(bool ok, const std::string& what) {
    if (ok)
        notes.push_back("  ok: " + what);
    else
        failures.push_back("  FAIL: " + what);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ---------------------------------------------------------------- run cache

const fs::path kCacheRoot = "acceptance_cache";

struct CachedRun {
    fs::path dir;
    double src_sum_x = 0.0;
    double src_sum_y = 0.0;
    double cpu_seconds = 0.0; // wall time if the manifest predates cpu_seconds
};

double manifest_cpu_seconds(const fs::path& dir) {
    std::ifstream is(dir / "manifest.txt");
    std::string line;
    double wall = 0.0;
    while (std::getline(is, line)) {
        if (line.rfind("cpu_seconds = ", 0) == 0) return std::stod(line.substr(14));
        if (line.rfind("wall_seconds = ", 0) == 0) wall = std::stod(line.substr(15));
    }
    return wall;
}

CachedRun ensure_run(const std::string& tag, ExperimentConfig cfg) {
    CachedRun cr;
    cr.dir = kCacheRoot / tag;
    cfg.out_dir = cr.dir.string();
    bool fresh = true;
    try {
        if (fs::exists(cr.dir / "src_sum.txt") &&
            verify_manifest(cr.dir.string()).empty())
            fresh = false;
    } catch (const std::exception&) {
    }
    if (fresh) {
        fs::remove_all(cr.dir);
        const RunOutputs out = run_experiment(cfg);
        if (out.exit_code != 0)
            throw std::runtime_error("run " + tag + " aborted: " + out.abort_reason);
        double sx = 0.0, sy = 0.0;
        for (const StepRecord& r : out.result.series) {
            sx += r.src_int_x;
            sy += r.src_int_y;
        }
        std::ofstream os(cr.dir / "src_sum.txt");
        os.precision(17);
        os << sx << " " << sy << "\n";
    }
    std::ifstream is(cr.dir / "src_sum.txt");
    is >> cr.src_sum_x >> cr.src_sum_y;
    cr.cpu_seconds = manifest_cpu_seconds(cr.dir);
    return cr;
}

// diagnostics.csv rows, fixed column order.
struct DiagRow {
    double step, t, dt, mass, mx, my, energy, entropy, tv, sweeps, residual;
};

std::vector<DiagRow> read_diagnostics(const fs::path& dir) {
    std::ifstream is(dir / "diagnostics.csv");
    if (!is) throw std::runtime_error("missing diagnostics.csv in " + dir.string());
    std::string line;
    std::getline(is, line); // header
    std::vector<DiagRow> rows;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        DiagRow r{};
        char comma;
        ls >> r.step >> comma >> r.t >> comma >> r.dt >> comma >> r.mass >>
            comma >> r.mx >> comma >> r.my >> comma >> r.energy >> comma >>
            r.entropy >> comma >> r.tv >> comma >> r.sweeps >> comma >> r.residual;
        rows.push_back(r);
    }
    return rows;
}

double rel_drift(const std::vector<DiagRow>& rows, double DiagRow::* field) {
    const double q0 = rows.front().*field;
    double worst = 0.0;
    for (const DiagRow& r : rows)
        worst = std::max(worst, std::fabs(r.*field - q0));
    return worst / std::max(1.0, std::fabs(q0));
}

ExperimentConfig preset_cfg(const std::string& preset, const std::string& model) {
    ExperimentConfig cfg;
    cfg.preset = preset;
    cfg.model = model;
    return cfg;
}

// --------------------------------------------------------- shared math bits

ScalarField smooth_positive(const Grid& g, unsigned seed, double base) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-0.15, 0.15);
    std::uniform_int_distribution<int> mode(1, 3);
    const double a1 = amp(rng), a2 = amp(rng), a3 = amp(rng);
    const int k1 = mode(rng), k2 = mode(rng), k3 = mode(rng);
    ScalarField f(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            f(i, j) = base + a1 * std::sin(tau * k1 * g.x(i)) +
                      a2 * std::cos(tau * k2 * g.y(j)) +
                      a3 * std::sin(tau * k3 * (g.x(i) + g.y(j)));
    return f;
}

// Dense assembly of the coupled system straight from its definition, used as
// the direct-solve oracle (independent of the production solver internals).
std::vector<double> dense_solve_tigre(const Grid& g, const ScalarField& rho,
                                      const ScalarField& pi, const RegParams& reg,
                                      const EllipticRhs& rhs) {
    const int nc = g.cells();
    const int n = 2 * nc;
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    std::vector<double> b(static_cast<size_t>(n), 0.0);
    auto at = [&](int r, int c) -> double& { return a[static_cast<size_t>(r) * n + c]; };
    auto idx = [&](int i, int j) { return j * g.nx + i; };

    ScalarField g11(g), g12(g), g22(g);
    for (int m = 0; m < nc; ++m) {
        g11[m] = 1.0 / rho[m];
        g12[m] = pi[m] / rho[m];
        g22[m] = pi[m] * pi[m] / rho[m];
    }
    auto add_l = [&](int roff, int uoff, const ScalarField& w, int i, int j,
                     double coeff) {
        const int c = idx(i, j);
        const int nb[4][2] = {{(i + 1) % g.nx, j},
                              {(i + g.nx - 1) % g.nx, j},
                              {i, (j + 1) % g.ny},
                              {i, (j + g.ny - 1) % g.ny}};
        const double hs[4] = {g.dx, g.dx, g.dy, g.dy};
        for (int k = 0; k < (g.dim == 2 ? 4 : 2); ++k) {
            const int m = idx(nb[k][0], nb[k][1]);
            const double wf = 0.5 * (w[c] + w[m]) / (hs[k] * hs[k]);
            at(roff + c, uoff + m) += coeff * wf;
            at(roff + c, uoff + c) -= coeff * wf;
        }
    };
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int c = idx(i, j);
            at(c, c) += 1.0 / rho[c];
            add_l(0, 0, g11, i, j, -reg.alpha);
            add_l(0, nc, g12, i, j, -reg.alpha);
            at(nc + c, nc + c) += 1.0;
            add_l(nc, 0, g12, i, j, -reg.beta / pi[c]);
            add_l(nc, nc, g22, i, j, -reg.beta / pi[c]);
            b[c] = rhs.f1[c];
            b[nc + c] = rhs.f2[c];
        }

    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(at(r, col)) > std::fabs(at(piv, col))) piv = r;
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(at(col, c), at(piv, c));
            std::swap(b[col], b[piv]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double m = at(r, col) / at(col, col);
            if (m == 0.0) continue;
            for (int c = col; c < n; ++c) at(r, c) -= m * at(col, c);
            b[r] -= m * b[col];
        }
    }
    std::vector<double> x(static_cast<size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= at(r, c) * x[c];
        x[r] = s / at(r, r);
    }
    return x;
}

// ------------------------------------------------------------- criterion 1

void criterion_conservation() {
    const char* presets[] = {"sod", "acoustic", "kh"};
    const char* models[] = {"euler", "igr", "tigre"};
    for (const char* preset : presets)
        for (const char* model : models) {
            const std::string tag = std::string(preset) + "_" + model;
            const CachedRun cr = ensure_run(tag, preset_cfg(preset, model));
            const auto rows = read_diagnostics(cr.dir);
            const std::string lbl = tag + ": ";

            expect(rel_drift(rows, &DiagRow::mass) <= 1e-11,
                   lbl + "mass drift " + fmt(rel_drift(rows, &DiagRow::mass)));
            if (std::string(model) == "tigre") {
                expect(rel_drift(rows, &DiagRow::entropy) <= 1e-11,
                       lbl + "entropy drift " +
                           fmt(rel_drift(rows, &DiagRow::entropy)));
                const double dmx = rows.back().mx - rows.front().mx;
                const double dmy = rows.back().my - rows.front().my;
                const double ex =
                    std::fabs(dmx - cr.src_sum_x) /
                    std::max(1.0, std::fabs(cr.src_sum_x));
                const double ey =
                    std::fabs(dmy - cr.src_sum_y) /
                    std::max(1.0, std::fabs(cr.src_sum_y));
                expect(ex <= 1e-11 && ey <= 1e-11,
                       lbl + "momentum drift equals source integral (" + fmt(ex) +
                           ", " + fmt(ey) + ")");
            } else {
                const double dmx = rel_drift(rows, &DiagRow::mx);
                const double dmy = rel_drift(rows, &DiagRow::my);
                expect(dmx <= 1e-11 && dmy <= 1e-11,
                       lbl + "momentum drift (" + fmt(dmx) + ", " + fmt(dmy) + ")");
                if (std::string(model) == "igr")
                    expect(rel_drift(rows, &DiagRow::energy) <= 1e-11,
                           lbl + "energy drift " +
                               fmt(rel_drift(rows, &DiagRow::energy)));
            }
            // CPU seconds: the dedicated-core runtime, independent of how
            // loaded the build machine happens to be.
            const double limit = std::string(preset) == "sod" ? 30.0 : 1200.0;
            expect(cr.cpu_seconds < limit,
                   lbl + "runtime " + fmt(cr.cpu_seconds) + " s < " + fmt(limit));
        }
}

// ------------------------------------------------------------- criterion 2

// The cusp forms where the two wave fronts collide (x = 0.5) and stays
// there; by t = 0.5 the traveling fronts have moved to x ~ 0.21 / 0.79, so
// the window [0.35, 0.65] isolates the collision defect from the ordinary
// shock steepening that both models share.
struct SodMetrics {
    double max_slope = 0.0;
    double tv = 0.0;
};

SodMetrics sod_metrics(const std::string& tag, const std::string& model, int nx) {
    ExperimentConfig cfg = preset_cfg("sod", model);
    cfg.nx = nx;
    const CachedRun cr = ensure_run(tag, cfg);
    // Final snapshot (t = 0.5) is index 3 of the default snapshot set.
    const RasterData rho = read_raster((cr.dir / "snap003_rho.tigr").string());
    const Grid& g = rho.field.grid();
    SodMetrics m;
    // One-sided differences: the cusp is a grid-scale V that a centered
    // stencil straddles and cancels.
    for (int i = 0; i < g.nx; ++i) {
        if (g.x(i) < 0.35 || g.x(i) > 0.65) continue;
        const double slope =
            std::fabs(rho.field[(i + 1) % g.nx] - rho.field[i]) / g.dx;
        m.max_slope = std::max(m.max_slope, slope);
        m.tv += slope * g.dx;
    }
    return m;
}

void criterion_cusp() {
    const SodMetrics tig500 = sod_metrics("sod_tigre", "tigre", 500);
    const SodMetrics igr500 = sod_metrics("sod_igr", "igr", 500);
    expect(tig500.max_slope < igr500.max_slope,
           "N=500 collision-region max |D_x rho|: tigre " +
               fmt(tig500.max_slope) + " < igr " + fmt(igr500.max_slope));
    expect(tig500.tv < igr500.tv, "N=500 collision-region TV: tigre " +
                                      fmt(tig500.tv) + " < igr " +
                                      fmt(igr500.tv));

    const SodMetrics tig1024 = sod_metrics("sod1024_tigre", "tigre", 1024);
    const SodMetrics igr1024 = sod_metrics("sod1024_igr", "igr", 1024);
    expect(tig1024.max_slope < igr1024.max_slope,
           "N=1024 collision-region max |D_x rho|: tigre " +
               fmt(tig1024.max_slope) + " < igr " + fmt(igr1024.max_slope));
    expect(tig1024.tv < igr1024.tv, "N=1024 collision-region TV: tigre " +
                                        fmt(tig1024.tv) + " < igr " +
                                        fmt(igr1024.tv));

    const double gap500 = igr500.max_slope - tig500.max_slope;
    const double gap1024 = igr1024.max_slope - tig1024.max_slope;
    expect(gap1024 >= 0.5 * gap500,
           "cusp gap persists under refinement: " + fmt(gap1024) + " vs " +
               fmt(gap500) + " at N=500");
}

// ------------------------------------------------------------- criterion 3

void criterion_beta_zero() {
    ExperimentConfig cfg = preset_cfg("sod", "tigre");
    cfg.nx = 200;
    cfg.beta_override = 0.0;
    const ResolvedRun rr = resolve(cfg);
    Model model = rr.model;
    ConservedState st = rr.init;

    RegParams igr_reg = model.reg;
    Potentials pots(rr.grid), igr_pots(rr.grid);
    StepControl ctl = rr.control;
    double chi_worst = 0.0, sigma_worst = 0.0;
    for (int step = 0; step < 60; ++step) {
        const VectorField u = velocity(st);
        const EllipticRhs rhs = build_rhs_tigre(u, st.ez, model.reg);
        solve_potentials(st.rho, st.ez, rhs, model.reg, pots);
        chi_worst = std::max(chi_worst, pots.chi.max_abs());

        EllipticRhs igr_rhs;
        igr_rhs.f1 = build_rhs_igr(u, igr_reg);
        solve_potentials(st.rho, std::nullopt, igr_rhs, igr_reg, igr_pots);
        for (int n = 0; n < rr.grid.cells(); ++n)
            sigma_worst = std::max(
                sigma_worst, std::fabs(pots.sigma[n] - igr_pots.sigma[n]));

        double src[2];
        const double dt = compute_dt(model, st, ctl, ctl.t_end);
        st = lw_step(model, st, pots.sigma, pots.chi, dt, src);
    }
    expect(chi_worst <= 1e-12, "max |chi| over 60 steps = " + fmt(chi_worst));
    expect(sigma_worst <= 1e-9,
           "sigma matches the scalar solve, max gap = " + fmt(sigma_worst));
}

// ------------------------------------------------------------- criterion 4

void criterion_dispersion() {
    const int nx = 256;
    const Grid g = make_grid(1, nx, 1);
    const double eps = 1e-4;
    const double c0 = std::sqrt(1.4); // background rho = p = 1

    for (ModelKind kind : {ModelKind::Igr, ModelKind::Tigre}) {
        for (int k : {1, 2, 4}) {
            Model model;
            model.kind = kind;
            model.eos.kappa = 0.9; // keeps s, hence pi, strictly positive
            model.reg.alpha = g.dx * g.dx;
            model.reg.beta = g.dx * g.dx;

            ScalarField rho(g, 1.0), p(g);
            VectorField u(g);
            for (int i = 0; i < nx; ++i)
                p[i] = 1.0 + eps * std::cos(tau * k * g.x(i));
            ConservedState st = state_from_primitives(model, rho, u, p);

            StepControl ctl;
            ctl.t_end = 2.0 / k + 0.2;
            Potentials pots(g);
            std::vector<double> ts, amps;
            double pot_worst = 0.0;
            while (st.time < ctl.t_end) {
                const VectorField vel = velocity(st);
                if (kind == ModelKind::Tigre) {
                    const EllipticRhs rhs = build_rhs_tigre(vel, st.ez, model.reg);
                    solve_potentials(st.rho, st.ez, rhs, model.reg, pots);
                } else {
                    EllipticRhs rhs;
                    rhs.f1 = build_rhs_igr(vel, model.reg);
                    solve_potentials(st.rho, std::nullopt, rhs, model.reg, pots);
                }
                pot_worst = std::max(
                    pot_worst, std::max(pots.sigma.max_abs(), pots.chi.max_abs()));

                const ScalarField pr = pressure_field(model, st);
                double a = 0.0, mean = 0.0;
                for (int i = 0; i < nx; ++i) mean += pr[i];
                mean /= nx;
                for (int i = 0; i < nx; ++i)
                    a += (pr[i] - mean) * std::cos(tau * k * g.x(i));
                ts.push_back(st.time);
                amps.push_back(2.0 * a / nx);

                double src[2];
                const double dt = compute_dt(model, st, ctl, ctl.t_end);
                st = lw_step(model, st, pots.sigma, pots.chi, dt, src);
            }

            // Zero crossings of the standing-wave modal amplitude.
            std::vector<double> crossings;
            for (size_t n = 1; n < amps.size(); ++n)
                if ((amps[n - 1] > 0.0) != (amps[n] > 0.0)) {
                    const double w = amps[n - 1] / (amps[n - 1] - amps[n]);
                    crossings.push_back(ts[n - 1] + w * (ts[n] - ts[n - 1]));
                }
            const std::string lbl = to_string(kind) + " k=" + std::to_string(k);
            if (crossings.size() < 3) {
                failures.push_back("  FAIL: " + lbl + ": too few oscillations");
                continue;
            }
            const double half_period =
                (crossings.back() - crossings.front()) /
                double(crossings.size() - 1);
            const double omega = std::numbers::pi / half_period;
            const double want = c0 * tau * k;
            const double err = std::fabs(omega - want) / want;
            expect(err <= 0.02, lbl + ": measured omega " + fmt(omega) +
                                    " vs " + fmt(want) + " (err " + fmt(err) + ")");
            expect(pot_worst <= 100.0 * eps * eps,
                   lbl + ": potentials stay O(eps^2), max " + fmt(pot_worst));
        }
    }
}

// ------------------------------------------------------------- criterion 5

void criterion_elliptic_oracle() {
    int checked = 0;
    double worst = 0.0;
    bool monotone = true;
    for (int size : {8, 16})
        for (unsigned seed = 0; seed < 10; ++seed) {
            const Grid g = make_grid(2, size, size);
            const ScalarField rho = smooth_positive(g, seed * 5 + 1, 1.0);
            const ScalarField pi = smooth_positive(g, seed * 5 + 2, 0.6);
            VectorField u(g);
            u.x = smooth_positive(g, seed * 5 + 3, 0.0);
            u.y = smooth_positive(g, seed * 5 + 4, 0.0);
            RegParams reg;
            reg.alpha = reg.beta = g.dx * g.dx;
            reg.tol = 1e-13;
            reg.max_sweeps = 5000;
            const EllipticRhs rhs = build_rhs_tigre(u, pi, reg);

            Potentials pots(g);
            const SolveStats st = solve_potentials(rho, pi, rhs, reg, pots);
            for (size_t n = 1; n < st.residual_history.size(); ++n)
                monotone = monotone && st.residual_history[n] <=
                                           st.residual_history[n - 1] * (1.0 + 1e-12);

            const std::vector<double> x = dense_solve_tigre(g, rho, pi, reg, rhs);
            for (int n = 0; n < g.cells(); ++n) {
                worst = std::max(worst, std::fabs(pots.sigma[n] - x[n]));
                worst = std::max(worst,
                                 std::fabs(pots.chi[n] - x[g.cells() + n]));
            }
            ++checked;
        }
    expect(checked >= 20, "instances checked: " + std::to_string(checked));
    expect(worst <= 1e-8, "max gap vs dense direct solve = " + fmt(worst));
    expect(monotone, "residual decreases monotonically every sweep");

    // Warm vs cold sweep counts along the Sod TIGRE trajectory.
    ExperimentConfig cfg = preset_cfg("sod", "tigre");
    const ResolvedRun rr = resolve(cfg);
    Model model = rr.model;
    ConservedState st = rr.init;
    Potentials warm(rr.grid);
    long warm_sweeps = 0, cold_sweeps = 0;
    for (int step = 0; step < 100; ++step) {
        const VectorField u = velocity(st);
        const EllipticRhs rhs = build_rhs_tigre(u, st.ez, model.reg);
        Potentials cold(rr.grid);
        cold_sweeps += solve_potentials(st.rho, st.ez, rhs, model.reg, cold).sweeps;
        warm_sweeps += solve_potentials(st.rho, st.ez, rhs, model.reg, warm).sweeps;
        double src[2];
        const double dt = compute_dt(model, st, rr.control, rr.control.t_end);
        st = lw_step(model, st, warm.sigma, warm.chi, dt, src);
    }
    expect(warm_sweeps < cold_sweeps,
           "warm starts reduce sweeps: " + std::to_string(warm_sweeps) + " vs " +
               std::to_string(cold_sweeps) + " (ratio " +
               fmt(double(warm_sweeps) / double(cold_sweeps)) + ")");
}

// ------------------------------------------------------------- criterion 6

void criterion_operator_order() {
    auto order_of = [&](const std::string& name, auto evaluate) {
        std::vector<double> errs;
        for (int n : {32, 64, 128, 256}) errs.push_back(evaluate(n));
        double mean_order = 0.0;
        for (size_t l = 1; l < errs.size(); ++l)
            mean_order += std::log2(errs[l - 1] / errs[l]);
        mean_order /= double(errs.size() - 1);
        expect(mean_order >= 1.8 && mean_order <= 2.2,
               name + " observed order " + fmt(mean_order));
    };

    auto pi_fn = [](double x, double y) {
        return 1.5 + 0.4 * std::sin(tau * x) * std::cos(tau * y);
    };
    auto ux_fn = [](double x, double y) {
        return std::cos(tau * y) + 0.3 * std::sin(tau * x);
    };
    auto uy_fn = [](double x, double y) {
        return std::sin(tau * x) * std::sin(tau * y);
    };

    order_of("ddx", [&](int n) {
        const Grid g = make_grid(2, n, n);
        ScalarField f(g);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) f(i, j) = pi_fn(g.x(i), g.y(j));
        const ScalarField d = ddx(f);
        double e = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                e = std::max(e, std::fabs(d(i, j) - 0.4 * tau *
                                                        std::cos(tau * g.x(i)) *
                                                        std::cos(tau * g.y(j))));
        return e;
    });

    order_of("ddy", [&](int n) {
        const Grid g = make_grid(2, n, n);
        ScalarField f(g);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) f(i, j) = pi_fn(g.x(i), g.y(j));
        const ScalarField d = ddy(f);
        double e = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                e = std::max(e, std::fabs(d(i, j) + 0.4 * tau *
                                                        std::sin(tau * g.x(i)) *
                                                        std::sin(tau * g.y(j))));
        return e;
    });

    order_of("weighted_div", [&](int n) {
        const Grid g = make_grid(2, n, n);
        ScalarField w(g), f(g);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                w(i, j) = pi_fn(g.x(i), g.y(j));
                f(i, j) = std::sin(tau * g.x(i)) + std::cos(tau * g.y(j));
            }
        const ScalarField got = weighted_div(w, f);
        double e = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const double x = g.x(i), y = g.y(j);
                const double wx = 0.4 * tau * std::cos(tau * x) * std::cos(tau * y);
                const double wy = -0.4 * tau * std::sin(tau * x) * std::sin(tau * y);
                const double fx = tau * std::cos(tau * x);
                const double fy = -tau * std::sin(tau * y);
                const double lap = -tau * tau * (std::sin(tau * x) + std::cos(tau * y));
                const double want = wx * fx + wy * fy + pi_fn(x, y) * lap;
                e = std::max(e, std::fabs(got(i, j) - want));
            }
        return e;
    });

    order_of("div_pi", [&](int n) {
        const Grid g = make_grid(2, n, n);
        ScalarField pi(g);
        VectorField u(g);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                pi(i, j) = pi_fn(g.x(i), g.y(j));
                u.x(i, j) = ux_fn(g.x(i), g.y(j));
                u.y(i, j) = uy_fn(g.x(i), g.y(j));
            }
        const ScalarField got = div_pi(u, pi);
        double e = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const double x = g.x(i), y = g.y(j);
                const double p = pi_fn(x, y);
                const double px = 0.4 * tau * std::cos(tau * x) * std::cos(tau * y);
                const double py = -0.4 * tau * std::sin(tau * x) * std::sin(tau * y);
                const double dxux = 0.3 * tau * std::cos(tau * x);
                const double dyuy = tau * std::sin(tau * x) * std::cos(tau * y);
                const double want = dxux + dyuy +
                                    (px * ux_fn(x, y) + py * uy_fn(x, y)) / p;
                e = std::max(e, std::fabs(got(i, j) - want));
            }
        return e;
    });

    order_of("hessian_log_pi_uu", [&](int n) {
        const Grid g = make_grid(2, n, n);
        ScalarField pi(g);
        VectorField u(g);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                pi(i, j) = std::exp(0.4 * std::sin(tau * g.x(i)) *
                                    std::sin(tau * g.y(j)));
                u.x(i, j) = 0.8;
                u.y(i, j) = -0.3;
            }
        const ScalarField got = hessian_log_pi_uu(pi, u);
        double e = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const double x = g.x(i), y = g.y(j);
                const double pxx =
                    -0.4 * tau * tau * std::sin(tau * x) * std::sin(tau * y);
                const double pxy =
                    0.4 * tau * tau * std::cos(tau * x) * std::cos(tau * y);
                // Single u^x u^y cross term by definition of this operator.
                const double want = 0.64 * pxx + 0.8 * -0.3 * pxy + 0.09 * pxx;
                e = std::max(e, std::fabs(got(i, j) - want));
            }
        return e;
    });

    // Unit-weight reduction to the exact 5-point Laplacian.
    const Grid g = make_grid(2, 8, 8);
    const ScalarField one(g, 1.0);
    ScalarField delta(g);
    delta(2, 5) = 1.0;
    const ScalarField got = weighted_div(one, delta);
    const double ix2 = 1.0 / (g.dx * g.dx);
    bool exact = true;
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) {
            double want = 0.0;
            if (i == 2 && j == 5) want = -4.0 * ix2;
            else if ((j == 5 && (i == 1 || i == 3)) ||
                     (i == 2 && (j == 4 || j == 6)))
                want = ix2;
            exact = exact && got(i, j) == want;
        }
    expect(exact, "unit-weight stencil is bitwise the 5-point Laplacian");
}

// ------------------------------------------------------------- criterion 7

void criterion_spectra() {
    // Parseval under the 1/N-per-dimension normalization.
    const Grid g = make_grid(2, 64, 64);
    const ScalarField f = smooth_positive(g, 77, 0.0);
    const auto fh = dft_2d(f);
    double phys = 0.0, spec = 0.0;
    for (int n = 0; n < f.size(); ++n) phys += f[n] * f[n];
    for (const auto& z : fh) spec += std::norm(z);
    const double parseval =
        std::fabs(spec - phys / double(g.cells())) / std::max(1e-30, spec);
    expect(parseval <= 1e-10, "Parseval identity, rel err " + fmt(parseval));

    // Single mode lands in its shell.
    ScalarField mode(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            mode(i, j) = std::sin(tau * 5.0 * g.y(j));
    const SpectrumRecord rec = shell_spectrum(mode);
    bool in_bin = rec.shell_power[5] > 0.0;
    for (size_t b = 0; b < rec.shell_power.size(); ++b)
        if (b != 5) in_bin = in_bin && rec.shell_power[b] < 1e-20;
    expect(in_bin, "single k=5 mode confined to shell 5");

    // KH ordering at t = 4.
    const CachedRun igr = ensure_run("kh_igr", preset_cfg("kh", "igr"));
    const CachedRun tig = ensure_run("kh_tigre", preset_cfg("kh", "tigre"));
    const double tv_igr = read_diagnostics(igr.dir).back().tv;
    const double tv_tig = read_diagnostics(tig.dir).back().tv;
    expect(tv_igr > tv_tig, "KH TV at t=4: igr " + fmt(tv_igr) + " > tigre " +
                                fmt(tv_tig));
}

// ------------------------------------------------------------- criterion 8

void criterion_steady_state() {
    const Grid g = make_grid(2, 32, 32);
    struct Case {
        ModelKind kind;
        Scheme scheme;
    };
    const Case cases[] = {{ModelKind::Euler, Scheme::LaxWendroff},
                          {ModelKind::Igr, Scheme::LaxWendroff},
                          {ModelKind::Tigre, Scheme::LaxWendroff},
                          {ModelKind::Euler, Scheme::LaxFriedrichs}};
    for (const Case& c : cases) {
        Model model;
        model.kind = c.kind;
        model.reg.alpha = g.dx * g.dx;
        model.reg.beta = g.dx * g.dx;
        ScalarField rho(g, 1.3), p(g, 1.7);
        VectorField u(g);
        u.x.fill(0.2);
        u.y.fill(-0.1);
        const ConservedState init = state_from_primitives(model, rho, u, p);
        ConservedState st = init;
        const double dt = 0.4 * g.min_spacing() / max_signal_speed(model, st);
        Potentials pots(g);
        double pot_worst = 0.0;
        for (int step = 0; step < 1000; ++step) {
            if (model.has_potentials()) {
                const VectorField vel = velocity(st);
                if (c.kind == ModelKind::Tigre) {
                    const EllipticRhs rhs = build_rhs_tigre(vel, st.ez, model.reg);
                    solve_potentials(st.rho, st.ez, rhs, model.reg, pots);
                } else {
                    EllipticRhs rhs;
                    rhs.f1 = build_rhs_igr(vel, model.reg);
                    solve_potentials(st.rho, std::nullopt, rhs, model.reg, pots);
                }
                pot_worst = std::max(
                    pot_worst, std::max(pots.sigma.max_abs(), pots.chi.max_abs()));
            }
            if (c.scheme == Scheme::LaxFriedrichs) {
                st = lf_step(model, st, dt);
            } else {
                double src[2];
                st = lw_step(model, st, pots.sigma, pots.chi, dt, src);
            }
        }
        double dev = 0.0;
        for (int n = 0; n < g.cells(); ++n) {
            dev = std::max(dev, std::fabs(st.rho[n] - init.rho[n]));
            dev = std::max(dev, std::fabs(st.mom.x[n] - init.mom.x[n]));
            dev = std::max(dev, std::fabs(st.mom.y[n] - init.mom.y[n]));
            dev = std::max(dev, std::fabs(st.ez[n] - init.ez[n]));
        }
        const std::string lbl =
            to_string(c.kind) +
            (c.scheme == Scheme::LaxFriedrichs ? std::string("/lf") : std::string("/lw"));
        expect(dev <= 1e-13, lbl + ": drift over 1000 steps = " + fmt(dev));
        expect(pot_worst == 0.0, lbl + ": potentials identically zero");
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: tigre_acceptance <criterion 1..8>\n");
        return 2;
    }
    const int crit = std::atoi(argv[1]);
    const char* names[] = {"",
                           "conservation suite",
                           "cusp mitigation",
                           "beta->0 reduction",
                           "acoustic dispersion",
                           "elliptic solver oracle",
                           "operator order of accuracy",
                           "spectral diagnostics",
                           "steady-state exactness"};
    if (crit < 1 || crit > 8) {
        std::fprintf(stderr, "criterion out of range\n");
        return 2;
    }
    try {
        switch (crit) {
            case 1: criterion_conservation(); break;
            case 2: criterion_cusp(); break;
            case 3: criterion_beta_zero(); break;
            case 4: criterion_dispersion(); break;
            case 5: criterion_elliptic_oracle(); break;
            case 6: criterion_operator_order(); break;
            case 7: criterion_spectra(); break;
            case 8: criterion_steady_state(); break;
        }
    } catch (const std::exception& e) {
        failures.push_back(std::string("  FAIL: exception: ") + e.what());
    }
    for (const std::string& n : notes) std::printf("%s\n", n.c_str());
    for (const std::string& f : failures) std::printf("%s\n", f.c_str());
    std::printf("criterion %d (%s): %s\n", crit, names[crit],
                failures.empty() ? "PASS" : "FAIL");
    return failures.empty() ? 0 : 1;
}
