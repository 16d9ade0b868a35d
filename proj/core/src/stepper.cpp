#include "tigre/stepper.hpp"

#include <algorithm>
#include <cmath>

#include "tigre/diagnostics.hpp"
#include "tigre/operators.hpp"

namespace tigre {

namespace {

inline int up(int i, int n) { return i + 1 == n ? 0 : i + 1; }
inline int dn(int i, int n) { return i == 0 ? n - 1 : i - 1; }

void nan_scan(const ConservedState& st, const char* stage) {
    if (!st.rho.all_finite() || !st.mom.x.all_finite() || !st.mom.y.all_finite() ||
        !st.ez.all_finite())
        throw SimulationAbort(std::string("NaN detected after ") + stage, -1, -1,
                              st.time);
}

// Face half-states in one direction: hs[i] holds the state at face i+1/2
// (x) or j+1/2 (y), built from the per-direction Richtmyer predictor.
ConservedState half_states(const Model& model, const ConservedState& state,
                           const ScalarField& sigma, const SourceFields& src,
                           double dt, Direction dir) {
    const Grid& g = state.grid();
    const FluxFields fl = flux(model, state, sigma, dir);
    const double lam = dir == Direction::X ? dt / (2.0 * g.dx) : dt / (2.0 * g.dy);
    ConservedState hs(state.form, g);
    hs.time = state.time;
    const bool have_src = model.kind == ModelKind::Tigre;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int i2 = dir == Direction::X ? up(i, g.nx) : i;
            const int j2 = dir == Direction::X ? j : up(j, g.ny);
            hs.rho(i, j) = 0.5 * (state.rho(i, j) + state.rho(i2, j2)) -
                           lam * (fl.rho(i2, j2) - fl.rho(i, j));
            hs.mom.x(i, j) = 0.5 * (state.mom.x(i, j) + state.mom.x(i2, j2)) -
                             lam * (fl.mx(i2, j2) - fl.mx(i, j));
            hs.mom.y(i, j) = 0.5 * (state.mom.y(i, j) + state.mom.y(i2, j2)) -
                             lam * (fl.my(i2, j2) - fl.my(i, j));
            hs.ez(i, j) = 0.5 * (state.ez(i, j) + state.ez(i2, j2)) -
                          lam * (fl.ez(i2, j2) - fl.ez(i, j));
            if (have_src) {
                hs.mom.x(i, j) += 0.5 * dt * (src.mom.x(i, j) + src.mom.x(i2, j2));
                hs.mom.y(i, j) += 0.5 * dt * (src.mom.y(i, j) + src.mom.y(i2, j2));
            }
        }
    return hs;
}

ScalarField face_average(const ScalarField& f, Direction dir) {
    const Grid& g = f.grid();
    ScalarField out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int i2 = dir == Direction::X ? up(i, g.nx) : i;
            const int j2 = dir == Direction::X ? j : up(j, g.ny);
            out(i, j) = 0.5 * (f(i, j) + f(i2, j2));
        }
    return out;
}

} // namespace

ConservedState lw_step(const Model& model, const ConservedState& state,
                       const ScalarField& sigma, const ScalarField& chi,
                       double dt, double src_int[2]) {
    const Grid& g = state.grid();
    src_int[0] = src_int[1] = 0.0;

    const SourceFields src = source(model, state, chi);

    // Predictor: per-direction face half-states with face-averaged potentials.
    const ConservedState hx = half_states(model, state, sigma, src, dt, Direction::X);
    nan_scan(hx, "x half step");
    const ScalarField sigx = face_average(sigma, Direction::X);
    const FluxFields fxh = flux(model, hx, sigx, Direction::X);

    ConservedState hy;
    FluxFields fyh;
    if (g.dim == 2) {
        hy = half_states(model, state, sigma, src, dt, Direction::Y);
        nan_scan(hy, "y half step");
        const ScalarField sigy = face_average(sigma, Direction::Y);
        fyh = flux(model, hy, sigy, Direction::Y);
    }

    // Corrector: conservative face-flux differences plus the source at the
    // average of the adjacent face half-states.
    const bool have_src = model.kind == ModelKind::Tigre;
    ScalarField dchix, dchiy;
    if (have_src) {
        dchix = ddx(chi);
        dchiy = ddy(chi);
    }

    ConservedState out(state.form, g);
    out.time = state.time + dt;
    const double lx = dt / g.dx;
    const double ly = g.dim == 2 ? dt / g.dy : 0.0;
    const double vol = g.cell_volume();
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int im = dn(i, g.nx), jm = dn(j, g.ny);
            double rho = state.rho(i, j) - lx * (fxh.rho(i, j) - fxh.rho(im, j));
            double mx = state.mom.x(i, j) - lx * (fxh.mx(i, j) - fxh.mx(im, j));
            double my = state.mom.y(i, j) - lx * (fxh.my(i, j) - fxh.my(im, j));
            double ez = state.ez(i, j) - lx * (fxh.ez(i, j) - fxh.ez(im, j));
            if (g.dim == 2) {
                rho -= ly * (fyh.rho(i, j) - fyh.rho(i, jm));
                mx -= ly * (fyh.mx(i, j) - fyh.mx(i, jm));
                my -= ly * (fyh.my(i, j) - fyh.my(i, jm));
                ez -= ly * (fyh.ez(i, j) - fyh.ez(i, jm));
            }
            if (have_src) {
                double pibar;
                if (g.dim == 2)
                    pibar = 0.25 * (hx.ez(i, j) + hx.ez(im, j) + hy.ez(i, j) +
                                    hy.ez(i, jm));
                else
                    pibar = 0.5 * (hx.ez(i, j) + hx.ez(im, j));
                const double sx = -pibar * dchix(i, j);
                const double sy = -pibar * dchiy(i, j);
                mx += dt * sx;
                my += dt * sy;
                src_int[0] += dt * sx * vol;
                src_int[1] += dt * sy * vol;
            }
            out.rho(i, j) = rho;
            out.mom.x(i, j) = mx;
            out.mom.y(i, j) = my;
            out.ez(i, j) = ez;
        }
    nan_scan(out, "full step");
    return out;
}

ConservedState lf_step(const Model& model, const ConservedState& state, double dt) {
    if (model.kind != ModelKind::Euler)
        throw std::logic_error("lf_step: Lax-Friedrichs baseline is Euler only");
    const Grid& g = state.grid();
    const ScalarField zero(g);
    const FluxFields fx = flux(model, state, zero, Direction::X);
    FluxFields fy;
    if (g.dim == 2) fy = flux(model, state, zero, Direction::Y);

    ConservedState out(state.form, g);
    out.time = state.time + dt;
    const double lx = dt / (2.0 * g.dx);
    const double ly = g.dim == 2 ? dt / (2.0 * g.dy) : 0.0;
    auto update = [&](const ScalarField& q, const ScalarField& fqx,
                      const ScalarField* fqy, ScalarField& o) {
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const int ip = up(i, g.nx), im = dn(i, g.nx);
                if (g.dim == 1) {
                    o(i, j) = 0.5 * (q(ip, j) + q(im, j)) -
                              lx * (fqx(ip, j) - fqx(im, j));
                } else {
                    const int jp = up(j, g.ny), jm = dn(j, g.ny);
                    o(i, j) = 0.25 * (q(ip, j) + q(im, j) + q(i, jp) + q(i, jm)) -
                              lx * (fqx(ip, j) - fqx(im, j)) -
                              ly * ((*fqy)(i, jp) - (*fqy)(i, jm));
                }
            }
    };
    update(state.rho, fx.rho, g.dim == 2 ? &fy.rho : nullptr, out.rho);
    update(state.mom.x, fx.mx, g.dim == 2 ? &fy.mx : nullptr, out.mom.x);
    update(state.mom.y, fx.my, g.dim == 2 ? &fy.my : nullptr, out.mom.y);
    update(state.ez, fx.ez, g.dim == 2 ? &fy.ez : nullptr, out.ez);
    nan_scan(out, "lf step");
    return out;
}

double compute_dt(const Model& model, const ConservedState& state,
                  const StepControl& control, double next_event) {
    const double h = state.grid().min_spacing();
    const double smax = max_signal_speed(model, state);
    double dt = smax > 0.0 ? control.cfl * h / smax : h;
    dt = std::min(dt, h); // static-fluid startup cap
    const double remain = next_event - state.time;
    if (dt >= remain || remain - dt < 1e-12 * dt) dt = remain;
    return dt;
}

RunResult run(const Model& model, ConservedState init, const StepControl& control,
              const SnapshotSink& snapshot_sink) {
    control.validate();
    model.eos.validate();
    const Grid& g = init.grid();
    if (control.scheme == Scheme::LaxFriedrichs && model.kind != ModelKind::Euler)
        throw std::logic_error("run: Lax-Friedrichs baseline is Euler only");

    std::vector<double> events = control.snapshot_times;
    events.push_back(control.t_end);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    Potentials pots(g);
    const ScalarField zero(g);
    const double teps = 1e-12 * std::max(1.0, control.t_end);

    RunResult result{std::move(init), {}, 0};
    ConservedState& state = result.final_state;

    auto emit_snapshot = [&](double t) {
        if (!snapshot_sink) return;
        for (double ts : events)
            if (std::fabs(ts - t) <= teps) {
                snapshot_sink(state, pots);
                return;
            }
    };

    auto record_row = [&](double dt, const SolveStats& stats) {
        StepRecord row;
        row.step = result.steps;
        row.t = state.time;
        row.dt = dt;
        const Totals tot = totals(state, model.eos);
        row.mass = tot.mass;
        row.momentum_x = tot.momentum_x;
        row.momentum_y = tot.momentum_y;
        row.energy = tot.energy;
        row.entropy = tot.entropy;
        row.tv_rho = total_variation(state.rho);
        row.sweeps = stats.sweeps;
        row.residual = stats.residual;
        result.series.push_back(row);
    };

    emit_snapshot(state.time);
    if (control.t_end <= state.time) {
        return result;
    }

    while (state.time < control.t_end - teps && result.steps < control.max_steps) {
        double next_event = control.t_end;
        for (double ts : events)
            if (ts > state.time + teps) { next_event = ts; break; }

        const double dt = compute_dt(model, state, control, next_event);

        SolveStats stats;
        if (model.has_potentials()) {
            const VectorField u = velocity(state);
            if (model.kind == ModelKind::Tigre) {
                const EllipticRhs rhs = build_rhs_tigre(u, state.ez, model.reg);
                stats = solve_potentials(state.rho, state.ez, rhs, model.reg, pots);
            } else {
                EllipticRhs rhs;
                rhs.f1 = build_rhs_igr(u, model.reg);
                stats = solve_potentials(state.rho, std::nullopt, rhs, model.reg, pots);
            }
        }

        record_row(dt, stats);

        double src_int[2] = {0.0, 0.0};
        if (control.scheme == Scheme::LaxFriedrichs) {
            state = lf_step(model, state, dt);
        } else if (model.has_potentials()) {
            state = lw_step(model, state, pots.sigma, pots.chi, dt, src_int);
        } else {
            state = lw_step(model, state, zero, zero, dt, src_int);
        }
        result.series.back().src_int_x = src_int[0];
        result.series.back().src_int_y = src_int[1];
        ++result.steps;

        emit_snapshot(state.time);
    }

    record_row(0.0, SolveStats{});
    return result;
}

} // namespace tigre
