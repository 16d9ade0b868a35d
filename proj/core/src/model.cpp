#include "tigre/model.hpp"

#include <cmath>

namespace tigre {

std::string to_string(ModelKind m) {
    switch (m) {
        case ModelKind::Euler: return "euler";
        case ModelKind::Igr: return "igr";
        case ModelKind::Tigre: return "tigre";
    }
    return "?";
}

namespace {

[[noreturn]] void abort_at(const std::string& what, const Grid& g, int n, double t) {
    const int i = n % g.nx, j = n / g.nx;
    throw SimulationAbort(what + " at cell (" + std::to_string(i) + "," +
                              std::to_string(j) + "), t = " + std::to_string(t),
                          i, j, t);
}

} // namespace

ScalarField pressure_field(const Model& model, const ConservedState& state) {
    const Grid& g = state.grid();
    ScalarField p(g);
    for (int n = 0; n < g.cells(); ++n) {
        const double rho = state.rho[n];
        if (!(rho > 0.0)) abort_at("non-positive density", g, n, state.time);
        if (state.form == StateForm::Entropy) {
            const double pi = state.ez[n];
            if (!(pi > 0.0)) abort_at("non-positive entropy density", g, n, state.time);
            p[n] = pressure_from_entropy(model.eos, rho, pi / rho);
        } else {
            const double msq = state.mom.x[n] * state.mom.x[n] +
                               state.mom.y[n] * state.mom.y[n];
            p[n] = pressure_from_energy(model.eos, rho, msq, state.ez[n]);
            if (!(p[n] > 0.0)) abort_at("non-positive pressure", g, n, state.time);
        }
    }
    return p;
}

VectorField velocity(const ConservedState& state) {
    const Grid& g = state.grid();
    VectorField u(g);
    for (int n = 0; n < g.cells(); ++n) {
        u.x[n] = state.mom.x[n] / state.rho[n];
        u.y[n] = state.mom.y[n] / state.rho[n];
    }
    return u;
}

ScalarField specific_entropy(const ConservedState& state) {
    if (state.form != StateForm::Entropy)
        throw std::logic_error("specific_entropy: state is not in entropy form");
    const Grid& g = state.grid();
    ScalarField s(g);
    for (int n = 0; n < g.cells(); ++n)
        s[n] = state.ez[n] / state.rho[n];
    return s;
}

FluxFields flux(const Model& model, const ConservedState& state,
                const ScalarField& sigma, Direction dir) {
    const Grid& g = state.grid();
    const ScalarField p = pressure_field(model, state);
    FluxFields fl{ScalarField(g), ScalarField(g), ScalarField(g), ScalarField(g)};
    for (int n = 0; n < g.cells(); ++n) {
        const double rho = state.rho[n];
        const double mx = state.mom.x[n], my = state.mom.y[n];
        const double ud = (dir == Direction::X ? mx : my) / rho;
        const double ptot = p[n] + sigma[n];
        fl.rho[n] = rho * ud;
        fl.mx[n] = mx * ud + (dir == Direction::X ? ptot : 0.0);
        fl.my[n] = my * ud + (dir == Direction::Y ? ptot : 0.0);
        fl.ez[n] = state.form == StateForm::Entropy
                       ? state.ez[n] * ud
                       : (state.ez[n] + ptot) * ud;
    }
    return fl;
}

SourceFields source(const Model& model, const ConservedState& state,
                    const ScalarField& chi) {
    const Grid& g = state.grid();
    SourceFields s{VectorField(g)};
    if (model.kind != ModelKind::Tigre) return s;
    const ScalarField dchix = ddx(chi);
    const ScalarField dchiy = ddy(chi);
    for (int n = 0; n < g.cells(); ++n) {
        s.mom.x[n] = -state.ez[n] * dchix[n];
        s.mom.y[n] = -state.ez[n] * dchiy[n];
    }
    return s;
}

double max_signal_speed(const Model& model, const ConservedState& state) {
    const Grid& g = state.grid();
    const ScalarField p = pressure_field(model, state);
    double smax = 0.0;
    for (int n = 0; n < g.cells(); ++n) {
        const double rho = state.rho[n];
        const double ux = state.mom.x[n] / rho, uy = state.mom.y[n] / rho;
        const double speed = std::sqrt(ux * ux + uy * uy) +
                             sound_speed(model.eos, rho, p[n]);
        smax = std::max(smax, speed);
    }
    return smax;
}

ConservedState state_from_primitives(const Model& model, const ScalarField& rho0,
                                     const VectorField& u0, const ScalarField& p0) {
    const Grid& g = rho0.grid();
    ConservedState st(model.state_form(), g);
    for (int n = 0; n < g.cells(); ++n) {
        const double rho = rho0[n];
        st.rho[n] = rho;
        st.mom.x[n] = rho * u0.x[n];
        st.mom.y[n] = rho * u0.y[n];
        if (st.form == StateForm::Entropy) {
            st.ez[n] = rho * entropy_from_pressure(model.eos, rho, p0[n]);
        } else {
            const double msq = st.mom.x[n] * st.mom.x[n] + st.mom.y[n] * st.mom.y[n];
            st.ez[n] = energy_from_pressure(model.eos, rho, msq, p0[n]);
        }
    }
    return st;
}

} // namespace tigre
