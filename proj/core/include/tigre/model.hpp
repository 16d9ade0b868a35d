#ifndef TIGRE_MODEL_HPP
#define TIGRE_MODEL_HPP

#include <string>

#include "tigre/elliptic.hpp"
#include "tigre/eos.hpp"
#include "tigre/field.hpp"

namespace tigre {

enum class ModelKind { Euler, Igr, Tigre };

std::string to_string(ModelKind m);

// Euler and IGR evolve the energy form (rho, rho u, E); TIGRE evolves the
// entropy form (rho, rho u, pi).
enum class StateForm { Energy, Entropy };

struct ConservedState {
    StateForm form = StateForm::Energy;
    ScalarField rho;
    VectorField mom;
    ScalarField ez; // E (energy form) or pi (entropy form)
    double time = 0.0;

    ConservedState() = default;
    ConservedState(StateForm f, const Grid& g)
        : form(f), rho(g), mom(g), ez(g) {}

    const Grid& grid() const { return rho.grid(); }
};

struct Model {
    ModelKind kind = ModelKind::Euler;
    EosParams eos{};
    RegParams reg{};

    StateForm state_form() const {
        return kind == ModelKind::Tigre ? StateForm::Entropy : StateForm::Energy;
    }
    bool has_potentials() const { return kind != ModelKind::Euler; }
};

// Raised on positivity violations and NaN detection mid-run.
struct SimulationAbort : std::runtime_error {
    int cell_i = -1, cell_j = -1;
    double time = 0.0;
    SimulationAbort(const std::string& what, int i, int j, double t)
        : std::runtime_error(what), cell_i(i), cell_j(j), time(t) {}
};

// Pointwise pressure of the model's closure. Throws SimulationAbort on
// non-positive density / entropy density / pressure.
ScalarField pressure_field(const Model& model, const ConservedState& state);

VectorField velocity(const ConservedState& state);

// s = pi / rho (entropy form).
ScalarField specific_entropy(const ConservedState& state);

struct FluxFields {
    ScalarField rho;
    ScalarField mx;
    ScalarField my;
    ScalarField ez;
};

enum class Direction { X, Y };

// Flux component in the given direction; sigma enters additively in the
// momentum (and, for energy-form models, energy) components.
FluxFields flux(const Model& model, const ConservedState& state,
                const ScalarField& sigma, Direction dir);

// TIGRE momentum source -pi grad(chi); zero for Euler and IGR.
struct SourceFields {
    VectorField mom;
};
SourceFields source(const Model& model, const ConservedState& state,
                    const ScalarField& chi);

// max over cells of |u| + c(rho, p).
double max_signal_speed(const Model& model, const ConservedState& state);

// Build a state from primitive (rho, u, p) data per the model's bridging rule.
ConservedState state_from_primitives(const Model& model, const ScalarField& rho0,
                                     const VectorField& u0, const ScalarField& p0);

} // namespace tigre

#endif
