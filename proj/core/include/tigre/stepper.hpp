#ifndef TIGRE_STEPPER_HPP
#define TIGRE_STEPPER_HPP

#include <functional>
#include <vector>

#include "tigre/model.hpp"

namespace tigre {

enum class Scheme { LaxWendroff, LaxFriedrichs };

struct StepControl {
    double cfl = 0.4;
    double t_end = 0.0;
    std::vector<double> snapshot_times; // absolute times in [0, t_end]
    Scheme scheme = Scheme::LaxWendroff;
    long max_steps = 100000000;

    void validate() const {
        if (!(cfl > 0.0) || cfl > 1.0)
            throw std::domain_error("StepControl: cfl must lie in (0, 1]");
        if (t_end < 0.0) throw std::domain_error("StepControl: t_end must be non-negative");
    }
};

// One row per time step; src_int is the discrete momentum source integral
// dt * sum(S) * vol actually added during the step (zero except TIGRE).
struct StepRecord {
    long step = 0;
    double t = 0.0;
    double dt = 0.0;
    double mass = 0.0;
    double momentum_x = 0.0;
    double momentum_y = 0.0;
    double energy = 0.0;
    double entropy = 0.0;
    double tv_rho = 0.0;
    int sweeps = 0;
    double residual = 0.0;
    double src_int_x = 0.0;
    double src_int_y = 0.0;
};

// Two-step Richtmyer update. Potentials are the step-n fields (zero fields
// for Euler). Fills src_int with the momentum source integral it applied.
ConservedState lw_step(const Model& model, const ConservedState& state,
                       const ScalarField& sigma, const ScalarField& chi,
                       double dt, double src_int[2]);

// First-order Lax-Friedrichs baseline, Euler only.
ConservedState lf_step(const Model& model, const ConservedState& state, double dt);

// CFL time step, clipped so next_event (snapshot or t_end) is hit exactly.
double compute_dt(const Model& model, const ConservedState& state,
                  const StepControl& control, double next_event);

struct RunResult {
    ConservedState final_state;
    std::vector<StepRecord> series;
    long steps = 0;
};

using SnapshotSink =
    std::function<void(const ConservedState&, const Potentials&)>;

// Full pipeline: CFL step -> elliptic solve (warm started) -> LW update ->
// diagnostics row, repeated until t_end. Deterministic for a fixed config.
RunResult run(const Model& model, ConservedState init, const StepControl& control,
              const SnapshotSink& snapshot_sink = {});

} // namespace tigre

#endif
