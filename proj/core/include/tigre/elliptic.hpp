#ifndef TIGRE_ELLIPTIC_HPP
#define TIGRE_ELLIPTIC_HPP

#include <optional>

#include "tigre/field.hpp"
#include "tigre/operators.hpp"

namespace tigre {

// Regularization strengths and solver controls. alpha and beta are the
// resolved values (the dx^2 scaling is applied by the experiment layer).
struct RegParams {
    double alpha = 0.0;
    double beta = 0.0;
    double tol = 1e-10;
    int max_sweeps = 200;
    bool strict = false; // non-convergence throws instead of flagging
    StencilOptions stencil{};

    void validate() const {
        if (alpha < 0.0 || beta < 0.0)
            throw std::domain_error("RegParams: alpha and beta must be non-negative");
        if (!(tol > 0.0)) throw std::domain_error("RegParams: tol must be positive");
        if (max_sweeps < 1) throw std::domain_error("RegParams: max_sweeps must be >= 1");
    }
};

// The potential pair with the previous-step copies retained for the
// extrapolated warm start 2*sigma^n - sigma^{n-1}.
struct Potentials {
    ScalarField sigma;
    ScalarField chi;
    ScalarField prev_sigma;
    ScalarField prev_chi;

    Potentials() = default;
    explicit Potentials(const Grid& g)
        : sigma(g), chi(g), prev_sigma(g), prev_chi(g) {}

    ScalarField warm_sigma() const;
    ScalarField warm_chi() const;
    // Store a solved pair, rotating the previous-step copies.
    void commit(ScalarField new_sigma, ScalarField new_chi);
};

struct EllipticRhs {
    ScalarField f1; // sigma-equation right side
    ScalarField f2; // chi-equation right side (unused for the scalar system)
};

struct SolveStats {
    int sweeps = 0;
    double residual = 0.0;
    bool converged = false;
    std::vector<double> residual_history; // relative residual after each sweep
};

EllipticRhs build_rhs_tigre(const VectorField& u, const ScalarField& pi, const RegParams& reg);
ScalarField build_rhs_igr(const VectorField& u, const RegParams& reg);

// Residual rows of the coupled operator applied to (sigma, chi):
//   row1 = rho^{-1} sigma - alpha div(rho^{-1} grad sigma) - alpha div(pi rho^{-1} grad chi)
//   row2 = chi - beta pi^{-1} [div(pi rho^{-1} grad sigma) + div(pi^2 rho^{-1} grad chi)]
// With stencil.verbatim the printed right-placed D_pi form is used instead:
//   row2 = chi - beta [div(pi rho^{-1} grad (sigma/pi)) + div(pi^2 rho^{-1} grad (chi/pi))]
std::pair<ScalarField, ScalarField> apply_tigre_operator(
    const ScalarField& sigma, const ScalarField& chi,
    const ScalarField& rho, const ScalarField& pi, const RegParams& reg);

// Scalar system rho^{-1} sigma - alpha div(rho^{-1} grad sigma).
ScalarField apply_igr_operator(const ScalarField& sigma, const ScalarField& rho,
                               const RegParams& reg);

// Red-black Gauss-Seidel with exact 2x2 Cramer block solves. Pass pi for the
// coupled TIGRE system, nullopt (or beta = 0) for the scalar sigma system;
// chi is pinned to zero in the scalar path. The warm-started iterate is
// taken from `pots`, and the solution is committed back into it.
SolveStats solve_potentials(const ScalarField& rho,
                            const std::optional<ScalarField>& pi,
                            const EllipticRhs& rhs, const RegParams& reg,
                            Potentials& pots);

} // namespace tigre

#endif
