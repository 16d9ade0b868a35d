#ifndef TIGRE_OPERATORS_HPP
#define TIGRE_OPERATORS_HPP

#include "tigre/field.hpp"

namespace tigre {

// Fidelity toggle for the stencil variants whose printed form fails a
// consistency reduction. The consistent variants are the default:
//   - div_pi differences conservative face fluxes (face-averaged pi and u)
//     so constant weights reduce to the plain centered divergence and the
//     continuum limit is pi^{-1} div(pi u),
//   - the log-pi Hessian cross term uses the 4*dx*dy denominator,
//   - the weighted divergence is the conservative flux difference (minus sign
//     between faces, 1/dx^2 prefactor), which is symmetric negative
//     semidefinite.
// verbatim = true restores the printed stencils for fidelity experiments.
struct StencilOptions {
    bool verbatim = false;
};

// Centered first differences, periodic wrap. ddy is the zero field in 1D.
ScalarField ddx(const ScalarField& f);
ScalarField ddy(const ScalarField& f);

// (D_x u^x + D_y u^y)^2 pointwise.
ScalarField div_sq(const VectorField& u);

// (D_x u^x)^2 + 2 (D_x u^y)(D_y u^x) + (D_y u^y)^2 pointwise.
ScalarField tr_grad_u_sq(const VectorField& u);

// Entropy-weighted divergence pi^{-1} div(pi u) with face-averaged weights.
ScalarField div_pi(const VectorField& u, const ScalarField& pi,
                   const StencilOptions& opt = {});

// Hessian of log(pi) contracted twice with u.
ScalarField hessian_log_pi_uu(const ScalarField& pi, const VectorField& u,
                              const StencilOptions& opt = {});

// div(g grad f) with face-averaged coefficients, g > 0.
ScalarField weighted_div(const ScalarField& g, const ScalarField& f,
                         const StencilOptions& opt = {});

} // namespace tigre

#endif
