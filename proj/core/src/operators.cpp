#include "tigre/operators.hpp"

#include <cmath>
#include <string>

namespace tigre {

namespace {

inline int up(int i, int n) { return i + 1 == n ? 0 : i + 1; }
inline int dn(int i, int n) { return i == 0 ? n - 1 : i - 1; }

void require_positive(const ScalarField& f, const char* what) {
    for (int n = 0; n < f.size(); ++n)
        if (!(f[n] > 0.0)) throw std::domain_error(std::string(what) + " must be positive everywhere");
}

} // namespace

ScalarField ddx(const ScalarField& f) {
    const Grid& g = f.grid();
    ScalarField out(g);
    const double inv2dx = 1.0 / (2.0 * g.dx);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out(i, j) = (f(up(i, g.nx), j) - f(dn(i, g.nx), j)) * inv2dx;
    return out;
}

ScalarField ddy(const ScalarField& f) {
    const Grid& g = f.grid();
    ScalarField out(g);
    if (g.dim == 1) return out;
    const double inv2dy = 1.0 / (2.0 * g.dy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out(i, j) = (f(i, up(j, g.ny)) - f(i, dn(j, g.ny))) * inv2dy;
    return out;
}

ScalarField div_sq(const VectorField& u) {
    const Grid& g = u.grid();
    ScalarField out(g);
    const double inv2dx = 1.0 / (2.0 * g.dx);
    const double inv2dy = g.dim == 2 ? 1.0 / (2.0 * g.dy) : 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double d = (u.x(up(i, g.nx), j) - u.x(dn(i, g.nx), j)) * inv2dx;
            if (g.dim == 2)
                d += (u.y(i, up(j, g.ny)) - u.y(i, dn(j, g.ny))) * inv2dy;
            out(i, j) = d * d;
        }
    return out;
}

ScalarField tr_grad_u_sq(const VectorField& u) {
    const Grid& g = u.grid();
    ScalarField out(g);
    const double inv2dx = 1.0 / (2.0 * g.dx);
    const double inv2dy = g.dim == 2 ? 1.0 / (2.0 * g.dy) : 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double dxux = (u.x(up(i, g.nx), j) - u.x(dn(i, g.nx), j)) * inv2dx;
            if (g.dim == 1) {
                out(i, j) = dxux * dxux;
                continue;
            }
            const double dxuy = (u.y(up(i, g.nx), j) - u.y(dn(i, g.nx), j)) * inv2dx;
            const double dyux = (u.x(i, up(j, g.ny)) - u.x(i, dn(j, g.ny))) * inv2dy;
            const double dyuy = (u.y(i, up(j, g.ny)) - u.y(i, dn(j, g.ny))) * inv2dy;
            out(i, j) = dxux * dxux + 2.0 * dxuy * dyux + dyuy * dyuy;
        }
    return out;
}

ScalarField div_pi(const VectorField& u, const ScalarField& pi, const StencilOptions& opt) {
    require_positive(pi, "div_pi: pi");
    const Grid& g = u.grid();
    ScalarField out(g);
    // Consistent variant: conservative face fluxes pi_bar * u_bar over dx,
    // which reduces to the centered divergence for constant pi and is a
    // second-order approximation of pi^{-1} div(pi u). The verbatim stencil
    // pairs the half-index weights with the +/-1 neighbor velocities over dx
    // (twice the centered divergence when pi is constant).
    const double fx = 1.0 / g.dx;
    const double fy = 1.0 / g.dy;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int ip = up(i, g.nx), im = dn(i, g.nx);
            const double pbar_e = 0.5 * (pi(i, j) + pi(ip, j));
            const double pbar_w = 0.5 * (pi(i, j) + pi(im, j));
            const double ue = opt.verbatim ? u.x(ip, j) : 0.5 * (u.x(i, j) + u.x(ip, j));
            const double uw = opt.verbatim ? u.x(im, j) : 0.5 * (u.x(i, j) + u.x(im, j));
            double d = (pbar_e * ue - pbar_w * uw) * fx;
            if (g.dim == 2) {
                const int jp = up(j, g.ny), jm = dn(j, g.ny);
                const double pbar_n = 0.5 * (pi(i, j) + pi(i, jp));
                const double pbar_s = 0.5 * (pi(i, j) + pi(i, jm));
                const double un = opt.verbatim ? u.y(i, jp) : 0.5 * (u.y(i, j) + u.y(i, jp));
                const double us = opt.verbatim ? u.y(i, jm) : 0.5 * (u.y(i, j) + u.y(i, jm));
                d += (pbar_n * un - pbar_s * us) * fy;
            }
            out(i, j) = d / pi(i, j);
        }
    return out;
}

ScalarField hessian_log_pi_uu(const ScalarField& pi, const VectorField& u,
                              const StencilOptions& opt) {
    require_positive(pi, "hessian_log_pi_uu: pi");
    const Grid& g = u.grid();
    ScalarField lp(g);
    for (int n = 0; n < pi.size(); ++n) lp[n] = std::log(pi[n]);

    ScalarField out(g);
    const double invdx2 = 1.0 / (g.dx * g.dx);
    const double invdy2 = 1.0 / (g.dy * g.dy);
    const double cross = opt.verbatim ? 1.0 / (2.0 * g.dx * g.dy)
                                      : 1.0 / (4.0 * g.dx * g.dy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int ip = up(i, g.nx), im = dn(i, g.nx);
            const double ux = u.x(i, j);
            double h = ux * ux * (lp(ip, j) - 2.0 * lp(i, j) + lp(im, j)) * invdx2;
            if (g.dim == 2) {
                const int jp = up(j, g.ny), jm = dn(j, g.ny);
                const double uy = u.y(i, j);
                h += ux * uy * (lp(ip, jp) - lp(im, jp) - lp(ip, jm) + lp(im, jm)) * cross;
                h += uy * uy * (lp(i, jp) - 2.0 * lp(i, j) + lp(i, jm)) * invdy2;
            }
            out(i, j) = h;
        }
    return out;
}

ScalarField weighted_div(const ScalarField& g_coef, const ScalarField& f,
                         const StencilOptions& opt) {
    require_positive(g_coef, "weighted_div: g");
    const Grid& g = f.grid();
    ScalarField out(g);
    const double sx = opt.verbatim ? 1.0 / (2.0 * g.dx * g.dx) : 1.0 / (g.dx * g.dx);
    const double sy = opt.verbatim ? 1.0 / (2.0 * g.dy * g.dy) : 1.0 / (g.dy * g.dy);
    const double sign = opt.verbatim ? 1.0 : -1.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int ip = up(i, g.nx), im = dn(i, g.nx);
            const double ge = 0.5 * (g_coef(i, j) + g_coef(ip, j));
            const double gw = 0.5 * (g_coef(i, j) + g_coef(im, j));
            double w = (ge * (f(ip, j) - f(i, j)) + sign * gw * (f(i, j) - f(im, j))) * sx;
            if (g.dim == 2) {
                const int jp = up(j, g.ny), jm = dn(j, g.ny);
                const double gn = 0.5 * (g_coef(i, j) + g_coef(i, jp));
                const double gs = 0.5 * (g_coef(i, j) + g_coef(i, jm));
                w += (gn * (f(i, jp) - f(i, j)) + sign * gs * (f(i, j) - f(i, jm))) * sy;
            }
            out(i, j) = w;
        }
    return out;
}

} // namespace tigre
