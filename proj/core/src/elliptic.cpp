#include "tigre/elliptic.hpp"

#include <cmath>

namespace tigre {

namespace {

inline int up(int i, int n) { return i + 1 == n ? 0 : i + 1; }
inline int dn(int i, int n) { return i == 0 ? n - 1 : i - 1; }

double l2_norm_pair(const ScalarField& a, const ScalarField* b) {
    double s = 0.0;
    for (int n = 0; n < a.size(); ++n) s += a[n] * a[n];
    if (b)
        for (int n = 0; n < b->size(); ++n) s += (*b)[n] * (*b)[n];
    return std::sqrt(s);
}

constexpr double kResidualFloor = 1e-14;
constexpr double kDetFloor = 1e-300;

// Precomputed face averages of a weight field for div(w grad .): e(i,j) is
// the (i+1/2, j) face weight over dx^2, n(i,j) the (i, j+1/2) face weight
// over dy^2, and diag the per-cell sum of the surrounding face weights. The
// weights stay fixed through a solve, so this is built once per system row.
struct FaceWeights {
    ScalarField e, n, diag;
};

FaceWeights face_weights(const ScalarField& w) {
    const Grid& g = w.grid();
    FaceWeights fw{ScalarField(g), ScalarField(g), ScalarField(g)};
    const double ix2 = 1.0 / (g.dx * g.dx);
    const double iy2 = 1.0 / (g.dy * g.dy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            fw.e(i, j) = 0.5 * (w(i, j) + w(up(i, g.nx), j)) * ix2;
            if (g.dim == 2)
                fw.n(i, j) = 0.5 * (w(i, j) + w(i, up(j, g.ny))) * iy2;
        }
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            fw.diag(i, j) = fw.e(i, j) + fw.e(dn(i, g.nx), j);
            if (g.dim == 2)
                fw.diag(i, j) += fw.n(i, j) + fw.n(i, dn(j, g.ny));
        }
    return fw;
}

inline double nsum(const FaceWeights& fw, const ScalarField& f, int i, int j,
                   int ip, int im, int jp, int jm, bool dim2) {
    double s = fw.e(i, j) * f(ip, j) + fw.e(im, j) * f(im, j);
    if (dim2) s += fw.n(i, j) * f(i, jp) + fw.n(i, jm) * f(i, jm);
    return s;
}

} // namespace

ScalarField Potentials::warm_sigma() const {
    ScalarField w = sigma;
    for (int n = 0; n < w.size(); ++n) w[n] = 2.0 * sigma[n] - prev_sigma[n];
    return w;
}

ScalarField Potentials::warm_chi() const {
    ScalarField w = chi;
    for (int n = 0; n < w.size(); ++n) w[n] = 2.0 * chi[n] - prev_chi[n];
    return w;
}

void Potentials::commit(ScalarField new_sigma, ScalarField new_chi) {
    prev_sigma = std::move(sigma);
    prev_chi = std::move(chi);
    sigma = std::move(new_sigma);
    chi = std::move(new_chi);
}

EllipticRhs build_rhs_tigre(const VectorField& u, const ScalarField& pi,
                            const RegParams& reg) {
    EllipticRhs rhs;
    rhs.f1 = build_rhs_igr(u, reg);
    const ScalarField dpi = div_pi(u, pi, reg.stencil);
    const ScalarField tr = tr_grad_u_sq(u);
    const ScalarField hess = hessian_log_pi_uu(pi, u, reg.stencil);
    rhs.f2 = ScalarField(u.grid());
    for (int n = 0; n < rhs.f2.size(); ++n)
        rhs.f2[n] = reg.beta * (dpi[n] * dpi[n] - tr[n] + hess[n]);
    return rhs;
}

ScalarField build_rhs_igr(const VectorField& u, const RegParams& reg) {
    const ScalarField ds = div_sq(u);
    const ScalarField tr = tr_grad_u_sq(u);
    ScalarField f1(u.grid());
    for (int n = 0; n < f1.size(); ++n)
        f1[n] = reg.alpha * (ds[n] + tr[n]);
    return f1;
}

std::pair<ScalarField, ScalarField> apply_tigre_operator(
    const ScalarField& sigma, const ScalarField& chi, const ScalarField& rho,
    const ScalarField& pi, const RegParams& reg) {
    const Grid& g = sigma.grid();
    ScalarField g11(g), g12(g), g22(g), invpi(g);
    for (int n = 0; n < g11.size(); ++n) {
        if (!(rho[n] > 0.0)) throw std::domain_error("apply_tigre_operator: rho must be positive");
        if (!(pi[n] > 0.0)) throw std::domain_error("apply_tigre_operator: pi must be positive");
        const double ir = 1.0 / rho[n];
        g11[n] = ir;
        g12[n] = pi[n] * ir;
        g22[n] = pi[n] * pi[n] * ir;
        invpi[n] = 1.0 / pi[n];
    }

    ScalarField row1(g), row2(g);
    if (!reg.stencil.verbatim) {
        const ScalarField w11 = weighted_div(g11, sigma, reg.stencil);
        const ScalarField w12 = weighted_div(g12, chi, reg.stencil);
        const ScalarField w21 = weighted_div(g12, sigma, reg.stencil);
        const ScalarField w22 = weighted_div(g22, chi, reg.stencil);
        for (int n = 0; n < row1.size(); ++n) {
            row1[n] = g11[n] * sigma[n] - reg.alpha * (w11[n] + w12[n]);
            row2[n] = chi[n] - reg.beta * invpi[n] * (w21[n] + w22[n]);
        }
    } else {
        // Printed block matrix: D_pi applied to the unknowns on the right.
        ScalarField sig_over_pi(g), chi_over_pi(g);
        for (int n = 0; n < g.cells(); ++n) {
            sig_over_pi[n] = sigma[n] * invpi[n];
            chi_over_pi[n] = chi[n] * invpi[n];
        }
        StencilOptions consistent{}; // verbatim weighted_div is not an elliptic operator
        const ScalarField w11 = weighted_div(g11, sigma, consistent);
        const ScalarField w12 = weighted_div(g12, chi, consistent);
        const ScalarField w21 = weighted_div(g12, sig_over_pi, consistent);
        const ScalarField w22 = weighted_div(g22, chi_over_pi, consistent);
        for (int n = 0; n < row1.size(); ++n) {
            row1[n] = g11[n] * sigma[n] - reg.alpha * (w11[n] + w12[n]);
            row2[n] = chi[n] - reg.beta * (w21[n] + w22[n]);
        }
    }
    return {std::move(row1), std::move(row2)};
}

ScalarField apply_igr_operator(const ScalarField& sigma, const ScalarField& rho,
                               const RegParams& reg) {
    const Grid& g = sigma.grid();
    ScalarField invrho(g);
    for (int n = 0; n < invrho.size(); ++n) {
        if (!(rho[n] > 0.0)) throw std::domain_error("apply_igr_operator: rho must be positive");
        invrho[n] = 1.0 / rho[n];
    }
    StencilOptions consistent{};
    const ScalarField w = weighted_div(invrho, sigma, consistent);
    ScalarField row(g);
    for (int n = 0; n < row.size(); ++n)
        row[n] = invrho[n] * sigma[n] - reg.alpha * w[n];
    return row;
}

SolveStats solve_potentials(const ScalarField& rho,
                            const std::optional<ScalarField>& pi,
                            const EllipticRhs& rhs, const RegParams& reg,
                            Potentials& pots) {
    reg.validate();
    const Grid& g = rho.grid();
    const bool coupled = pi.has_value() && reg.beta > 0.0;

    ScalarField sigma = pots.warm_sigma();
    ScalarField chi = coupled ? pots.warm_chi() : ScalarField(g);

    ScalarField invrho(g);
    for (int n = 0; n < invrho.size(); ++n) {
        if (!(rho[n] > 0.0)) throw std::domain_error("solve_potentials: rho must be positive");
        invrho[n] = 1.0 / rho[n];
    }

    ScalarField g12, g22, invpi;
    if (coupled) {
        g12 = ScalarField(g);
        g22 = ScalarField(g);
        invpi = ScalarField(g);
        for (int n = 0; n < g.cells(); ++n) {
            const double p = (*pi)[n];
            if (!(p > 0.0)) throw std::domain_error("solve_potentials: pi must be positive");
            g12[n] = p * invrho[n];
            g22[n] = p * p * invrho[n];
            invpi[n] = 1.0 / p;
        }
    }

    const double rhs_norm = std::max(
        l2_norm_pair(rhs.f1, coupled ? &rhs.f2 : nullptr), kResidualFloor);

    const bool dim2 = g.dim == 2;
    const bool verbatim = coupled && reg.stencil.verbatim;

    const FaceWeights fw11 = face_weights(invrho);
    FaceWeights fw12, fw22;
    if (coupled) {
        fw12 = face_weights(g12);
        fw22 = face_weights(g22);
    }

    // Printed-matrix mode applies D_pi on the right, so neighbor unknowns
    // enter scaled by 1/pi; keep sigma/pi and chi/pi mirrors in sync.
    ScalarField sigs, chis;
    if (verbatim) {
        sigs = ScalarField(g);
        chis = ScalarField(g);
        for (int n = 0; n < g.cells(); ++n) {
            sigs[n] = sigma[n] * invpi[n];
            chis[n] = chi[n] * invpi[n];
        }
    }

    // Per-cell block coefficients are sweep-invariant; factor them up front.
    ScalarField a11(g), a12, a21, a22, inv_det;
    for (int n = 0; n < g.cells(); ++n)
        a11[n] = invrho[n] + reg.alpha * fw11.diag[n];
    if (coupled) {
        a12 = ScalarField(g);
        a21 = ScalarField(g);
        a22 = ScalarField(g);
        inv_det = ScalarField(g);
        for (int n = 0; n < g.cells(); ++n) {
            a12[n] = reg.alpha * fw12.diag[n];
            a21[n] = reg.beta * invpi[n] * fw12.diag[n];
            a22[n] = 1.0 + reg.beta * invpi[n] * fw22.diag[n];
            const double det = a11[n] * a22[n] - a12[n] * a21[n];
            if (std::fabs(det) < kDetFloor)
                throw std::runtime_error("solve_potentials: singular 2x2 block");
            inv_det[n] = 1.0 / det;
        }
    }

    // Fused residual of the same discrete rows apply_*_operator produces,
    // without the temporaries: div(w grad f) at a cell is nsum - diag * f.
    // After a full sweep the color-1 blocks are solved exactly (Cramer), so
    // their residual rows are zero to roundoff; post-sweep residuals only
    // need the color-0 cells. The pre-iteration residual scans everything.
    auto residual = [&](bool red_only) -> double {
        double acc = 0.0;
        const int istep = red_only ? 2 : 1;
        for (int j = 0; j < g.ny; ++j) {
            const int ifirst = red_only ? (dim2 ? j % 2 : 0) : 0;
            for (int i = ifirst; i < g.nx; i += istep) {
                const int ip = up(i, g.nx), im = dn(i, g.nx);
                const int jp = up(j, g.ny), jm = dn(j, g.ny);
                const double w11 = nsum(fw11, sigma, i, j, ip, im, jp, jm, dim2) -
                                   fw11.diag(i, j) * sigma(i, j);
                double r1 = invrho(i, j) * sigma(i, j) - reg.alpha * w11 -
                            rhs.f1(i, j);
                if (coupled) {
                    const double w12 = nsum(fw12, chi, i, j, ip, im, jp, jm, dim2) -
                                       fw12.diag(i, j) * chi(i, j);
                    r1 -= reg.alpha * w12;
                    double r2;
                    if (!verbatim) {
                        const double w21 =
                            nsum(fw12, sigma, i, j, ip, im, jp, jm, dim2) -
                            fw12.diag(i, j) * sigma(i, j);
                        const double w22 =
                            nsum(fw22, chi, i, j, ip, im, jp, jm, dim2) -
                            fw22.diag(i, j) * chi(i, j);
                        r2 = chi(i, j) - reg.beta * invpi(i, j) * (w21 + w22) -
                             rhs.f2(i, j);
                    } else {
                        const double w21 =
                            nsum(fw12, sigs, i, j, ip, im, jp, jm, dim2) -
                            fw12.diag(i, j) * sigs(i, j);
                        const double w22 =
                            nsum(fw22, chis, i, j, ip, im, jp, jm, dim2) -
                            fw22.diag(i, j) * chis(i, j);
                        r2 = chi(i, j) - reg.beta * (w21 + w22) - rhs.f2(i, j);
                    }
                    acc += r2 * r2;
                }
                acc += r1 * r1;
            }
        }
        return std::sqrt(acc) / rhs_norm;
    };

    SolveStats stats;
    stats.residual = residual(false);
    if (stats.residual <= reg.tol) {
        stats.converged = true;
        pots.commit(std::move(sigma), std::move(chi));
        return stats;
    }

    for (int sweep = 1; sweep <= reg.max_sweeps; ++sweep) {
        for (int color = 0; color < 2; ++color) {
            for (int j = 0; j < g.ny; ++j) {
                const int istart = dim2 ? (j + color) % 2 : color;
                for (int i = istart; i < g.nx; i += 2) {
                    const int ip = up(i, g.nx), im = dn(i, g.nx);
                    const int jp = up(j, g.ny), jm = dn(j, g.ny);
                    const double n11 = nsum(fw11, sigma, i, j, ip, im, jp, jm, dim2);
                    if (!coupled) {
                        sigma(i, j) =
                            (rhs.f1(i, j) + reg.alpha * n11) / a11(i, j);
                        continue;
                    }
                    const double n12 = nsum(fw12, chi, i, j, ip, im, jp, jm, dim2);
                    const double b1 = rhs.f1(i, j) + reg.alpha * (n11 + n12);
                    double b2;
                    if (!verbatim) {
                        const double n21 = nsum(fw12, sigma, i, j, ip, im, jp, jm, dim2);
                        const double n22 = nsum(fw22, chi, i, j, ip, im, jp, jm, dim2);
                        b2 = rhs.f2(i, j) + reg.beta * invpi(i, j) * (n21 + n22);
                    } else {
                        const double n21 = nsum(fw12, sigs, i, j, ip, im, jp, jm, dim2);
                        const double n22 = nsum(fw22, chis, i, j, ip, im, jp, jm, dim2);
                        b2 = rhs.f2(i, j) + reg.beta * (n21 + n22);
                    }
                    sigma(i, j) =
                        (b1 * a22(i, j) - a12(i, j) * b2) * inv_det(i, j);
                    chi(i, j) =
                        (a11(i, j) * b2 - a21(i, j) * b1) * inv_det(i, j);
                    if (verbatim) {
                        sigs(i, j) = sigma(i, j) * invpi(i, j);
                        chis(i, j) = chi(i, j) * invpi(i, j);
                    }
                }
            }
        }
        stats.sweeps = sweep;
        stats.residual = residual(true);
        stats.residual_history.push_back(stats.residual);
        if (stats.residual <= reg.tol) {
            stats.converged = true;
            break;
        }
    }

    if (!stats.converged && reg.strict)
        throw std::runtime_error("solve_potentials: no convergence within max_sweeps");

    pots.commit(std::move(sigma), std::move(chi));
    return stats;
}

} // namespace tigre
