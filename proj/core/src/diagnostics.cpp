#include "tigre/diagnostics.hpp"

#include <cmath>

#include "tigre/operators.hpp"

namespace tigre {

Totals totals(const ConservedState& state, const EosParams& eos) {
    const Grid& g = state.grid();
    const double vol = g.cell_volume();
    Totals t;
    for (int n = 0; n < g.cells(); ++n) {
        const double rho = state.rho[n];
        const double mx = state.mom.x[n], my = state.mom.y[n];
        const double msq = mx * mx + my * my;
        t.mass += rho;
        t.momentum_x += mx;
        t.momentum_y += my;
        if (state.form == StateForm::Entropy) {
            const double p = pressure_from_entropy(eos, rho, state.ez[n] / rho);
            t.energy += 0.5 * msq / rho + p / (eos.gamma - 1.0);
            t.entropy += state.ez[n];
        } else {
            const double p = pressure_from_energy(eos, rho, msq, state.ez[n]);
            t.energy += state.ez[n];
            t.entropy += rho * entropy_from_pressure(eos, rho, p);
        }
    }
    t.mass *= vol;
    t.momentum_x *= vol;
    t.momentum_y *= vol;
    t.energy *= vol;
    t.entropy *= vol;
    return t;
}

double total_variation(const ScalarField& rho) {
    const ScalarField gx = ddx(rho);
    const ScalarField gy = ddy(rho);
    const double vol = rho.grid().cell_volume();
    double tv = 0.0;
    for (int n = 0; n < rho.size(); ++n)
        tv += std::sqrt(gx[n] * gx[n] + gy[n] * gy[n]);
    return tv * vol;
}

namespace {

SpectrumRecord bin_power(const std::vector<double>& power, const Grid& g,
                         double scale) {
    const int nx = g.nx, ny = g.ny;
    const int nbins = (g.dim == 2 ? std::min(nx, ny) : nx) / 2;
    SpectrumRecord rec;
    rec.shell_power.assign(static_cast<size_t>(nbins), 0.0);
    rec.shell_counts.assign(static_cast<size_t>(nbins), 0);
    for (int j = 0; j < ny; ++j) {
        const int ky = j <= ny / 2 ? j : j - ny;
        for (int i = 0; i < nx; ++i) {
            const int kx = i <= nx / 2 ? i : i - nx;
            const double kmag = std::sqrt(double(kx) * kx + double(ky) * ky);
            const int b = static_cast<int>(std::floor(kmag));
            if (b >= nbins) continue;
            rec.shell_power[b] += scale * power[static_cast<size_t>(j) * nx + i];
            rec.shell_counts[b] += 1;
        }
    }
    for (int b = 0; b < nbins; ++b)
        if (rec.shell_counts[b] > 0)
            rec.shell_power[b] /= double(rec.shell_counts[b]);
    return rec;
}

} // namespace

SpectrumRecord shell_spectrum(const ScalarField& f) {
    if (!f.all_finite())
        throw std::domain_error("shell_spectrum: field has non-finite values");
    const auto fh = dft_2d(f);
    std::vector<double> power(fh.size());
    for (size_t n = 0; n < fh.size(); ++n) power[n] = std::norm(fh[n]);
    return bin_power(power, f.grid(), 1.0);
}

SpectrumRecord shell_spectrum(const VectorField& u) {
    const auto ux = dft_2d(u.x);
    const auto uy = dft_2d(u.y);
    std::vector<double> power(ux.size());
    for (size_t n = 0; n < ux.size(); ++n)
        power[n] = std::norm(ux[n]) + std::norm(uy[n]);
    return bin_power(power, u.grid(), 0.5);
}

double k_rms(const SpectrumRecord& spec) {
    double num = 0.0, den = 0.0;
    for (size_t b = 1; b < spec.shell_power.size(); ++b) {
        num += double(b) * double(b) * spec.shell_power[b];
        den += spec.shell_power[b];
    }
    if (!(den > 0.0))
        throw std::domain_error("k_rms: spectrum has no fluctuation power");
    return std::sqrt(num / den);
}

} // namespace tigre
