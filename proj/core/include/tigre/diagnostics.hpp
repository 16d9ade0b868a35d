#ifndef TIGRE_DIAGNOSTICS_HPP
#define TIGRE_DIAGNOSTICS_HPP

#include <complex>
#include <vector>

#include "tigre/eos.hpp"
#include "tigre/model.hpp"

namespace tigre {

struct Totals {
    double mass = 0.0;
    double momentum_x = 0.0;
    double momentum_y = 0.0;
    double energy = 0.0;   // sum of (rho |u|^2 / 2 + p/(gamma-1)) * vol
    double entropy = 0.0;  // sum of pi * vol (energy form reports rho*s(rho,p))
};

Totals totals(const ConservedState& state, const EosParams& eos);

// TV_h = sum sqrt((D_x rho)^2 + (D_y rho)^2) * vol with centered differences.
double total_variation(const ScalarField& rho);

// Forward DFT normalized by 1/N per dimension (constant field -> all power
// at k = 0). Radix-2 iterative transform for power-of-two sizes, direct
// O(N^2) transform otherwise.
void dft_1d(std::vector<std::complex<double>>& a, bool inverse = false);
std::vector<std::complex<double>> dft_2d(const ScalarField& f);

struct SpectrumRecord {
    double t = 0.0;
    std::vector<double> shell_power;   // indexed by integer bin b
    std::vector<long> shell_counts;    // |Omega_b|
};

// Radially averaged power spectrum over half-open shells b <= |k| < b+1,
// b = 0 .. floor(nx/2)-1. 1D fields bin over |k| directly.
SpectrumRecord shell_spectrum(const ScalarField& f);
// Kinetic form: component powers summed with the 1/2 prefactor.
SpectrumRecord shell_spectrum(const VectorField& u);

// Variance-weighted mean wavenumber over shell centers, b = 0 excluded.
double k_rms(const SpectrumRecord& spec);

} // namespace tigre

#endif
