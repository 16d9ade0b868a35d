#include <cmath>
#include <numbers>

#include "tigre/diagnostics.hpp"

namespace tigre {

namespace {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, in place, unnormalized.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / double(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

void dft_direct(std::vector<std::complex<double>>& a, bool inverse) {
    const size_t n = a.size();
    std::vector<std::complex<double>> out(n);
    const double sgn = inverse ? 2.0 : -2.0;
    for (size_t k = 0; k < n; ++k) {
        std::complex<double> s(0.0, 0.0);
        for (size_t m = 0; m < n; ++m) {
            const double ang = sgn * std::numbers::pi * double(k * m % n) / double(n);
            s += a[m] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = s;
    }
    a = std::move(out);
}

} // namespace

void dft_1d(std::vector<std::complex<double>>& a, bool inverse) {
    if (a.empty()) return;
    if (is_pow2(a.size()))
        fft_pow2(a, inverse);
    else
        dft_direct(a, inverse);
    if (!inverse) {
        const double norm = 1.0 / double(a.size());
        for (auto& x : a) x *= norm;
    }
}

std::vector<std::complex<double>> dft_2d(const ScalarField& f) {
    const Grid& g = f.grid();
    const int nx = g.nx, ny = g.ny;
    std::vector<std::complex<double>> data(static_cast<size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            data[static_cast<size_t>(j) * nx + i] = f(i, j);

    std::vector<std::complex<double>> row(static_cast<size_t>(nx));
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) row[i] = data[static_cast<size_t>(j) * nx + i];
        dft_1d(row);
        for (int i = 0; i < nx; ++i) data[static_cast<size_t>(j) * nx + i] = row[i];
    }
    if (ny > 1) {
        std::vector<std::complex<double>> col(static_cast<size_t>(ny));
        for (int i = 0; i < nx; ++i) {
            for (int j = 0; j < ny; ++j) col[j] = data[static_cast<size_t>(j) * nx + i];
            dft_1d(col);
            for (int j = 0; j < ny; ++j) data[static_cast<size_t>(j) * nx + i] = col[j];
        }
    }
    return data;
}

} // namespace tigre
