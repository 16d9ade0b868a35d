#include "tigre/field.hpp"

#include <cmath>
#include <string>

namespace tigre {

Grid make_grid(int dim, int nx, int ny) {
    if (dim != 1 && dim != 2)
        throw std::invalid_argument("make_grid: dim must be 1 or 2");
    if (nx < 4)
        throw std::invalid_argument("make_grid: nx = " + std::to_string(nx) +
                                    " below minimum stencil width (4)");
    if (dim == 1) {
        if (ny != 1)
            throw std::invalid_argument("make_grid: 1D grids require ny = 1");
    } else if (ny < 4) {
        throw std::invalid_argument("make_grid: ny = " + std::to_string(ny) +
                                    " below minimum stencil width (4)");
    }
    Grid g;
    g.dim = dim;
    g.nx = nx;
    g.ny = dim == 2 ? ny : 1;
    g.dx = 1.0 / nx;
    g.dy = dim == 2 ? 1.0 / ny : 1.0;
    return g;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    for (size_t n = 0; n < v_.size(); ++n) v_[n] += o.v_[n];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    for (size_t n = 0; n < v_.size(); ++n) v_[n] -= o.v_[n];
    return *this;
}

ScalarField& ScalarField::operator*=(double c) {
    for (auto& x : v_) x *= c;
    return *this;
}

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::fabs(x));
    return m;
}

double ScalarField::min_value() const {
    double m = v_.empty() ? 0.0 : v_[0];
    for (double x : v_) m = std::min(m, x);
    return m;
}

bool ScalarField::all_finite() const {
    for (double x : v_)
        if (!std::isfinite(x)) return false;
    return true;
}

} // namespace tigre
