#ifndef TIGRE_FIELD_HPP
#define TIGRE_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tigre {

// Uniform periodic grid on the unit box [0,1)^dim. 1D grids carry ny = 1
// and dy = 1 so that dx*dy is the cell volume in either dimension.
struct Grid {
    int dim = 1;
    int nx = 0;
    int ny = 1;
    double dx = 0.0;
    double dy = 1.0;

    bool operator==(const Grid&) const = default;

    int cells() const { return nx * ny; }
    double cell_volume() const { return dx * dy; }
    double min_spacing() const { return dim == 2 && dy < dx ? dy : dx; }

    // Cell centers.
    double x(int i) const { return (i + 0.5) * dx; }
    double y(int j) const { return dim == 2 ? (j + 0.5) * dy : 0.0; }
};

// Minimum of 4 cells per direction so the 5-point stencils never self-overlap.
Grid make_grid(int dim, int nx, int ny);

// Cell-centered scalar raster, row-major with j (y) as the slow axis.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid_(g), v_(static_cast<size_t>(g.cells()), fill) {}

    const Grid& grid() const { return grid_; }
    int size() const { return static_cast<int>(v_.size()); }

    double& operator()(int i, int j) { return v_[static_cast<size_t>(j) * grid_.nx + i]; }
    double operator()(int i, int j) const { return v_[static_cast<size_t>(j) * grid_.nx + i]; }
    double& operator[](int n) { return v_[static_cast<size_t>(n)]; }
    double operator[](int n) const { return v_[static_cast<size_t>(n)]; }

    // Periodic access for arbitrary signed indices.
    double sample(long long i, long long j) const {
        const int iw = wrap(i, grid_.nx);
        const int jw = wrap(j, grid_.ny);
        return v_[static_cast<size_t>(jw) * grid_.nx + iw];
    }

    static int wrap(long long i, int n) {
        long long m = i % n;
        if (m < 0) m += n;
        return static_cast<int>(m);
    }

    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }

    void fill(double c) { for (auto& x : v_) x = c; }

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double c);

    double max_abs() const;
    double min_value() const;
    bool all_finite() const;

private:
    Grid grid_;
    std::vector<double> v_;
};

// Velocity-like field: one component per grid dimension. The y component is
// kept allocated (all zero) on 1D grids so 2D code paths stay uniform.
struct VectorField {
    ScalarField x;
    ScalarField y;

    VectorField() = default;
    explicit VectorField(const Grid& g) : x(g), y(g) {}

    const Grid& grid() const { return x.grid(); }
};

} // namespace tigre

#endif
