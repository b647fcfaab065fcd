#include "bbmlab/grid.hpp"

namespace bbmlab {

std::vector<double> symmetric_wavenumbers(int n, double length) {
    const double scale = 2.0 * std::numbers::pi / length;
    std::vector<double> k(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int signed_j = (j < n / 2) ? j : j - n;
        k[static_cast<std::size_t>(j)] = scale * signed_j;
    }
    k[0] = 0.0;
    return k;
}

namespace {

void check_axis(int n, double length, const char* axis) {
    if (n < 8 || n % 2 != 0) {
        throw InvalidGrid(std::string(axis) + " sample count must be even and >= 8, got " +
                          std::to_string(n));
    }
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw InvalidGrid(std::string(axis) + " length must be positive, got " +
                          std::to_string(length));
    }
}

}  // namespace

Grid1D::Grid1D(int n, double length)
    : n_(n),
      length_(length),
      spacing_(length / n),
      two_pi_over_length_(2.0 * std::numbers::pi / length),
      wavenumbers_(symmetric_wavenumbers(n, length)) {
    nodes_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) nodes_[static_cast<std::size_t>(i)] = spacing_ * i;
}

Grid1DPtr Grid1D::create(int n, double length) {
    check_axis(n, length, "x");
    return Grid1DPtr(new Grid1D(n, length));
}

Grid2D::Grid2D(int nx, int ny, double lx, double ly)
    : nx_(nx),
      ny_(ny),
      lx_(lx),
      ly_(ly),
      dx_(lx / nx),
      dy_(ly / ny),
      two_pi_over_lx_(2.0 * std::numbers::pi / lx),
      xi_full_(symmetric_wavenumbers(nx, lx)),
      mu_full_(symmetric_wavenumbers(ny, ly)),
      x_axis_(Grid1D::create(nx, lx)) {
    x_nodes_.resize(static_cast<std::size_t>(nx));
    for (int i = 0; i < nx; ++i) x_nodes_[static_cast<std::size_t>(i)] = dx_ * i;
    y_nodes_.resize(static_cast<std::size_t>(ny));
    for (int m = 0; m < ny; ++m) y_nodes_[static_cast<std::size_t>(m)] = -0.5 * ly + dy_ * m;
}

Grid2DPtr Grid2D::create(int nx, int ny, double lx, double ly) {
    check_axis(nx, lx, "x");
    check_axis(ny, ly, "y");
    return Grid2DPtr(new Grid2D(nx, ny, lx, ly));
}

}  // namespace bbmlab
