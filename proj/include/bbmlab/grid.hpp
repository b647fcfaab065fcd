#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "bbmlab/errors.hpp"

namespace bbmlab {

class Grid1D;
class Grid2D;
using Grid1DPtr = std::shared_ptr<const Grid1D>;
using Grid2DPtr = std::shared_ptr<const Grid2D>;

/// Uniform periodic sampling of [0, L): nodes x_i = i * L/n.
///
/// Wavenumbers follow the standard symmetric DFT ordering
/// {0, 1, ..., n/2 - 1, -n/2, ..., -1} scaled by 2*pi/L, so entry 0 is
/// exactly zero and the Nyquist index n/2 carries the (sign-ambiguous)
/// wavenumber -pi*n/L.
class Grid1D {
public:
    static Grid1DPtr create(int n, double length);

    int n() const { return n_; }
    double length() const { return length_; }
    double spacing() const { return spacing_; }
    double node(int i) const { return spacing_ * i; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& wavenumbers() const { return wavenumbers_; }

    /// Half-spectrum size used by the real-to-complex transform.
    int half_size() const { return n_ / 2 + 1; }
    /// Wavenumber for half-spectrum index j in [0, n/2]; non-negative.
    double xi(int j) const { return two_pi_over_length_ * j; }
    int nyquist_index() const { return n_ / 2; }

    bool same_layout(const Grid1D& other) const {
        return n_ == other.n_ && length_ == other.length_;
    }

private:
    Grid1D(int n, double length);

    int n_;
    double length_;
    double spacing_;
    double two_pi_over_length_;
    std::vector<double> nodes_;
    std::vector<double> wavenumbers_;
};

/// Periodic box [0, Lx) x [-Ly/2, Ly/2). The y axis is centered at zero so
/// transverse profiles (tanh, sech) read the signed coordinate directly.
class Grid2D {
public:
    static Grid2DPtr create(int nx, int ny, double lx, double ly);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double lx() const { return lx_; }
    double ly() const { return ly_; }
    double dx() const { return dx_; }
    double dy() const { return dy_; }
    double x(int i) const { return dx_ * i; }
    double y(int m) const { return -0.5 * ly_ + dy_ * m; }
    const std::vector<double>& x_nodes() const { return x_nodes_; }
    const std::vector<double>& y_nodes() const { return y_nodes_; }
    const std::vector<double>& x_wavenumbers() const { return xi_full_; }
    const std::vector<double>& y_wavenumbers() const { return mu_full_; }

    int half_size_x() const { return nx_ / 2 + 1; }
    /// x wavenumber for half-spectrum index j in [0, nx/2].
    double xi(int j) const { return two_pi_over_lx_ * j; }
    /// Signed y wavenumber for row index m in [0, ny).
    double mu(int m) const { return mu_full_[static_cast<std::size_t>(m)]; }
    int x_nyquist_index() const { return nx_ / 2; }
    int y_nyquist_index() const { return ny_ / 2; }

    /// The x-mean modes live in half-spectrum column 0; identified by index.
    static constexpr int zero_xi_column = 0;

    std::size_t size() const { return static_cast<std::size_t>(nx_) * ny_; }

    /// The x-axis of this box as a 1D grid (shared by the 1D limit solutions).
    const Grid1DPtr& x_axis() const { return x_axis_; }

    bool same_layout(const Grid2D& other) const {
        return nx_ == other.nx_ && ny_ == other.ny_ && lx_ == other.lx_ &&
               ly_ == other.ly_;
    }

private:
    Grid2D(int nx, int ny, double lx, double ly);

    int nx_, ny_;
    double lx_, ly_;
    double dx_, dy_;
    double two_pi_over_lx_;
    std::vector<double> x_nodes_, y_nodes_;
    std::vector<double> xi_full_, mu_full_;
    Grid1DPtr x_axis_;
};

/// Symmetric DFT wavenumber list for n samples over length L.
std::vector<double> symmetric_wavenumbers(int n, double length);

}  // namespace bbmlab
