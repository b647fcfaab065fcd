#include "bbmlab/spectral.hpp"

#include <cmath>

#include "bbmlab/fft.hpp"
#include "bbmlab/kernels.hpp"

namespace bbmlab {
namespace {

// (i xi)^order for the half spectrum, as an explicit complex multiplier.
std::complex<double> ix_power(double xi, int order) {
    std::complex<double> m(1.0, 0.0);
    const std::complex<double> ixi(0.0, xi);
    for (int k = 0; k < order; ++k) m *= ixi;
    return m;
}

}  // namespace

Spectrum1D forward(const Field1D& f) {
    Spectrum1D s{f.grid(), std::vector<std::complex<double>>(
                               static_cast<std::size_t>(f.grid()->half_size()))};
    fft::forward_1d(f.grid()->n(), f.values().data(), s.coeff.data());
    return s;
}

Field1D inverse(const Spectrum1D& s) {
    std::vector<double> v(static_cast<std::size_t>(s.grid->n()));
    fft::inverse_1d(s.grid->n(), s.coeff.data(), v.data());
    return Field1D(s.grid, std::move(v));
}

Spectrum2D forward(const Field2D& f) {
    const auto& g = *f.grid();
    Spectrum2D s{f.grid(), std::vector<std::complex<double>>(
                               static_cast<std::size_t>(g.ny()) * g.half_size_x())};
    fft::forward_2d(g.ny(), g.nx(), f.values().data(), s.coeff.data());
    return s;
}

Field2D inverse(const Spectrum2D& s) {
    const auto& g = *s.grid;
    std::vector<double> v(g.size());
    fft::inverse_2d(g.ny(), g.nx(), s.coeff.data(), v.data());
    return Field2D(s.grid, std::move(v));
}

Field1D deriv_x(const Field1D& f, int order) {
    Spectrum1D s = forward(f);
    const auto& g = *f.grid();
    const int nh = g.half_size();
    for (int j = 0; j < nh; ++j) {
        s.coeff[static_cast<std::size_t>(j)] *= ix_power(g.xi(j), order);
    }
    if (order % 2 != 0) s.coeff[static_cast<std::size_t>(g.nyquist_index())] = 0.0;
    return inverse(s);
}

Field2D deriv_x(const Field2D& f, int order) {
    Spectrum2D s = forward(f);
    const auto& g = *f.grid();
    const int nhx = g.half_size_x();
    std::vector<std::complex<double>> mult(static_cast<std::size_t>(nhx));
    for (int j = 0; j < nhx; ++j) mult[static_cast<std::size_t>(j)] = ix_power(g.xi(j), order);
    if (order % 2 != 0) mult[static_cast<std::size_t>(g.x_nyquist_index())] = 0.0;
    for (int m = 0; m < g.ny(); ++m) {
        kernels::ops().cmul(mult.data(), s.coeff.data() + static_cast<std::size_t>(m) * nhx,
                            static_cast<std::size_t>(nhx));
    }
    return inverse(s);
}

Field2D deriv_y(const Field2D& f, int order) {
    Spectrum2D s = forward(f);
    const auto& g = *f.grid();
    const int nhx = g.half_size_x();
    for (int m = 0; m < g.ny(); ++m) {
        std::complex<double> mult = ix_power(g.mu(m), order);
        if (order % 2 != 0 && m == g.y_nyquist_index()) mult = 0.0;
        std::complex<double>* row = s.coeff.data() + static_cast<std::size_t>(m) * nhx;
        for (int j = 0; j < nhx; ++j) row[static_cast<std::size_t>(j)] *= mult;
    }
    return inverse(s);
}

double default_mean_tol(double max_abs_value) {
    return 1e-10 * std::max(1.0, max_abs_value);
}

Field1D antideriv_x(const Field1D& f, double mean_tol) {
    if (mean_tol < 0.0) {
        mean_tol = default_mean_tol(kernels::ops().max_abs(f.values().data(), f.values().size()));
    }
    const double mean = x_mean(f);
    if (std::fabs(mean) > mean_tol) throw NonZeroXMean(-1, mean);
    Spectrum1D s = forward(f);
    const auto& g = *f.grid();
    s.coeff[0] = 0.0;
    for (int j = 1; j < g.nyquist_index(); ++j) {
        s.coeff[static_cast<std::size_t>(j)] /= std::complex<double>(0.0, g.xi(j));
    }
    s.coeff[static_cast<std::size_t>(g.nyquist_index())] = 0.0;
    return inverse(s);
}

Field2D antideriv_x(const Field2D& f, double mean_tol) {
    if (mean_tol < 0.0) {
        mean_tol = default_mean_tol(kernels::ops().max_abs(f.values().data(), f.values().size()));
    }
    const std::vector<double> means = x_means(f);
    for (int m = 0; m < f.grid()->ny(); ++m) {
        if (std::fabs(means[static_cast<std::size_t>(m)]) > mean_tol) {
            throw NonZeroXMean(m, means[static_cast<std::size_t>(m)]);
        }
    }
    Spectrum2D s = forward(f);
    const auto& g = *f.grid();
    const int nhx = g.half_size_x();
    std::vector<std::complex<double>> mult(static_cast<std::size_t>(nhx));
    mult[0] = 0.0;
    for (int j = 1; j < g.x_nyquist_index(); ++j) {
        mult[static_cast<std::size_t>(j)] = 1.0 / std::complex<double>(0.0, g.xi(j));
    }
    mult[static_cast<std::size_t>(g.x_nyquist_index())] = 0.0;
    for (int m = 0; m < g.ny(); ++m) {
        kernels::ops().cmul(mult.data(), s.coeff.data() + static_cast<std::size_t>(m) * nhx,
                            static_cast<std::size_t>(nhx));
    }
    return inverse(s);
}

int dealias_cutoff(int n) { return n / 3; }

Spectrum1D dealias(Spectrum1D s) {
    const int cut = dealias_cutoff(s.grid->n());
    for (int j = cut + 1; j < s.grid->half_size(); ++j) {
        s.coeff[static_cast<std::size_t>(j)] = 0.0;
    }
    return s;
}

Spectrum2D dealias(Spectrum2D s) {
    const auto& g = *s.grid;
    const int cut_x = dealias_cutoff(g.nx());
    const int cut_y = dealias_cutoff(g.ny());
    const int nhx = g.half_size_x();
    for (int m = 0; m < g.ny(); ++m) {
        const int abs_m = std::min(m, g.ny() - m);
        std::complex<double>* row = s.coeff.data() + static_cast<std::size_t>(m) * nhx;
        if (abs_m > cut_y) {
            for (int j = 0; j < nhx; ++j) row[static_cast<std::size_t>(j)] = 0.0;
        } else {
            for (int j = cut_x + 1; j < nhx; ++j) row[static_cast<std::size_t>(j)] = 0.0;
        }
    }
    return s;
}

double x_mean(const Field1D& f) {
    return kernels::ops().sum(f.values().data(), f.values().size()) / f.grid()->n();
}

double x_mean_slice(const Field2D& f, int y_index) {
    const auto row = f.row(y_index);
    return kernels::ops().sum(row.data(), row.size()) / f.grid()->nx();
}

std::vector<double> x_means(const Field2D& f) {
    const auto& g = *f.grid();
    std::vector<double> means(static_cast<std::size_t>(g.ny()));
    for (int m = 0; m < g.ny(); ++m) means[static_cast<std::size_t>(m)] = x_mean_slice(f, m);
    return means;
}

}  // namespace bbmlab
