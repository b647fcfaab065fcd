#pragma once

#include <complex>
#include <vector>

#include "bbmlab/field.hpp"

namespace bbmlab {

/// Half spectrum of a real 1D field: coeff[j] for j in [0, n/2], xi_j >= 0.
/// coeff[0] is the x-mean; the negative half is the implied conjugate.
struct Spectrum1D {
    Grid1DPtr grid;
    std::vector<std::complex<double>> coeff;
};

/// Half-in-x spectrum of a real 2D field: coeff[m * (nx/2+1) + j] with the
/// full signed mu axis (row m) and the non-negative xi axis (column j).
struct Spectrum2D {
    Grid2DPtr grid;
    std::vector<std::complex<double>> coeff;

    std::complex<double> at(int j, int m) const {
        return coeff[static_cast<std::size_t>(m) * grid->half_size_x() +
                     static_cast<std::size_t>(j)];
    }
};

Spectrum1D forward(const Field1D& f);
Field1D inverse(const Spectrum1D& s);
Spectrum2D forward(const Field2D& f);
Field2D inverse(const Spectrum2D& s);

/// Spectral x-derivative of the given order. Odd orders zero the x-Nyquist
/// mode (the symbol has no well-defined sign there).
Field1D deriv_x(const Field1D& f, int order);
Field2D deriv_x(const Field2D& f, int order);

/// Spectral y-derivative; odd orders zero the y-Nyquist row.
Field2D deriv_y(const Field2D& f, int order);

/// Tolerance below which an x-mean counts as zero: 1e-10 * max(1, |f|_inf).
/// Pass mean_tol < 0 to any of the operations below to use it.
double default_mean_tol(double max_abs_value);

/// Antiderivative in x: division of the spectrum by (i xi), with the xi = 0
/// coefficient of the result set to zero (zero-mean gauge) and the x-Nyquist
/// zeroed. Requires every x-slice of f to have zero mean within tolerance;
/// otherwise throws NonZeroXMean with the offending slice index.
Field1D antideriv_x(const Field1D& f, double mean_tol = -1.0);
Field2D antideriv_x(const Field2D& f, double mean_tol = -1.0);

/// Largest retained mode index of the two-thirds rule: modes with |j| > n/3
/// are zeroed, i.e. |j| <= floor(n/3) survive.
int dealias_cutoff(int n);

/// Two-thirds-rule truncation, per axis for 2D spectra.
Spectrum1D dealias(Spectrum1D s);
Spectrum2D dealias(Spectrum2D s);

/// x-mean of a 1D field / of one y-slice of a 2D field.
double x_mean(const Field1D& f);
double x_mean_slice(const Field2D& f, int y_index);
/// All per-slice x-means of a 2D field, one entry per row.
std::vector<double> x_means(const Field2D& f);

}  // namespace bbmlab
