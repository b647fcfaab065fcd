#pragma once

#include <complex>
#include <cstddef>

namespace bbmlab::fft {

// Thin process-wide cache of FFTW plans, one pair per transform size. The
// transforms are normalized so that a forward transform of n samples yields
// DFT coefficients divided by n: coefficient 0 is the mean of the data and a
// unit cosine produces a pair of 0.5 coefficients.
//
// Real data maps to the half spectrum (n/2 + 1 coefficients along the
// transformed axis); conjugate symmetry of the omitted half is implied, which
// is how real-valuedness of inverse transforms is enforced by construction.

/// out must hold n/2 + 1 complex values.
void forward_1d(int n, const double* in, std::complex<double>* out);
/// in holds n/2 + 1 complex values; out must hold n reals. in is not modified.
void inverse_1d(int n, const std::complex<double>* in, double* out);

/// Row-major ny x nx real input; output is ny x (nx/2 + 1), x halved.
void forward_2d(int ny, int nx, const double* in, std::complex<double>* out);
void inverse_2d(int ny, int nx, const std::complex<double>* in, double* out);

}  // namespace bbmlab::fft
