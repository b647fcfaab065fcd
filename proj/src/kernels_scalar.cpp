#include <cmath>

#include "bbmlab/kernels.hpp"

// Reference kernels. Kept deliberately plain: one IEEE operation per element
// in a fixed order, so vectorized variants can be checked against them
// bit-for-bit (pointwise) or to rounding (reductions).

namespace bbmlab::kernels {
namespace {

void mul_scalar(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_scalar(double a, const double* x, const double* y, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = y[i] + a * x[i];
}

void rk4_combine_scalar(const double* u, const double* k1, const double* k2,
                        const double* k3, const double* k4, double h, double* out,
                        std::size_t n) {
    const double h6 = h / 6.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = u[i] + h6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
}

void cmul_scalar(const std::complex<double>* m, std::complex<double>* c, std::size_t n) {
    const double* mp = reinterpret_cast<const double*>(m);
    double* cp = reinterpret_cast<double*>(c);
    for (std::size_t i = 0; i < n; ++i) {
        const double cr = cp[2 * i], ci = cp[2 * i + 1];
        const double mr = mp[2 * i], mi = mp[2 * i + 1];
        cp[2 * i] = cr * mr - ci * mi;
        cp[2 * i + 1] = cr * mi + ci * mr;
    }
}

double sum_scalar(const double* v, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
}

double sum_sq_scalar(const double* v, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i] * v[i];
    return s;
}

double max_abs_scalar(const double* v, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::fabs(v[i]);
        if (a > m) m = a;
    }
    return m;
}

double weighted_abs2_scalar(const std::complex<double>* c, const double* w, std::size_t n) {
    const double* cp = reinterpret_cast<const double*>(c);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += w[i] * (cp[2 * i] * cp[2 * i] + cp[2 * i + 1] * cp[2 * i + 1]);
    }
    return s;
}

}  // namespace

const Ops scalar_ops = {
    mul_scalar,    axpy_scalar,   rk4_combine_scalar, cmul_scalar,
    sum_scalar,    sum_sq_scalar, max_abs_scalar,     weighted_abs2_scalar,
};

}  // namespace bbmlab::kernels
