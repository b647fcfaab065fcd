#pragma once

#include <complex>
#include <cstddef>

namespace bbmlab::kernels {

/// Hot inner loops of the spectral pipeline. Every entry has a scalar
/// reference implementation and, on capable x86-64 hosts, an AVX2 variant
/// selected at runtime. The two are equivalence-tested: pointwise kernels
/// bit-identically (no FMA contraction, same per-element operation order),
/// reductions to a tight relative tolerance (lane accumulation reassociates).
struct Ops {
    /// out[i] = a[i] * b[i]
    void (*mul)(const double* a, const double* b, double* out, std::size_t n);
    /// out[i] = y[i] + a * x[i]
    void (*axpy)(double a, const double* x, const double* y, double* out, std::size_t n);
    /// out[i] = u[i] + (h/6) * (k1[i] + 2 k2[i] + 2 k3[i] + k4[i])
    void (*rk4_combine)(const double* u, const double* k1, const double* k2,
                        const double* k3, const double* k4, double h, double* out,
                        std::size_t n);
    /// c[i] *= m[i] (complex), computed as (re*mr - im*mi, re*mi + im*mr)
    void (*cmul)(const std::complex<double>* m, std::complex<double>* c, std::size_t n);
    /// sum_i v[i]
    double (*sum)(const double* v, std::size_t n);
    /// sum_i v[i]^2
    double (*sum_sq)(const double* v, std::size_t n);
    /// max_i |v[i]| (0 for empty input)
    double (*max_abs)(const double* v, std::size_t n);
    /// sum_i w[i] * |c[i]|^2
    double (*weighted_abs2)(const std::complex<double>* c, const double* w, std::size_t n);
};

enum class Backend { Auto, Scalar, Avx2 };

/// Currently active kernel table. Resolved once on first use (CPU detection)
/// unless overridden by set_backend.
const Ops& ops();

/// Force a backend; Backend::Auto restores runtime detection. Throws
/// bbmlab::Error if the requested backend is unavailable on this host.
void set_backend(Backend b);

/// Name of the table ops() currently returns ("scalar" or "avx2").
const char* backend_name();

/// True if the AVX2 table exists in this build and the CPU supports it.
bool avx2_available();

extern const Ops scalar_ops;
/// Null when the AVX2 translation unit is not compiled in.
const Ops* avx2_ops();

}  // namespace bbmlab::kernels
