// AVX2 variants of the kernel table. This translation unit is compiled with
// -mavx2 (and only included in the build on x86-64); dispatch happens at
// runtime in kernels_dispatch.cpp.
//
// Pointwise kernels use the same per-element operation order as the scalar
// reference and no FMA, so they are bit-identical to it. Reductions
// accumulate in four lanes and therefore reassociate; tests compare them to
// the scalar reference with a rounding tolerance.

#include "bbmlab/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <cmath>

namespace bbmlab::kernels {
namespace {

void mul_avx2(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i,
                         _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_avx2(double a, const double* x, const double* y, double* out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ax = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(y + i), ax));
    }
    for (; i < n; ++i) out[i] = y[i] + a * x[i];
}

void rk4_combine_avx2(const double* u, const double* k1, const double* k2,
                      const double* k3, const double* k4, double h, double* out,
                      std::size_t n) {
    const double h6 = h / 6.0;
    const __m256d vh6 = _mm256_set1_pd(h6);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_add_pd(_mm256_loadu_pd(k1 + i),
                                    _mm256_mul_pd(two, _mm256_loadu_pd(k2 + i)));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(two, _mm256_loadu_pd(k3 + i)));
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(k4 + i));
        _mm256_storeu_pd(out + i,
                         _mm256_add_pd(_mm256_loadu_pd(u + i), _mm256_mul_pd(vh6, acc)));
    }
    for (; i < n; ++i) {
        out[i] = u[i] + h6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
}

void cmul_avx2(const std::complex<double>* m, std::complex<double>* c, std::size_t n) {
    const double* mp = reinterpret_cast<const double*>(m);
    double* cp = reinterpret_cast<double*>(c);
    std::size_t i = 0;
    // Two complex numbers per 256-bit vector: [re0 im0 re1 im1].
    for (; i + 2 <= n; i += 2) {
        const __m256d vc = _mm256_loadu_pd(cp + 2 * i);
        const __m256d vm = _mm256_loadu_pd(mp + 2 * i);
        const __m256d mr = _mm256_movedup_pd(vm);         // [mr0 mr0 mr1 mr1]
        const __m256d mi = _mm256_permute_pd(vm, 0xF);    // [mi0 mi0 mi1 mi1]
        const __m256d cswap = _mm256_permute_pd(vc, 0x5); // [im0 re0 im1 re1]
        // even lanes: re*mr - im*mi, odd lanes: im*mr + re*mi
        const __m256d res =
            _mm256_addsub_pd(_mm256_mul_pd(vc, mr), _mm256_mul_pd(cswap, mi));
        _mm256_storeu_pd(cp + 2 * i, res);
    }
    for (; i < n; ++i) {
        const double cr = cp[2 * i], ci = cp[2 * i + 1];
        const double mr = mp[2 * i], mi = mp[2 * i + 1];
        cp[2 * i] = cr * mr - ci * mi;
        cp[2 * i + 1] = cr * mi + ci * mr;
    }
}

double hsum(__m256d v) {
    // Fixed lane order keeps the result deterministic for a given input.
    alignas(32) double lane[4];
    _mm256_store_pd(lane, v);
    return ((lane[0] + lane[1]) + lane[2]) + lane[3];
}

double sum_avx2(const double* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += v[i];
    return s;
}

double sum_sq_avx2(const double* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(v + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(x, x));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += v[i] * v[i];
    return s;
}

double max_abs_avx2(const double* v, std::size_t n) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(v + i)));
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double m = std::max(std::max(lane[0], lane[1]), std::max(lane[2], lane[3]));
    for (; i < n; ++i) {
        const double a = std::fabs(v[i]);
        if (a > m) m = a;
    }
    return m;
}

double weighted_abs2_avx2(const std::complex<double>* c, const double* w, std::size_t n) {
    const double* cp = reinterpret_cast<const double*>(c);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d c01 = _mm256_loadu_pd(cp + 2 * i);      // [re0 im0 re1 im1]
        const __m256d c23 = _mm256_loadu_pd(cp + 2 * i + 4);  // [re2 im2 re3 im3]
        // [|c0|^2 |c2|^2 |c1|^2 |c3|^2]
        const __m256d mag =
            _mm256_hadd_pd(_mm256_mul_pd(c01, c01), _mm256_mul_pd(c23, c23));
        const __m256d wv = _mm256_loadu_pd(w + i);
        const __m256d wperm = _mm256_permute4x64_pd(wv, _MM_SHUFFLE(3, 1, 2, 0));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(wperm, mag));
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        s += w[i] * (cp[2 * i] * cp[2 * i] + cp[2 * i + 1] * cp[2 * i + 1]);
    }
    return s;
}

const Ops avx2_table = {
    mul_avx2,    axpy_avx2,   rk4_combine_avx2, cmul_avx2,
    sum_avx2,    sum_sq_avx2, max_abs_avx2,     weighted_abs2_avx2,
};

}  // namespace

const Ops* avx2_ops() { return &avx2_table; }

}  // namespace bbmlab::kernels

#else

namespace bbmlab::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace bbmlab::kernels

#endif  // __AVX2__
