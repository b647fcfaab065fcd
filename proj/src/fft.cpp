#include "bbmlab/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <utility>

// Plans are created once per size with FFTW_ESTIMATE (deterministic planning;
// FFTW_MEASURE would make plan choice timing-dependent) and own their aligned
// buffers. Execution copies through those buffers, which keeps the new-array
// alignment requirements of fftw_execute_* out of the picture entirely; at
// the array sizes used here the copies are noise next to the transform.

namespace bbmlab::fft {
namespace {

struct Plan1D {
    explicit Plan1D(int n) : n(n) {
        real = fftw_alloc_real(static_cast<std::size_t>(n));
        cplx = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
        fwd = fftw_plan_dft_r2c_1d(n, real, cplx, FFTW_ESTIMATE);
        inv = fftw_plan_dft_c2r_1d(n, cplx, real, FFTW_ESTIMATE);
    }
    ~Plan1D() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(inv);
        fftw_free(real);
        fftw_free(cplx);
    }
    Plan1D(const Plan1D&) = delete;
    Plan1D& operator=(const Plan1D&) = delete;

    int n;
    double* real;
    fftw_complex* cplx;
    fftw_plan fwd;
    fftw_plan inv;
    std::mutex mtx;
};

struct Plan2D {
    Plan2D(int ny, int nx) : ny(ny), nx(nx) {
        const std::size_t nr = static_cast<std::size_t>(ny) * nx;
        const std::size_t nc = static_cast<std::size_t>(ny) * (nx / 2 + 1);
        real = fftw_alloc_real(nr);
        cplx = fftw_alloc_complex(nc);
        fwd = fftw_plan_dft_r2c_2d(ny, nx, real, cplx, FFTW_ESTIMATE);
        inv = fftw_plan_dft_c2r_2d(ny, nx, cplx, real, FFTW_ESTIMATE);
    }
    ~Plan2D() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(inv);
        fftw_free(real);
        fftw_free(cplx);
    }
    Plan2D(const Plan2D&) = delete;
    Plan2D& operator=(const Plan2D&) = delete;

    int ny, nx;
    double* real;
    fftw_complex* cplx;
    fftw_plan fwd;
    fftw_plan inv;
    std::mutex mtx;
};

std::mutex cache_mtx;

Plan1D& plan_1d(int n) {
    static std::map<int, Plan1D> cache;
    std::lock_guard<std::mutex> lock(cache_mtx);
    return cache.try_emplace(n, n).first->second;
}

Plan2D& plan_2d(int ny, int nx) {
    static std::map<std::pair<int, int>, Plan2D> cache;
    std::lock_guard<std::mutex> lock(cache_mtx);
    return cache.try_emplace(std::make_pair(ny, nx), ny, nx).first->second;
}

}  // namespace

void forward_1d(int n, const double* in, std::complex<double>* out) {
    Plan1D& p = plan_1d(n);
    std::lock_guard<std::mutex> lock(p.mtx);
    std::memcpy(p.real, in, sizeof(double) * static_cast<std::size_t>(n));
    fftw_execute(p.fwd);
    const double scale = 1.0 / n;
    const int nh = n / 2 + 1;
    for (int j = 0; j < nh; ++j) {
        out[j] = std::complex<double>(p.cplx[j][0] * scale, p.cplx[j][1] * scale);
    }
}

void inverse_1d(int n, const std::complex<double>* in, double* out) {
    Plan1D& p = plan_1d(n);
    std::lock_guard<std::mutex> lock(p.mtx);
    std::memcpy(p.cplx, in, sizeof(fftw_complex) * static_cast<std::size_t>(n / 2 + 1));
    fftw_execute(p.inv);
    std::memcpy(out, p.real, sizeof(double) * static_cast<std::size_t>(n));
}

void forward_2d(int ny, int nx, const double* in, std::complex<double>* out) {
    Plan2D& p = plan_2d(ny, nx);
    std::lock_guard<std::mutex> lock(p.mtx);
    const std::size_t nr = static_cast<std::size_t>(ny) * nx;
    const std::size_t nc = static_cast<std::size_t>(ny) * (nx / 2 + 1);
    std::memcpy(p.real, in, sizeof(double) * nr);
    fftw_execute(p.fwd);
    const double scale = 1.0 / (static_cast<double>(nx) * ny);
    for (std::size_t j = 0; j < nc; ++j) {
        out[j] = std::complex<double>(p.cplx[j][0] * scale, p.cplx[j][1] * scale);
    }
}

void inverse_2d(int ny, int nx, const std::complex<double>* in, double* out) {
    Plan2D& p = plan_2d(ny, nx);
    std::lock_guard<std::mutex> lock(p.mtx);
    const std::size_t nr = static_cast<std::size_t>(ny) * nx;
    const std::size_t nc = static_cast<std::size_t>(ny) * (nx / 2 + 1);
    std::memcpy(p.cplx, in, sizeof(fftw_complex) * nc);
    fftw_execute(p.inv);
    std::memcpy(out, p.real, sizeof(double) * nr);
}

}  // namespace bbmlab::fft
