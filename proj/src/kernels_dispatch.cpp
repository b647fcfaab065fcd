#include <atomic>

#include "bbmlab/errors.hpp"
#include "bbmlab/kernels.hpp"

namespace bbmlab::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const Ops* detect() {
    if (const Ops* t = avx2_ops(); t != nullptr && cpu_has_avx2()) return t;
    return &scalar_ops;
}

std::atomic<const Ops*> active{nullptr};

}  // namespace

bool avx2_available() { return avx2_ops() != nullptr && cpu_has_avx2(); }

const Ops& ops() {
    const Ops* t = active.load(std::memory_order_acquire);
    if (t == nullptr) {
        t = detect();
        active.store(t, std::memory_order_release);
    }
    return *t;
}

void set_backend(Backend b) {
    switch (b) {
        case Backend::Auto:
            active.store(detect(), std::memory_order_release);
            break;
        case Backend::Scalar:
            active.store(&scalar_ops, std::memory_order_release);
            break;
        case Backend::Avx2:
            if (!avx2_available()) throw Error("AVX2 kernels unavailable on this host");
            active.store(avx2_ops(), std::memory_order_release);
            break;
    }
}

const char* backend_name() { return &ops() == &scalar_ops ? "scalar" : "avx2"; }

}  // namespace bbmlab::kernels
