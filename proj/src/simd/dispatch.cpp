#include "aim/errors.hpp"
#include "aim/simd/kernels.hpp"

#include <atomic>

namespace aim::simd {

namespace {

bool detect_avx2() {
#if defined(AIM_HAVE_AVX2_KERNELS)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{detect_avx2() ? Backend::avx2 : Backend::scalar};
    return slot;
}

}  // namespace

bool avx2_available() {
    static const bool available = detect_avx2();
    return available;
}

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
    if (backend == Backend::avx2 && !avx2_available()) throw Error("AVX2 kernels are not available on this CPU");
    backend_slot().store(backend, std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) { return backend == Backend::avx2 ? "avx2" : "scalar"; }

#if defined(AIM_HAVE_AVX2_KERNELS)
#define AIM_DISPATCH(fn, ...) \
    (active_backend() == Backend::avx2 ? detail::fn##_avx2(__VA_ARGS__) : detail::fn##_scalar(__VA_ARGS__))
#else
#define AIM_DISPATCH(fn, ...) detail::fn##_scalar(__VA_ARGS__)
#endif

void axpy(double a, std::span<const double> x, std::span<double> y) { AIM_DISPATCH(axpy, a, x, y); }

void sturm_counts(std::span<const double> diag, std::span<const double> offdiag_sq,
                  std::span<const double> shifts, std::span<int> counts) {
    AIM_DISPATCH(sturm_counts, diag, offdiag_sq, shifts, counts);
}

double stencil_residual_max(std::span<const double> y, std::span<const double> v,
                            std::span<const double> w, double energy, double h) {
    return AIM_DISPATCH(stencil_residual_max, y, v, w, energy, h);
}

#if !defined(AIM_HAVE_AVX2_KERNELS)
namespace detail {
void axpy_avx2(double a, std::span<const double> x, std::span<double> y) { axpy_scalar(a, x, y); }
void sturm_counts_avx2(std::span<const double> d, std::span<const double> e, std::span<const double> s,
                       std::span<int> c) {
    sturm_counts_scalar(d, e, s, c);
}
double stencil_residual_max_avx2(std::span<const double> y, std::span<const double> v, std::span<const double> w,
                                 double energy, double h) {
    return stencil_residual_max_scalar(y, v, w, energy, h);
}
}  // namespace detail
#endif

}  // namespace aim::simd
