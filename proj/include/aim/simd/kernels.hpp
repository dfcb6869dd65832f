#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
//
// Both variants perform the same IEEE operations in the same order per
// element (the build disables FP contraction), so their results are
// bit-identical; the equivalence tests rely on this.

#include <span>
#include <string_view>

namespace aim::simd {

enum class Backend { scalar, avx2 };

[[nodiscard]] bool avx2_available();
[[nodiscard]] Backend active_backend();
/// Throws aim::Error if the backend is not available on this CPU.
void set_backend(Backend backend);
[[nodiscard]] std::string_view backend_name(Backend backend);

/// Restores the previous backend on scope exit.
class ScopedBackend {
public:
    explicit ScopedBackend(Backend backend) : saved_(active_backend()) { set_backend(backend); }
    ~ScopedBackend() { set_backend(saved_); }
    ScopedBackend(const ScopedBackend&) = delete;
    ScopedBackend& operator=(const ScopedBackend&) = delete;

private:
    Backend saved_;
};

/// Pivot substituted for an exactly zero pivot in the Sturm recurrence.
inline constexpr double kSturmPivotFloor = 1e-280;

/// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);

/// For each shift s, the number of eigenvalues below s of the symmetric
/// tridiagonal matrix with diagonal `diag` and squared off-diagonal `offdiag_sq`
/// (size diag.size() - 1), from the signs of the LDL^T pivots of T - s I.
void sturm_counts(std::span<const double> diag, std::span<const double> offdiag_sq,
                  std::span<const double> shifts, std::span<int> counts);

/// max_i |-y''_i + v_i y_i - energy w_i y_i| over 2 <= i < n - 2, with y'' from
/// the 5-point central stencil on spacing h. Returns 0 when n < 5.
double stencil_residual_max(std::span<const double> y, std::span<const double> v,
                            std::span<const double> w, double energy, double h);

namespace detail {

void axpy_scalar(double a, std::span<const double> x, std::span<double> y);
void sturm_counts_scalar(std::span<const double> diag, std::span<const double> offdiag_sq,
                         std::span<const double> shifts, std::span<int> counts);
double stencil_residual_max_scalar(std::span<const double> y, std::span<const double> v,
                                   std::span<const double> w, double energy, double h);

void axpy_avx2(double a, std::span<const double> x, std::span<double> y);
void sturm_counts_avx2(std::span<const double> diag, std::span<const double> offdiag_sq,
                       std::span<const double> shifts, std::span<int> counts);
double stencil_residual_max_avx2(std::span<const double> y, std::span<const double> v,
                                 std::span<const double> w, double energy, double h);

}  // namespace detail

}  // namespace aim::simd
