#include "aim/simd/kernels.hpp"

#include <cmath>

namespace aim::simd::detail {

void axpy_scalar(double a, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = y[i] + a * x[i];
}

void sturm_counts_scalar(std::span<const double> diag, std::span<const double> offdiag_sq,
                         std::span<const double> shifts, std::span<int> counts) {
    const std::size_t n = diag.size();
    for (std::size_t s = 0; s < shifts.size(); ++s) {
        const double shift = shifts[s];
        int count = 0;
        double q = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double coupling = i == 0 ? 0.0 : offdiag_sq[i - 1] / q;
            q = (diag[i] - shift) - coupling;
            if (q == 0.0) q = -kSturmPivotFloor;
            count += q < 0.0 ? 1 : 0;
        }
        counts[s] = count;
    }
}

double stencil_residual_max_scalar(std::span<const double> y, std::span<const double> v,
                                   std::span<const double> w, double energy, double h) {
    const std::size_t n = y.size();
    if (n < 5) return 0.0;
    const double inv = 1.0 / (12.0 * h * h);
    double best = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double d2 = ((16.0 * (y[i - 1] + y[i + 1]) - (y[i - 2] + y[i + 2])) - 30.0 * y[i]) * inv;
        const double r = std::fabs((v[i] * y[i] - (energy * w[i]) * y[i]) - d2);
        if (r > best) best = r;
    }
    return best;
}

}  // namespace aim::simd::detail
