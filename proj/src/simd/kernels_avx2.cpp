#include "aim/simd/kernels.hpp"

#include <immintrin.h>

#include <array>

namespace aim::simd::detail {

void axpy_avx2(double a, std::span<const double> x, std::span<double> y) {
    const std::size_t n = y.size();
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x.data() + i);
        const __m256d vy = _mm256_loadu_pd(y.data() + i);
        _mm256_storeu_pd(y.data() + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
    }
    axpy_scalar(a, x.subspan(i), y.subspan(i));
}

void sturm_counts_avx2(std::span<const double> diag, std::span<const double> offdiag_sq,
                       std::span<const double> shifts, std::span<int> counts) {
    const std::size_t n = diag.size();
    const __m256d zero = _mm256_setzero_pd();
    const __m256d floor = _mm256_set1_pd(-kSturmPivotFloor);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t s = 0;
    // Four shifts advance through the recurrence together, one per lane.
    for (; s + 4 <= shifts.size(); s += 4) {
        const __m256d shift = _mm256_loadu_pd(shifts.data() + s);
        __m256d q = one;
        __m256d count = zero;
        for (std::size_t i = 0; i < n; ++i) {
            const __m256d coupling = i == 0 ? zero : _mm256_div_pd(_mm256_set1_pd(offdiag_sq[i - 1]), q);
            q = _mm256_sub_pd(_mm256_sub_pd(_mm256_set1_pd(diag[i]), shift), coupling);
            q = _mm256_blendv_pd(q, floor, _mm256_cmp_pd(q, zero, _CMP_EQ_OQ));
            count = _mm256_add_pd(count, _mm256_and_pd(_mm256_cmp_pd(q, zero, _CMP_LT_OQ), one));
        }
        std::array<double, 4> c{};
        _mm256_storeu_pd(c.data(), count);
        for (int l = 0; l < 4; ++l) counts[s + static_cast<std::size_t>(l)] = static_cast<int>(c[static_cast<std::size_t>(l)]);
    }
    sturm_counts_scalar(diag, offdiag_sq, shifts.subspan(s), counts.subspan(s));
}

double stencil_residual_max_avx2(std::span<const double> y, std::span<const double> v,
                                 std::span<const double> w, double energy, double h) {
    const std::size_t n = y.size();
    if (n < 5) return 0.0;
    const double inv = 1.0 / (12.0 * h * h);
    const __m256d vinv = _mm256_set1_pd(inv);
    const __m256d v16 = _mm256_set1_pd(16.0);
    const __m256d v30 = _mm256_set1_pd(30.0);
    const __m256d ve = _mm256_set1_pd(energy);
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d best = _mm256_setzero_pd();
    std::size_t i = 2;
    for (; i + 4 + 2 <= n; i += 4) {
        const __m256d ym2 = _mm256_loadu_pd(y.data() + i - 2);
        const __m256d ym1 = _mm256_loadu_pd(y.data() + i - 1);
        const __m256d y0 = _mm256_loadu_pd(y.data() + i);
        const __m256d yp1 = _mm256_loadu_pd(y.data() + i + 1);
        const __m256d yp2 = _mm256_loadu_pd(y.data() + i + 2);
        const __m256d d2 = _mm256_mul_pd(
            _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(v16, _mm256_add_pd(ym1, yp1)), _mm256_add_pd(ym2, yp2)),
                          _mm256_mul_pd(v30, y0)),
            vinv);
        const __m256d pot = _mm256_mul_pd(_mm256_loadu_pd(v.data() + i), y0);
        const __m256d wgt = _mm256_mul_pd(_mm256_mul_pd(ve, _mm256_loadu_pd(w.data() + i)), y0);
        const __m256d r = _mm256_andnot_pd(sign_mask, _mm256_sub_pd(_mm256_sub_pd(pot, wgt), d2));
        best = _mm256_max_pd(best, r);
    }
    std::array<double, 4> b{};
    _mm256_storeu_pd(b.data(), best);
    double out = 0.0;
    for (double x : b) out = x > out ? x : out;
    if (i < n - 2) {
        // Tail: rerun the scalar kernel on a window whose interior is [i, n-2).
        const std::size_t lo = i - 2;
        const double tail = stencil_residual_max_scalar(y.subspan(lo), v.subspan(lo), w.subspan(lo), energy, h);
        out = tail > out ? tail : out;
    }
    return out;
}

}  // namespace aim::simd::detail
