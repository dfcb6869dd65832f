#pragma once

#include "aim/engine/aim.hpp"

#include <vector>

namespace aim {

struct SampledFunction {
    std::vector<double> x;
    std::vector<double> y;
};

/// Tabulates y(x) = exp(-int_{x_lo}^{x} alpha) with alpha = s_k / lambda_k at
/// w = w_star on `samples` equally spaced points of [x_lo, x_hi]; y(x_lo) = 1.
///
/// Throws PoleOnPath when alpha, as a reduced rational function of x at
/// w_star, has a pole on the interval.
SampledFunction solution_generator_numeric(const AimState& state, double w_star, double x_lo, double x_hi,
                                           int samples);

}  // namespace aim
