#pragma once

#include "aim/catalog/params.hpp"
#include "aim/engine/solution.hpp"
#include "aim/exact/ratfunc.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace aim::oracle {

using Field = std::function<double(double)>;

/// -y'' + V y = E W y on [x_lo, x_hi] with Dirichlet ends, discretized with M
/// subintervals (M - 1 interior nodes). An empty W means W = 1.
struct GridProblem {
    double x_lo = 0.0;
    double x_hi = 1.0;
    int M = 1000;
    Field V;
    Field W;
};

struct FdResult {
    /// Lowest eigenvalues on M subintervals.
    std::vector<double> raw;
    /// The same on 2M subintervals.
    std::vector<double> fine;
    /// (4 fine - raw) / 3
    std::vector<double> extrapolated;
};

/// Lowest `count` eigenvalues of the symmetric three-point discretization,
/// by multi-shift Sturm bisection. Requires M >= 16 and count <= M/4.
/// Throws WeightNotPositive when W <= 0 at an interior node and NonConvergence
/// when the bisection cannot bracket the requested eigenvalues.
FdResult fd_eigen(const GridProblem& g, int count);

/// Eigenvalues of one grid only.
std::vector<double> fd_eigen_single(const GridProblem& g, int count);

/// y'' - lambda0 y' - s0 y for the general class in x, with y the closed-form
/// eigenfunction n and w its eigenvalue (or `w_override`). Identically zero
/// when both closed forms are right. Requires n <= 8.
RatFunc residual_exact(const catalog::GeneralClassParams& p, int n, std::optional<Rational> w_override = {});

/// The same for the Bender class with the confluent eigenfunction and
/// w = E - a(2m + N + 3).
RatFunc residual_exact_bender(const catalog::BenderParams& p, int n);

/// max over interior points of |-y'' + V y - E W y| / max|y| with a 5-point
/// stencil; y must be uniformly sampled with at least 5 points. Zero for y = 0.
double residual_numeric(const SampledFunction& y, double energy, const Field& V, const Field& W = {});

/// Grid for the family's Schrodinger form, sized for the lowest `count`
/// states. Singular endpoints are moved inward by 10^-6 min(1, length).
/// Energies are in the family's physical units. The general class has no
/// Schrodinger form and is rejected with InvalidSpec.
GridProblem family_grid(const catalog::ProblemSpec& spec, int count, int M);

/// -y'' + (a^2 x^6 - g x^2 + m(m+1)/x^2) y = E y on the half line.
GridProblem sextic_grid(const Rational& a, const Rational& m, const Rational& g, int M);

}  // namespace aim::oracle
