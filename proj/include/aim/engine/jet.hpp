#pragma once

#include "aim/exact/ratfunc.hpp"
#include "aim/spectrum.hpp"

#include <vector>

namespace aim {

/// Polynomial in the eigenvalue E with floating coefficients; index = power.
using EPoly = std::vector<double>;

EPoly epoly_add(const EPoly& a, const EPoly& b);
EPoly epoly_sub(const EPoly& a, const EPoly& b);
EPoly epoly_mul(const EPoly& a, const EPoly& b);
double epoly_eval(const EPoly& p, double e);

/// Truncated series sum_{j<=K} c_j(E) (x - x0)^j.
class TaylorJet {
public:
    TaylorJet(double center, std::vector<EPoly> coeffs);

    /// Series of f(x, E) about x0, computed exactly and then rounded.
    /// Throws PoleAtEvaluationPoint if the denominator vanishes at x0.
    static TaylorJet from_ratfunc(const RatFunc& f, const Rational& x0, int order);
    static TaylorJet constant(double center, int order, EPoly value);

    [[nodiscard]] double center() const { return center_; }
    [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<EPoly>& coeffs() const { return coeffs_; }
    [[nodiscard]] const EPoly& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }

    /// Coefficient j of the result is (j+1) c_{j+1}; the order drops by one.
    [[nodiscard]] TaylorJet derivative() const;

    friend TaylorJet operator+(const TaylorJet& f, const TaylorJet& g);
    friend TaylorJet operator-(const TaylorJet& f, const TaylorJet& g);
    /// Cauchy product truncated to the smaller order.
    friend TaylorJet operator*(const TaylorJet& f, const TaylorJet& g);

private:
    double center_;
    std::vector<EPoly> coeffs_;
};

struct JetOptions {
    /// Stop as soon as this many roots have converged (0: run all iterations).
    int wanted = 0;
};

/// Iterates the AIM recursion on jets and tracks the real roots in E of the
/// constant coefficient of delta_k. Roots whose value changes by less than
/// tol * max(1, |E|) between consecutive iterations are converged; they are
/// returned smallest first and numbered from 0 in that order.
///
/// Requires matching centers and order >= k_max + 2. Throws NoConvergence when
/// no root converges.
Spectrum jet_quantization(const TaylorJet& lambda0, const TaylorJet& s0, int k_max, double tol,
                          const JetOptions& options = {});

}  // namespace aim
