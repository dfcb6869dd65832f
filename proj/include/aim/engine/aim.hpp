#pragma once

#include "aim/exact/ratfunc.hpp"
#include "aim/exact/real_roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aim {

/// y'' = lambda0(x) y' + s0(x) y, with lambda0 not identically zero.
struct AimProblem {
    AimProblem(RatFunc lambda0, RatFunc s0);

    RatFunc lambda0;
    RatFunc s0;
};

/// One rung: y^(n+2) = lambda_n y' + s_n y, plus the previous rung.
struct AimState {
    int n = 0;
    RatFunc lambda;
    RatFunc s;
    RatFunc lambda_prev;
    RatFunc s_prev;

    /// n = 0 with the formal predecessors lambda_{-1} = 1, s_{-1} = 0.
    static AimState initial(const AimProblem& problem);
};

/// lambda_{n+1} = lambda_n' + s_n + lambda0 lambda_n, s_{n+1} = s_n' + s0 lambda_n.
AimState aim_step(const AimState& state, const AimProblem& problem);

/// States 0..k.
std::vector<AimState> aim_ladder(const AimProblem& problem, int k);

/// delta_n = lambda_n s_{n-1} - lambda_{n-1} s_n. Requires state.n >= 1.
RatFunc delta(const AimState& state);

enum class RootStatus { stabilized, transient, rejected };

struct CandidateRoot {
    RealRoot root;
    RootStatus status = RootStatus::transient;
    bool dual_point_ok = false;
    bool residual_ok = false;
    /// Relative Riccati residual of alpha = s_k / lambda_k at the check point.
    double residual = 0.0;
    std::string reason;
};

struct QuantizationOptions {
    /// Second evaluation point; defaults to x0 / 2.
    std::optional<Rational> x1;
    Rational width = kDefaultRootWidth;
    /// Relative tolerance when matching irrational roots between root sets.
    double match_tol = 1e-9;
    /// Bound on the relative Riccati residual.
    double residual_tol = 1e-8;
};

struct QuantizationResult {
    int k = 0;
    /// Evaluation point actually used (differs from the request after a retry).
    Rational x0;
    Rational x1;
    /// Primitive integer form of delta_k(x0; w).
    UniPolyW poly;
    std::vector<CandidateRoot> stabilized;
    std::vector<CandidateRoot> transient;
    std::vector<CandidateRoot> rejected;

    /// Approximate values of the stabilized roots, increasing.
    [[nodiscard]] std::vector<double> stabilized_values() const;
    /// True when r is an exact stabilized root.
    [[nodiscard]] bool has_stabilized(const Rational& r) const;
};

/// Runs k exact steps, roots delta_k(x0; w) and classifies every root.
///
/// A root is rejected when it is not a root of delta_k(x1; w) or when the
/// Riccati residual of s_k/lambda_k at a third point exceeds the tolerance.
/// Otherwise it is stabilized if it is also a root of delta_{k-1}(x0; w) and
/// transient if not. If delta_k(x0; w) vanishes identically the run is
/// repeated with x0 := x1 before ZeroPolynomial is thrown.
QuantizationResult quantization(const AimProblem& problem, const Rational& x0, int k,
                                const QuantizationOptions& options = {});

/// Same as above on a precomputed ladder holding at least k + 2 states.
QuantizationResult quantization(const std::vector<AimState>& ladder, const Rational& x0, int k,
                                const QuantizationOptions& options = {});

}  // namespace aim
