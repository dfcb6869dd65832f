#include "aim/engine/aim.hpp"

#include "aim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace aim {

AimProblem::AimProblem(RatFunc l0, RatFunc s) : lambda0(std::move(l0)), s0(std::move(s)) {
    if (lambda0.is_zero()) throw InvalidProblem("lambda0 must not be identically zero");
}

AimState AimState::initial(const AimProblem& problem) {
    return AimState{0, problem.lambda0, problem.s0, RatFunc(Rational(1)), RatFunc(Rational(0))};
}

AimState aim_step(const AimState& state, const AimProblem& problem) {
    AimState next;
    next.n = state.n + 1;
    next.lambda = state.lambda.diff_x() + state.s + problem.lambda0 * state.lambda;
    next.s = state.s.diff_x() + problem.s0 * state.lambda;
    next.lambda_prev = state.lambda;
    next.s_prev = state.s;
    if (!next.lambda.den().is_w_free() || !next.s.den().is_w_free())
        throw Error("internal: w appeared in a denominator at step " + std::to_string(next.n));
    return next;
}

std::vector<AimState> aim_ladder(const AimProblem& problem, int k) {
    std::vector<AimState> ladder{AimState::initial(problem)};
    for (int i = 0; i < k; ++i) ladder.push_back(aim_step(ladder.back(), problem));
    return ladder;
}

RatFunc delta(const AimState& state) {
    if (state.n < 1) throw Error("delta is defined for n >= 1");
    return state.lambda * state.s_prev - state.lambda_prev * state.s;
}

std::vector<double> QuantizationResult::stabilized_values() const {
    std::vector<double> out;
    for (const auto& c : stabilized) out.push_back(c.root.approx());
    return out;
}

bool QuantizationResult::has_stabilized(const Rational& r) const {
    return std::any_of(stabilized.begin(), stabilized.end(),
                       [&](const CandidateRoot& c) { return c.root.exact && c.root.value() == r; });
}

namespace {

UniPolyW delta_at(const AimState& state, const Rational& x) {
    const UniPolyW p = delta(state).eval_x(x);
    return p.is_zero() ? p : p.primitive();
}

bool close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max(1.0, std::fabs(a));
}

// Whether the candidate is a root of q, whose roots are `q_roots`.
bool is_root_of(const RealRoot& r, const UniPolyW& q, const std::vector<RealRoot>& q_roots, double tol) {
    if (r.exact) return q(r.value()).is_zero();
    return std::any_of(q_roots.begin(), q_roots.end(),
                       [&](const RealRoot& s) { return close(r.approx(), s.approx(), tol); });
}

std::vector<RealRoot> roots_or_empty(const UniPolyW& p, const Rational& width) {
    if (p.is_zero() || p.degree() < 1) return {};
    return real_roots(p, width);
}

// |lambda_{k+1} s_k - lambda_k s_{k+1}| / (|lambda_{k+1} s_k| + |lambda_k s_{k+1}|) at (x, w).
double riccati_residual(const AimState& k_state, const AimState& next, const Rational& x, const RealRoot& r) {
    double t1, t2;
    if (r.exact) {
        const Rational w = r.value();
        const Rational a = next.lambda.eval(x, w) * k_state.s.eval(x, w);
        const Rational b = k_state.lambda.eval(x, w) * next.s.eval(x, w);
        if (a == b) return 0.0;
        t1 = a.to_double();
        t2 = b.to_double();
    } else {
        const double xd = x.to_double(), w = r.approx();
        t1 = next.lambda.eval(xd, w) * k_state.s.eval(xd, w);
        t2 = k_state.lambda.eval(xd, w) * next.s.eval(xd, w);
    }
    const double scale = std::fabs(t1) + std::fabs(t2);
    return scale == 0.0 ? 0.0 : std::fabs(t1 - t2) / scale;
}

}  // namespace

QuantizationResult quantization(const AimProblem& problem, const Rational& x0, int k,
                                const QuantizationOptions& options) {
    if (k < 1) throw Error("quantization requires k >= 1");
    return quantization(aim_ladder(problem, k + 1), x0, k, options);
}

QuantizationResult quantization(const std::vector<AimState>& ladder, const Rational& x0_in, int k,
                                const QuantizationOptions& options) {
    if (k < 1) throw Error("quantization requires k >= 1");
    if (static_cast<int>(ladder.size()) < k + 2) throw Error("ladder too short for quantization");
    const AimState& state = ladder[static_cast<std::size_t>(k)];
    const AimState& next = ladder[static_cast<std::size_t>(k + 1)];

    // Poles of the problem data surface here as PoleAtEvaluationPoint.
    (void)ladder.front().lambda.eval_x(x0_in);
    (void)ladder.front().s.eval_x(x0_in);

    QuantizationResult result;
    result.k = k;
    result.x0 = x0_in;
    result.x1 = options.x1.value_or(x0_in * Rational(1, 2));
    if (result.x1 == result.x0) throw Error("quantization needs two distinct evaluation points");
    result.poly = delta_at(state, result.x0);
    if (result.poly.is_zero()) {
        result.x0 = result.x1;
        result.x1 = result.x0 * Rational(1, 2);
        result.poly = delta_at(state, result.x0);
        if (result.poly.is_zero())
            throw ZeroPolynomial("delta_" + std::to_string(k) + " vanishes identically in w at both points");
    }

    const UniPolyW dual = delta_at(state, result.x1);
    const std::vector<RealRoot> dual_roots = roots_or_empty(dual, options.width);
    UniPolyW prev;
    std::vector<RealRoot> prev_roots;
    if (k >= 2) {
        prev = delta_at(ladder[static_cast<std::size_t>(k - 1)], result.x0);
        prev_roots = roots_or_empty(prev, options.width);
    }
    // Residual check point between the two evaluation points.
    const Rational x2 = (result.x0 + result.x1) * Rational(1, 2);

    for (const RealRoot& r : roots_or_empty(result.poly, options.width)) {
        CandidateRoot c;
        c.root = r;
        c.dual_point_ok = dual.is_zero() || is_root_of(r, dual, dual_roots, options.match_tol);
        try {
            c.residual = riccati_residual(state, next, x2, r);
        } catch (const PoleAtEvaluationPoint&) {
            c.residual = riccati_residual(state, next, result.x0, r);
        }
        c.residual_ok = c.residual <= options.residual_tol;
        if (!c.dual_point_ok) c.reason = "not a root at the second evaluation point";
        else if (!c.residual_ok) c.reason = "Riccati residual above tolerance";

        if (!c.dual_point_ok || !c.residual_ok) {
            c.status = RootStatus::rejected;
            result.rejected.push_back(std::move(c));
        } else if (k >= 2 && !prev.is_zero() && is_root_of(r, prev, prev_roots, options.match_tol)) {
            c.status = RootStatus::stabilized;
            result.stabilized.push_back(std::move(c));
        } else {
            c.status = RootStatus::transient;
            result.transient.push_back(std::move(c));
        }
    }
    return result;
}

}  // namespace aim
