#include "aim/oracle/oracle.hpp"

#include "aim/catalog/closed_form.hpp"
#include "aim/catalog/reduction.hpp"
#include "aim/errors.hpp"
#include "aim/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace aim::oracle {

namespace {

struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag_sq;
};

Tridiagonal assemble(const GridProblem& g) {
    if (!(g.x_lo < g.x_hi)) throw Error("grid needs x_lo < x_hi");
    if (g.M < 16) throw Error("grid needs M >= 16");
    if (!g.V) throw Error("grid needs a potential");
    const std::size_t n = static_cast<std::size_t>(g.M) - 1;
    const double h = (g.x_hi - g.x_lo) / g.M;
    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> w(n, 1.0);
    Tridiagonal t{std::vector<double>(n), std::vector<double>(n - 1)};
    for (std::size_t i = 0; i < n; ++i) {
        const double x = g.x_lo + static_cast<double>(i + 1) * h;
        if (g.W) {
            w[i] = g.W(x);
            if (!(w[i] > 0.0)) throw WeightNotPositive("weight is not positive at x = " + std::to_string(x));
        }
        const double v = g.V(x);
        if (!std::isfinite(v)) throw Error("potential is not finite at x = " + std::to_string(x));
        // W^{-1/2} A W^{-1/2}
        t.diag[i] = (2.0 * inv_h2 + v) / w[i];
    }
    for (std::size_t i = 0; i + 1 < n; ++i) t.offdiag_sq[i] = inv_h2 * inv_h2 / (w[i] * w[i + 1]);
    return t;
}

}  // namespace

std::vector<double> fd_eigen_single(const GridProblem& g, int count) {
    if (count < 1) throw Error("count must be positive");
    if (count > g.M / 4) throw Error("count must not exceed M/4");
    const Tridiagonal t = assemble(g);
    const std::size_t n = t.diag.size();

    // Gershgorin interval.
    double lo = t.diag[0], hi = t.diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::sqrt(t.offdiag_sq[i - 1]);
        if (i + 1 < n) r += std::sqrt(t.offdiag_sq[i]);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }
    const double pad = 1e-9 * std::max(1.0, hi - lo);
    lo -= pad;
    hi += pad;

    const std::size_t k = static_cast<std::size_t>(count);
    std::vector<double> a(k, lo), b(k, hi), mid(k);
    std::vector<int> counts(k);
    {
        const std::vector<double> ends{lo, hi};
        std::vector<int> c(2);
        simd::sturm_counts(t.diag, t.offdiag_sq, ends, c);
        if (c[0] != 0 || c[1] < count) throw NonConvergence("Sturm counts fail to bracket the eigenvalues");
    }
    // Eigenvalue i lies where the count below the shift steps from i to i + 1.
    for (int iter = 0; iter < 200; ++iter) {
        bool done = true;
        for (std::size_t i = 0; i < k; ++i) {
            mid[i] = 0.5 * (a[i] + b[i]);
            if (b[i] - a[i] > 4e-16 * std::max(1.0, std::fabs(mid[i]))) done = false;
        }
        if (done) break;
        simd::sturm_counts(t.diag, t.offdiag_sq, mid, counts);
        for (std::size_t i = 0; i < k; ++i) {
            if (counts[i] >= static_cast<int>(i) + 1) b[i] = mid[i];
            else a[i] = mid[i];
        }
    }
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = 0.5 * (a[i] + b[i]);
    for (std::size_t i = 1; i < k; ++i)
        if (!(out[i] > out[i - 1])) throw NonConvergence("bisection produced non-increasing eigenvalues");
    return out;
}

FdResult fd_eigen(const GridProblem& g, int count) {
    FdResult r;
    r.raw = fd_eigen_single(g, count);
    GridProblem fine = g;
    fine.M = 2 * g.M;
    r.fine = fd_eigen_single(fine, count);
    for (std::size_t i = 0; i < r.raw.size(); ++i) r.extrapolated.push_back((4.0 * r.fine[i] - r.raw[i]) / 3.0);
    return r;
}

namespace {

RatFunc residual_of(const AimProblem& problem, const RatFunc& y, const Rational& w) {
    const RatFunc l0 = problem.lambda0.substitute_w(w), s0 = problem.s0.substitute_w(w);
    const RatFunc y1 = y.diff_x();
    return y1.diff_x() - l0 * y1 - s0 * y;
}

}  // namespace

RatFunc residual_exact(const catalog::GeneralClassParams& p, int n, std::optional<Rational> w_override) {
    if (n < 0 || n > 8) throw Error("residual_exact supports 0 <= n <= 8");
    const auto reduced = catalog::to_aim_problem(p, catalog::Coordinate::natural);
    const Rational w = w_override.value_or(catalog::general_eigenvalue(p, n));
    return residual_of(reduced.problem, catalog::general_eigenfunction_poly(p, n), w);
}

RatFunc residual_exact_bender(const catalog::BenderParams& p, int n) {
    if (n < 0 || n > 8) throw Error("residual_exact_bender supports 0 <= n <= 8");
    const auto reduced = catalog::to_aim_problem(p, catalog::Coordinate::natural);
    const Rational w = catalog::bender_energy(p, n) - catalog::bender_shift(p);
    return residual_of(reduced.problem, catalog::bender_eigenfunction_poly(p, n), w);
}

double residual_numeric(const SampledFunction& y, double energy, const Field& V, const Field& W) {
    const std::size_t n = y.x.size();
    if (n < 5 || y.y.size() != n) throw Error("residual_numeric needs at least 5 matching samples");
    const double h = y.x[1] - y.x[0];
    for (std::size_t i = 1; i < n; ++i)
        if (std::fabs((y.x[i] - y.x[i - 1]) - h) > 1e-9 * std::fabs(h)) throw Error("samples must be uniformly spaced");
    double scale = 0.0;
    for (double v : y.y) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) return 0.0;
    std::vector<double> v(n), w(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = V(y.x[i]);
        if (W) w[i] = W(y.x[i]);
    }
    return simd::stencil_residual_max(y.y, v, w, energy, h) / scale;
}

namespace {

double d(const Rational& r) { return r.to_double(); }

// The wall offset bounds the O(eps) shift of states with y'(0) != 0, so it is
// capped in absolute terms on long domains.
double wall_offset(double length) { return 1e-6 * std::min(1.0, length); }

GridProblem half_line(double length, int M, Field V, Field W = {}) {
    const double eps = wall_offset(length);
    return GridProblem{eps, length, M, std::move(V), std::move(W)};
}

}  // namespace

GridProblem family_grid(const catalog::ProblemSpec& spec, int count, int M) {
    using namespace catalog;
    validate(spec);
    if (std::holds_alternative<GeneralClassParams>(spec))
        throw InvalidSpec("the general class has no Schrodinger form for the oracle");
    if (const auto* p = std::get_if<BenderParams>(&spec)) {
        // Turning point of the highest requested state, padded generously.
        const double E = d(bender_energy(*p, count - 1)), a = d(p->a), mm = d(p->m * (p->m + Rational(1)));
        const int N = p->N;
        if (N == -1) throw InvalidSpec("the N = -1 Bender class is checked in its Coulomb form");
        const double turn = std::pow(E / (a * a), 1.0 / (N + 2));
        return half_line(2.5 * turn + 4.0, M, [a, N, mm](double x) { return mm / (x * x) + a * a * std::pow(x, 2 * N + 2); },
                         N == 0 ? Field{} : Field([N](double x) { return std::pow(x, N); }));
    }
    if (const auto* p = std::get_if<OscillatorParams>(&spec)) {
        const double E = d(oscillator_energy(*p, count - 1)), a = d(p->a), mm = d(p->m * (p->m + Rational(1)));
        return half_line(2.5 * std::sqrt(E) / std::sqrt(a) + 4.0 / std::sqrt(a), M,
                         [a, mm](double x) { return mm / (x * x) + a * a * x * x; });
    }
    if (const auto* p = std::get_if<CoulombParams>(&spec)) {
        const double Z = d(p->coupling), mm = d(p->m * (p->m + Rational(1)));
        // Bohr-like radius of level n grows as (n+m+1)^2 / Z.
        const double q = count + d(p->m);
        return half_line(std::max(60.0, 30.0 * q * q / Z), M, [Z, mm](double x) { return mm / (x * x) - Z / x; });
    }
    if (const auto* p = std::get_if<PTFirstParams>(&spec)) {
        const double k = d(p->k_scale), al = d(p->alpha * (p->alpha + Rational(1))), be = d(p->beta * (p->beta + Rational(1)));
        const double end = std::numbers::pi / (2.0 * k);
        const double eps = wall_offset(end);
        return GridProblem{eps, end - eps, M, [k, al, be](double u) {
                               const double c = std::cos(k * u), s = std::sin(k * u);
                               return k * k * (al / (c * c) + be / (s * s));
                           },
                           Field{}};
    }
    const auto& p = std::get<PTSecondParams>(spec);
    const int target = std::min(count - 1, pt2_nmax(p));
    const double gap = d(p.alpha - p.beta) - 2.0 * target;
    const double k = d(p.k_scale);
    const double length = std::min(25.0 / gap, 40.0) / k;
    const double al = d(p.alpha * (p.alpha + Rational(1))), be = d(p.beta * (p.beta - Rational(1)));
    return half_line(length, M, [k, al, be](double u) {
        const double s = std::sinh(k * u), c = std::cosh(k * u);
        return k * k * (be / (s * s) - al / (c * c));
    });
}

GridProblem sextic_grid(const Rational& a, const Rational& m, const Rational& g, int M) {
    const double aa = d(a), mm = d(m * (m + Rational(1))), gg = d(g);
    // x^6 dominates beyond a few units for the couplings of interest.
    const double length = std::max(5.0, 2.0 * std::pow(std::max(gg, 1.0) / (aa * aa), 0.25) + 3.0);
    return half_line(length, M, [aa, mm, gg](double x) { return mm / (x * x) + aa * aa * std::pow(x, 6) - gg * x * x; });
}

}  // namespace aim::oracle
