#include "aim/engine/jet.hpp"

#include "aim/errors.hpp"
#include "aim/exact/real_roots.hpp"
#include "aim/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aim {

EPoly epoly_add(const EPoly& a, const EPoly& b) {
    EPoly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

EPoly epoly_sub(const EPoly& a, const EPoly& b) {
    EPoly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

namespace {

void epoly_mul_acc(const EPoly& a, const EPoly& b, EPoly& out) {
    if (a.empty() || b.empty()) return;
    if (out.size() < a.size() + b.size() - 1) out.resize(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0.0) simd::axpy(a[i], b, std::span<double>(out).subspan(i, b.size()));
}

}  // namespace

EPoly epoly_mul(const EPoly& a, const EPoly& b) {
    EPoly r;
    epoly_mul_acc(a, b, r);
    return r;
}

double epoly_eval(const EPoly& p, double e) {
    double r = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * e + *it;
    return r;
}

TaylorJet::TaylorJet(double center, std::vector<EPoly> coeffs) : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("a jet needs at least one coefficient");
}

TaylorJet TaylorJet::constant(double center, int order, EPoly value) {
    std::vector<EPoly> c(static_cast<std::size_t>(order) + 1);
    c[0] = std::move(value);
    return TaylorJet(center, std::move(c));
}

namespace {

// Coefficients of p(x0 + h) in h.
std::vector<Rational> taylor_shift(const UniPoly& p, const Rational& x0) {
    std::vector<Rational> c = p.coeffs();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] = c[j - 1] + x0 * c[j];
    return c;
}

// num(x0 + h) / den(x0 + h) to order K in h.
std::vector<Rational> series_quotient(const std::vector<Rational>& num, const std::vector<Rational>& den, int order) {
    std::vector<Rational> q(static_cast<std::size_t>(order) + 1);
    const Rational& d0 = den[0];
    for (std::size_t i = 0; i < q.size(); ++i) {
        Rational acc = i < num.size() ? num[i] : Rational(0);
        for (std::size_t j = 1; j <= i && j < den.size(); ++j) acc = acc - den[j] * q[i - j];
        q[i] = acc / d0;
    }
    return q;
}

}  // namespace

TaylorJet TaylorJet::from_ratfunc(const RatFunc& f, const Rational& x0, int order) {
    if (order < 0) throw Error("jet order must be non-negative");
    const UniPoly den = f.den().as_x_poly();
    if (den(x0).is_zero()) throw PoleAtEvaluationPoint("jet center is a pole");
    const std::vector<Rational> den_shift = taylor_shift(den, x0);
    std::vector<EPoly> coeffs(static_cast<std::size_t>(order) + 1);
    const auto& slices = f.num().w_slices();
    for (auto& c : coeffs) c.assign(std::max<std::size_t>(slices.size(), 1), 0.0);
    for (std::size_t e = 0; e < slices.size(); ++e) {
        const auto q = series_quotient(taylor_shift(slices[e], x0), den_shift, order);
        for (std::size_t j = 0; j < q.size(); ++j) coeffs[j][e] = q[j].to_double();
    }
    return TaylorJet(x0.to_double(), std::move(coeffs));
}

TaylorJet TaylorJet::derivative() const {
    if (order() < 1) throw Error("cannot differentiate a jet of order 0");
    std::vector<EPoly> d(coeffs_.size() - 1);
    for (std::size_t j = 0; j < d.size(); ++j) {
        d[j] = coeffs_[j + 1];
        for (double& v : d[j]) v *= static_cast<double>(j + 1);
    }
    return TaylorJet(center_, std::move(d));
}

namespace {

std::size_t common_size(const TaylorJet& f, const TaylorJet& g) {
    if (f.center() != g.center()) throw Error("jets with different centers");
    return static_cast<std::size_t>(std::min(f.order(), g.order())) + 1;
}

}  // namespace

TaylorJet operator+(const TaylorJet& f, const TaylorJet& g) {
    const std::size_t n = common_size(f, g);
    std::vector<EPoly> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = epoly_add(f.coeffs_[j], g.coeffs_[j]);
    return TaylorJet(f.center_, std::move(c));
}

TaylorJet operator-(const TaylorJet& f, const TaylorJet& g) {
    const std::size_t n = common_size(f, g);
    std::vector<EPoly> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = epoly_sub(f.coeffs_[j], g.coeffs_[j]);
    return TaylorJet(f.center_, std::move(c));
}

TaylorJet operator*(const TaylorJet& f, const TaylorJet& g) {
    const std::size_t n = common_size(f, g);
    std::vector<EPoly> c(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i) epoly_mul_acc(f.coeffs_[i], g.coeffs_[j - i], c[j]);
    return TaylorJet(f.center_, std::move(c));
}

namespace {

std::vector<double> epoly_real_roots(EPoly p) {
    double scale = 0.0;
    for (double v : p) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) return {};
    // Rounding residue in cancelled leading terms would create huge fake roots.
    while (!p.empty() && std::fabs(p.back()) <= 1e-13 * scale) p.pop_back();
    if (p.size() < 2) return {};
    std::vector<Rational> c;
    c.reserve(p.size());
    for (double v : p) c.push_back(Rational::from_double(v));
    std::vector<double> out;
    for (const RealRoot& r : real_roots(UniPoly(std::move(c)))) out.push_back(r.approx());
    return out;
}

struct Converged {
    double value;
    double change;
};

// Nearest-value pairing; each previous root is used at most once and a pair
// must lie within `guard`.
std::vector<Converged> converged_roots(const std::vector<double>& prev, const std::vector<double>& cur, double tol,
                                       double guard) {
    std::vector<Converged> out;
    std::vector<bool> used(prev.size(), false);
    for (double r : cur) {
        std::size_t best = prev.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < prev.size(); ++i) {
            const double d = std::fabs(prev[i] - r);
            if (!used[i] && d < best_d) {
                best_d = d;
                best = i;
            }
        }
        const double scale = std::max(1.0, std::fabs(r));
        if (best == prev.size() || best_d > guard * scale) continue;
        used[best] = true;
        if (best_d < tol * scale) out.push_back({r, best_d});
    }
    return out;
}

}  // namespace

Spectrum jet_quantization(const TaylorJet& lambda0, const TaylorJet& s0, int k_max, double tol,
                          const JetOptions& options) {
    if (lambda0.center() != s0.center()) throw Error("jets with different centers");
    if (k_max < 2) throw Error("jet quantization needs k_max >= 2");
    if (std::min(lambda0.order(), s0.order()) < k_max + 2) throw Error("jet order must be at least k_max + 2");
    if (!(tol > 0.0)) throw Error("tolerance must be positive");

    TaylorJet lambda = lambda0, s = s0;
    std::vector<double> prev_roots, cur_roots;
    std::vector<Converged> best;
    int best_k = 0;
    for (int k = 1; k <= k_max; ++k) {
        TaylorJet lambda_next = lambda.derivative() + s + lambda0 * lambda;
        TaylorJet s_next = s.derivative() + s0 * lambda;
        const EPoly d = epoly_sub(epoly_mul(lambda_next[0], s[0]), epoly_mul(lambda[0], s_next[0]));
        lambda = std::move(lambda_next);
        s = std::move(s_next);

        prev_roots = std::move(cur_roots);
        cur_roots = epoly_real_roots(d);
        if (k < 2) continue;
        auto conv = converged_roots(prev_roots, cur_roots, tol, tol * 1e3);
        if (!conv.empty() && conv.size() >= best.size()) {
            best = std::move(conv);
            best_k = k;
        }
        if (options.wanted > 0 && static_cast<int>(best.size()) >= options.wanted) break;
    }
    if (best.empty()) throw NoConvergence(k_max, prev_roots, cur_roots);

    Spectrum spectrum;
    for (std::size_t i = 0; i < best.size(); ++i) {
        SpectrumEntry e;
        e.n = static_cast<int>(i);
        e.value = best[i].value;
        e.provenance = Provenance::jet_aim;
        e.iterations = best_k;
        e.change = best[i].change;
        spectrum.push(std::move(e));
    }
    return spectrum;
}

}  // namespace aim
