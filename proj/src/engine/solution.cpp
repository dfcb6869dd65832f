#include "aim/engine/solution.hpp"

#include "aim/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <vector>

namespace aim {

namespace {

bool has_root_in(const UniPoly& p, double lo, double hi) {
    if (p.degree() < 1) return false;
    const Rational a = Rational::from_double(lo), b = Rational::from_double(hi);
    for (const RealRoot& r : real_roots(p))
        if (r.hi >= a && r.lo <= b) return true;
    return false;
}

// num(x, w_star) as an x-polynomial; w_star enters through its exact binary value.
UniPoly specialize_w(const BiPoly& p, double w_star) {
    const Rational w = Rational::from_double(w_star);
    UniPoly out;
    Rational power(1);
    for (const UniPoly& slice : p.w_slices()) {
        out += slice * power;
        power = power * w;
    }
    return out;
}

std::vector<double> to_doubles(const UniPoly& p) {
    std::vector<double> out;
    for (const Rational& c : p.coeffs()) out.push_back(c.to_double());
    return out;
}

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

SampledFunction solution_generator_numeric(const AimState& state, double w_star, double x_lo, double x_hi,
                                           int samples) {
    if (!(x_lo < x_hi)) throw Error("solution interval must satisfy x_lo < x_hi");
    if (samples < 2) throw Error("at least two samples are required");
    // alpha = (S den_lambda) / (den_s L) at w_star, reduced; only its surviving
    // denominator roots are poles on the path.
    const UniPoly s_num = specialize_w(state.s.num(), w_star);
    const UniPoly l_num = specialize_w(state.lambda.num(), w_star);
    if (l_num.is_zero()) throw PoleOnPath("lambda_k vanishes identically at w_star");
    std::vector<double> top_d, bottom_d{1.0};
    if (!s_num.is_zero()) {
        const UniPoly top = s_num * state.lambda.den().as_x_poly();
        const UniPoly bottom = state.s.den().as_x_poly() * l_num;
        const UniPoly g = gcd(top, bottom);
        const UniPoly reduced_bottom = exact_div(bottom, g);
        if (has_root_in(reduced_bottom, x_lo, x_hi))
            throw PoleOnPath("alpha = s_k/lambda_k has a pole on the integration path");
        top_d = to_doubles(exact_div(top, g));
        bottom_d = to_doubles(reduced_bottom);
    }

    auto alpha = [&](double x) { return horner(top_d, x) / horner(bottom_d, x); };
    SampledFunction out;
    out.x.reserve(static_cast<std::size_t>(samples));
    out.y.reserve(static_cast<std::size_t>(samples));
    const double h = (x_hi - x_lo) / (samples - 1);
    double integral = 0.0, x_prev = x_lo;
    for (int i = 0; i < samples; ++i) {
        const double x = i + 1 == samples ? x_hi : x_lo + i * h;
        if (i > 0) integral += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(alpha, x_prev, x, 8, 1e-13);
        out.x.push_back(x);
        out.y.push_back(std::exp(-integral));
        x_prev = x;
    }
    return out;
}

}  // namespace aim
