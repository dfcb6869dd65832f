#include "aim/catalog/reduction.hpp"

#include "aim/catalog/closed_form.hpp"
#include "aim/errors.hpp"

#include <cmath>

namespace aim::catalog {

Rational SpectralMap::apply(const Rational& w) const {
    if (kind == Kind::affine) return scale * w + offset;
    const Rational c = w + offset;
    if (c.is_zero()) throw DegenerateIndex("coupling value is zero");
    const Rational r = coupling / c;
    return -(r * r);
}

double SpectralMap::apply(double w) const {
    if (kind == Kind::affine) return scale.to_double() * w + offset.to_double();
    const double r = coupling.to_double() / (w + offset.to_double());
    return -(r * r);
}

namespace {

RatFunc inv(const UniPoly& p) { return RatFunc(BiPoly::constant(Rational(1)), BiPoly::from_x(p)); }
RatFunc xpow(int k) { return RatFunc(BiPoly::monomial(Rational(1), k, 0)); }
UniPoly one_minus(const Rational& b, int p) { return UniPoly::constant(Rational(1)) - UniPoly::monomial(b, p); }

AimProblem general_problem(const GeneralClassParams& g, Coordinate coordinate) {
    const UniPoly x = UniPoly::monomial(Rational(1), 1);
    if (coordinate == Coordinate::natural) {
        const UniPoly d = one_minus(g.b, g.N + 2);
        const RatFunc xN1 = g.N + 1 >= 0 ? xpow(g.N + 1) : inv(x);
        const RatFunc xN = g.N >= 0 ? xpow(g.N) : inv(x);
        return AimProblem(RatFunc(Rational(2)) * (RatFunc(g.a) * xN1 * inv(d) - RatFunc(g.m + Rational(1)) * inv(x)),
                          -(RatFunc::w() * xN * inv(d)));
    }
    const Rational p(g.N + 2);
    const UniPoly d = one_minus(g.b, 1);
    return AimProblem(RatFunc(Rational(2) * g.a / p) * inv(d) - RatFunc(g.sigma()) * inv(x),
                      -(RatFunc::w() * RatFunc((p * p).reciprocal()) * inv(x * d)));
}

const char* const kBenderFactor = "y(x) = x^(m+1) exp(-a x^(N+2)/(N+2)) f(x)";

}  // namespace

ReducedProblem to_aim_problem(const ProblemSpec& spec, Coordinate coordinate) {
    validate(spec);
    const bool hyper = coordinate == Coordinate::hypergeometric;
    GeneralClassParams g;
    SpectralMap map;
    std::vector<std::string> chain;
    std::string natural_var = "x";

    if (const auto* p = std::get_if<GeneralClassParams>(&spec)) {
        g = *p;
    } else if (const auto* p = std::get_if<BenderParams>(&spec)) {
        g = bender_as_general(*p);
        map.offset = bender_shift(*p);
        chain.emplace_back(kBenderFactor);
    } else if (const auto* p = std::get_if<OscillatorParams>(&spec)) {
        const BenderParams bp{0, p->a, p->m};
        g = bender_as_general(bp);
        map.offset = bender_shift(bp);
        chain.emplace_back(kBenderFactor);
    } else if (const auto* p = std::get_if<CoulombParams>(&spec)) {
        const BenderParams bp{-1, Rational(1), p->m};
        g = bender_as_general(bp);
        map.kind = SpectralMap::Kind::inverse_square;
        map.offset = bender_shift(bp);
        map.coupling = p->coupling;
        chain.emplace_back("E x^-1 read as the coupling Ze^2/x with a = 1; energy -(Ze^2/E)^2");
        chain.emplace_back(kBenderFactor);
    } else if (const auto* p = std::get_if<PTFirstParams>(&spec)) {
        g = pt1_as_general(*p);
        const Rational s = p->alpha + p->beta + Rational(2);
        map.scale = p->k_scale * p->k_scale;
        map.offset = map.scale * s * s;
        chain.emplace_back("x = k u");
        chain.emplace_back("y(x) = cos^(alpha+1)(x) sin^(beta+1)(x) f(x)");
        chain.emplace_back("t = cos x");
        natural_var = "t";
    } else {
        const auto& q = std::get<PTSecondParams>(spec);
        g = pt2_as_general(q);
        const Rational d = q.alpha - q.beta;
        map.scale = q.k_scale * q.k_scale;
        map.offset = -(map.scale * d * d);
        chain.emplace_back("x = k u");
        chain.emplace_back("y(x) = cosh^(-alpha)(x) sinh^(beta)(x) f(x)");
        chain.emplace_back("t = sinh x");
        natural_var = "t";
    }

    std::string var = natural_var;
    if (hyper) {
        var = "u = " + natural_var + "^" + std::to_string(g.N + 2);
        chain.push_back(var);
    }
    return ReducedProblem{general_problem(g, coordinate), coordinate, var, chain, map, g, hyper ? 1 : g.N + 2};
}

Rational to_coordinate(const ProblemSpec& spec, Coordinate coordinate, const Rational& natural_point) {
    if (coordinate == Coordinate::natural) return natural_point;
    return natural_point.pow(to_aim_problem(spec, Coordinate::natural).general.N + 2);
}

Rational default_evaluation_point(const ProblemSpec& spec, Coordinate coordinate) {
    const GeneralClassParams g = to_aim_problem(spec, Coordinate::natural).general;
    Rational x0(1, 2);
    if (g.b.sign() > 0) {
        if (g.N == -1) {
            x0 = g.b.reciprocal() * Rational(1, 2);
        } else {
            const double v = 0.5 * std::pow(g.b.to_double(), -1.0 / (g.N + 2));
            x0 = simplest_between(Rational::from_double(v * (1 - 1e-6)), Rational::from_double(v * (1 + 1e-6)));
        }
    }
    return to_coordinate(spec, coordinate, x0);
}

}  // namespace aim::catalog
