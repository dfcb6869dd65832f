#include "aim/exact/ratfunc.hpp"

#include "aim/errors.hpp"

namespace aim {

namespace {

// gcd of the x-polynomials multiplying each power of w.
UniPoly content_x(const BiPoly& p, UniPoly seed = {}) {
    UniPoly g = std::move(seed);
    for (const auto& s : p.w_slices()) {
        g = gcd(g, s);
        if (g.degree() == 0) break;
    }
    return g;
}

BiPoly div_x(const BiPoly& p, const UniPoly& d) {
    if (d.degree() <= 0) return d.is_zero() ? p : p * d.leading().reciprocal();
    std::vector<UniPoly> s;
    s.reserve(p.w_slices().size());
    for (const auto& slice : p.w_slices()) s.push_back(exact_div(slice, d));
    return BiPoly(std::move(s));
}

}  // namespace

RatFunc RatFunc::make(BiPoly num, const UniPoly& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) return RatFunc();
    UniPoly g = content_x(num, den);
    UniPoly d = den;
    if (g.degree() > 0) {
        num = div_x(num, g);
        d = exact_div(d, g);
    }
    const Rational scale = d.leading().reciprocal();
    return RatFunc(Normal{}, num * scale, BiPoly::from_x(d * scale));
}

RatFunc::RatFunc(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (!den.is_w_free()) throw Error("rational function denominator must not depend on w");
    *this = make(num, den.as_x_poly());
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const UniPoly d1 = f.den_.as_x_poly();
    const UniPoly d2 = g.den_.as_x_poly();
    if (d1 == d2) return RatFunc::make(f.num_ + g.num_, d1);
    const UniPoly common = gcd(d1, d2);
    const UniPoly c1 = exact_div(d2, common);
    const UniPoly c2 = exact_div(d1, common);
    return RatFunc::make(f.num_ * c1 + g.num_ * c2, d1 * c1);
}

RatFunc operator-(const RatFunc& f) { return RatFunc(RatFunc::Normal{}, -f.num_, f.den_); }

RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    if (f.is_zero() || g.is_zero()) return RatFunc();
    const UniPoly d1 = f.den_.as_x_poly();
    const UniPoly d2 = g.den_.as_x_poly();
    // Both operands are reduced, so cross-cancellation leaves a reduced product.
    const UniPoly g1 = content_x(f.num_, d2);
    const UniPoly g2 = content_x(g.num_, d1);
    BiPoly num = div_x(f.num_, g1) * div_x(g.num_, g2);
    UniPoly den = (g2.degree() > 0 ? exact_div(d1, g2) : d1) * (g1.degree() > 0 ? exact_div(d2, g1) : d2);
    const Rational scale = den.leading().reciprocal();
    return RatFunc(RatFunc::Normal{}, num * scale, BiPoly::from_x(den * scale));
}

RatFunc ratfunc_arith(const RatFunc& f, const RatFunc& g, ArithOp op) {
    switch (op) {
        case ArithOp::add: return f + g;
        case ArithOp::sub: return f - g;
        case ArithOp::mul: return f * g;
    }
    throw Error("unknown arithmetic op");
}

RatFunc RatFunc::diff_x() const {
    if (is_zero()) return RatFunc();
    const UniPoly d = den_.as_x_poly();
    if (d.degree() == 0) return RatFunc(Normal{}, num_.diff_x(), den_);
    const UniPoly dd = d.derivative();
    const UniPoly g = gcd(d, dd);
    const UniPoly dg = exact_div(d, g);
    const BiPoly num = num_.diff_x() * dg - num_ * exact_div(dd, g);
    return make(num, d * dg);
}

UniPolyW RatFunc::eval_x(const Rational& x0) const {
    const Rational d = den_.as_x_poly()(x0);
    if (d.is_zero()) throw PoleAtEvaluationPoint("denominator vanishes at x = " + x0.to_string());
    return num_.eval_x(x0) * d.reciprocal();
}

Rational RatFunc::eval(const Rational& x0, const Rational& w0) const { return eval_x(x0)(w0); }

double RatFunc::eval(double x0, double w0) const {
    double acc = 0.0;
    const auto& s = num_.w_slices();
    for (auto it = s.rbegin(); it != s.rend(); ++it) acc = acc * w0 + it->eval(x0);
    return acc / den_.as_x_poly().eval(x0);
}

RatFunc RatFunc::substitute_w(const Rational& w0) const {
    return make(num_.substitute_w(w0), den_.as_x_poly());
}

RatFunc RatFunc::shift_w(const Rational& shift) const {
    return RatFunc(Normal{}, num_.shift_w(shift), den_);
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace aim
