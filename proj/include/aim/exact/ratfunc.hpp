#pragma once

#include "aim/exact/bipoly.hpp"
#include "aim/exact/unipoly.hpp"

#include <string>

namespace aim {

/// Exact rational function num(x, w) / den(x) in normal form:
///   - den is nonzero and free of w,
///   - num and den share no nonconstant factor,
///   - den is monic in (deg_x, deg_w) lex order, so equality is structural.
class RatFunc {
public:
    /// The zero function.
    RatFunc() : den_(BiPoly::constant(Rational(1))) {}
    RatFunc(const BiPoly& num, const BiPoly& den);
    RatFunc(const Rational& c) : RatFunc(BiPoly::constant(c), BiPoly::constant(Rational(1))) {}
    explicit RatFunc(const BiPoly& poly) : RatFunc(poly, BiPoly::constant(Rational(1))) {}

    static RatFunc x() { return RatFunc(BiPoly::x()); }
    static RatFunc w() { return RatFunc(BiPoly::w()); }

    [[nodiscard]] const BiPoly& num() const { return num_; }
    [[nodiscard]] const BiPoly& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const { return den_.deg_x() == 0; }

    /// Re-runs normalization; the result equals *this for any RatFunc.
    [[nodiscard]] RatFunc normalized() const { return RatFunc(num_, den_); }

    [[nodiscard]] RatFunc diff_x() const;
    /// Specializes x = x0; throws PoleAtEvaluationPoint when den(x0) = 0.
    [[nodiscard]] UniPolyW eval_x(const Rational& x0) const;
    [[nodiscard]] Rational eval(const Rational& x0, const Rational& w0) const;
    [[nodiscard]] double eval(double x0, double w0) const;
    [[nodiscard]] RatFunc substitute_w(const Rational& w0) const;
    /// f(x, w) -> f(x, w + shift).
    [[nodiscard]] RatFunc shift_w(const Rational& shift) const;

    friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator-(const RatFunc& f);
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    struct Normal {};
    RatFunc(Normal, BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    static RatFunc make(BiPoly num, const UniPoly& den);

    BiPoly num_;
    BiPoly den_;
};

enum class ArithOp { add, sub, mul };

/// Exact field arithmetic on rational functions with a normalized result.
RatFunc ratfunc_arith(const RatFunc& f, const RatFunc& g, ArithOp op);
inline RatFunc ratfunc_diff_x(const RatFunc& f) { return f.diff_x(); }
inline UniPolyW ratfunc_eval_x(const RatFunc& f, const Rational& x0) { return f.eval_x(x0); }

}  // namespace aim
