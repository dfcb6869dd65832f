#pragma once

#include "aim/exact/rational.hpp"
#include "aim/exact/unipoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace aim {

/// Exponent pair of a term x^deg_x w^deg_w, ordered lexicographically.
struct Monomial {
    int deg_x = 0;
    int deg_w = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in the coordinate x and the spectral parameter w over Q.
///
/// Stored as w-slices: slice j is the polynomial in x multiplying w^j. Trailing
/// zero slices are never kept, so the zero polynomial has no slices and no
/// stored term is zero.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> w_slices) : slices_(std::move(w_slices)) { trim(); }
    explicit BiPoly(const std::map<Monomial, Rational>& terms);

    static BiPoly constant(const Rational& c);
    static BiPoly monomial(const Rational& c, int deg_x, int deg_w);
    static BiPoly x() { return monomial(Rational(1), 1, 0); }
    static BiPoly w() { return monomial(Rational(1), 0, 1); }
    static BiPoly from_x(const UniPoly& p) { return BiPoly(std::vector<UniPoly>{p}); }

    [[nodiscard]] bool is_zero() const { return slices_.empty(); }
    [[nodiscard]] bool is_w_free() const { return slices_.size() <= 1; }
    [[nodiscard]] int deg_x() const;
    /// -1 for the zero polynomial.
    [[nodiscard]] int deg_w() const { return static_cast<int>(slices_.size()) - 1; }
    [[nodiscard]] std::map<Monomial, Rational> terms() const;
    [[nodiscard]] const std::vector<UniPoly>& w_slices() const { return slices_; }
    /// The x-polynomial of a w-free polynomial.
    [[nodiscard]] UniPoly as_x_poly() const;
    /// Coefficient of the largest monomial in (deg_x, deg_w) lex order.
    [[nodiscard]] Rational leading_coefficient() const;

    [[nodiscard]] BiPoly diff_x() const;
    [[nodiscard]] UniPolyW eval_x(const Rational& x0) const;
    [[nodiscard]] Rational eval(const Rational& x0, const Rational& w0) const;
    [[nodiscard]] BiPoly substitute_w(const Rational& w0) const;
    /// p(x, w) -> p(x, w + shift).
    [[nodiscard]] BiPoly shift_w(const Rational& shift) const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const Rational& c);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(BiPoly a) { return a *= Rational(-1); }
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const UniPoly& x_poly);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    void trim();
    std::vector<UniPoly> slices_;
};

}  // namespace aim
