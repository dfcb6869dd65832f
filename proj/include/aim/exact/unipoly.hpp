#pragma once

#include "aim/exact/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aim {

/// Dense univariate polynomial over the rationals; coeffs()[i] multiplies t^i.
/// The leading coefficient is nonzero unless the polynomial is zero (empty).
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
    static UniPoly monomial(const Rational& c, int degree);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coeff(int i) const;
    [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

    [[nodiscard]] Rational operator()(const Rational& t) const;
    [[nodiscard]] double eval(double t) const;
    [[nodiscard]] int sign_at(const Rational& t) const { return (*this)(t).sign(); }

    [[nodiscard]] UniPoly derivative() const;
    [[nodiscard]] UniPoly monic() const;
    /// Scaled to integer coefficients with gcd 1 and positive leading coefficient.
    [[nodiscard]] UniPoly primitive() const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    [[nodiscard]] std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; the remainder must be zero.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Square-free factorization (Yun): pairs (factor, multiplicity), factors monic,
/// pairwise coprime, product equal to p up to a constant.
std::vector<std::pair<UniPoly, int>> squarefree_factorization(const UniPoly& p);

/// The polynomial in w obtained by specializing a rational function at x = x0.
using UniPolyW = UniPoly;

}  // namespace aim
