#include "aim/hyperfn/hyperfn.hpp"

#include <vector>

namespace aim::hyperfn {

UniPoly gauss_2f1_polynomial(int n, const Rational& b, const Rational& c) {
    if (n < 0) throw Error("gauss_2f1_polynomial: n must be non-negative");
    detail::check_pole(c, n, "gauss_2f1_polynomial");
    std::vector<Rational> coeffs{Rational(1)};
    Rational term(1);
    for (int k = 0; k < n; ++k) {
        term = term * (Rational(k - n) * (b + Rational(k))) / ((c + Rational(k)) * Rational(k + 1));
        coeffs.push_back(term);
    }
    return UniPoly(std::move(coeffs));
}

UniPoly kummer_1f1_polynomial(int n, const Rational& c) {
    if (n < 0) throw Error("kummer_1f1_polynomial: n must be non-negative");
    detail::check_pole(c, n, "kummer_1f1_polynomial");
    std::vector<Rational> coeffs{Rational(1)};
    Rational term(1);
    for (int k = 0; k < n; ++k) {
        term = term * Rational(k - n) / ((c + Rational(k)) * Rational(k + 1));
        coeffs.push_back(term);
    }
    return UniPoly(std::move(coeffs));
}

}  // namespace aim::hyperfn
