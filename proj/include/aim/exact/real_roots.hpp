#pragma once

#include "aim/exact/rational.hpp"
#include "aim/exact/unipoly.hpp"

#include <vector>

namespace aim {

/// Default isolating-interval width for irrational roots.
inline const Rational kDefaultRootWidth{Integer(1), Integer("1000000000000")};

/// One real root of a polynomial.
///
/// Exact roots have lo == hi == the root. Otherwise the root is the unique root
/// of the polynomial's square-free part in the open interval (lo, hi), whose
/// endpoints carry opposite signs.
struct RealRoot {
    Rational lo;
    Rational hi;
    bool exact = false;
    int multiplicity = 1;

    [[nodiscard]] const Rational& value() const { return lo; }
    [[nodiscard]] double approx() const { return exact ? lo.to_double() : ((lo + hi) * Rational(1, 2)).to_double(); }
    [[nodiscard]] Rational midpoint() const { return (lo + hi) * Rational(1, 2); }
};

/// Sturm sequence p, p', -rem(p, p'), ...
std::vector<UniPoly> sturm_sequence(const UniPoly& p);
/// Number of distinct roots of p in (lo, hi].
int sturm_count(const std::vector<UniPoly>& seq, const Rational& lo, const Rational& hi);

/// All real roots in increasing order. Rational roots are returned exactly;
/// every other root is isolated to width <= `width`.
/// Throws ZeroPolynomial if p is identically zero.
std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& width = kDefaultRootWidth);

}  // namespace aim
