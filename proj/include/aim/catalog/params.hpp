#pragma once

#include "aim/exact/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace aim::catalog {

/// y'' = 2(a x^{N+1}/(1 - b x^{N+2}) - (m+1)/x) y' - w x^N/(1 - b x^{N+2}) y
struct GeneralClassParams {
    int N = 0;
    Rational a;
    Rational b;
    Rational m;

    /// ((2m+1) b + 2a) / ((N+2) b); throws BZero when b = 0.
    [[nodiscard]] Rational rho() const;
    /// (2m + N + 3) / (N + 2)
    [[nodiscard]] Rational sigma() const;
    friend bool operator==(const GeneralClassParams&, const GeneralClassParams&) = default;
};

/// (-d^2/dx^2 + m(m+1)/x^2 + a^2 x^{2N+2}) y = E x^N y, y(0) = 0.
struct BenderParams {
    int N = 0;
    Rational a;
    Rational m;
    friend bool operator==(const BenderParams&, const BenderParams&) = default;
};

/// -y'' + (m(m+1)/x^2 - Ze^2/x) y = E y.
struct CoulombParams {
    Rational coupling;
    Rational m;
    friend bool operator==(const CoulombParams&, const CoulombParams&) = default;
};

/// -y'' + (m(m+1)/x^2 + a^2 x^2) y = E y (the Bender class at N = 0).
struct OscillatorParams {
    Rational a;
    Rational m;
    friend bool operator==(const OscillatorParams&, const OscillatorParams&) = default;
};

/// V(u) = k^2 (alpha(alpha+1)/cos^2(ku) + beta(beta+1)/sin^2(ku)), 0 < ku < pi/2.
struct PTFirstParams {
    Rational alpha;
    Rational beta;
    Rational k_scale{1};
    friend bool operator==(const PTFirstParams&, const PTFirstParams&) = default;
};

/// V(u) = k^2 (beta(beta-1)/sinh^2(ku) - alpha(alpha+1)/cosh^2(ku)), 0 < ku.
struct PTSecondParams {
    Rational alpha;
    Rational beta;
    Rational k_scale{1};
    friend bool operator==(const PTSecondParams&, const PTSecondParams&) = default;
};

using ProblemSpec =
    std::variant<GeneralClassParams, BenderParams, CoulombParams, OscillatorParams, PTFirstParams, PTSecondParams>;

/// "general", "bender", "coulomb", "oscillator", "pt1" or "pt2".
std::string family_name(const ProblemSpec& spec);
/// Parameters as ordered (name, exact value) pairs.
std::vector<std::pair<std::string, Rational>> parameter_list(const ProblemSpec& spec);

/// Throws InvalidSpec when the parameters violate the family's constraints.
void validate(const ProblemSpec& spec);

/// Applies alpha -> -alpha - 1, beta -> -beta + 1 when alpha < beta; the
/// potential is invariant under this map.
PTSecondParams normalize_pt2(const PTSecondParams& p);

/// m = l + (d - 3)/2 for angular momentum l in d dimensions.
Rational angular_m(const Rational& ell, int d);

}  // namespace aim::catalog
