#pragma once

#include "aim/catalog/params.hpp"
#include "aim/engine/aim.hpp"

#include <string>
#include <vector>

namespace aim::catalog {

/// natural: x for the general and Bender classes, t = cos x / sinh x for the
/// Poschl-Teller families. hypergeometric: u = x^{N+2} (u = t^2), in which
/// eigenvalue n terminates the recursion at iteration n instead of n(N+2).
enum class Coordinate { natural, hypergeometric };

/// Maps the spectral parameter w of the AIM problem to the family's eigenvalue.
struct SpectralMap {
    enum class Kind {
        /// scale * w + offset
        affine,
        /// -(coupling / (w + offset))^2, the Coulomb reading of the N = -1 class.
        inverse_square
    };
    Kind kind = Kind::affine;
    Rational scale{1};
    Rational offset{0};
    Rational coupling{0};

    [[nodiscard]] Rational apply(const Rational& w) const;
    [[nodiscard]] double apply(double w) const;
};

struct ReducedProblem {
    AimProblem problem;
    Coordinate coordinate;
    /// Name of the independent variable of `problem`.
    std::string variable;
    /// Substitutions leading from the family's equation to `problem`.
    std::vector<std::string> substitutions;
    SpectralMap map;
    /// The general-class parameters the family reduces to.
    GeneralClassParams general;
    /// Iterations between successive terminations (1 or N + 2).
    int stride = 1;
};

ReducedProblem to_aim_problem(const ProblemSpec& spec, Coordinate coordinate = Coordinate::hypergeometric);

/// Default evaluation point in the given coordinate. Natural coordinate: 1/2 for
/// b <= 0; otherwise (1/2) b^{-1/(N+2)} rounded to the simplest rational within
/// a relative 10^-6. The hypergeometric point is the image of the natural one.
Rational default_evaluation_point(const ProblemSpec& spec, Coordinate coordinate);

/// Maps a point of the natural coordinate into the given coordinate.
Rational to_coordinate(const ProblemSpec& spec, Coordinate coordinate, const Rational& natural_point);

}  // namespace aim::catalog
