#pragma once

#include "aim/catalog/reduction.hpp"
#include "aim/spectrum.hpp"

#include <optional>
#include <vector>

namespace aim::catalog {

struct SymbolicOptions {
    Coordinate coordinate = Coordinate::hypergeometric;
    /// Evaluation point in `coordinate`; the family default when empty.
    std::optional<Rational> x0;
    /// Iteration cap; 0 picks (n_max + 1) * stride + 1.
    int max_iterations = 0;
};

struct SymbolicRun {
    /// Eigenvalues in order of first stabilization, exact, with the iteration
    /// at which each stabilized.
    Spectrum spectrum;
    /// Number of eigenvalues requested.
    int wanted = 0;
    int iterations = 0;
    Rational x0;
    /// Rejected roots of the final iteration, mapped to eigenvalues.
    std::vector<double> rejected;
    [[nodiscard]] bool complete() const { return static_cast<int>(spectrum.size()) >= wanted; }
};

/// Eigenvalues n = 0..n_max from exact quantization. For PT-II the request is
/// capped at pt2_nmax.
SymbolicRun solve_symbolic(const ProblemSpec& spec, int n_max, const SymbolicOptions& options = {});

struct JetRunOptions {
    Coordinate coordinate = Coordinate::natural;
    std::optional<Rational> x0;
    int k_max = 30;
    double tol = 1e-10;
};

/// Eigenvalues from the jet carrier, mapped to the family's units, filtered to
/// the family's bound-state window and numbered from 0 in increasing order.
/// Throws NoConvergence when nothing converges.
Spectrum solve_jet(const ProblemSpec& spec, int n_max, const JetRunOptions& options = {});

}  // namespace aim::catalog
