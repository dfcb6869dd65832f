#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define AIM_DEFINE_ERROR(Name)                                                 \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
    }

// exact-arith
AIM_DEFINE_ERROR(PoleAtEvaluationPoint);
AIM_DEFINE_ERROR(ZeroPolynomial);
AIM_DEFINE_ERROR(DivisionByZero);
AIM_DEFINE_ERROR(ParseError);

// aim-engine
AIM_DEFINE_ERROR(InvalidProblem);
AIM_DEFINE_ERROR(PoleOnPath);

// hyperfn
AIM_DEFINE_ERROR(PochhammerPole);

// catalog
AIM_DEFINE_ERROR(BZero);
AIM_DEFINE_ERROR(InvalidSpec);
AIM_DEFINE_ERROR(DegenerateIndex);
AIM_DEFINE_ERROR(IndexAboveNmax);

// oracle
AIM_DEFINE_ERROR(WeightNotPositive);
AIM_DEFINE_ERROR(NonConvergence);

#undef AIM_DEFINE_ERROR

/// No jet root stabilized within k_max iterations.
class NoConvergence : public Error {
public:
    NoConvergence(int k_max, std::vector<double> previous_roots, std::vector<double> last_roots)
        : Error("no root stabilized within " + std::to_string(k_max) + " iterations"),
          k_max(k_max),
          previous_roots(std::move(previous_roots)),
          last_roots(std::move(last_roots)) {}

    int k_max;
    std::vector<double> previous_roots;
    std::vector<double> last_roots;
};

}  // namespace aim
