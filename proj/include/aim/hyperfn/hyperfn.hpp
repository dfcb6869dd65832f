#pragma once

// Terminating hypergeometric series and Jacobi polynomials.
//
// Every function is templated on the scalar so the exact (Rational) and
// floating (double) paths are chosen by the argument types; mixing them, or
// passing bare integers, does not compile.

#include "aim/errors.hpp"
#include "aim/exact/rational.hpp"
#include "aim/exact/unipoly.hpp"

#include <cmath>
#include <concepts>
#include <string>

namespace aim::hyperfn {

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

namespace detail {

template <Scalar T>
T from_int(long v) {
    if constexpr (std::same_as<T, Rational>) return Rational(v);
    else return static_cast<double>(v);
}

template <Scalar T>
bool is_nonpositive_integer_above(const T& c, int n) {
    // c in {0, -1, ..., -(n-1)} makes (c)_k vanish for some k <= n.
    for (int j = 0; j < n; ++j)
        if (c == from_int<T>(-j)) return true;
    return false;
}

template <Scalar T>
void check_pole(const T& c, int n, const char* who) {
    if (is_nonpositive_integer_above(c, n))
        throw PochhammerPole(std::string(who) + ": (c)_k vanishes for some k <= n");
}

}  // namespace detail

/// Rising factorial (q)_n = q (q+1) ... (q+n-1); (q)_0 = 1.
template <Scalar T>
T pochhammer(const T& q, int n) {
    T r = detail::from_int<T>(1);
    for (int k = 0; k < n; ++k) r = r * (q + detail::from_int<T>(k));
    return r;
}

/// 2F1(-n, b; c; z) = sum_{k=0}^{n} (-n)_k (b)_k / ((c)_k k!) z^k.
template <Scalar T>
T gauss_2f1_terminating(int n, const T& b, const T& c, const T& z) {
    if (n < 0) throw Error("gauss_2f1_terminating: n must be non-negative");
    detail::check_pole(c, n, "gauss_2f1_terminating");
    T term = detail::from_int<T>(1), sum = term;
    for (int k = 0; k < n; ++k) {
        const T kk = detail::from_int<T>(k);
        term = term * (detail::from_int<T>(k - n) * (b + kk)) / ((c + kk) * detail::from_int<T>(k + 1)) * z;
        sum = sum + term;
    }
    return sum;
}

/// 1F1(-n; c; z) = sum_{k=0}^{n} (-n)_k / ((c)_k k!) z^k.
template <Scalar T>
T kummer_1f1_terminating(int n, const T& c, const T& z) {
    if (n < 0) throw Error("kummer_1f1_terminating: n must be non-negative");
    detail::check_pole(c, n, "kummer_1f1_terminating");
    T term = detail::from_int<T>(1), sum = term;
    for (int k = 0; k < n; ++k) {
        const T kk = detail::from_int<T>(k);
        term = term * detail::from_int<T>(k - n) / ((c + kk) * detail::from_int<T>(k + 1)) * z;
        sum = sum + term;
    }
    return sum;
}

/// Coefficients in z of 2F1(-n, b; c; z).
UniPoly gauss_2f1_polynomial(int n, const Rational& b, const Rational& c);
/// Coefficients in z of 1F1(-n; c; z).
UniPoly kummer_1f1_polynomial(int n, const Rational& c);

namespace detail {

template <Scalar T>
T generalized_binomial(const T& top, int k) {
    T r = from_int<T>(1);
    for (int i = 0; i < k; ++i) r = r * (top - from_int<T>(i)) / from_int<T>(i + 1);
    return r;
}

template <Scalar T>
T jacobi_explicit(int n, const T& alpha, const T& beta, const T& x) {
    const T one = from_int<T>(1), two = from_int<T>(2);
    const T lo = (x - one) / two, hi = (x + one) / two;
    T sum = from_int<T>(0);
    for (int s = 0; s <= n; ++s) {
        T term = generalized_binomial(from_int<T>(n) + alpha, n - s) * generalized_binomial(from_int<T>(n) + beta, s);
        for (int i = 0; i < s; ++i) term = term * lo;
        for (int i = 0; i < n - s; ++i) term = term * hi;
        sum = sum + term;
    }
    return sum;
}

}  // namespace detail

/// Jacobi polynomial P_n^(alpha, beta)(x) by the three-term recurrence.
/// Parameter combinations that zero a recurrence denominator fall back to the
/// explicit binomial sum.
template <Scalar T>
T jacobi_p(int n, const T& alpha, const T& beta, const T& x) {
    using detail::from_int;
    if (n < 0) throw Error("jacobi_p: n must be non-negative");
    const T one = from_int<T>(1), two = from_int<T>(2);
    if (n == 0) return one;
    const T p1 = (alpha + one) + (alpha + beta + two) * (x - one) / two;
    if (n == 1) return p1;
    T prev = one, cur = p1;
    const T ab = alpha + beta;
    for (int k = 2; k <= n; ++k) {
        const T kk = from_int<T>(k);
        const T s = two * kk + ab;
        const T a1 = two * kk * (kk + ab) * (s - two);
        if (a1 == from_int<T>(0)) return detail::jacobi_explicit(n, alpha, beta, x);
        const T a2 = (s - one) * (alpha * alpha - beta * beta);
        const T a3 = (s - two) * (s - one) * s;
        const T a4 = two * (kk + alpha - one) * (kk + beta - one) * s;
        const T next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace aim::hyperfn
