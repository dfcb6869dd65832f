#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace aim {

using Integer = mpz_class;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}
    Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& num, const Integer& den);
    template <std::integral T, std::integral U>
    Rational(T num, U den) : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    /// Parses "p", "p/q", or a finite decimal literal such as "-1.25" or "3e-2".
    static Rational parse(std::string_view text);
    /// Exact binary value of a finite double.
    static Rational from_double(double value);

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return value_.get_d(); }
    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    [[nodiscard]] Rational reciprocal() const;
    [[nodiscard]] Integer floor() const;
    [[nodiscard]] Rational pow(int exponent) const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Simplest rational (smallest denominator, then smallest |numerator|) in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Binomial coefficient C(top, k) for rational top and integer k >= 0.
Rational binomial(const Rational& top, int k);

}  // namespace aim
