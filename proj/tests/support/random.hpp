#pragma once

#include "aim/exact/bipoly.hpp"
#include "aim/exact/ratfunc.hpp"
#include "aim/exact/rational.hpp"

#include <cstdint>
#include <random>

namespace aim::testing {

/// Seed shared by every randomized property test.
inline constexpr std::uint64_t kPropertySeed = 20041203;

class Gen {
public:
    explicit Gen(std::uint64_t seed = kPropertySeed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// Rational p/q with |p| <= max_num, 1 <= q <= max_den.
    Rational rational(int max_num = 9, int max_den = 6) {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }
    /// Rational in [lo, hi] with denominator <= max_den.
    Rational rational_in(const Rational& lo, const Rational& hi, int max_den = 12) {
        const int q = integer(1, max_den);
        const Rational scaled_lo = lo * Rational(q), scaled_hi = hi * Rational(q);
        const long a = static_cast<Rational>(scaled_lo).floor().get_si() + 1;
        const long b = scaled_hi.floor().get_si();
        if (b < a) return lo;
        return Rational(std::uniform_int_distribution<long>(a, b)(rng_), static_cast<long>(q));
    }

    UniPoly unipoly(int max_degree) {
        std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
        for (auto& v : c) v = rational();
        return UniPoly(std::move(c));
    }

    BiPoly bipoly(int max_dx, int max_dw) {
        std::map<Monomial, Rational> t;
        const int n = integer(1, 5);
        for (int i = 0; i < n; ++i) t[{integer(0, max_dx), integer(0, max_dw)}] += rational();
        return BiPoly(t);
    }

    RatFunc ratfunc() {
        UniPoly den;
        while (den.is_zero()) den = unipoly(2);
        return RatFunc(bipoly(3, 2), BiPoly::from_x(den));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace aim::testing
