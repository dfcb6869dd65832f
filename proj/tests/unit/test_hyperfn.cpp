#include "aim/hyperfn/hyperfn.hpp"

#include "support/random.hpp"

#include "doctest.h"

#include <cmath>

using aim::Rational;
namespace hf = aim::hyperfn;

namespace {

Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r = r * Rational(i);
    return r;
}

// Independent oracle: plain double-loop sum of (-n)_k (b)_k / ((c)_k k!) z^k.
Rational naive_2f1(int n, const Rational& b, const Rational& c, const Rational& z) {
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
        Rational num(1), den(1);
        for (int i = 0; i < k; ++i) {
            num = num * Rational(i - n) * (b + Rational(i)) * z;
            den = den * (c + Rational(i)) * Rational(i + 1);
        }
        sum = sum + num / den;
    }
    return sum;
}

Rational confluent_error(const Rational& b, int n, const Rational& c, const Rational& z) {
    const Rational g = hf::gauss_2f1_terminating(n, b.reciprocal() + Rational(2), c, b * z);
    const Rational k = hf::kummer_1f1_terminating(n, c, z);
    return (g - k).abs();
}

}  // namespace

TEST_CASE("pochhammer examples") {
    CHECK(hf::pochhammer(Rational(7, 3), 0) == Rational(1));
    for (int n = 0; n <= 8; ++n) CHECK(hf::pochhammer(Rational(1), n) == factorial(n));
    CHECK(hf::pochhammer(Rational(3, 2), 2) == Rational(15, 4));
    CHECK(hf::pochhammer(1.5, 2) == doctest::Approx(3.75));
    CHECK(hf::pochhammer(Rational(-2), 3) == Rational(0));
}

TEST_CASE("2F1 examples") {
    CHECK(hf::gauss_2f1_terminating(0, Rational(5), Rational(7), Rational(3)) == Rational(1));
    CHECK(hf::gauss_2f1_terminating(4, Rational(5), Rational(7), Rational(0)) == Rational(1));
    // Degree-one shape: 1 - ((rho+1)/sigma) u.
    const Rational rho(3, 2), sigma(3, 2), u(1, 4);
    CHECK(hf::gauss_2f1_terminating(1, rho + Rational(1), sigma, u) == Rational(1) - (rho + Rational(1)) / sigma * u);
    CHECK_THROWS_AS(hf::gauss_2f1_terminating(3, Rational(1), Rational(-1), Rational(1, 2)), aim::PochhammerPole);
    CHECK_NOTHROW(hf::gauss_2f1_terminating(1, Rational(1), Rational(-1), Rational(1, 2)));
    CHECK(hf::gauss_2f1_terminating(3, 1.5, 2.5, 0.3) ==
          doctest::Approx(naive_2f1(3, Rational(3, 2), Rational(5, 2), Rational(3, 10)).to_double()).epsilon(1e-14));
}

TEST_CASE("1F1 examples") {
    CHECK(hf::kummer_1f1_terminating(0, Rational(2), Rational(9)) == Rational(1));
    const Rational c(5, 3), z(7, 2);
    CHECK(hf::kummer_1f1_terminating(1, c, z) == Rational(1) - z / c);
    CHECK_THROWS_AS(hf::kummer_1f1_terminating(2, Rational(0), Rational(1)), aim::PochhammerPole);
}

TEST_CASE("series polynomials agree with pointwise evaluation") {
    aim::testing::Gen gen;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = gen.integer(0, 6);
        const Rational b = gen.rational(), c = Rational(gen.integer(1, 9), gen.integer(1, 4)), z = gen.rational();
        const aim::UniPoly p = hf::gauss_2f1_polynomial(n, b, c);
        CHECK(p.degree() <= n);
        CHECK(p(z) == hf::gauss_2f1_terminating(n, b, c, z));
        CHECK(hf::gauss_2f1_terminating(n, b, c, z) == naive_2f1(n, b, c, z));
        CHECK(hf::kummer_1f1_polynomial(n, c)(z) == hf::kummer_1f1_terminating(n, c, z));
    }
}

TEST_CASE("jacobi examples") {
    aim::testing::Gen gen;
    for (int i = 0; i < 10; ++i) {
        const Rational a = gen.rational(), b = gen.rational(), x = gen.rational();
        CHECK(hf::jacobi_p(0, a, b, x) == Rational(1));
        CHECK(hf::jacobi_p(1, a, b, x) == (a + Rational(1)) + (a + b + Rational(2)) * (x - Rational(1)) / Rational(2));
    }
    // Legendre P_3(x) = (5x^3 - 3x)/2.
    const Rational x(2, 7);
    CHECK(hf::jacobi_p(3, Rational(0), Rational(0), x) == (Rational(5) * x * x * x - Rational(3) * x) / Rational(2));
    CHECK(hf::jacobi_p(3, 0.0, 0.0, 0.25) == doctest::Approx((5.0 / 64 - 0.75) / 2));
    // alpha + beta = -2 zeroes the first recurrence denominator; compare with the explicit sum.
    const Rational a(-1, 2), b(-3, 2);
    CHECK(hf::jacobi_p(4, a, b, x) == hf::detail::jacobi_explicit(4, a, b, x));
}

TEST_CASE("property: Jacobi/2F1 identity") {
    aim::testing::Gen gen;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = gen.integer(0, 5);
        const Rational a = Rational(gen.integer(0, 12), gen.integer(1, 4)), b = gen.rational(), z = gen.rational();
        const Rational lhs = hf::pochhammer(a + Rational(1), n) *
                             hf::gauss_2f1_terminating(n, Rational(n) + a + b + Rational(1), a + Rational(1), z);
        const Rational rhs = factorial(n) * hf::jacobi_p(n, a, b, Rational(1) - Rational(2) * z);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("property: 2F1 has degree at most n in z") {
    aim::testing::Gen gen;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = gen.integer(0, 6);
        const Rational b = gen.rational(), c = Rational(gen.integer(1, 9), gen.integer(1, 4));
        // Newton divided differences over n+2 nodes: the order-(n+1) difference vanishes.
        std::vector<Rational> nodes, table;
        for (int i = 0; i < n + 2; ++i) {
            nodes.emplace_back(i * 3 - 2, 5);
            table.push_back(hf::gauss_2f1_terminating(n, b, c, nodes.back()));
        }
        for (int order = 1; order < n + 2; ++order)
            for (int i = n + 1; i >= order; --i)
                table[static_cast<std::size_t>(i)] =
                    (table[static_cast<std::size_t>(i)] - table[static_cast<std::size_t>(i - 1)]) /
                    (nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(i - order)]);
        CHECK(table.back().is_zero());
    }
}

TEST_CASE("property: Chu-Vandermonde") {
    aim::testing::Gen gen;
    for (int trial = 0; trial < 10; ++trial) {
        const int n = gen.integer(0, 6);
        const Rational b = gen.rational(), c = Rational(gen.integer(1, 11), gen.integer(1, 3));
        CHECK(hf::gauss_2f1_terminating(n, b, c, Rational(1)) == hf::pochhammer(c - b, n) / hf::pochhammer(c, n));
    }
}

TEST_CASE("property: confluent limit error is linear in b") {
    const Rational c(5, 2), z(7, 10);
    for (const Rational& b : {Rational(1, 100), Rational(1, 1000)}) {
        const Rational ratio = confluent_error(b, 3, c, z) / confluent_error(b / Rational(10), 3, c, z);
        INFO("b = " << b.to_string() << " ratio = " << ratio.to_double());
        CHECK(ratio >= Rational(8));
        CHECK(ratio <= Rational(12));
    }
}
