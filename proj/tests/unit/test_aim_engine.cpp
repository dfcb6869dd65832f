#include "aim/engine/aim.hpp"
#include "aim/engine/jet.hpp"
#include "aim/engine/solution.hpp"
#include "aim/errors.hpp"
#include "support/random.hpp"

#include "doctest.h"

#include <cmath>

using aim::AimProblem;
using aim::BiPoly;
using aim::RatFunc;
using aim::Rational;
using aim::UniPoly;

namespace {

RatFunc xpow(int k) { return RatFunc(BiPoly::monomial(Rational(1), k, 0)); }
RatFunc c(const Rational& v) { return RatFunc(v); }
RatFunc inv(const UniPoly& p) { return RatFunc(BiPoly::constant(Rational(1)), BiPoly::from_x(p)); }

// 1 - b t^p
UniPoly one_minus(const Rational& b, int p) { return UniPoly::constant(Rational(1)) - UniPoly::monomial(b, p); }

// The general class written in x:
// y'' = 2(a x^{N+1}/(1 - b x^{N+2}) - (m+1)/x) y' - w x^N/(1 - b x^{N+2}) y.
AimProblem general_in_x(int N, const Rational& a, const Rational& b, const Rational& m) {
    const UniPoly d = one_minus(b, N + 2);
    const UniPoly x = UniPoly::monomial(Rational(1), 1);
    const RatFunc xN1 = N + 1 >= 0 ? xpow(N + 1) : inv(x);
    const RatFunc xN = N >= 0 ? xpow(N) : inv(x);
    RatFunc l0 = c(Rational(2)) * (c(a) * xN1 * inv(d) - c(m + Rational(1)) * inv(x));
    RatFunc s0 = -(RatFunc::w() * xN * inv(d));
    return AimProblem(l0, s0);
}

// The same class in u = x^{N+2}:
// y'' = (2a/((N+2)(1-bu)) - (2m+N+3)/((N+2)u)) y' - w/((N+2)^2 u (1-bu)) y.
AimProblem general_in_u(int N, const Rational& a, const Rational& b, const Rational& m) {
    const Rational p(N + 2);
    const UniPoly d = one_minus(b, 1);
    const UniPoly u = UniPoly::monomial(Rational(1), 1);
    RatFunc l0 = c(Rational(2) * a / p) * inv(d) - c((Rational(2) * m + Rational(N + 3)) / p) * inv(u);
    RatFunc s0 = -(RatFunc::w() * c((p * p).reciprocal()) * inv(u * d));
    return AimProblem(l0, s0);
}

Rational eigen_w(int N, const Rational& a, const Rational& b, const Rational& m, int n) {
    // b (N+2)^2 n (n + rho), rho = ((2m+1) b + 2a) / ((N+2) b)
    const Rational p(N + 2);
    const Rational rho = ((Rational(2) * m + Rational(1)) * b + Rational(2) * a) / (p * b);
    return b * p * p * Rational(n) * (Rational(n) + rho);
}

std::vector<Rational> exact_values(const std::vector<aim::CandidateRoot>& roots) {
    std::vector<Rational> out;
    for (const auto& r : roots) {
        REQUIRE(r.root.exact);
        out.push_back(r.root.value());
    }
    return out;
}

}  // namespace

TEST_CASE("aim_step on y'' = x y' + y") {
    const AimProblem p(RatFunc::x(), c(Rational(1)));
    const auto ladder = aim::aim_ladder(p, 2);
    CHECK(ladder[1].n == 1);
    CHECK(ladder[1].lambda == xpow(2) + c(Rational(2)));
    CHECK(ladder[1].s == RatFunc::x());
    CHECK(ladder[2].lambda == xpow(3) + c(Rational(5)) * RatFunc::x());
    CHECK(ladder[2].lambda_prev == ladder[1].lambda);
    CHECK(ladder[2].s_prev == ladder[1].s);
    CHECK(ladder[0].lambda_prev == c(Rational(1)));
    CHECK(ladder[0].s_prev.is_zero());
}

TEST_CASE("aim_step spot value on the N=0 class") {
    const AimProblem p = general_in_x(0, Rational(1), Rational(1), Rational(0));
    const auto s1 = aim::aim_step(aim::AimState::initial(p), p);
    // lambda0' + s0 + lambda0^2 at x = 1/2: 112/9 - (4/3) w + 64/9.
    CHECK(s1.lambda.eval_x(Rational(1, 2)) == UniPoly{Rational(176, 9), Rational(-4, 3)});
    // s0' + s0 lambda0 at x = 1/2: -(16/9) w + (32/9) w.
    CHECK(s1.s.eval_x(Rational(1, 2)) == UniPoly{Rational(0), Rational(16, 9)});
}

TEST_CASE("problem and delta preconditions") {
    CHECK_THROWS_AS(AimProblem(RatFunc(), RatFunc::x()), aim::InvalidProblem);
    const AimProblem p(RatFunc::x(), c(Rational(1)));
    CHECK_THROWS_AS(aim::delta(aim::AimState::initial(p)), aim::Error);
    const AimProblem q(RatFunc::x(), RatFunc());
    CHECK(aim::delta(aim::aim_step(aim::AimState::initial(q), q)).is_zero());
    const auto ladder = aim::aim_ladder(p, 5);
    for (int n = 1; n <= 5; ++n) CHECK_FALSE(aim::delta(ladder[static_cast<std::size_t>(n)]).is_zero());
}

TEST_CASE("delta_1 at x0 = 1/2 has the root w = 0") {
    const AimProblem p = general_in_x(0, Rational(1), Rational(1), Rational(0));
    const auto ladder = aim::aim_ladder(p, 1);
    const UniPoly d = aim::delta(ladder[1]).eval_x(Rational(1, 2));
    CHECK(d.degree() == 2);
    CHECK(d(Rational(0)).is_zero());
}

TEST_CASE("quantization in the hypergeometric coordinate") {
    const AimProblem p = general_in_u(0, Rational(1), Rational(1), Rational(0));
    const auto q = aim::quantization(p, Rational(1, 4), 4);
    CHECK(exact_values(q.stabilized) == std::vector<Rational>{0, 10, 28, 54});
    CHECK(exact_values(q.transient) == std::vector<Rational>{88});
    CHECK(q.rejected.empty());

    const auto q1 = aim::quantization(p, Rational(1, 4), 1);
    CHECK(exact_values(q1.transient) == std::vector<Rational>{0, 10});

    const AimProblem pm = general_in_u(-1, Rational(1), Rational(1), Rational(0));
    for (int k = 3; k <= 4; ++k) CHECK(aim::quantization(pm, Rational(1, 2), k).has_stabilized(Rational(10)));

    const AimProblem p1 = general_in_u(1, Rational(1), Rational(1), Rational(0));
    CHECK(aim::quantization(p1, Rational(1, 8), 3).has_stabilized(Rational(18)));
}

TEST_CASE("quantization in x terminates late and rejects spurious roots") {
    const AimProblem p = general_in_x(0, Rational(1), Rational(1), Rational(0));
    const auto q = aim::quantization(p, Rational(1, 2), 4);
    CHECK(exact_values(q.stabilized) == std::vector<Rational>{0, 10});
    CHECK(exact_values(q.transient) == std::vector<Rational>{28});
    for (int k : {1, 2, 5}) {
        const auto qk = aim::quantization(p, Rational(1, 2), k);
        CHECK_FALSE(qk.rejected.empty());
        for (const auto& r : qk.rejected) {
            CHECK_FALSE(r.dual_point_ok);
            CHECK(r.status == aim::RootStatus::rejected);
            CHECK_FALSE(r.reason.empty());
        }
    }
    // 28 is a root of delta_2 at x0 = 1/2 by coincidence only.
    CHECK(aim::quantization(p, Rational(1, 2), 2).rejected.front().root.value() == Rational(28));

    // Eigenvalue n of the N class becomes a termination of delta_k in x only at k = n (N + 2).
    for (int N = 0; N <= 1; ++N) {
        const Rational a(1), b(1), m(0);
        const AimProblem px = general_in_x(N, a, b, m);
        const auto ladder = aim::aim_ladder(px, 2 * (N + 2));
        for (int n = 1; n <= 2; ++n) {
            const Rational w = eigen_w(N, a, b, m, n);
            for (int k = 1; k <= 2 * (N + 2); ++k) {
                const bool vanishes = aim::delta(ladder[static_cast<std::size_t>(k)]).substitute_w(w).is_zero();
                CHECK_MESSAGE(vanishes == (k >= n * (N + 2)), "N=" << N << " n=" << n << " k=" << k);
            }
        }
    }
}

TEST_CASE("quantization retries after an identically vanishing delta") {
    // lambda0 = 1, s0 = w (x - 1/2)^2: delta_1 = w^2 g^2 - w g' vanishes in w at x0 = 1/2.
    const RatFunc g = RatFunc::x() - c(Rational(1, 2));
    const RatFunc s0 = RatFunc::w() * g * g;
    const AimProblem p(c(Rational(1)), s0);
    const auto q = aim::quantization(p, Rational(1, 2), 1);
    CHECK(q.x0 == Rational(1, 4));
    CHECK_THROWS_AS((void)aim::quantization(general_in_x(0, Rational(1), Rational(1), Rational(0)), Rational(1), 2),
                    aim::PoleAtEvaluationPoint);
}

TEST_CASE("property: delta_k vanishes at every lower eigenvalue") {
    aim::testing::Gen gen;
    for (int trial = 0; trial < 10; ++trial) {
        const int N = gen.integer(-1, 3);
        const Rational a = gen.rational(4, 3), m = gen.rational(3, 2);
        Rational b = gen.rational_in(Rational(-2), Rational(2), 4);
        if (b.is_zero()) b = Rational(1, 2);
        const AimProblem p = general_in_u(N, a, b, m);
        const auto ladder = aim::aim_ladder(p, 6);
        const Rational u0 = b.sign() > 0 ? b.reciprocal() * Rational(1, 3) : Rational(1, 2);
        for (int k = 1; k <= 6; ++k) {
            const UniPoly d = aim::delta(ladder[static_cast<std::size_t>(k)]).eval_x(u0);
            for (int n = 0; n < k; ++n) CHECK(d(eigen_w(N, a, b, m, n)).is_zero());
        }
    }
}

TEST_CASE("property: stabilized roots agree at both evaluation points") {
    aim::testing::Gen gen;
    for (int trial = 0; trial < 6; ++trial) {
        const int N = gen.integer(-1, 2);
        const Rational a = Rational(gen.integer(1, 5), gen.integer(1, 2)), m = Rational(gen.integer(0, 4), 2);
        const Rational b = Rational(gen.integer(1, 3), 2) * Rational(gen.integer(0, 1) ? 1 : -1);
        const AimProblem p = general_in_u(N, a, b, m);
        const Rational u0 = b.sign() > 0 ? b.reciprocal() * Rational(1, 2) : Rational(1, 2);
        const auto q0 = aim::quantization(p, u0, 4);
        const auto q1 = aim::quantization(p, u0 * Rational(1, 2), 4, {.x1 = u0});
        REQUIRE(q0.stabilized.size() == q1.stabilized.size());
        for (std::size_t i = 0; i < q0.stabilized.size(); ++i)
            CHECK(std::fabs(q0.stabilized[i].root.approx() - q1.stabilized[i].root.approx()) <= 1e-12);
    }
}

TEST_CASE("jets: construction and differentiation") {
    // f = (1 + w x)/(1 - x) about x0 = 1/3.
    const RatFunc f = (c(Rational(1)) + RatFunc::w() * RatFunc::x()) * inv(one_minus(Rational(1), 1));
    const auto jet = aim::TaylorJet::from_ratfunc(f, Rational(1, 3), 6);
    CHECK(jet.order() == 6);
    const double x0 = 1.0 / 3.0;
    for (double h : {0.01, -0.02}) {
        for (double e : {0.0, 2.5}) {
            double series = 0.0;
            for (int j = 0; j <= 6; ++j) series += aim::epoly_eval(jet[j], e) * std::pow(h, j);
            CHECK(series == doctest::Approx(f.eval(x0 + h, e)).epsilon(1e-9));
        }
    }
    const auto d = jet.derivative();
    CHECK(d.order() == 5);
    for (int j = 0; j < 5; ++j)
        for (std::size_t e = 0; e < d[j].size(); ++e) CHECK(d[j][e] == (j + 1) * jet[j + 1][e]);
    CHECK_THROWS_AS(aim::TaylorJet::from_ratfunc(f, Rational(1), 3), aim::PoleAtEvaluationPoint);

    const auto g = aim::TaylorJet::from_ratfunc(RatFunc::x() * RatFunc::w(), Rational(1, 3), 6);
    const auto prod = jet * g;
    const auto exact = aim::TaylorJet::from_ratfunc(f * RatFunc::x() * RatFunc::w(), Rational(1, 3), 6);
    for (int j = 0; j <= 6; ++j)
        for (std::size_t e = 0; e < exact[j].size(); ++e)
            CHECK(prod[j][e] == doctest::Approx(exact[j][e]).epsilon(1e-13));
}

TEST_CASE("jet quantization examples") {
    SUBCASE("ground state of the trigonometric well in t = cos x") {
        // alpha = beta = 1: lambda0 = 2((5/2) t/(1-t^2) - 2/t), s0 = -(E - 16)/(1-t^2).
        const UniPoly d = one_minus(Rational(1), 2);
        const RatFunc l0 = c(Rational(5)) * RatFunc::x() * inv(d) - c(Rational(4)) * inv(UniPoly::monomial(Rational(1), 1));
        const RatFunc s0 = -((RatFunc::w() - c(Rational(16))) * inv(d));
        const int k_max = 30;
        const auto spec = aim::jet_quantization(aim::TaylorJet::from_ratfunc(l0, Rational(1, 2), k_max + 2),
                                                aim::TaylorJet::from_ratfunc(s0, Rational(1, 2), k_max + 2), k_max,
                                                1e-10, {.wanted = 1});
        REQUIRE(!spec.empty());
        CHECK(std::fabs(spec[0].value - 16.0) <= 1e-8);
        CHECK(spec[0].iterations <= 30);
        CHECK(spec[0].provenance == aim::Provenance::jet_aim);
    }
    SUBCASE("oscillator ground state") {
        // f'' = 2(x - 1/x) f' - w f, E = w + 3.
        const RatFunc l0 = c(Rational(2)) * (RatFunc::x() - inv(UniPoly::monomial(Rational(1), 1)));
        const RatFunc s0 = -(RatFunc::w() - c(Rational(3)));
        const auto spec = aim::jet_quantization(aim::TaylorJet::from_ratfunc(l0, Rational(1), 24),
                                                aim::TaylorJet::from_ratfunc(s0, Rational(1), 24), 20, 1e-10);
        REQUIRE(!spec.empty());
        CHECK(spec[0].value == doctest::Approx(3.0).epsilon(1e-10));
    }
    SUBCASE("no spectral parameter") {
        const auto l0 = aim::TaylorJet::from_ratfunc(RatFunc::x(), Rational(1, 2), 12);
        const auto s0 = aim::TaylorJet::from_ratfunc(c(Rational(1)), Rational(1, 2), 12);
        CHECK_THROWS_AS(aim::jet_quantization(l0, s0, 10, 1e-10), aim::NoConvergence);
    }
    SUBCASE("order precondition") {
        const auto l0 = aim::TaylorJet::from_ratfunc(RatFunc::x(), Rational(1, 2), 5);
        CHECK_THROWS_AS(aim::jet_quantization(l0, l0, 10, 1e-10), aim::Error);
    }
}

TEST_CASE("property: jet roots agree with exact stabilized roots") {
    aim::testing::Gen gen;
    for (int trial = 0; trial < 4; ++trial) {
        const int N = gen.integer(-1, 1);
        const Rational a = Rational(gen.integer(1, 4)), m = Rational(gen.integer(0, 2));
        const Rational b(gen.integer(0, 1) ? 1 : -1);
        const AimProblem p = general_in_u(N, a, b, m);
        const Rational u0 = Rational(1, 3);
        const auto exact = aim::quantization(p, u0, 4);
        const int k_max = 8;
        const auto spec = aim::jet_quantization(aim::TaylorJet::from_ratfunc(p.lambda0, u0, k_max + 2),
                                                aim::TaylorJet::from_ratfunc(p.s0, u0, k_max + 2), k_max, 1e-10);
        for (const auto& r : exact.stabilized) {
            bool found = false;
            for (const auto& e : spec.entries()) found = found || std::fabs(e.value - r.root.approx()) <= 1e-8 * std::max(1.0, std::fabs(e.value));
            CHECK_MESSAGE(found, "root " << r.root.approx() << " N=" << N);
        }
    }
}

TEST_CASE("solution generator") {
    SUBCASE("ground state is constant") {
        const AimProblem p = general_in_x(0, Rational(1), Rational(1), Rational(0));
        const auto ladder = aim::aim_ladder(p, 2);
        const auto y = aim::solution_generator_numeric(ladder[2], 0.0, 0.1, 0.9, 50);
        REQUIRE(y.y.size() == 50);
        for (double v : y.y) CHECK(std::fabs(v - 1.0) < 1e-10);
    }
    // Oscillator-type class b = 0, N = 0, a = 1, m = 0 at w = 4: f = 1 - (2/3) x^2.
    const RatFunc l0 = c(Rational(2)) * (RatFunc::x() - inv(UniPoly::monomial(Rational(1), 1)));
    const RatFunc s0 = -RatFunc::w();
    const AimProblem p(l0, s0);
    const auto ladder = aim::aim_ladder(p, 3);
    SUBCASE("first excited state matches the confluent polynomial") {
        const auto y = aim::solution_generator_numeric(ladder[3], 4.0, 0.1, 1.0, 201);
        const auto f = [](double x) { return 1.0 - 2.0 * x * x / 3.0; };
        for (std::size_t i = 0; i < y.x.size(); ++i) CHECK(std::fabs(y.y[i] - f(y.x[i]) / f(0.1)) < 1e-8);

        // ODE residual with 5-point stencils on the sample grid.
        const double h = y.x[1] - y.x[0];
        double worst = 0.0;
        for (std::size_t i = 2; i + 2 < y.x.size(); ++i) {
            const double d1 = (y.y[i - 2] - 8 * y.y[i - 1] + 8 * y.y[i + 1] - y.y[i + 2]) / (12 * h);
            const double d2 = (-y.y[i - 2] + 16 * y.y[i - 1] - 30 * y.y[i] + 16 * y.y[i + 1] - y.y[i + 2]) / (12 * h * h);
            worst = std::max(worst, std::fabs(d2 - l0.eval(y.x[i], 4.0) * d1 - s0.eval(y.x[i], 4.0) * y.y[i]));
        }
        CHECK(worst < 1e-6);
    }
    SUBCASE("a node on the path is a pole of alpha") {
        CHECK_THROWS_AS(aim::solution_generator_numeric(ladder[3], 4.0, 0.1, 2.0, 20), aim::PoleOnPath);
    }
}
