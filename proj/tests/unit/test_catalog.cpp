#include "doctest.h"
#include "support/random.hpp"

#include "aim/catalog/closed_form.hpp"
#include "aim/catalog/pipeline.hpp"
#include "aim/catalog/reduction.hpp"
#include "aim/errors.hpp"

#include <cmath>

using namespace aim;
using namespace aim::catalog;
using aim::testing::Gen;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

RatFunc x_pow(int k) {
    if (k >= 0) return RatFunc(BiPoly::monomial(Rational(1), k, 0));
    return RatFunc(BiPoly::constant(Rational(1)), BiPoly::monomial(Rational(1), -k, 0));
}

// y'' - lambda0 y' - s0 y for the general class, with lambda0 and s0 written
// out from the ODE rather than taken from to_aim_problem.
RatFunc general_residual(const GeneralClassParams& p, const RatFunc& y, const Rational& w) {
    const RatFunc inv_d(BiPoly::constant(Rational(1)),
                        BiPoly::constant(Rational(1)) - BiPoly::monomial(p.b, p.N + 2, 0));
    const RatFunc l0 = RatFunc(Rational(2)) * (RatFunc(p.a) * x_pow(p.N + 1) * inv_d - RatFunc(p.m + Rational(1)) * x_pow(-1));
    const RatFunc s0 = -(RatFunc(w) * x_pow(p.N) * inv_d);
    const RatFunc y1 = y.diff_x();
    return y1.diff_x() - l0 * y1 - s0 * y;
}

RatFunc bender_residual(const BenderParams& p, const RatFunc& f, const Rational& w) {
    const RatFunc l0 = RatFunc(Rational(2)) * (RatFunc(p.a) * x_pow(p.N + 1) - RatFunc(p.m + Rational(1)) * x_pow(-1));
    const RatFunc s0 = -(RatFunc(w) * x_pow(p.N));
    const RatFunc f1 = f.diff_x();
    return f1.diff_x() - l0 * f1 - s0 * f;
}

GeneralClassParams random_general(Gen& g, int N) {
    for (;;) {
        GeneralClassParams p{N, g.rational_in(R(1, 4), R(3)), g.rational_in(R(-2), R(2)), g.rational_in(R(0), R(2))};
        if (p.b.is_zero()) continue;
        try {
            (void)p.rho();
            return p;
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST_CASE("general eigenvalue examples") {
    Gen g;
    for (int i = 0; i < 10; ++i) {
        const GeneralClassParams p = random_general(g, g.integer(-1, 3));
        CHECK(general_eigenvalue(p, 0) == R(0));
    }
    GeneralClassParams p1{1, R(1), R(1), R(0)};
    CHECK(general_eigenvalue(p1, 1) == R(18));
    for (int i = 0; i < 10; ++i) {
        GeneralClassParams q = random_general(g, 1);
        const int n = g.integer(0, 5);
        const Rational expected = Rational(3 * n) * (R(2) * q.a + R(2) * q.b * q.m + Rational(3 * n + 1) * q.b);
        CHECK(general_eigenvalue(q, n) == expected);
    }
    GeneralClassParams pm{-1, R(1), R(1), R(0)};
    CHECK(general_eigenvalue(pm, 2) == R(10));
    GeneralClassParams pz{0, R(1), R(0), R(0)};
    CHECK_THROWS_AS(general_eigenvalue(pz, 1), BZero);
}

TEST_CASE("general eigenfunction examples") {
    Gen g;
    for (int i = 0; i < 5; ++i) {
        const GeneralClassParams p = random_general(g, g.integer(0, 2));
        CHECK(general_eigenfunction(p, 0, R(1, 7)) == R(1));
    }
    for (int i = 0; i < 10; ++i) {
        const GeneralClassParams p = random_general(g, g.integer(0, 2));
        const Rational x(1, 3 + i % 3);
        if (p.b.sign() > 0 && p.b * x.pow(p.N + 2) >= R(1)) continue;
        const Rational s = p.sigma(), rho = p.rho(), u = x.pow(p.N + 2), q(p.N + 2);
        const Rational y1 = -(q * s * (R(1) - p.b * (rho + R(1)) * u / s));
        CHECK(general_eigenfunction(p, 1, x) == y1);
        const Rational y2 = q * q * s * (s + R(1)) *
                            (R(1) - R(2) * p.b * (rho + R(2)) * u / s +
                             p.b * p.b * (rho + R(2)) * (rho + R(3)) * u * u / (s * (s + R(1))));
        CHECK(general_eigenfunction(p, 2, x) == y2);
    }
    GeneralClassParams p{0, R(1), R(1), R(0)};
    const Rational s = p.sigma(), rho = p.rho(), u = R(1, 4);
    const Rational y2 = R(4) * s * (s + R(1)) *
                        (R(1) - R(2) * (rho + R(2)) * u / s + (rho + R(2)) * (rho + R(3)) * u * u / (s * (s + R(1))));
    CHECK(general_eigenfunction(p, 2, R(1, 2)) == y2);
    CHECK_THROWS_AS(general_eigenfunction(p, 1, R(1)), InvalidSpec);
    CHECK(general_domain_end(p) == doctest::Approx(1.0));
    GeneralClassParams q{1, R(1), R(8), R(0)};
    CHECK(general_domain_end(q) == doctest::Approx(0.5));
}

TEST_CASE("family mappings") {
    const GeneralClassParams g1 = pt1_as_general(PTFirstParams{R(2, 3), R(5, 4)});
    CHECK(g1 == GeneralClassParams{0, R(5, 4) + R(3, 2), R(1), R(2, 3)});
    const GeneralClassParams g2 = pt2_as_general(PTSecondParams{R(6), R(3, 2)});
    CHECK(g2 == GeneralClassParams{0, R(6) - R(1, 2), R(-1), R(3, 2) - R(1)});
    const GeneralClassParams gb = bender_as_general(BenderParams{1, R(2), R(1, 2)});
    CHECK(gb == GeneralClassParams{1, R(2), R(0), R(1, 2)});

    const ReducedProblem r1 = to_aim_problem(PTFirstParams{R(1), R(2)}, Coordinate::natural);
    CHECK(r1.variable == "t");
    CHECK(r1.substitutions.size() == 3);
    const ReducedProblem rb = to_aim_problem(BenderParams{0, R(1), R(0)});
    CHECK(rb.problem.lambda0.num().is_w_free());
    CHECK(rb.stride == 1);
    CHECK_THROWS_AS(to_aim_problem(BenderParams{0, R(-1), R(0)}), InvalidSpec);
    CHECK_THROWS_AS(to_aim_problem(PTSecondParams{R(1), R(2)}), InvalidSpec);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(BenderParams{-2, R(1), R(0)}), InvalidSpec);
    CHECK_THROWS_AS(validate(BenderParams{0, R(1), R(-2)}), InvalidSpec);
    CHECK_NOTHROW(validate(BenderParams{0, R(1), R(-1)}));
    CHECK_THROWS_AS(validate(CoulombParams{R(0), R(0)}), InvalidSpec);
    CHECK_THROWS_AS(validate(PTFirstParams{R(0), R(1)}), InvalidSpec);
    CHECK_THROWS_AS(validate(PTFirstParams{R(1), R(1), R(0)}), InvalidSpec);
    CHECK_THROWS_AS(validate(PTSecondParams{R(1), R(3)}), InvalidSpec);
    const PTSecondParams swapped = normalize_pt2(PTSecondParams{R(-5), R(1, 2)});
    CHECK(swapped.alpha == R(4));
    CHECK(swapped.beta == R(1, 2));
    CHECK(angular_m(R(1), 3) == R(1));
    CHECK(angular_m(R(2), 5) == R(3));
}

TEST_CASE("bender, oscillator, coulomb and sextic examples") {
    Gen g;
    for (int n = 0; n < 6; ++n) {
        const Rational a = g.rational_in(R(1, 4), R(3));
        const Rational m = g.rational_in(R(0), R(3));
        CHECK(bender_energy(BenderParams{0, a, m}, n) == a * (Rational(4 * n + 3) + R(2) * m));
        CHECK(bender_energy(BenderParams{1, R(1), R(0)}, n) == Rational(6 * n + 4));
        CHECK(oscillator_energy(OscillatorParams{R(1), R(0)}, n) == Rational(4 * n + 3));
        CHECK(coulomb_energy(R(2), R(0), n) == -R(1) / Rational((n + 1) * (n + 1)));
        const BenderParams bp{g.integer(-1, 3), a, m};
        CHECK(bender_energy(bp, 0) == a * (R(2) * m + Rational(bp.N + 3)));
        CHECK(bender_energy(bp, 0) == bender_shift(bp));
        // Coulomb as Bender N = -1: coupling 2a(n+m+1) with energy -a^2.
        const Rational coupling = R(2) * a * (Rational(n + 1) + m);
        CHECK(coulomb_energy(coupling, m, n) == -(a * a));
    }
    CHECK(bender_energy(BenderParams{0, R(1), R(0)}, 0) == R(3));
    CHECK(coulomb_energy(R(2), R(1), 0) == R(-1, 4));
    CHECK_THROWS_AS(coulomb_energy(R(2), R(-1), 0), DegenerateIndex);
    CHECK(sextic_zero_energy_coupling(R(1), R(0), 0) == R(5));
    CHECK(sextic_zero_energy_coupling(R(1), R(0), 1) == R(13));
    CHECK(sextic_zero_energy_coupling(R(0), R(0), 3) == R(0));
}

TEST_CASE("poschl-teller examples") {
    for (int n = 0; n < 5; ++n) CHECK(pt1_energy(PTFirstParams{R(1, 1000000), R(1, 1000000)}, n) > R(0));
    // Well limit: alpha = beta -> 0 gives 4(n+1)^2; exact at the boundary of the family.
    for (int n = 0; n < 5; ++n) {
        const Rational e = pt1_energy(PTFirstParams{R(1, 1000), R(1, 1000)}, n);
        CHECK(std::fabs(e.to_double() - 4.0 * (n + 1) * (n + 1)) / (4.0 * (n + 1) * (n + 1)) < 1e-2);
    }
    const PTFirstParams p1{R(1), R(2)};
    CHECK(pt1_energy(p1, 0) == R(25));
    CHECK(pt1_energy(p1, 1) == R(49));
    CHECK(pt1_energy(p1, 2) == R(81));
    for (double x : {0.2, 0.7, 1.3})
        CHECK(pt1_wavefunction(p1, 0, x) == doctest::Approx(std::pow(std::cos(x), 2.0) * std::pow(std::sin(x), 3.0)));

    const PTSecondParams p2{R(6), R(3, 2)};
    CHECK(pt2_nmax(p2) == 2);
    CHECK(pt2_energy(p2, 0) == R(-81, 4));
    CHECK(pt2_energy(p2, 1) == R(-25, 4));
    CHECK(pt2_energy(p2, 2) == R(-1, 4));
    CHECK_THROWS_AS(pt2_energy(p2, 3), IndexAboveNmax);
    CHECK(pt2_nmax(PTSecondParams{R(5), R(1)}) == 1);
    CHECK(pt2_nmax(PTSecondParams{R(5001, 1000), R(1)}) == 2);
    CHECK(pt2_energy(PTSecondParams{R(5), R(1)}, 0) == R(-16));
    for (double x : {0.3, 1.1})
        CHECK(pt2_wavefunction(p2, 0, x) == doctest::Approx(std::pow(std::cosh(x), -6.0) * std::pow(std::sinh(x), 1.5)));

    const Spectrum s = closed_form_spectrum(PTSecondParams{R(5), R(1)}, 5);
    REQUIRE(s.size() == 2);
    CHECK_FALSE(s[1].note.empty());
    const Spectrum s2 = closed_form_spectrum(p2, 5);
    REQUIRE(s2.size() == 3);
    CHECK(s2[0].provenance == Provenance::closed_form);
    CHECK(s2[2].note.empty());
}

TEST_CASE("physical energies scale with k squared") {
    for (const Rational& k : {R(1, 2), R(3), R(7, 5)}) {
        for (int n = 0; n < 3; ++n) {
            CHECK(pt1_physical_energy(PTFirstParams{R(1), R(2), k}, n) == k * k * pt1_energy(PTFirstParams{R(1), R(2)}, n));
            CHECK(pt2_physical_energy(PTSecondParams{R(6), R(3, 2), k}, n) ==
                  k * k * pt2_energy(PTSecondParams{R(6), R(3, 2)}, n));
        }
    }
}

TEST_CASE("property: reductions reproduce the poschl-teller spectra") {
    Gen g;
    for (int draw = 0; draw < 20; ++draw) {
        const PTFirstParams p1{g.rational_in(R(0), R(4)) + R(1, 13), g.rational_in(R(0), R(4)) + R(1, 11)};
        const Rational d = g.rational_in(R(1, 2), R(6));
        const Rational beta = g.rational_in(R(-2), R(3));
        const PTSecondParams p2{beta + d, beta};
        const GeneralClassParams g1 = pt1_as_general(p1), g2 = pt2_as_general(p2);
        const Rational s1 = p1.alpha + p1.beta + R(2), s2 = p2.alpha - p2.beta;
        for (int n = 0; n <= 5; ++n) {
            CHECK(general_eigenvalue(g1, n) == pt1_energy(p1, n) - s1 * s1);
            const Rational e2 = -(s2 - Rational(2 * n)) * (s2 - Rational(2 * n));
            CHECK(general_eigenvalue(g2, n) == e2 + s2 * s2);
        }
    }
}

TEST_CASE("property: closed-form eigenfunctions solve the general ODE exactly") {
    Gen g;
    for (int draw = 0; draw < 20; ++draw) {
        const GeneralClassParams p = random_general(g, g.integer(-1, 3));
        for (int n = 0; n <= 4; ++n) {
            const RatFunc y = general_eigenfunction_poly(p, n);
            CHECK(general_residual(p, y, general_eigenvalue(p, n)).is_zero());
        }
        CHECK_FALSE(general_residual(p, general_eigenfunction_poly(p, 2), general_eigenvalue(p, 2) + R(1)).is_zero());
    }
}

TEST_CASE("property: confluent eigenfunctions solve the bender ODE exactly") {
    Gen g;
    for (int draw = 0; draw < 20; ++draw) {
        const BenderParams p{g.integer(-1, 3), g.rational_in(R(1, 4), R(3)), g.rational_in(R(0), R(2))};
        for (int n = 0; n <= 4; ++n) {
            const Rational w = bender_energy(p, n) - bender_shift(p);
            CHECK(bender_residual(p, bender_eigenfunction_poly(p, n), w).is_zero());
        }
    }
}

TEST_CASE("property: spectra are strictly ordered") {
    Gen g;
    for (int draw = 0; draw < 20; ++draw) {
        const PTFirstParams p1{g.rational_in(R(0), R(4)) + R(1, 7), g.rational_in(R(0), R(4)) + R(1, 9)};
        for (int n = 1; n < 6; ++n) CHECK(pt1_energy(p1, n) > pt1_energy(p1, n - 1));
        const Rational beta = g.rational_in(R(-1), R(3));
        const PTSecondParams p2{beta + g.rational_in(R(1), R(9)), beta};
        for (int n = 1; n <= pt2_nmax(p2); ++n) CHECK(pt2_energy(p2, n) > pt2_energy(p2, n - 1));
        for (int n = 0; n <= pt2_nmax(p2); ++n) CHECK(pt2_energy(p2, n) < R(0));
    }
}

TEST_CASE("jacobi argument conventions") {
    const auto report = jacobi_convention_report(PTFirstParams{R(1), R(2)}, PTSecondParams{R(6), R(3, 2)}, 3);
    REQUIRE(report.size() == 4);
    for (const auto& c : report) MESSAGE(c.family << ": " << c.form << " -> " << (c.matches ? "matches" : "differs"));
    CHECK_FALSE(report[0].matches);
    CHECK(report[1].matches);
    CHECK_FALSE(report[2].matches);
    CHECK(report[3].matches);
}

TEST_CASE("symbolic pipeline") {
    const SymbolicRun r = solve_symbolic(PTFirstParams{R(1), R(2)}, 2);
    REQUIRE(r.complete());
    CHECK(*r.spectrum[0].exact == R(25));
    CHECK(*r.spectrum[1].exact == R(49));
    CHECK(*r.spectrum[2].exact == R(81));
    CHECK(r.spectrum[0].provenance == Provenance::symbolic_aim);

    const SymbolicRun c = solve_symbolic(CoulombParams{R(2), R(0)}, 2);
    REQUIRE(c.complete());
    for (int n = 0; n <= 2; ++n) CHECK(*c.spectrum[n].exact == coulomb_energy(R(2), R(0), n));

    const SymbolicRun t = solve_symbolic(PTSecondParams{R(6), R(3, 2)}, 5);
    CHECK(t.wanted == 3);
    REQUIRE(t.complete());
    CHECK(*t.spectrum[2].exact == R(-1, 4));

    const SymbolicRun b = solve_symbolic(BenderParams{1, R(1), R(0)}, 2);
    REQUIRE(b.complete());
    for (int n = 0; n <= 2; ++n) CHECK(*b.spectrum[n].exact == Rational(6 * n + 4));

    const SymbolicRun xr = solve_symbolic(GeneralClassParams{0, R(1), R(1), R(0)}, 2, {Coordinate::natural, std::nullopt, 0});
    REQUIRE(xr.complete());
    CHECK(*xr.spectrum[2].exact == R(28));
}

TEST_CASE("jet pipeline") {
    const Spectrum s = solve_jet(PTFirstParams{R(1), R(1)}, 1);
    REQUIRE(s.size() >= 1);
    CHECK(std::fabs(s[0].value - 16.0) < 1e-8);
    CHECK(s[0].provenance == Provenance::jet_aim);

    const Spectrum o = solve_jet(OscillatorParams{R(1), R(0)}, 2);
    REQUIRE(o.size() == 3);
    for (int n = 0; n <= 2; ++n) CHECK(o[n].value == doctest::Approx(4.0 * n + 3).epsilon(1e-9));
}
