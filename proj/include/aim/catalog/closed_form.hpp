#pragma once

#include "aim/catalog/params.hpp"
#include "aim/exact/ratfunc.hpp"
#include "aim/spectrum.hpp"

#include <string>
#include <vector>

namespace aim::catalog {

// General class.

/// w_n = b (N+2)^2 n (n + rho). Throws BZero when b = 0.
Rational general_eigenvalue(const GeneralClassParams& p, int n);
/// (-1)^n (N+2)^n (sigma)_n 2F1(-n, rho+n; sigma; b x^{N+2}); x must lie in the domain.
Rational general_eigenfunction(const GeneralClassParams& p, int n, const Rational& x);
double general_eigenfunction(const GeneralClassParams& p, int n, double x);
/// The same eigenfunction as a polynomial in x.
RatFunc general_eigenfunction_poly(const GeneralClassParams& p, int n);
/// Right end of the domain, b^{-1/(N+2)}, as a double; infinity when b <= 0.
double general_domain_end(const GeneralClassParams& p);

// Bender class and its specializations.

/// E = a (2n(N+2) + 2m + N + 3)
Rational bender_energy(const BenderParams& p, int n);
/// a (2m + N + 3), so that w = E - bender_shift(p).
Rational bender_shift(const BenderParams& p);
/// f_n = (-1)^n (N+2)^n (sigma)_n 1F1(-n; sigma; 2a x^{N+2}/(N+2)) as a polynomial in x.
RatFunc bender_eigenfunction_poly(const BenderParams& p, int n);
/// -(Ze^2)^2 / (4 (n+m+1)^2); throws DegenerateIndex when n + m + 1 = 0.
Rational coulomb_energy(const Rational& coupling, const Rational& m, int n);
/// a (4n + 2m + 3)
Rational oscillator_energy(const OscillatorParams& p, int n);
/// g = a (8n + 2m + 5): -y'' + (a^2 x^6 - g x^2 + m(m+1)/x^2) y has E = 0.
Rational sextic_zero_energy_coupling(const Rational& a, const Rational& m, int n);

// Poschl-Teller.

/// (alpha + beta + 2 + 2n)^2 in the scaled coordinate x = ku.
Rational pt1_energy(const PTFirstParams& p, int n);
/// k^2 E_n
Rational pt1_physical_energy(const PTFirstParams& p, int n);
/// cos^{alpha+1}x sin^{beta+1}x f_n(cos x), 0 < x < pi/2.
double pt1_wavefunction(const PTFirstParams& p, int n, double x);

/// Largest integer strictly below (alpha - beta)/2 (-1 when there is none).
int pt2_nmax(const PTSecondParams& p);
/// -(alpha - beta - 2n)^2; throws IndexAboveNmax when n > pt2_nmax(p).
Rational pt2_energy(const PTSecondParams& p, int n);
Rational pt2_physical_energy(const PTSecondParams& p, int n);
/// cosh^{-alpha}x sinh^{beta}x f_n(sinh x), 0 < x.
double pt2_wavefunction(const PTSecondParams& p, int n, double x);

/// The general-class parameters each trigonometric / hyperbolic family maps to.
GeneralClassParams pt1_as_general(const PTFirstParams& p);
GeneralClassParams pt2_as_general(const PTSecondParams& p);
GeneralClassParams bender_as_general(const BenderParams& p);

/// Closed-form eigenvalues n = 0..n_max in the family's physical units. PT-II
/// stops at pt2_nmax; a threshold state excluded by the strict rule is noted.
Spectrum closed_form_spectrum(const ProblemSpec& spec, int n_max);
/// Eigenvalue n of the family (physical units).
Rational closed_form_eigenvalue(const ProblemSpec& spec, int n);

/// One Jacobi-form candidate compared against the 2F1 eigenfunction.
struct JacobiCandidate {
    std::string family;
    std::string form;
    bool matches = false;
    /// Largest |jacobi - 2F1| / max(1, |2F1|) over the samples.
    double max_deviation = 0.0;
};

/// Compares the printed Jacobi forms of the trigonometric and hyperbolic
/// eigenfunctions, and the forms obtained from the standard 2F1/Jacobi
/// identity, against the 2F1 forms at exact rational sample points.
std::vector<JacobiCandidate> jacobi_convention_report(const PTFirstParams& p1, const PTSecondParams& p2, int n_max);

}  // namespace aim::catalog
