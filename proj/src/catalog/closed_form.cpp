#include "aim/catalog/closed_form.hpp"

#include "aim/errors.hpp"
#include "aim/hyperfn/hyperfn.hpp"

#include <cmath>
#include <limits>

namespace aim::catalog {

namespace hf = aim::hyperfn;

namespace {

void require_index(int n) {
    if (n < 0) throw Error("eigenvalue index must be non-negative");
}

// (-1)^n (N+2)^n (sigma)_n
Rational eigen_prefactor(int N, const Rational& sigma, int n) {
    Rational r = Rational(N + 2).pow(n) * hf::pochhammer(sigma, n);
    return n % 2 == 0 ? r : -r;
}

// sum_k c_k (scale x^{p})^k as a polynomial in x.
UniPoly substitute_power(const UniPoly& z_poly, const Rational& scale, int p) {
    UniPoly out;
    Rational s(1);
    for (std::size_t k = 0; k < z_poly.coeffs().size(); ++k) {
        out += UniPoly::monomial(z_poly.coeffs()[k] * s, static_cast<int>(k) * p);
        s = s * scale;
    }
    return out;
}

void check_domain(const GeneralClassParams& p, const Rational& x) {
    if (x.sign() < 0) throw InvalidSpec("x must be non-negative");
    if (p.b.sign() > 0 && p.b * x.pow(p.N + 2) >= Rational(1)) throw InvalidSpec("x beyond the singular endpoint");
}

}  // namespace

Rational general_eigenvalue(const GeneralClassParams& p, int n) {
    require_index(n);
    const Rational rho = p.rho();
    const Rational N2(p.N + 2);
    return p.b * N2 * N2 * Rational(n) * (Rational(n) + rho);
}

Rational general_eigenfunction(const GeneralClassParams& p, int n, const Rational& x) {
    require_index(n);
    check_domain(p, x);
    const Rational sigma = p.sigma();
    if (n == 0) return Rational(1);
    return eigen_prefactor(p.N, sigma, n) *
           hf::gauss_2f1_terminating(n, p.rho() + Rational(n), sigma, p.b * x.pow(p.N + 2));
}

double general_eigenfunction(const GeneralClassParams& p, int n, double x) {
    require_index(n);
    if (n == 0) return 1.0;
    const Rational sigma = p.sigma();
    return eigen_prefactor(p.N, sigma, n).to_double() *
           hf::gauss_2f1_terminating(n, (p.rho() + Rational(n)).to_double(), sigma.to_double(),
                                     p.b.to_double() * std::pow(x, p.N + 2));
}

RatFunc general_eigenfunction_poly(const GeneralClassParams& p, int n) {
    require_index(n);
    if (n == 0) return RatFunc(Rational(1));
    const Rational sigma = p.sigma();
    const UniPoly z = hf::gauss_2f1_polynomial(n, p.rho() + Rational(n), sigma);
    return RatFunc(BiPoly::from_x(substitute_power(z, p.b, p.N + 2) * eigen_prefactor(p.N, sigma, n)));
}

double general_domain_end(const GeneralClassParams& p) {
    if (p.b.sign() <= 0) return std::numeric_limits<double>::infinity();
    return std::pow(p.b.to_double(), -1.0 / (p.N + 2));
}

Rational bender_energy(const BenderParams& p, int n) {
    require_index(n);
    return p.a * (Rational(2 * n * (p.N + 2)) + Rational(2) * p.m + Rational(p.N + 3));
}

Rational bender_shift(const BenderParams& p) { return p.a * (Rational(2) * p.m + Rational(p.N + 3)); }

RatFunc bender_eigenfunction_poly(const BenderParams& p, int n) {
    require_index(n);
    if (n == 0) return RatFunc(Rational(1));
    const Rational sigma = (Rational(2) * p.m + Rational(p.N + 3)) / Rational(p.N + 2);
    const UniPoly z = hf::kummer_1f1_polynomial(n, sigma);
    const Rational scale = Rational(2) * p.a / Rational(p.N + 2);
    return RatFunc(BiPoly::from_x(substitute_power(z, scale, p.N + 2) * eigen_prefactor(p.N, sigma, n)));
}

Rational coulomb_energy(const Rational& coupling, const Rational& m, int n) {
    require_index(n);
    const Rational q = Rational(n) + m + Rational(1);
    if (q.is_zero()) throw DegenerateIndex("n + m + 1 = 0");
    return -(coupling * coupling) / (Rational(4) * q * q);
}

Rational oscillator_energy(const OscillatorParams& p, int n) {
    require_index(n);
    return p.a * (Rational(4 * n) + Rational(2) * p.m + Rational(3));
}

Rational sextic_zero_energy_coupling(const Rational& a, const Rational& m, int n) {
    require_index(n);
    return a * (Rational(8 * n) + Rational(2) * m + Rational(5));
}

GeneralClassParams pt1_as_general(const PTFirstParams& p) {
    return GeneralClassParams{0, p.beta + Rational(3, 2), Rational(1), p.alpha};
}

GeneralClassParams pt2_as_general(const PTSecondParams& p) {
    return GeneralClassParams{0, p.alpha - Rational(1, 2), Rational(-1), p.beta - Rational(1)};
}

GeneralClassParams bender_as_general(const BenderParams& p) { return GeneralClassParams{p.N, p.a, Rational(0), p.m}; }

Rational pt1_energy(const PTFirstParams& p, int n) {
    require_index(n);
    const Rational s = p.alpha + p.beta + Rational(2 + 2 * n);
    return s * s;
}

Rational pt1_physical_energy(const PTFirstParams& p, int n) { return p.k_scale * p.k_scale * pt1_energy(p, n); }

double pt1_wavefunction(const PTFirstParams& p, int n, double x) {
    const double c = std::cos(x), s = std::sin(x);
    return std::pow(c, p.alpha.to_double() + 1.0) * std::pow(s, p.beta.to_double() + 1.0) *
           general_eigenfunction(pt1_as_general(p), n, c);
}

int pt2_nmax(const PTSecondParams& p) {
    // Largest integer strictly below h = (alpha - beta)/2 is ceil(h) - 1.
    const Rational h = (p.alpha - p.beta) / Rational(2);
    const Integer fl = h.floor();
    const Integer ceil = Rational(fl) == h ? fl : Integer(fl + 1);
    return static_cast<int>(ceil.get_si()) - 1;
}

Rational pt2_energy(const PTSecondParams& p, int n) {
    require_index(n);
    if (n > pt2_nmax(p)) throw IndexAboveNmax("n = " + std::to_string(n) + " exceeds n_max = " + std::to_string(pt2_nmax(p)));
    const Rational d = p.alpha - p.beta - Rational(2 * n);
    return -(d * d);
}

Rational pt2_physical_energy(const PTSecondParams& p, int n) { return p.k_scale * p.k_scale * pt2_energy(p, n); }

double pt2_wavefunction(const PTSecondParams& p, int n, double x) {
    if (n > pt2_nmax(p)) throw IndexAboveNmax("n exceeds n_max");
    const double t = std::sinh(x);
    return std::pow(std::cosh(x), -p.alpha.to_double()) * std::pow(t, p.beta.to_double()) *
           general_eigenfunction(pt2_as_general(p), n, t);
}

Rational closed_form_eigenvalue(const ProblemSpec& spec, int n) {
    if (const auto* p = std::get_if<GeneralClassParams>(&spec)) return general_eigenvalue(*p, n);
    if (const auto* p = std::get_if<BenderParams>(&spec)) return bender_energy(*p, n);
    if (const auto* p = std::get_if<CoulombParams>(&spec)) return coulomb_energy(p->coupling, p->m, n);
    if (const auto* p = std::get_if<OscillatorParams>(&spec)) return oscillator_energy(*p, n);
    if (const auto* p = std::get_if<PTFirstParams>(&spec)) return pt1_physical_energy(*p, n);
    return pt2_physical_energy(std::get<PTSecondParams>(spec), n);
}

Spectrum closed_form_spectrum(const ProblemSpec& spec, int n_max) {
    validate(spec);
    int last = n_max;
    std::string tail_note;
    if (const auto* p = std::get_if<PTSecondParams>(&spec)) {
        last = std::min(n_max, pt2_nmax(*p));
        const Rational h = (p->alpha - p->beta) / Rational(2);
        if (h.is_integer() && n_max >= h.floor().get_si())
            tail_note = "threshold state n = " + h.to_string() + " (E = 0) excluded";
    }
    Spectrum out;
    for (int n = 0; n <= last; ++n) {
        SpectrumEntry e;
        e.n = n;
        e.exact = closed_form_eigenvalue(spec, n);
        e.value = e.exact->to_double();
        e.provenance = Provenance::closed_form;
        if (n == last) e.note = tail_note;
        out.push(std::move(e));
    }
    return out;
}

std::vector<JacobiCandidate> jacobi_convention_report(const PTFirstParams& p1, const PTSecondParams& p2, int n_max) {
    using Form = Rational (*)(const Rational&, const Rational&, int, const Rational&);
    struct Case {
        const char* family;
        const char* form;
        Form jacobi;
        bool first;
    };
    // Each form returns (-2)^n n! P_n^{(.,.)}(.) at t; (alpha, beta) come from the family.
    static const Case cases[] = {
        {"pt1", "P_n^(alpha+1/2, beta+1/2)(1 + 2 cos^2 x) [printed]",
         [](const Rational& al, const Rational& be, int n, const Rational& t) {
             return hf::jacobi_p(n, al + Rational(1, 2), be + Rational(1, 2), Rational(1) + Rational(2) * t * t);
         },
         true},
        {"pt1", "P_n^(alpha+1/2, beta+1/2)(1 - 2 cos^2 x) [from the 2F1 identity]",
         [](const Rational& al, const Rational& be, int n, const Rational& t) {
             return hf::jacobi_p(n, al + Rational(1, 2), be + Rational(1, 2), Rational(1) - Rational(2) * t * t);
         },
         true},
        {"pt2", "P_n^(alpha-1/2, beta-1/2)(1 + 2 t^2) [printed]",
         [](const Rational& al, const Rational& be, int n, const Rational& t) {
             return hf::jacobi_p(n, al - Rational(1, 2), be - Rational(1, 2), Rational(1) + Rational(2) * t * t);
         },
         false},
        {"pt2", "P_n^(beta-1/2, -alpha-1/2)(1 + 2 t^2) [from the 2F1 identity]",
         [](const Rational& al, const Rational& be, int n, const Rational& t) {
             return hf::jacobi_p(n, be - Rational(1, 2), -al - Rational(1, 2), Rational(1) + Rational(2) * t * t);
         },
         false},
    };
    const std::vector<Rational> t_first{Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(5, 7)};
    const std::vector<Rational> t_second{Rational(1, 5), Rational(1, 2), Rational(1), Rational(2)};

    std::vector<JacobiCandidate> out;
    for (const Case& c : cases) {
        const GeneralClassParams g = c.first ? pt1_as_general(p1) : pt2_as_general(p2);
        const Rational& al = c.first ? p1.alpha : p2.alpha;
        const Rational& be = c.first ? p1.beta : p2.beta;
        JacobiCandidate r{c.family, c.form, true, 0.0};
        for (int n = 0; n <= n_max; ++n) {
            Rational scale(1);
            for (int i = 1; i <= n; ++i) scale = scale * Rational(-2 * i);
            for (const Rational& t : c.first ? t_first : t_second) {
                const Rational reference = general_eigenfunction(g, n, t);
                const Rational candidate = scale * c.jacobi(al, be, n, t);
                if (candidate != reference) r.matches = false;
                const double dev = std::fabs((candidate - reference).to_double()) /
                                   std::max(1.0, std::fabs(reference.to_double()));
                r.max_deviation = std::max(r.max_deviation, dev);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace aim::catalog
