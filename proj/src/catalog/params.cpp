#include "aim/catalog/params.hpp"

#include "aim/errors.hpp"

namespace aim::catalog {

Rational GeneralClassParams::rho() const {
    if (b.is_zero()) throw BZero("rho is undefined for b = 0");
    return ((Rational(2) * m + Rational(1)) * b + Rational(2) * a) / (Rational(N + 2) * b);
}

Rational GeneralClassParams::sigma() const { return (Rational(2) * m + Rational(N + 3)) / Rational(N + 2); }

namespace {

template <class... F>
struct Overload : F... {
    using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidSpec(what);
}

}  // namespace

std::string family_name(const ProblemSpec& spec) {
    return std::visit(Overload{
                          [](const GeneralClassParams&) { return std::string("general"); },
                          [](const BenderParams&) { return std::string("bender"); },
                          [](const CoulombParams&) { return std::string("coulomb"); },
                          [](const OscillatorParams&) { return std::string("oscillator"); },
                          [](const PTFirstParams&) { return std::string("pt1"); },
                          [](const PTSecondParams&) { return std::string("pt2"); },
                      },
                      spec);
}

std::vector<std::pair<std::string, Rational>> parameter_list(const ProblemSpec& spec) {
    using List = std::vector<std::pair<std::string, Rational>>;
    return std::visit(Overload{
                          [](const GeneralClassParams& p) {
                              return List{{"N", Rational(p.N)}, {"a", p.a}, {"b", p.b}, {"m", p.m}};
                          },
                          [](const BenderParams& p) { return List{{"N", Rational(p.N)}, {"a", p.a}, {"m", p.m}}; },
                          [](const CoulombParams& p) { return List{{"coupling", p.coupling}, {"m", p.m}}; },
                          [](const OscillatorParams& p) { return List{{"a", p.a}, {"m", p.m}}; },
                          [](const PTFirstParams& p) {
                              return List{{"alpha", p.alpha}, {"beta", p.beta}, {"k", p.k_scale}};
                          },
                          [](const PTSecondParams& p) {
                              return List{{"alpha", p.alpha}, {"beta", p.beta}, {"k", p.k_scale}};
                          },
                      },
                      spec);
}

void validate(const ProblemSpec& spec) {
    std::visit(Overload{
                   [](const GeneralClassParams& p) {
                       require(p.N >= -1, "general: N must be >= -1");
                       require(!(p.a.is_zero() && p.m == Rational(-1)), "general: a = 0 with m = -1 leaves lambda0 = 0");
                   },
                   [](const BenderParams& p) {
                       require(p.N >= -1, "bender: N must be >= -1");
                       require(p.a.sign() > 0, "bender: a must be positive");
                       require(p.m >= Rational(-1), "bender: m must be >= -1");
                   },
                   [](const CoulombParams& p) {
                       require(p.coupling.sign() > 0, "coulomb: coupling must be positive");
                       require(p.m >= Rational(-1), "coulomb: m must be >= -1");
                   },
                   [](const OscillatorParams& p) {
                       require(p.a.sign() > 0, "oscillator: a must be positive");
                       require(p.m >= Rational(-1), "oscillator: m must be >= -1");
                   },
                   [](const PTFirstParams& p) {
                       require(p.alpha.sign() > 0 && p.beta.sign() > 0, "pt1: alpha and beta must be positive");
                       require(p.k_scale.sign() > 0, "pt1: k must be positive");
                   },
                   [](const PTSecondParams& p) {
                       require(p.alpha > p.beta, "pt2: alpha must exceed beta (see normalize_pt2)");
                       require(p.k_scale.sign() > 0, "pt2: k must be positive");
                   },
               },
               spec);
}

PTSecondParams normalize_pt2(const PTSecondParams& p) {
    if (!(p.alpha < p.beta)) return p;
    return PTSecondParams{-p.alpha - Rational(1), -p.beta + Rational(1), p.k_scale};
}

Rational angular_m(const Rational& ell, int d) { return ell + Rational(d - 3, 2); }

}  // namespace aim::catalog
