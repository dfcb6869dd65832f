#include "aim/exact/bipoly.hpp"

#include "aim/errors.hpp"

#include <algorithm>
#include <sstream>

namespace aim {

void BiPoly::trim() {
    while (!slices_.empty() && slices_.back().is_zero()) slices_.pop_back();
}

BiPoly::BiPoly(const std::map<Monomial, Rational>& terms) {
    for (const auto& [mono, c] : terms) {
        if (c.is_zero()) continue;
        if (static_cast<int>(slices_.size()) <= mono.deg_w) slices_.resize(static_cast<std::size_t>(mono.deg_w) + 1);
        slices_[static_cast<std::size_t>(mono.deg_w)] += UniPoly::monomial(c, mono.deg_x);
    }
    trim();
}

BiPoly BiPoly::constant(const Rational& c) { return BiPoly(std::vector<UniPoly>{UniPoly::constant(c)}); }

BiPoly BiPoly::monomial(const Rational& c, int deg_x, int deg_w) {
    std::vector<UniPoly> s(static_cast<std::size_t>(deg_w) + 1);
    s.back() = UniPoly::monomial(c, deg_x);
    return BiPoly(std::move(s));
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& s : slices_) d = std::max(d, s.degree());
    return d;
}

std::map<Monomial, Rational> BiPoly::terms() const {
    std::map<Monomial, Rational> out;
    for (std::size_t j = 0; j < slices_.size(); ++j) {
        const auto& c = slices_[j].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) out.emplace(Monomial{static_cast<int>(i), static_cast<int>(j)}, c[i]);
    }
    return out;
}

UniPoly BiPoly::as_x_poly() const {
    if (!is_w_free()) throw Error("as_x_poly: polynomial depends on w");
    return slices_.empty() ? UniPoly{} : slices_.front();
}

Rational BiPoly::leading_coefficient() const {
    if (is_zero()) return Rational(0);
    const int dx = deg_x();
    for (auto it = slices_.rbegin(); it != slices_.rend(); ++it)
        if (it->degree() == dx) return it->leading();
    return Rational(0);
}

BiPoly BiPoly::diff_x() const {
    std::vector<UniPoly> s;
    s.reserve(slices_.size());
    for (const auto& p : slices_) s.push_back(p.derivative());
    return BiPoly(std::move(s));
}

UniPolyW BiPoly::eval_x(const Rational& x0) const {
    std::vector<Rational> c;
    c.reserve(slices_.size());
    for (const auto& p : slices_) c.push_back(p(x0));
    return UniPolyW(std::move(c));
}

Rational BiPoly::eval(const Rational& x0, const Rational& w0) const { return eval_x(x0)(w0); }

BiPoly BiPoly::substitute_w(const Rational& w0) const {
    UniPoly acc;
    for (auto it = slices_.rbegin(); it != slices_.rend(); ++it) {
        acc *= w0;
        acc += *it;
    }
    return from_x(acc);
}

BiPoly BiPoly::shift_w(const Rational& shift) const {
    // Horner in w with (w + shift) as the variable.
    BiPoly acc;
    const BiPoly wp = w() + constant(shift);
    for (auto it = slices_.rbegin(); it != slices_.rend(); ++it) {
        acc = acc * wp;
        acc += from_x(*it);
    }
    return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    if (rhs.slices_.size() > slices_.size()) slices_.resize(rhs.slices_.size());
    for (std::size_t j = 0; j < rhs.slices_.size(); ++j) slices_[j] += rhs.slices_[j];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    if (rhs.slices_.size() > slices_.size()) slices_.resize(rhs.slices_.size());
    for (std::size_t j = 0; j < rhs.slices_.size(); ++j) slices_[j] -= rhs.slices_[j];
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
    for (auto& s : slices_) s *= c;
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<UniPoly> s(a.slices_.size() + b.slices_.size() - 1);
    for (std::size_t i = 0; i < a.slices_.size(); ++i)
        for (std::size_t j = 0; j < b.slices_.size(); ++j) s[i + j] += a.slices_[i] * b.slices_[j];
    return BiPoly(std::move(s));
}

BiPoly operator*(const BiPoly& a, const UniPoly& x_poly) {
    std::vector<UniPoly> s;
    s.reserve(a.slices_.size());
    for (const auto& p : a.slices_) s.push_back(p * x_poly);
    return BiPoly(std::move(s));
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto t = terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational a = c.abs();
        const bool bare = m.deg_x == 0 && m.deg_w == 0;
        if (bare || a != Rational(1)) os << a;
        bool need_star = !bare && a != Rational(1);
        auto factor = [&](char v, int e) {
            if (e == 0) return;
            if (need_star) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            need_star = true;
        };
        factor('x', m.deg_x);
        factor('w', m.deg_w);
    }
    return os.str();
}

}  // namespace aim
