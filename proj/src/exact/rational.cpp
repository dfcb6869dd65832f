#include "aim/exact/rational.hpp"

#include "aim/errors.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace aim {

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("malformed rational: '" + std::string(whole) + "'");
    Integer v(std::string(s), 10);
    return negative ? Integer(-v) : v;
}

Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        Integer den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    // Decimal: [sign] digits [. digits] [e [sign] digits]
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        Integer ev = parse_integer(text.substr(e + 1), text);
        if (!ev.fits_slong_p() || ev > 100000 || ev < -100000) throw ParseError("exponent out of range in '" + std::string(text) + "'");
        exponent = ev.get_si();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        auto ip = mantissa.substr(0, dot);
        auto fp = mantissa.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw ParseError("malformed rational: '" + std::string(text) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mantissa)) throw ParseError("malformed rational: '" + std::string(text) + "'");
        digits = std::string(mantissa);
    }
    Integer num(digits, 10);
    if (negative) num = -num;
    const long scale = exponent - frac_len;
    if (scale >= 0) return Rational(Integer(num * pow10(static_cast<unsigned long>(scale))));
    return Rational(num, pow10(static_cast<unsigned long>(-scale)));
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw ParseError("non-finite double cannot be represented exactly");
    mpq_class q(value);
    return Rational(q);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    return Rational(value_.get_den(), value_.get_num());
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

namespace {

// lo, hi > 0, lo <= hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
    const Integer fl = lo.floor();
    if (Rational(fl) == lo) return lo;
    if (Rational(Integer(fl + 1)) <= hi) return Rational(Integer(fl + 1));
    const Rational f(fl);
    return f + simplest_positive((hi - f).reciprocal(), (lo - f).reciprocal()).reciprocal();
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (hi < lo) return simplest_between(hi, lo);
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_positive(-hi, -lo);
    return simplest_positive(lo, hi);
}

Rational binomial(const Rational& top, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * (top - Rational(i)) / Rational(i + 1);
    return r;
}

}  // namespace aim
