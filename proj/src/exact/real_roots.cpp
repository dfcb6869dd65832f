#include "aim/exact/real_roots.hpp"

#include "aim/errors.hpp"

#include <algorithm>
#include <utility>

namespace aim {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    UniPoly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        // Positive rescaling keeps the sign pattern and tames coefficient growth.
        const Rational s = r.leading().abs().reciprocal();
        seq.push_back(-(r * s));
    }
    return seq;
}

namespace {

int variations(const std::vector<UniPoly>& seq, const Rational& at) {
    int count = 0, last = 0;
    for (const auto& q : seq) {
        const int s = q.sign_at(at);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

Rational cauchy_bound(const UniPoly& p) {
    Rational m(0);
    const Rational lead = p.leading().abs();
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coeff(i).abs() / lead);
    return m + Rational(1);
}

struct Isolated {
    RealRoot root;
    const UniPoly* poly;
    std::vector<UniPoly>* seq;
};

class Refiner {
public:
    Refiner(const UniPoly& q, std::vector<UniPoly>& seq) : q_(q), seq_(seq) {
        const Integer lead = abs(q.leading().numerator());
        certify_ = Rational(Integer(1), Integer(lead * lead));
    }

    /// Shrinks (lo, hi) around its unique root until it is no wider than `width`
    /// and wide enough tests have been made to decide rationality.
    void refine(RealRoot& r, const Rational& width, bool certify) const {
        if (r.exact) return;
        int sign_lo = q_.sign_at(r.lo);
        for (int iter = 0;; ++iter) {
            const Rational w = r.hi - r.lo;
            const bool narrow = w <= width && (!certify || w < certify_);
            if (narrow && sign_lo != 0 && q_.sign_at(r.hi) != 0) break;
            if (iter % 8 == 0 && try_simplest(r)) return;
            const Rational mid = (r.lo + r.hi) * Rational(1, 2);
            const int sm = q_.sign_at(mid);
            if (sm == 0) {
                r.lo = r.hi = mid;
                r.exact = true;
                return;
            }
            bool left;
            if (sign_lo != 0) left = sign_lo != sm;
            else left = sturm_count(seq_, r.lo, mid) == 1;
            if (left) {
                r.hi = mid;
            } else {
                r.lo = mid;
                sign_lo = sm;
            }
        }
        if (certify) try_simplest(r);
    }

private:
    bool try_simplest(RealRoot& r) const {
        const Rational s = simplest_between(r.lo, r.hi);
        if (s == r.lo || s == r.hi) return false;
        if (!q_(s).is_zero()) return false;
        r.lo = r.hi = s;
        r.exact = true;
        return true;
    }

    const UniPoly& q_;
    std::vector<UniPoly>& seq_;
    Rational certify_;
};

}  // namespace

int sturm_count(const std::vector<UniPoly>& seq, const Rational& lo, const Rational& hi) {
    return variations(seq, lo) - variations(seq, hi);
}

std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& width) {
    if (p.is_zero()) throw ZeroPolynomial("real_roots of the zero polynomial");
    if (p.degree() == 0) return {};

    const auto factors = squarefree_factorization(p);
    std::vector<UniPoly> prims;
    std::vector<std::vector<UniPoly>> seqs;
    prims.reserve(factors.size());
    seqs.reserve(factors.size());
    for (const auto& f : factors) {
        prims.push_back(f.first.primitive());
        seqs.push_back(sturm_sequence(prims.back()));
    }

    std::vector<Isolated> found;
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
        const UniPoly& q = prims[fi];
        auto& seq = seqs[fi];
        const int mult = factors[fi].second;
        const Rational bound = cauchy_bound(q);
        std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
        while (!stack.empty()) {
            auto [lo, hi] = stack.back();
            stack.pop_back();
            const int n = sturm_count(seq, lo, hi);
            if (n == 0) continue;
            if (n == 1) {
                RealRoot r{lo, hi, false, mult};
                if (q(hi).is_zero()) r = RealRoot{hi, hi, true, mult};
                found.push_back({r, &q, &seq});
                continue;
            }
            const Rational mid = (lo + hi) * Rational(1, 2);
            stack.emplace_back(lo, mid);
            stack.emplace_back(mid, hi);
        }
    }

    for (auto& f : found) Refiner(*f.poly, *f.seq).refine(f.root, width, true);

    // Roots of distinct square-free factors are distinct; separate any overlap.
    auto by_lo = [](const Isolated& a, const Isolated& b) { return a.root.lo < b.root.lo; };
    std::sort(found.begin(), found.end(), by_lo);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < found.size(); ++i) {
            auto& a = found[i];
            auto& b = found[i + 1];
            if (a.root.hi < b.root.lo || (a.root.exact && b.root.exact)) continue;
            if (a.root.hi == b.root.lo && (a.root.exact != b.root.exact)) continue;
            for (auto* f : {&a, &b}) {
                if (f->root.exact) continue;
                const Rational half = (f->root.hi - f->root.lo) * Rational(1, 4);
                Refiner(*f->poly, *f->seq).refine(f->root, half, false);
            }
            changed = true;
        }
        if (changed) std::sort(found.begin(), found.end(), by_lo);
    }

    std::vector<RealRoot> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(f.root);
    return out;
}

}  // namespace aim
