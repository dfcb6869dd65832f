#include "aim/catalog/pipeline.hpp"

#include "aim/catalog/closed_form.hpp"
#include "aim/engine/jet.hpp"
#include "aim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace aim::catalog {

namespace {

int wanted_count(const ProblemSpec& spec, int n_max) {
    if (const auto* p = std::get_if<PTSecondParams>(&spec)) return std::min(n_max, pt2_nmax(*p)) + 1;
    return n_max + 1;
}

bool seen(const std::vector<Rational>& found, const RealRoot& r) {
    return std::any_of(found.begin(), found.end(), [&](const Rational& f) {
        return r.exact ? f == r.value() : std::fabs(f.to_double() - r.approx()) <= 1e-9 * std::max(1.0, std::fabs(r.approx()));
    });
}

}  // namespace

SymbolicRun solve_symbolic(const ProblemSpec& spec, int n_max, const SymbolicOptions& options) {
    if (n_max < 0) throw Error("n_max must be non-negative");
    const ReducedProblem reduced = to_aim_problem(spec, options.coordinate);
    SymbolicRun run;
    run.wanted = wanted_count(spec, n_max);
    run.x0 = options.x0.value_or(default_evaluation_point(spec, options.coordinate));
    const int cap = options.max_iterations > 0 ? options.max_iterations : run.wanted * reduced.stride + 1;

    std::vector<AimState> ladder = aim_ladder(reduced.problem, 2);
    std::vector<Rational> found;
    for (int k = 1; k <= cap && static_cast<int>(found.size()) < run.wanted; ++k) {
        while (static_cast<int>(ladder.size()) < k + 2) ladder.push_back(aim_step(ladder.back(), reduced.problem));
        const QuantizationResult q = quantization(ladder, run.x0, k);
        run.iterations = k;
        run.rejected.clear();
        for (const auto& c : q.rejected) run.rejected.push_back(reduced.map.apply(c.root.approx()));
        for (const auto& c : q.stabilized) {
            if (seen(found, c.root) || static_cast<int>(found.size()) >= run.wanted) continue;
            // Irrational stabilized roots do not occur for the solvable class;
            // keep the midpoint so the row is still reported.
            const Rational w = c.root.exact ? c.root.value() : c.root.midpoint();
            found.push_back(w);
            SpectrumEntry e;
            e.n = static_cast<int>(found.size()) - 1;
            e.exact = reduced.map.apply(w);
            e.value = e.exact->to_double();
            e.provenance = Provenance::symbolic_aim;
            e.iterations = k;
            e.converged = c.root.exact;
            run.spectrum.push(std::move(e));
        }
    }
    return run;
}

Spectrum solve_jet(const ProblemSpec& spec, int n_max, const JetRunOptions& options) {
    if (n_max < 0) throw Error("n_max must be non-negative");
    const ReducedProblem reduced = to_aim_problem(spec, options.coordinate);
    const Rational x0 = options.x0.value_or(default_evaluation_point(spec, options.coordinate));
    const int order = options.k_max + 2;
    const int wanted = wanted_count(spec, n_max);
    const bool filtered = std::holds_alternative<PTSecondParams>(spec) || std::holds_alternative<CoulombParams>(spec);
    JetOptions jet_options;
    if (!filtered) jet_options.wanted = wanted;
    const Spectrum raw = jet_quantization(TaylorJet::from_ratfunc(reduced.problem.lambda0, x0, order),
                                          TaylorJet::from_ratfunc(reduced.problem.s0, x0, order), options.k_max,
                                          options.tol, jet_options);

    std::vector<SpectrumEntry> mapped;
    for (SpectrumEntry e : raw.entries()) {
        const double w = e.value;
        // Only positive coupling values describe Coulomb bound states.
        if (std::holds_alternative<CoulombParams>(spec) && !(w + reduced.map.offset.to_double() > 0.0)) continue;
        e.value = reduced.map.apply(w);
        if (const auto* p = std::get_if<PTSecondParams>(&spec)) {
            const double floor = p->k_scale.to_double() * p->k_scale.to_double() *
                                 -std::pow((p->alpha - p->beta).to_double(), 2.0);
            if (e.value < floor * (1 + 1e-9) || e.value >= 0.0) continue;
        }
        mapped.push_back(std::move(e));
    }
    std::sort(mapped.begin(), mapped.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
    Spectrum out;
    for (std::size_t i = 0; i < mapped.size() && static_cast<int>(i) < wanted; ++i) {
        mapped[i].n = static_cast<int>(i);
        out.push(std::move(mapped[i]));
    }
    return out;
}

}  // namespace aim::catalog
