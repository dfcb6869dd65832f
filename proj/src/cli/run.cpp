#include "aim/cli/run.hpp"

#include "aim/catalog/closed_form.hpp"
#include "aim/catalog/pipeline.hpp"
#include "aim/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <thread>

namespace aim::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int wanted_count(const catalog::ProblemSpec& spec, int n_max) {
    if (const auto* p = std::get_if<catalog::PTSecondParams>(&spec)) return std::min(n_max, catalog::pt2_nmax(*p)) + 1;
    return n_max + 1;
}

Row failed_row(const catalog::ProblemSpec& spec, std::optional<int> n, Provenance prov, int iterations) {
    Row r;
    r.family = catalog::family_name(spec);
    r.parameters = flatten_parameters(spec);
    r.n = n;
    r.value = kNaN;
    r.provenance = std::string(provenance_name(prov));
    r.iterations = iterations;
    r.status = "failed";
    return r;
}

void collect_notes(const Spectrum& s, std::vector<std::string>& notes) {
    for (const auto& e : s.entries())
        if (!e.note.empty()) notes.push_back("n = " + std::to_string(e.n) + ": " + e.note);
}

RunOutcome closed_form(const RunConfig& c) {
    RunOutcome out;
    Spectrum s;
    try {
        s = catalog::closed_form_spectrum(c.problem, c.n_max);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    collect_notes(s, out.notes);
    out.output = Table{false, rows_from_spectrum(c.problem, s, "ok")};
    return out;
}

RunOutcome aim_exact(const RunConfig& c) {
    RunOutcome out;
    Table t;
    catalog::SymbolicOptions o;
    o.coordinate = c.coordinate;
    if (c.x0) o.x0 = catalog::to_coordinate(c.problem, c.coordinate, *c.x0);
    const int wanted = wanted_count(c.problem, c.n_max);
    catalog::SymbolicRun run;
    try {
        run = catalog::solve_symbolic(c.problem, c.n_max, o);
    } catch (const PoleAtEvaluationPoint& e) {
        throw ConfigError(std::string("x0: ") + e.what());
    } catch (const Error& e) {
        out.notes.push_back(std::string("symbolic run failed: ") + e.what());
        run.spectrum = Spectrum{};
    }
    t.rows = rows_from_spectrum(c.problem, run.spectrum, "stabilized");
    for (int n = static_cast<int>(run.spectrum.size()); n < wanted; ++n)
        t.rows.push_back(failed_row(c.problem, n, Provenance::symbolic_aim, run.iterations));
    for (double v : run.rejected) {
        Row r = failed_row(c.problem, std::nullopt, Provenance::symbolic_aim, run.iterations);
        r.value = v;
        r.status = "rejected";
        t.rows.push_back(std::move(r));
    }
    if (static_cast<int>(run.spectrum.size()) < wanted) {
        out.exit_code = convergence_failure;
        out.notes.push_back("only " + std::to_string(run.spectrum.size()) + " of " + std::to_string(wanted) +
                            " eigenvalues stabilized after " + std::to_string(run.iterations) + " iterations");
    }
    out.output = std::move(t);
    return out;
}

RunOutcome aim_jet(const RunConfig& c) {
    RunOutcome out;
    Table t;
    catalog::JetRunOptions o;
    o.x0 = c.x0;
    o.k_max = c.k_max;
    o.tol = c.tolerance_or_default(Mode::aim_jet);
    const int wanted = wanted_count(c.problem, c.n_max);
    Spectrum s;
    try {
        s = catalog::solve_jet(c.problem, c.n_max, o);
    } catch (const PoleAtEvaluationPoint& e) {
        throw ConfigError(std::string("x0: ") + e.what());
    } catch (const Error& e) {
        out.notes.push_back(std::string("jet run failed: ") + e.what());
    }
    t.rows = rows_from_spectrum(c.problem, s, "converged");
    for (int n = static_cast<int>(s.size()); n < wanted; ++n)
        t.rows.push_back(failed_row(c.problem, n, Provenance::jet_aim, c.k_max));
    if (static_cast<int>(s.size()) < wanted) {
        out.exit_code = convergence_failure;
        out.notes.push_back("only " + std::to_string(s.size()) + " of " + std::to_string(wanted) + " eigenvalues converged");
    }
    out.output = std::move(t);
    return out;
}

// Largest |residual| at a few rational points inside the domain.
double residual_size(const RatFunc& r) {
    if (r.is_zero()) return 0.0;
    double worst = 0.0;
    for (const Rational& x : {Rational(1, 7), Rational(2, 7), Rational(3, 7)}) {
        try {
            worst = std::max(worst, std::fabs(r.eval(x, Rational(0)).to_double()));
        } catch (const Error&) {
        }
    }
    return worst > 0.0 ? worst : std::numeric_limits<double>::infinity();
}

RunOutcome verify(const RunConfig& c) {
    RunOutcome out = closed_form(c);
    Table& t = std::get<Table>(out.output);
    t.verify = true;
    const double tol = c.tolerance_or_default(Mode::verify);
    const int count = static_cast<int>(t.rows.size());
    if (count == 0) return out;

    std::vector<double> oracle(count, kNaN);
    const auto* general = std::get_if<catalog::GeneralClassParams>(&c.problem);
    const auto* bender = std::get_if<catalog::BenderParams>(&c.problem);
    try {
        if (general || (bender && bender->N == -1)) {
            // No Schrodinger form to discretize: certify symbolically.
            for (int n = 0; n < count; ++n) {
                const RatFunc r = general ? oracle::residual_exact(*general, n) : oracle::residual_exact_bender(*bender, n);
                const double size = residual_size(r);
                oracle[n] = size == 0.0 ? t.rows[n].value : kNaN;
                if (size != 0.0) out.notes.push_back("n = " + std::to_string(n) + ": nonzero exact residual");
            }
            out.notes.push_back("verified by exact ODE residual");
        } else {
            const auto fd = oracle::fd_eigen(oracle::family_grid(c.problem, count, c.grid), count);
            oracle = fd.extrapolated;
            out.notes.push_back("verified by finite differences, M = " + std::to_string(c.grid) + " and " +
                                std::to_string(2 * c.grid) + " with Richardson extrapolation");
        }
    } catch (const WeightNotPositive& e) {
        throw ConfigError(e.what());
    } catch (const Error& e) {
        for (Row& r : t.rows) r.status = "failed";
        out.exit_code = convergence_failure;
        out.notes.push_back(std::string("oracle failed: ") + e.what());
        return out;
    }
    for (int n = 0; n < count; ++n) {
        Row& r = t.rows[n];
        r.oracle = oracle[n];
        if (std::isnan(oracle[n])) {
            r.abs_deviation = std::numeric_limits<double>::infinity();
            r.deviation = std::numeric_limits<double>::infinity();
        } else {
            r.abs_deviation = std::fabs(oracle[n] - r.value);
            r.deviation = r.value != 0.0 ? *r.abs_deviation / std::fabs(r.value) : *r.abs_deviation;
        }
        if (!(*r.deviation <= tol)) {
            r.status = "mismatch";
            out.exit_code = verification_mismatch;
        }
    }
    return out;
}

RunOutcome run_spectrum_mode(const RunConfig& c, Mode m) {
    switch (m) {
    case Mode::closed_form: return closed_form(c);
    case Mode::aim_exact: return aim_exact(c);
    case Mode::aim_jet: return aim_jet(c);
    case Mode::verify: return verify(c);
    default: throw ConfigError("mode " + std::string(mode_name(m)) + " cannot run here");
    }
}

std::vector<Rational> sweep_points(const RunConfig& c) {
    const SweepSpec& s = *c.sweep;
    std::vector<Rational> pts = s.values;
    if (s.random_count > 0) {
        std::mt19937_64 rng(c.seed);
        for (int i = 0; i < s.random_count; ++i) {
            const long q = std::uniform_int_distribution<long>(1, s.max_den)(rng);
            const long lo = (s.lo * Rational(q)).floor().get_si();
            const Rational hq = s.hi * Rational(q);
            const long hi = hq.floor().get_si();
            const long first = Rational(lo, 1) < s.lo * Rational(q) ? lo + 1 : lo;
            if (hi < first) {
                pts.push_back(s.lo);
                continue;
            }
            pts.emplace_back(std::uniform_int_distribution<long>(first, hi)(rng), q);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

RunOutcome sweep(const RunConfig& c) {
    const SweepSpec& s = *c.sweep;
    const std::vector<Rational> pts = sweep_points(c);
    std::vector<RunConfig> configs;
    for (const Rational& v : pts) {
        RunConfig point = c;
        point.mode = s.inner;
        point.sweep.reset();
        point.problem = with_parameter(c.problem, s.parameter, v);
        check(point);
        configs.push_back(std::move(point));
    }

    std::vector<RunOutcome> results(configs.size());
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < configs.size(); start += workers) {
        std::vector<std::future<RunOutcome>> batch;
        const std::size_t end = std::min(configs.size(), start + workers);
        for (std::size_t i = start; i < end; ++i)
            batch.push_back(std::async(std::launch::async, [&, i] { return run_spectrum_mode(configs[i], s.inner); }));
        for (std::size_t i = start; i < end; ++i) results[i] = batch[i - start].get();
    }

    RunOutcome out;
    Table t;
    t.verify = s.inner == Mode::verify;
    bool failed = false, mismatch = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Table& part = std::get<Table>(results[i].output);
        t.rows.insert(t.rows.end(), part.rows.begin(), part.rows.end());
        for (const auto& n : results[i].notes) out.notes.push_back(s.parameter + " = " + pts[i].to_string() + ": " + n);
        failed |= results[i].exit_code == convergence_failure;
        mismatch |= results[i].exit_code == verification_mismatch;
    }
    out.exit_code = failed ? convergence_failure : mismatch ? verification_mismatch : ok;
    out.output = std::move(t);
    return out;
}

struct Evaluator {
    std::function<double(double)> y;
    double from = 0.0;
    double to = 1.0;
};

Evaluator eigenfunction_evaluator(const catalog::ProblemSpec& spec, int n) {
    using namespace catalog;
    auto bender_like = [n](const BenderParams& b) {
        const RatFunc f = bender_eigenfunction_poly(b, n);
        const double a = b.a.to_double(), m1 = b.m.to_double() + 1.0;
        const int q = b.N + 2;
        return [f, a, m1, q](double x) { return std::pow(x, m1) * std::exp(-a * std::pow(x, q) / q) * f.eval(x, 0.0); };
    };
    auto grid_end = [n](const ProblemSpec& s) { return oracle::family_grid(s, n + 1, 16).x_hi; };

    if (const auto* p = std::get_if<GeneralClassParams>(&spec)) {
        const double end = general_domain_end(*p);
        const GeneralClassParams g = *p;
        return {[g, n](double x) { return general_eigenfunction(g, n, x); }, 0.0, std::isfinite(end) ? 0.99 * end : 5.0};
    }
    if (const auto* p = std::get_if<BenderParams>(&spec)) {
        const double to = p->N == -1 ? (2.0 * (n + p->m.to_double() + 1.0) + 10.0) / p->a.to_double() : grid_end(spec);
        return {bender_like(*p), 0.0, to};
    }
    if (const auto* p = std::get_if<OscillatorParams>(&spec)) return {bender_like(BenderParams{0, p->a, p->m}), 0.0, grid_end(spec)};
    if (const auto* p = std::get_if<CoulombParams>(&spec)) {
        const Rational kappa = p->coupling / (Rational(2) * (Rational(n + 1) + p->m));
        return {bender_like(BenderParams{-1, kappa, p->m}), 0.0, grid_end(spec)};
    }
    if (const auto* p = std::get_if<PTFirstParams>(&spec)) {
        const PTFirstParams q = *p;
        const double k = p->k_scale.to_double();
        return {[q, n, k](double u) { return pt1_wavefunction(q, n, k * u); }, 0.0, std::numbers::pi / (2.0 * k)};
    }
    const auto& p = std::get<PTSecondParams>(spec);
    const double k = p.k_scale.to_double();
    return {[p, n, k](double u) { return pt2_wavefunction(p, n, k * u); }, 0.0, grid_end(spec)};
}

RunOutcome eigenfunction(const RunConfig& c) {
    const EigenfunctionSpec& e = c.eigenfunction;
    Evaluator ev;
    try {
        ev = eigenfunction_evaluator(c.problem, e.n);
    } catch (const Error& err) {
        throw ConfigError(err.what());
    }
    const double from = e.from.value_or(ev.from), to = e.to.value_or(ev.to);
    if (!(from < to)) throw ConfigError("eigenfunction range is empty");
    SampleTable t{catalog::family_name(c.problem), flatten_parameters(c.problem), e.n, {}};
    for (int i = 0; i < e.samples; ++i) {
        const double x = i + 1 == e.samples ? to : from + (to - from) * i / (e.samples - 1);
        double y = kNaN;
        try {
            y = ev.y(x);
        } catch (const Error&) {
        }
        t.samples.push_back({x, y});
    }
    RunOutcome out;
    out.notes.push_back("normalization C = 1");
    out.output = std::move(t);
    return out;
}

}  // namespace

RunOutcome run(const RunConfig& config) {
    check(config);
    switch (config.mode) {
    case Mode::sweep: return sweep(config);
    case Mode::eigenfunction: return eigenfunction(config);
    default: return run_spectrum_mode(config, config.mode);
    }
}

std::string render(const RunOutcome& outcome, Format format) {
    return std::visit([format](const auto& t) { return format == Format::csv ? write_csv(t) : write_json(t); },
                      outcome.output);
}

}  // namespace aim::cli
