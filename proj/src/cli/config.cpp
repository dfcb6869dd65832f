#include "aim/cli/config.hpp"

#include "aim/catalog/closed_form.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <set>

namespace aim::cli {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 6> kModes{{
    {Mode::closed_form, "closed-form"},
    {Mode::aim_exact, "aim-exact"},
    {Mode::aim_jet, "aim-jet"},
    {Mode::verify, "verify"},
    {Mode::sweep, "sweep"},
    {Mode::eigenfunction, "eigenfunction"},
}};

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
    if (!j.is_object()) fail(where + " must be an object");
    for (const auto& [k, v] : j.items()) {
        if (std::none_of(keys.begin(), keys.end(), [&](const char* name) { return k == name; }))
            fail("unknown key '" + k + "' in " + where);
    }
}

Rational to_rational(const json& v, const std::string& name) {
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_number_float()) return Rational::parse(v.dump());
    } catch (const ParseError& e) {
        fail(name + ": " + e.what());
    }
    fail(name + " must be a rational given as a string \"p/q\", an integer or a decimal");
}

int to_int(const json& v, const std::string& name) {
    if (!v.is_number_integer()) fail(name + " must be an integer");
    const long x = v.get<long>();
    if (x < -1000000000L || x > 1000000000L) fail(name + " is out of range");
    return static_cast<int>(x);
}

double to_double(const json& v, const std::string& name) {
    if (!v.is_number()) fail(name + " must be a number");
    return v.get<double>();
}

int integer_param(const Rational& r, const std::string& name) {
    if (!r.is_integer()) fail(name + " must be an integer");
    return static_cast<int>(r.floor().get_si());
}

catalog::ProblemSpec problem_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) fail("problem needs a string 'family'");
    const std::string family = j["family"].get<std::string>();
    std::vector<std::pair<std::string, Rational>> params;
    for (const auto& [k, v] : j.items()) {
        if (k == "family") continue;
        params.emplace_back(k, to_rational(v, "problem." + k));
    }
    return make_problem(family, params);
}

json problem_to_json(const catalog::ProblemSpec& spec) {
    json j;
    j["family"] = catalog::family_name(spec);
    for (const auto& [name, value] : catalog::parameter_list(spec)) j[name] = value.to_string();
    return j;
}

Mode mode_from_json(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where + " must be a string");
    const auto m = parse_mode(v.get<std::string>());
    if (!m) fail("unknown mode '" + v.get<std::string>() + "'");
    return *m;
}

}  // namespace

std::string_view mode_name(Mode m) {
    for (const auto& [tag, name] : kModes)
        if (tag == m) return name;
    return "unknown";
}

std::optional<Mode> parse_mode(std::string_view name) {
    for (const auto& [tag, known] : kModes)
        if (known == name) return tag;
    return std::nullopt;
}

double RunConfig::tolerance_or_default(Mode m) const {
    if (tolerance) return *tolerance;
    return m == Mode::aim_jet ? 1e-10 : 1e-4;
}

catalog::ProblemSpec make_problem(const std::string& family, const std::vector<std::pair<std::string, Rational>>& params) {
    using namespace catalog;
    ProblemSpec spec;
    if (family == "general") {
        spec = GeneralClassParams{0, Rational(1), Rational(0), Rational(0)};
    } else if (family == "bender") {
        spec = BenderParams{0, Rational(1), Rational(0)};
    } else if (family == "coulomb") {
        spec = CoulombParams{Rational(0), Rational(0)};
    } else if (family == "oscillator") {
        spec = OscillatorParams{Rational(1), Rational(0)};
    } else if (family == "pt1") {
        spec = PTFirstParams{Rational(0), Rational(0)};
    } else if (family == "pt2") {
        spec = PTSecondParams{Rational(0), Rational(0)};
    } else {
        fail("unknown family '" + family + "' (expected general, bender, coulomb, oscillator, pt1 or pt2)");
    }
    std::set<std::string> required;
    if (family == "general") required = {"b"};
    if (family == "coulomb") required = {"coupling"};
    if (family == "pt1" || family == "pt2") required = {"alpha", "beta"};
    std::set<std::string> seen;
    for (const auto& [name, value] : params) {
        if (!seen.insert(name).second) fail("parameter '" + name + "' given twice");
        spec = with_parameter(spec, name, value);
    }
    for (const auto& r : required)
        if (!seen.count(r)) fail(family + " needs parameter '" + r + "'");
    return spec;
}

catalog::ProblemSpec with_parameter(const catalog::ProblemSpec& spec, const std::string& name, const Rational& value) {
    using namespace catalog;
    ProblemSpec out = spec;
    bool known = true;
    std::visit(
        [&](auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, GeneralClassParams>) {
                if (name == "N") p.N = integer_param(value, name);
                else if (name == "a") p.a = value;
                else if (name == "b") p.b = value;
                else if (name == "m") p.m = value;
                else known = false;
            } else if constexpr (std::is_same_v<P, BenderParams>) {
                if (name == "N") p.N = integer_param(value, name);
                else if (name == "a") p.a = value;
                else if (name == "m") p.m = value;
                else known = false;
            } else if constexpr (std::is_same_v<P, CoulombParams>) {
                if (name == "coupling") p.coupling = value;
                else if (name == "m") p.m = value;
                else known = false;
            } else if constexpr (std::is_same_v<P, OscillatorParams>) {
                if (name == "a") p.a = value;
                else if (name == "m") p.m = value;
                else known = false;
            } else {
                if (name == "alpha") p.alpha = value;
                else if (name == "beta") p.beta = value;
                else if (name == "k") p.k_scale = value;
                else known = false;
            }
        },
        out);
    if (!known) fail("family " + family_name(spec) + " has no parameter '" + name + "'");
    return out;
}

catalog::ProblemSpec parse_problem(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("problem is not valid JSON: ") + e.what());
    }
    return problem_from_json(j);
}

RunConfig parse_config(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    only_keys(j,
              {"problem", "mode", "n_max", "x0", "tolerance", "format", "out", "grid", "seed", "coordinate", "k_max",
               "sweep", "eigenfunction"},
              "config");
    if (!j.contains("problem")) fail("config needs a 'problem' section");
    RunConfig c;
    c.problem = problem_from_json(j["problem"]);
    if (j.contains("mode")) c.mode = mode_from_json(j["mode"], "mode");
    if (j.contains("n_max")) c.n_max = to_int(j["n_max"], "n_max");
    if (j.contains("x0")) c.x0 = to_rational(j["x0"], "x0");
    if (j.contains("tolerance")) c.tolerance = to_double(j["tolerance"], "tolerance");
    if (j.contains("format")) {
        const json& f = j["format"];
        if (f == "csv") c.format = Format::csv;
        else if (f == "json") c.format = Format::json;
        else fail("format must be \"csv\" or \"json\"");
    }
    if (j.contains("out")) {
        if (!j["out"].is_string()) fail("out must be a string");
        c.out = j["out"].get<std::string>();
    }
    if (j.contains("grid")) c.grid = to_int(j["grid"], "grid");
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) fail("seed must be a non-negative integer");
        c.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("coordinate")) {
        const json& v = j["coordinate"];
        if (v == "natural") c.coordinate = catalog::Coordinate::natural;
        else if (v == "hypergeometric") c.coordinate = catalog::Coordinate::hypergeometric;
        else fail("coordinate must be \"natural\" or \"hypergeometric\"");
    }
    if (j.contains("k_max")) c.k_max = to_int(j["k_max"], "k_max");
    if (j.contains("sweep")) {
        const json& s = j["sweep"];
        only_keys(s, {"parameter", "values", "random", "mode"}, "sweep");
        SweepSpec sw;
        if (!s.contains("parameter") || !s["parameter"].is_string()) fail("sweep needs a string 'parameter'");
        sw.parameter = s["parameter"].get<std::string>();
        if (s.contains("values")) {
            if (!s["values"].is_array()) fail("sweep.values must be an array");
            for (const auto& v : s["values"]) sw.values.push_back(to_rational(v, "sweep.values"));
        }
        if (s.contains("random")) {
            const json& r = s["random"];
            only_keys(r, {"count", "lo", "hi", "max_den"}, "sweep.random");
            if (!r.contains("count") || !r.contains("lo") || !r.contains("hi")) fail("sweep.random needs count, lo and hi");
            sw.random_count = to_int(r["count"], "sweep.random.count");
            sw.lo = to_rational(r["lo"], "sweep.random.lo");
            sw.hi = to_rational(r["hi"], "sweep.random.hi");
            if (r.contains("max_den")) sw.max_den = to_int(r["max_den"], "sweep.random.max_den");
        }
        if (s.contains("mode")) sw.inner = mode_from_json(s["mode"], "sweep.mode");
        c.sweep = std::move(sw);
    }
    if (j.contains("eigenfunction")) {
        const json& e = j["eigenfunction"];
        only_keys(e, {"n", "from", "to", "samples"}, "eigenfunction");
        if (e.contains("n")) c.eigenfunction.n = to_int(e["n"], "eigenfunction.n");
        if (e.contains("from")) c.eigenfunction.from = to_double(e["from"], "eigenfunction.from");
        if (e.contains("to")) c.eigenfunction.to = to_double(e["to"], "eigenfunction.to");
        if (e.contains("samples")) c.eigenfunction.samples = to_int(e["samples"], "eigenfunction.samples");
    }
    return c;
}

void check(const RunConfig& c) {
    if (c.n_max < 0) fail("n_max must be >= 0");
    if (c.n_max > 200) fail("n_max must be <= 200");
    if (c.tolerance && !(*c.tolerance > 0.0)) fail("tolerance must be > 0");
    if (c.grid < 16) fail("grid must be >= 16");
    if (c.k_max < 2 || c.k_max > 200) fail("k_max must be in [2, 200]");
    if (c.out && c.out->empty()) fail("out must not be empty");
    try {
        catalog::validate(c.problem);
    } catch (const InvalidSpec& e) {
        fail(e.what());
    }
    if (const auto* g = std::get_if<catalog::GeneralClassParams>(&c.problem); g && g->b.is_zero())
        fail("general: b = 0 is the Bender class; use family \"bender\"");

    const Mode effective = c.mode == Mode::sweep && c.sweep ? c.sweep->inner : c.mode;
    if (effective == Mode::verify && c.n_max + 1 > c.grid / 4) fail("verify needs n_max + 1 <= grid / 4");
    if (effective == Mode::verify && c.n_max > 8) {
        const auto* b = std::get_if<catalog::BenderParams>(&c.problem);
        if (std::holds_alternative<catalog::GeneralClassParams>(c.problem) || (b && b->N == -1))
            fail("verify by exact residual supports n_max <= 8");
    }
    if (c.mode == Mode::sweep) {
        if (!c.sweep) fail("sweep mode needs a 'sweep' section");
        const SweepSpec& s = *c.sweep;
        if (s.inner == Mode::sweep || s.inner == Mode::eigenfunction) fail("sweep.mode must be a spectrum or verify mode");
        if (s.values.empty() && s.random_count <= 0) fail("sweep needs values or a random section");
        if (s.random_count < 0 || s.random_count > 10000) fail("sweep.random.count must be in [0, 10000]");
        if (s.random_count > 0 && (s.hi < s.lo || s.max_den < 1)) fail("sweep.random needs lo <= hi and max_den >= 1");
        for (const Rational& v : s.values) {
            RunConfig point = c;
            point.mode = s.inner;
            point.problem = with_parameter(c.problem, s.parameter, v);
            point.sweep.reset();
            check(point);
        }
        // Random points are checked when drawn; the parameter name is checked here.
        (void)with_parameter(c.problem, s.parameter, Rational(1));
    }
    if (c.mode == Mode::eigenfunction) {
        const EigenfunctionSpec& e = c.eigenfunction;
        if (e.n < 0 || e.n > 60) fail("eigenfunction.n must be in [0, 60]");
        if (e.samples < 2 || e.samples > 1000000) fail("eigenfunction.samples must be in [2, 1000000]");
        if (e.from && e.to && !(*e.from < *e.to)) fail("eigenfunction needs from < to");
        if (const auto* p = std::get_if<catalog::PTSecondParams>(&c.problem); p && e.n > catalog::pt2_nmax(*p))
            fail("eigenfunction.n exceeds n_max = " + std::to_string(catalog::pt2_nmax(*p)));
        if (const auto* p = std::get_if<catalog::CoulombParams>(&c.problem); p && (p->m + Rational(e.n + 1)).is_zero())
            fail("coulomb: n + m + 1 = 0");
    }
}

std::string to_json(const RunConfig& c) {
    json j;
    j["problem"] = problem_to_json(c.problem);
    j["mode"] = std::string(mode_name(c.mode));
    j["n_max"] = c.n_max;
    if (c.x0) j["x0"] = c.x0->to_string();
    j["tolerance"] = c.tolerance_or_default(c.mode == Mode::sweep && c.sweep ? c.sweep->inner : c.mode);
    j["format"] = c.format == Format::csv ? "csv" : "json";
    if (c.out) j["out"] = *c.out;
    j["grid"] = c.grid;
    j["seed"] = c.seed;
    j["coordinate"] = c.coordinate == catalog::Coordinate::natural ? "natural" : "hypergeometric";
    j["k_max"] = c.k_max;
    if (c.sweep) {
        json s;
        s["parameter"] = c.sweep->parameter;
        s["mode"] = std::string(mode_name(c.sweep->inner));
        json values = json::array();
        for (const Rational& v : c.sweep->values) values.push_back(v.to_string());
        s["values"] = values;
        if (c.sweep->random_count > 0)
            s["random"] = {{"count", c.sweep->random_count},
                           {"lo", c.sweep->lo.to_string()},
                           {"hi", c.sweep->hi.to_string()},
                           {"max_den", c.sweep->max_den}};
        j["sweep"] = s;
    }
    if (c.mode == Mode::eigenfunction) {
        json e;
        e["n"] = c.eigenfunction.n;
        e["samples"] = c.eigenfunction.samples;
        if (c.eigenfunction.from) e["from"] = *c.eigenfunction.from;
        if (c.eigenfunction.to) e["to"] = *c.eigenfunction.to;
        j["eigenfunction"] = e;
    }
    return j.dump(2);
}

}  // namespace aim::cli
