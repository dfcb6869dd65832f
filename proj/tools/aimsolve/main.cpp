#include "aim/cli/config.hpp"
#include "aim/cli/run.hpp"
#include "aim/simd/kernels.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace aim;
using namespace aim::cli;

struct Flags {
    std::string problem_file;
    std::string family;
    std::vector<std::string> params;
    std::string mode;
    std::optional<int> n_max;
    std::string x0;
    std::optional<double> tol;
    std::string out;
    std::string format;
    std::optional<int> grid;
    std::optional<std::uint64_t> seed;
    std::string coordinate;
    std::optional<int> k_max;
    std::optional<int> n;
    std::optional<double> from, to;
    std::optional<int> samples;
    std::string simd = "auto";
};

void add_common(CLI::App* app, Flags& f) {
    app->add_option("--problem", f.problem_file, "JSON config file");
    app->add_option("--family", f.family, "problem family when no config file is given");
    app->add_option("--param", f.params, "parameter override name=value (repeatable)");
    app->add_option("--mode", f.mode, "closed-form | aim-exact | aim-jet | verify");
    app->add_option("--n-max", f.n_max, "highest level index");
    app->add_option("--x0", f.x0, "evaluation point p/q in the natural variable");
    app->add_option("--tol", f.tol, "verification or jet tolerance");
    app->add_option("--out", f.out, "output path (standard output when absent)");
    app->add_option("--format", f.format, "csv | json");
    app->add_option("--grid", f.grid, "finite-difference subintervals M");
    app->add_option("--seed", f.seed, "seed for random sweeps");
    app->add_option("--coordinate", f.coordinate, "natural | hypergeometric (aim-exact)");
    app->add_option("--k-max", f.k_max, "jet iteration limit");
    app->add_option("--simd", f.simd, "auto | scalar | avx2");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::pair<std::string, Rational> split_param(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--param expects name=value, got '" + text + "'");
    try {
        return {text.substr(0, eq), Rational::parse(text.substr(eq + 1))};
    } catch (const ParseError& e) {
        throw ConfigError("--param " + text + ": " + e.what());
    }
}

RunConfig build_config(const std::string& command, const Flags& f) {
    RunConfig c;
    if (!f.problem_file.empty()) {
        c = parse_config(read_file(f.problem_file));
        if (!f.family.empty() && f.family != catalog::family_name(c.problem))
            throw ConfigError("--family disagrees with the config file");
        for (const auto& p : f.params) {
            const auto [name, value] = split_param(p);
            c.problem = with_parameter(c.problem, name, value);
        }
    } else {
        if (f.family.empty()) throw ConfigError("give --problem <file> or --family");
        std::vector<std::pair<std::string, Rational>> params;
        for (const auto& p : f.params) params.push_back(split_param(p));
        c.problem = make_problem(f.family, params);
    }

    std::optional<Mode> flag_mode;
    if (!f.mode.empty()) {
        flag_mode = parse_mode(f.mode);
        if (!flag_mode) throw ConfigError("unknown mode '" + f.mode + "'");
    }
    const auto spectrum_like = [](Mode m) { return m == Mode::closed_form || m == Mode::aim_exact || m == Mode::aim_jet; };
    if (command == "spectrum") {
        c.mode = flag_mode.value_or(spectrum_like(c.mode) ? c.mode : Mode::closed_form);
        if (!spectrum_like(c.mode)) throw ConfigError("spectrum runs closed-form, aim-exact or aim-jet");
    } else if (command == "aim") {
        c.mode = flag_mode.value_or(c.mode == Mode::aim_jet ? Mode::aim_jet : Mode::aim_exact);
        if (c.mode != Mode::aim_exact && c.mode != Mode::aim_jet) throw ConfigError("aim runs aim-exact or aim-jet");
    } else if (command == "verify") {
        if (flag_mode && *flag_mode != Mode::verify) throw ConfigError("verify takes no other mode");
        c.mode = Mode::verify;
    } else if (command == "eigenfunction") {
        if (flag_mode) throw ConfigError("eigenfunction takes no --mode");
        c.mode = Mode::eigenfunction;
    } else {
        c.mode = Mode::sweep;
        if (!c.sweep) throw ConfigError("sweep needs a config file with a 'sweep' section");
        if (flag_mode) c.sweep->inner = *flag_mode;
    }

    if (f.n_max) c.n_max = *f.n_max;
    if (!f.x0.empty()) {
        try {
            c.x0 = Rational::parse(f.x0);
        } catch (const ParseError& e) {
            throw ConfigError(std::string("--x0: ") + e.what());
        }
    }
    if (f.tol) c.tolerance = *f.tol;
    if (!f.out.empty()) c.out = f.out;
    if (!f.format.empty()) {
        if (f.format == "csv") c.format = Format::csv;
        else if (f.format == "json") c.format = Format::json;
        else throw ConfigError("--format must be csv or json");
    }
    if (f.grid) c.grid = *f.grid;
    if (f.seed) c.seed = *f.seed;
    if (!f.coordinate.empty()) {
        if (f.coordinate == "natural") c.coordinate = catalog::Coordinate::natural;
        else if (f.coordinate == "hypergeometric") c.coordinate = catalog::Coordinate::hypergeometric;
        else throw ConfigError("--coordinate must be natural or hypergeometric");
    }
    if (f.k_max) c.k_max = *f.k_max;
    if (f.n) c.eigenfunction.n = *f.n;
    if (f.from) c.eigenfunction.from = *f.from;
    if (f.to) c.eigenfunction.to = *f.to;
    if (f.samples) c.eigenfunction.samples = *f.samples;

    if (f.simd == "scalar") simd::set_backend(simd::Backend::scalar);
    else if (f.simd == "avx2") {
        if (!simd::avx2_available()) throw ConfigError("--simd avx2: not supported by this CPU");
        simd::set_backend(simd::Backend::avx2);
    } else if (f.simd != "auto") throw ConfigError("--simd must be auto, scalar or avx2");
    check(c);
    return c;
}

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_atomically(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << text;
        if (!out) throw std::runtime_error("cannot write " + path);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eigenvalues of exactly solvable ODE families by the asymptotic iteration method"};
    app.require_subcommand(1);
    Flags flags;
    auto* spectrum = app.add_subcommand("spectrum", "closed-form, exact AIM or jet AIM spectrum");
    auto* aim_cmd = app.add_subcommand("aim", "exact AIM quantization (stabilized and rejected roots) or jet AIM");
    auto* verify = app.add_subcommand("verify", "closed-form spectrum against the independent oracle");
    auto* eigen = app.add_subcommand("eigenfunction", "tabulate y_n on a uniform grid");
    auto* sweep = app.add_subcommand("sweep", "one run per value of a swept parameter");
    for (auto* sub : {spectrum, aim_cmd, verify, eigen, sweep}) add_common(sub, flags);
    eigen->add_option("--n", flags.n, "level index");
    eigen->add_option("--from", flags.from, "left end of the grid");
    eigen->add_option("--to", flags.to, "right end of the grid");
    eigen->add_option("--samples", flags.samples, "number of grid points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "aimsolve: " << e.what() << "\n";
        return config_error;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    const auto started = std::chrono::steady_clock::now();
    const std::string started_utc = utc_now();
    RunConfig config;
    RunOutcome outcome;
    try {
        config = build_config(command, flags);
        outcome = run(config);
    } catch (const ConfigError& e) {
        std::cerr << "aimsolve: " << e.what() << "\n";
        return config_error;
    } catch (const Error& e) {
        std::cerr << "aimsolve: " << e.what() << "\n";
        return convergence_failure;
    }
    const std::string text = render(outcome, config.format);
    for (const auto& n : outcome.notes) std::cerr << "aimsolve: " << n << "\n";

    try {
        if (!config.out) {
            std::cout << text;
        } else {
            write_atomically(*config.out, text);
            nlohmann::ordered_json meta;
            meta["tool"] = "aimsolve";
            meta["version"] = "1.0.0";
            std::vector<std::string> args(argv, argv + argc);
            meta["arguments"] = args;
            meta["config"] = nlohmann::ordered_json::parse(to_json(config));
            meta["output"] = *config.out;
            meta["exit_code"] = static_cast<int>(outcome.exit_code);
            meta["started_utc"] = started_utc;
            meta["elapsed_seconds"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            meta["simd_backend"] = std::string(simd::backend_name(simd::active_backend()));
            meta["notes"] = outcome.notes;
            write_atomically(*config.out + ".meta.json", meta.dump(2) + "\n");
        }
    } catch (const std::exception& e) {
        std::cerr << "aimsolve: " << e.what() << "\n";
        return convergence_failure;
    }
    return outcome.exit_code;
}
