#pragma once

#include "aim/catalog/params.hpp"
#include "aim/catalog/reduction.hpp"
#include "aim/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aim::cli {

/// Bad configuration: exit status 1, nothing written.
class ConfigError : public Error {
public:
    using Error::Error;
};

enum class Mode { closed_form, aim_exact, aim_jet, verify, sweep, eigenfunction };
enum class Format { csv, json };

std::string_view mode_name(Mode m);
std::optional<Mode> parse_mode(std::string_view name);

struct SweepSpec {
    std::string parameter;
    /// Explicit values, or `random_count` draws in [lo, hi] with denominators
    /// up to max_den from the run seed.
    std::vector<Rational> values;
    int random_count = 0;
    Rational lo, hi;
    int max_den = 12;
    Mode inner = Mode::closed_form;
};

struct EigenfunctionSpec {
    int n = 0;
    std::optional<double> from, to;
    int samples = 101;
};

struct RunConfig {
    catalog::ProblemSpec problem;
    Mode mode = Mode::closed_form;
    int n_max = 3;
    /// Evaluation point in the family's natural variable.
    std::optional<Rational> x0;
    /// Deviation threshold (verify) or convergence tolerance (aim-jet); the
    /// mode's default when empty.
    std::optional<double> tolerance;
    Format format = Format::csv;
    std::optional<std::string> out;
    int grid = 4000;
    std::uint64_t seed = 20041203;
    catalog::Coordinate coordinate = catalog::Coordinate::hypergeometric;
    int k_max = 30;
    std::optional<SweepSpec> sweep;
    EigenfunctionSpec eigenfunction;

    [[nodiscard]] double tolerance_or_default(Mode m) const;
};

/// Parses the JSON config text. Throws ConfigError.
RunConfig parse_config(std::string_view text);

/// The problem section alone, e.g. {"family": "pt1", "alpha": "1", "beta": "2"}.
catalog::ProblemSpec parse_problem(std::string_view json_text);

/// Replaces one named parameter (as listed by parameter_list). Throws ConfigError.
catalog::ProblemSpec with_parameter(const catalog::ProblemSpec& spec, const std::string& name, const Rational& value);

/// Builds a problem from a family name and name=value pairs; unset
/// parameters take the family defaults (k = 1, m = 0, a = 1).
catalog::ProblemSpec make_problem(const std::string& family, const std::vector<std::pair<std::string, Rational>>& params);

/// Range and consistency checks on the whole config. Throws ConfigError.
void check(const RunConfig& config);

/// Canonical JSON of the config, used in the sidecar.
std::string to_json(const RunConfig& config);

}  // namespace aim::cli
