#pragma once

#include "aim/cli/config.hpp"
#include "aim/spectrum.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aim::cli {

struct Row {
    std::string family;
    /// name=value pairs joined with ';'.
    std::string parameters;
    std::optional<int> n;
    std::optional<Rational> exact;
    /// NaN when unknown; written as an empty field.
    double value = 0.0;
    std::string provenance;
    int iterations = 0;
    /// ok | stabilized | converged | unconverged | rejected | failed | mismatch
    std::string status;
    // Verify mode only.
    std::optional<double> oracle;
    std::optional<double> abs_deviation;
    std::optional<double> deviation;
    /// Free text, JSON output only.
    std::string note;
    std::optional<double> change;

    friend bool operator==(const Row&, const Row&) = default;
};

struct Table {
    bool verify = false;
    std::vector<Row> rows;
    friend bool operator==(const Table&, const Table&) = default;
};

struct Sample {
    double x = 0.0;
    double y = 0.0;
};

struct SampleTable {
    std::string family;
    std::string parameters;
    int n = 0;
    std::vector<Sample> samples;
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);
double parse_double(std::string_view text);

std::string flatten_parameters(const catalog::ProblemSpec& spec);

std::vector<std::string> columns(bool verify);
std::string write_csv(const Table& t);
std::string write_json(const Table& t);
std::string write_csv(const SampleTable& t);
std::string write_json(const SampleTable& t);

/// Inverses of the writers. Throw ParseError.
Table read_csv(std::string_view text);
Table read_json(std::string_view text);

/// Rows that carry eigenvalues (not rejected or failed), as a Spectrum. All
/// rows must belong to one parameter point.
Spectrum to_spectrum(const Table& t);

/// One row per entry, with the given status for converged entries.
std::vector<Row> rows_from_spectrum(const catalog::ProblemSpec& spec, const Spectrum& s, const std::string& status);

}  // namespace aim::cli
