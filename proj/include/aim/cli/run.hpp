#pragma once

#include "aim/cli/config.hpp"
#include "aim/cli/table.hpp"

#include <string>
#include <variant>
#include <vector>

namespace aim::cli {

enum ExitCode { ok = 0, config_error = 1, convergence_failure = 2, verification_mismatch = 3 };

struct RunOutcome {
    ExitCode exit_code = ok;
    std::variant<Table, SampleTable> output;
    /// Messages for the sidecar and standard error.
    std::vector<std::string> notes;
};

/// Runs one configuration without touching the filesystem. Throws
/// ConfigError for problems that should have been caught by check().
RunOutcome run(const RunConfig& config);

/// The artifact text in the configured format.
std::string render(const RunOutcome& outcome, Format format);

}  // namespace aim::cli
