#pragma once

#include <string>

#include "chiralcav/analysis.hpp"
#include "chiralcav/io.hpp"

namespace chiralcav {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitConfigError = 2;

struct CommandOutput {
    int exit_code = kExitOk;
    std::string body;     // serialized table or report
    std::string message;  // one line for stderr, empty on success
};

// Each command validates the config first. ConfigError and DomainError
// propagate to the caller, which maps them to kExitConfigError.

/// Closed-form spectrum next to the numerically diagonalized sector blocks.
[[nodiscard]] CommandOutput cmd_spectrum(const RunConfig& config);

/// Photon-number time series from the configured initial state.
[[nodiscard]] CommandOutput cmd_evolve(const RunConfig& config);

/// One row per (omega_ab, omega_ba) pair of config.sweep (or the base pair when
/// the sweep is empty). Per-row failures go to the error column.
[[nodiscard]] CommandOutput cmd_asymmetry(const RunConfig& config);

/// Full invariant catalogue as a JSON report; exit 1 if any check fails.
[[nodiscard]] CommandOutput cmd_verify(const RunConfig& config,
                                       const VerificationOptions& options = {});

[[nodiscard]] nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace chiralcav
