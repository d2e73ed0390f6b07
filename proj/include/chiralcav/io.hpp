#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chiralcav/fock_basis.hpp"
#include "chiralcav/model.hpp"

namespace chiralcav {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

[[nodiscard]] std::string_view to_string(OutputFormat f) noexcept;
[[nodiscard]] OutputFormat parse_format(std::string_view s);

/// Run configuration. On disk it is a flat JSON object:
///   omega0, omega_ab, omega_ba, n_total_max, initial_n_a, initial_n_b,
///   t_start, t_end, t_samples, outputs, output_path, format,
///   sweep ([[omega_ab, omega_ba], ...]), reference_time.
/// Missing keys take the defaults below; unknown keys are rejected.
struct RunConfig {
    ModelParams params{1.0, 0.09, 0.04};
    int n_total_max = 6;
    FockState initial_state{1, 0};
    double t_start = 0.0;
    double t_end = 104.71975511965977;  // one exchange period 2 pi / 0.06
    int t_samples = 33;
    std::vector<std::string> outputs;
    std::string output_path;
    OutputFormat format = OutputFormat::csv;
    std::vector<std::pair<double, double>> sweep;
    std::optional<double> reference_time;

    /// Throws ConfigError naming the violated constraint.
    void validate() const;
    [[nodiscard]] std::vector<double> time_grid() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

[[nodiscard]] RunConfig config_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json config_to_json(const RunConfig& config);
[[nodiscard]] RunConfig load_config(const std::string& path);

/// 17 significant digits, scientific notation, locale independent.
[[nodiscard]] std::string format_double(double v);

[[nodiscard]] nlohmann::json params_to_json(const ModelParams& p);

}  // namespace chiralcav
