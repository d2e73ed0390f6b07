#include "chiralcav/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

namespace chiralcav {

std::string_view to_string(OutputFormat f) noexcept { return f == OutputFormat::csv ? "csv" : "json"; }

OutputFormat parse_format(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw ConfigError("format must be csv or json, got '" + std::string(s) + "'");
}

void RunConfig::validate() const {
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (n_total_max < 0) throw ConfigError("n_total_max must be non-negative");
    if (!initial_state.valid()) throw ConfigError("initial state photon counts must be non-negative");
    if (t_samples < 2) throw ConfigError("t_samples must be at least 2");
    if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_start < t_end)) {
        throw ConfigError("time window requires finite t_start < t_end");
    }
    for (const auto& [ab, ba] : sweep) {
        if (!std::isfinite(ab) || !std::isfinite(ba)) throw ConfigError("sweep couplings must be finite");
    }
    if (reference_time && !(*reference_time > 0.0)) {
        throw ConfigError("reference_time must be positive");
    }
}

std::vector<double> RunConfig::time_grid() const {
    std::vector<double> grid(static_cast<std::size_t>(t_samples));
    for (int k = 0; k < t_samples; ++k) {
        grid[static_cast<std::size_t>(k)] = t_start + (t_end - t_start) * k / (t_samples - 1);
    }
    return grid;
}

namespace {

const std::set<std::string> kKeys = {
    "omega0",  "omega_ab",  "omega_ba",  "n_total_max", "initial_n_a", "initial_n_b",
    "t_start", "t_end",     "t_samples", "outputs",     "output_path", "format",
    "sweep",   "reference_time"};

template <typename T>
void read(const nlohmann::json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(std::string("config key '") + key + "' has the wrong type");
    }
}

}  // namespace

RunConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!kKeys.contains(key)) throw ConfigError("unknown config key '" + key + "'");
    }
    RunConfig c;
    read(j, "omega0", c.params.omega0);
    read(j, "omega_ab", c.params.omega_ab);
    read(j, "omega_ba", c.params.omega_ba);
    read(j, "n_total_max", c.n_total_max);
    read(j, "initial_n_a", c.initial_state.n_a);
    read(j, "initial_n_b", c.initial_state.n_b);
    read(j, "t_start", c.t_start);
    read(j, "t_end", c.t_end);
    read(j, "t_samples", c.t_samples);
    read(j, "outputs", c.outputs);
    read(j, "output_path", c.output_path);
    std::string format = std::string(to_string(c.format));
    read(j, "format", format);
    c.format = parse_format(format);
    read(j, "sweep", c.sweep);
    if (j.contains("reference_time") && !j.at("reference_time").is_null()) {
        double t = 0.0;
        read(j, "reference_time", t);
        c.reference_time = t;
    }
    return c;
}

nlohmann::json config_to_json(const RunConfig& c) {
    nlohmann::json j = {
        {"omega0", c.params.omega0},
        {"omega_ab", c.params.omega_ab},
        {"omega_ba", c.params.omega_ba},
        {"n_total_max", c.n_total_max},
        {"initial_n_a", c.initial_state.n_a},
        {"initial_n_b", c.initial_state.n_b},
        {"t_start", c.t_start},
        {"t_end", c.t_end},
        {"t_samples", c.t_samples},
        {"outputs", c.outputs},
        {"output_path", c.output_path},
        {"format", to_string(c.format)},
        {"sweep", c.sweep},
    };
    if (c.reference_time) j["reference_time"] = *c.reference_time;
    return j;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

std::string format_double(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
    return {buf, end};
}

nlohmann::json params_to_json(const ModelParams& p) {
    return {{"omega0", p.omega0}, {"omega_ab", p.omega_ab}, {"omega_ba", p.omega_ba}};
}

}  // namespace chiralcav
