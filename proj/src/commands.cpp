#include "chiralcav/commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "chiralcav/closed_form.hpp"
#include "chiralcav/propagator.hpp"

namespace chiralcav {
namespace {

using nlohmann::json;

// JSON has no inf/nan; such values become null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

class CsvWriter {
public:
    explicit CsvWriter(const std::vector<std::string>& header) { row_strings(header); }

    void row(const std::vector<double>& values) {
        std::vector<std::string> cells;
        cells.reserve(values.size());
        for (const double v : values) cells.push_back(format_double(v));
        row_strings(cells);
    }

    void row_strings(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    void comment(const std::string& text) { out_ << "# " << text << '\n'; }

    [[nodiscard]] std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

CommandOutput cmd_spectrum(const RunConfig& config) {
    config.validate();
    const auto& p = config.params;
    const auto entries = spectrum(p, config.n_total_max);  // throws DomainError

    struct Row {
        SpectrumEntry entry;
        Complex numeric;
    };
    std::vector<Row> rows;
    double max_residual = 0.0;
    std::size_t pos = 0;
    for (int n = 0; n <= config.n_total_max; ++n) {
        // Pair the sector's closed-form levels with numeric eigenvalues by rank.
        std::vector<std::size_t> order;
        for (int k = 0; k <= n; ++k) order.push_back(pos + static_cast<std::size_t>(k));
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return entries[x].energy < entries[y].energy;
        });
        const auto eig = sector_eigenvalues(p, n);
        std::vector<Complex> matched(order.size());
        for (std::size_t r = 0; r < order.size(); ++r) matched[order[r] - pos] = eig[r];
        for (int k = 0; k <= n; ++k) {
            const auto& e = entries[pos + static_cast<std::size_t>(k)];
            const Complex num = matched[static_cast<std::size_t>(k)];
            max_residual = std::max(max_residual, std::abs(num - e.energy));
            rows.push_back({e, num});
        }
        pos += static_cast<std::size_t>(n + 1);
    }

    CommandOutput out;
    if (config.format == OutputFormat::csv) {
        CsvWriter csv({"n_alpha", "n_beta", "energy", "rwa_flag", "numeric_energy",
                       "numeric_energy_imag", "residual"});
        for (const auto& r : rows) {
            csv.row_strings({std::to_string(r.entry.n_alpha), std::to_string(r.entry.n_beta),
                             format_double(r.entry.energy),
                             r.entry.rwa_breakdown ? "breakdown" : "ok",
                             format_double(r.numeric.real()), format_double(r.numeric.imag()),
                             format_double(std::abs(r.numeric - r.entry.energy))});
        }
        csv.comment("max_residual=" + format_double(max_residual));
        out.body = csv.str();
    } else {
        json j = {{"command", "spectrum"},
                  {"params", params_to_json(p)},
                  {"n_total_max", config.n_total_max},
                  {"max_residual", max_residual},
                  {"rows", json::array()}};
        for (const auto& r : rows) {
            j["rows"].push_back({{"n_alpha", r.entry.n_alpha},
                                 {"n_beta", r.entry.n_beta},
                                 {"energy", r.entry.energy},
                                 {"rwa_flag", r.entry.rwa_breakdown ? "breakdown" : "ok"},
                                 {"numeric_energy", r.numeric.real()},
                                 {"numeric_energy_imag", r.numeric.imag()},
                                 {"residual", std::abs(r.numeric - r.entry.energy)}});
        }
        out.body = dump(j);
    }
    return out;
}

CommandOutput cmd_evolve(const RunConfig& config) {
    config.validate();
    const auto& p = config.params;
    p.require_closed_form();  // closed-form columns need the positive-product domain
    if (config.initial_state.total() > config.n_total_max) {
        throw ConfigError("initial state |" + std::to_string(config.initial_state.n_a) + "," +
                          std::to_string(config.initial_state.n_b) +
                          "> lies outside n_total_max=" + std::to_string(config.n_total_max));
    }

    static const std::vector<std::string> kColumns = {
        "mean_NA_closed", "mean_NB_closed",        "mean_NA_numeric",   "mean_NB_numeric",
        "conservation_residual", "schrodinger_norm", "schrodinger_NA", "schrodinger_NB"};
    std::vector<std::string> columns = config.outputs;
    if (columns.empty()) columns.assign(kColumns.begin(), kColumns.begin() + 6);
    for (const auto& c : columns) {
        if (std::find(kColumns.begin(), kColumns.end(), c) == kColumns.end()) {
            throw ConfigError("unknown output column '" + c + "'");
        }
    }

    const FockBasis basis(config.n_total_max);
    const auto grid = config.time_grid();
    const auto series = evolve_observables(p, config.initial_state, grid, basis);

    double max_closed_numeric = 0.0;
    double max_conservation = 0.0;
    std::vector<std::map<std::string, double>> records;
    for (const auto& s : series.samples) {
        const auto m = expected_photons(p, config.initial_state.n_a, config.initial_state.n_b, s.time);
        max_closed_numeric = std::max({max_closed_numeric, std::abs(m.a - s.mean_na),
                                       std::abs(m.b - s.mean_nb)});
        max_conservation = std::max(max_conservation, std::abs(s.conservation_residual));
        records.push_back({{"mean_NA_closed", m.a},
                           {"mean_NB_closed", m.b},
                           {"mean_NA_numeric", s.mean_na},
                           {"mean_NB_numeric", s.mean_nb},
                           {"conservation_residual", s.conservation_residual},
                           {"schrodinger_norm", s.schrodinger_norm},
                           {"schrodinger_NA", s.schrodinger_na},
                           {"schrodinger_NB", s.schrodinger_nb}});
    }

    CommandOutput out;
    if (config.format == OutputFormat::csv) {
        std::vector<std::string> header = {"t"};
        header.insert(header.end(), columns.begin(), columns.end());
        CsvWriter csv(header);
        for (std::size_t i = 0; i < records.size(); ++i) {
            std::vector<double> values = {grid[i]};
            for (const auto& c : columns) values.push_back(records[i].at(c));
            csv.row(values);
        }
        csv.comment("max_closed_numeric_residual=" + format_double(max_closed_numeric) +
                    " max_conservation_residual=" + format_double(max_conservation));
        out.body = csv.str();
    } else {
        json j = {{"command", "evolve"},
                  {"params", params_to_json(p)},
                  {"initial_state", {config.initial_state.n_a, config.initial_state.n_b}},
                  {"columns", columns},
                  {"rows", json::array()},
                  {"summary",
                   {{"max_closed_numeric_residual", max_closed_numeric},
                    {"max_conservation_residual", max_conservation}}}};
        for (std::size_t i = 0; i < records.size(); ++i) {
            json row = {{"t", grid[i]}};
            for (const auto& c : columns) row[c] = records[i].at(c);
            j["rows"].push_back(row);
        }
        out.body = dump(j);
    }
    return out;
}

CommandOutput cmd_asymmetry(const RunConfig& config) {
    config.validate();
    auto pairs = config.sweep;
    if (pairs.empty()) pairs.emplace_back(config.params.omega_ab, config.params.omega_ba);

    struct Row {
        double omega_ab, omega_ba;
        AsymmetryReport report;
        std::string error;
    };
    std::vector<Row> rows;
    for (const auto& [ab, ba] : pairs) {
        Row row{ab, ba, {}, {}};
        const ModelParams p{config.params.omega0, ab, ba};
        try {
            const double t_ref = config.reference_time
                                     ? *config.reference_time
                                     : std::numbers::pi / (4.0 * p.g_eff());
            row.report = exchange_asymmetry(p, config.initial_state, t_ref);
        } catch (const DomainError&) {
            row.error = "domain_error";
        } catch (const std::invalid_argument&) {
            row.error = "invalid_state";
        }
        rows.push_back(std::move(row));
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    CommandOutput out;
    if (config.format == OutputFormat::csv) {
        CsvWriter csv({"omega_ab", "omega_ba", "reference_time", "amplitude_ratio",
                       "probability_ratio", "db_asymmetry", "infinite", "error"});
        for (const auto& r : rows) {
            const bool ok = r.error.empty();
            const auto& a = r.report;
            csv.row_strings({format_double(r.omega_ab), format_double(r.omega_ba),
                             format_double(ok ? a.reference_time : nan),
                             format_double(ok ? a.amplitude_ratio : nan),
                             format_double(ok ? a.sector_prob_forward / a.sector_prob_backward : nan),
                             format_double(ok ? a.db_asymmetry : nan),
                             ok && a.infinite ? "true" : "false", r.error});
        }
        out.body = csv.str();
    } else {
        json j = {{"command", "asymmetry"},
                  {"omega0", config.params.omega0},
                  {"from_state", {config.initial_state.n_a, config.initial_state.n_b}},
                  {"rows", json::array()}};
        for (const auto& r : rows) {
            json row = {{"omega_ab", r.omega_ab}, {"omega_ba", r.omega_ba}};
            if (r.error.empty()) {
                const auto& a = r.report;
                row["reference_time"] = a.reference_time;
                row["amplitude_ratio"] = number(a.amplitude_ratio);
                row["probability_ratio"] = number(a.sector_prob_forward / a.sector_prob_backward);
                row["db_asymmetry"] = number(a.db_asymmetry);
                row["infinite"] = a.infinite;
                row["error"] = nullptr;
            } else {
                row["error"] = r.error;
            }
            j["rows"].push_back(row);
        }
        out.body = dump(j);
    }
    return out;
}

json report_to_json(const VerificationReport& report) {
    json checks = json::array();
    json failed = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"residual", number(c.residual)},
                          {"tolerance", c.tolerance},
                          {"bound", c.bound == Bound::at_most ? "at_most" : "at_least"},
                          {"passed", c.passed},
                          {"note", c.note}});
        if (!c.passed) failed.push_back(c.name);
    }
    const auto& d = report.alpha_plus_discrepancy;
    return {{"command", "verify"},
            {"params", params_to_json(report.params)},
            {"n_total_max", report.n_total_max},
            {"t_samples", report.t_grid.size()},
            {"alpha_plus", report.alpha_plus == AlphaPlusForm::canonical ? "canonical" : "swapped_root"},
            {"reciprocal_block", report.reciprocal_block},
            {"all_passed", report.all_passed()},
            {"failed", failed},
            {"alpha_plus_discrepancy",
             {{"canonical_residual", d.canonical_residual},
              {"faulty_residual", d.faulty_residual},
              {"faulty_predicted", d.faulty_predicted}}},
            {"checks", checks}};
}

CommandOutput cmd_verify(const RunConfig& config, const VerificationOptions& options) {
    config.validate();
    config.params.require_closed_form();
    const auto grid = config.time_grid();
    const auto report = run_verification(config.params, config.n_total_max, grid, options);

    CommandOutput out;
    out.body = dump(report_to_json(report));
    if (!report.all_passed()) {
        out.exit_code = kExitVerificationFailed;
        std::string names;
        for (const auto& c : report.checks) {
            if (!c.passed) names += (names.empty() ? "" : ",") + c.name;
        }
        out.message = "verification failed: " + names;
    }
    return out;
}

}  // namespace chiralcav
