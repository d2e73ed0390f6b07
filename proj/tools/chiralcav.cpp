// chiralcav <spectrum|evolve|asymmetry|verify> [--config FILE] [--out FILE]
//           [--format csv|json] [--n-max N]
//
// Exit status: 0 success, 1 verification failure, 2 config or domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "chiralcav/commands.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::string format;
    std::optional<int> n_max;
};

void add_common(CLI::App* sub, CommonOptions& opts) {
    sub->add_option("--config", opts.config_path, "JSON run configuration");
    sub->add_option("--out", opts.out_path, "output file (default: config output_path or stdout)");
    sub->add_option("--format", opts.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--n-max", opts.n_max, "override n_total_max")->check(CLI::NonNegativeNumber);
}

int fail(const std::string& kind, const std::string& what) {
    std::cerr << "chiralcav: error: " << kind << ": " << what << '\n';
    return chiralcav::kExitConfigError;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace chiralcav;

    CLI::App app{"Two cavities coupled through a non-reciprocal mirror"};
    app.require_subcommand(1);
    CommonOptions opts;
    bool faulty_alpha_plus = false;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "closed-form vs numeric spectrum");
    auto* evolve_cmd = app.add_subcommand("evolve", "photon-number time series");
    auto* asymmetry_cmd = app.add_subcommand("asymmetry", "photon exchange asymmetry sweep");
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant catalogue (JSON report)");
    for (auto* sub : {spectrum_cmd, evolve_cmd, asymmetry_cmd, verify_cmd}) add_common(sub, opts);
    verify_cmd->add_flag("--inject-alpha-plus-fault", faulty_alpha_plus,
                         "fault injection: build alpha+ with sqrt(w_ba) on b+ in place of sqrt(w_ab)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what());
    }

    CommandOutput result;
    std::string out_path;
    try {
        RunConfig config = opts.config_path.empty() ? RunConfig{} : load_config(opts.config_path);
        if (opts.n_max) config.n_total_max = *opts.n_max;
        if (!opts.format.empty()) config.format = parse_format(opts.format);
        out_path = opts.out_path.empty() ? config.output_path : opts.out_path;

        if (spectrum_cmd->parsed()) {
            result = cmd_spectrum(config);
        } else if (evolve_cmd->parsed()) {
            result = cmd_evolve(config);
        } else if (asymmetry_cmd->parsed()) {
            result = cmd_asymmetry(config);
        } else {
            VerificationOptions vopts;
            if (faulty_alpha_plus) vopts.alpha_plus = AlphaPlusForm::swapped_root;
            result = cmd_verify(config, vopts);
        }
    } catch (const ConfigError& e) {
        return fail("config", e.what());
    } catch (const DomainError& e) {
        return fail("domain", e.what());
    } catch (const std::exception& e) {
        return fail("input", e.what());
    }

    if (out_path.empty()) {
        std::cout << result.body;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) return fail("io", "cannot write '" + out_path + "'");
        out << result.body;
    }
    if (!result.message.empty()) std::cerr << "chiralcav: " << result.message << '\n';
    return result.exit_code;
}
