// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------
//
// Command-line front end: runs campaigns and single-formula calculators.
//
//   dude <region|transit|mobility|zones|compare|all> [--config F] [--seed N]
//        [--mode db-consistent|paper-literal] [--out DIR] [--format csv|json]
//   dude calc <name> <args...> [--config F] [--mode M]
//
// Exit codes: 0 success, 1 validation error, 2 campaign assertion failure, 3 I/O error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dude/calc.hpp"
#include "dude/config.hpp"
#include "dude/errors.hpp"
#include "dude/result_io.hpp"
#include "dude/scenario.hpp"

namespace {

enum ExitCode : int
{
    kOk = 0,
    kValidation = 1,
    kAssertion = 2,
    kIo = 3,
};

struct CommonOptions
{
    std::string config_path;
    std::optional<std::string> seed;
    std::optional<std::string> mode;
    std::string out_dir;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_output)
{
    cmd->add_option("-c,--config", opts.config_path, "configuration file (key = value)");
    cmd->add_option("--mode", opts.mode, "formula mode: db-consistent or paper-literal");
    if (!with_output) return;
    cmd->add_option("--seed", opts.seed, "master seed (overrides the config)");
    cmd->add_option("-o,--out", opts.out_dir, "output directory (default: $DUDE_OUTPUT_DIR or ./dude-out)");
    cmd->add_option("-f,--format", opts.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

dude::ScenarioConfig load_config(const CommonOptions& opts)
{
    dude::ScenarioConfig cfg =
        opts.config_path.empty() ? dude::ScenarioConfig{} : dude::parse_config(opts.config_path);
    if (opts.seed) dude::set_config_value(cfg, "seed", *opts.seed, "cli-override");
    if (opts.mode) dude::set_config_value(cfg, "mode", *opts.mode, "cli-override");
    cfg.validate();
    return cfg;
}

std::string output_dir(const CommonOptions& opts)
{
    if (!opts.out_dir.empty()) return opts.out_dir;
    if (const char* env = std::getenv("DUDE_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
    return "dude-out";
}

using Campaign = std::function<dude::ScenarioResult(const dude::ScenarioConfig&)>;

int run_campaigns(const CommonOptions& opts, const std::vector<Campaign>& campaigns)
{
    const dude::ScenarioConfig cfg = load_config(opts);
    const auto format = dude::parse_output_format(opts.format);
    const std::string dir = output_dir(opts);
    // Everything is computed before anything is written.
    std::vector<dude::ScenarioResult> results;
    for (const auto& run : campaigns) results.push_back(run(cfg));
    for (const auto& r : results)
        for (const auto& path : dude::emit(r, dir, format)) std::cout << path.string() << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Downlink/uplink decoupling analysis for LTE heterogeneous networks"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::vector<std::pair<CLI::App*, std::vector<Campaign>>> campaign_cmds;
    auto campaign = [&](const char* name, const char* help, std::vector<Campaign> runs) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_common(cmd, opts, true);
        campaign_cmds.emplace_back(cmd, std::move(runs));
    };
    campaign("region", "Monte Carlo decoupling-region area vs closed form", {dude::run_region_campaign});
    campaign("transit", "Coupled vs decoupled uplink along the Macro-small cell line",
             {dude::run_transit_campaign});
    campaign("mobility", "Decoupling-time CDFs of random-walk devices", {dude::run_decoupling_time_campaign});
    campaign("zones", "Interference zones and extra D2D area", {dude::run_zone_campaign});
    campaign("compare", "Formula-mode comparison report", {dude::run_formula_comparison});
    campaign("all", "Run every campaign",
             {dude::run_region_campaign, dude::run_transit_campaign, dude::run_decoupling_time_campaign,
              dude::run_zone_campaign, dude::run_formula_comparison});

    std::string calc_name;
    std::vector<std::string> calc_args;
    std::string calc_help = "Evaluate one formula. Calculators:";
    for (const auto& c : dude::calculators())
        calc_help += "\n  " + std::string(c.name) + " " + std::string(c.usage);
    CLI::App* calc = app.add_subcommand("calc", calc_help);
    calc->add_option("name", calc_name, "calculator name")->required();
    calc->add_option("args", calc_args, "numeric arguments");
    calc->allow_extras(false);
    add_common(calc, opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kValidation;
    }

    try {
        if (calc->parsed()) {
            const dude::ScenarioConfig cfg = load_config(opts);
            std::cout << dude::format_calc(dude::run_calc(calc_name, calc_args, cfg)) << '\n';
            return kOk;
        }
        for (const auto& [cmd, runs] : campaign_cmds)
            if (cmd->parsed()) return run_campaigns(opts, runs);
    } catch (const dude::AssertionFailure& e) {
        std::cerr << "assertion failed: " << e.what() << '\n';
        return kAssertion;
    } catch (const dude::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kValidation;
}
