#include "bbplan/config.hpp"
#include "bbplan/errors.hpp"
#include "bbplan/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

// Documented default seed; identical seeds give byte-identical reports.
constexpr std::uint64_t kDefaultSeed = 20150513;

bbplan::SplitPlan parse_split(const std::string& s) {
    bbplan::SplitPlan plan;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const int v = std::stoi(item);
        if (v < 1) throw bbplan::UnknownIdentifier("split factors must be >= 1");
        plan.levels.push_back(v);
    }
    if (plan.levels.empty()) throw bbplan::UnknownIdentifier("empty split plan");
    return plan;
}

} // namespace

int main(int argc, char** argv) {
    using namespace bbplan;

    CLI::App app{"Metro-access broadband planning engine: reach, feasibility, energy footprint, "
                 "stream aggregation, and best-practice tariffs"};
    app.require_subcommand(1);

    std::string config_path;
    std::string format_str = "md";
    std::string units_str = "J";
    std::uint64_t seed = kDefaultSeed;
    app.add_option("--config", config_path, "JSON config file overriding the built-in data");
    app.add_option("--format", format_str, "Output format: md, csv, json")
        ->check(CLI::IsMember({"md", "markdown", "csv", "json"}));
    app.add_option("--units", units_str, "Energy unit: J, Wh, kcal, BTU")
        ->check(CLI::IsMember({"J", "Wh", "kcal", "BTU"}));
    app.add_option("--seed", seed, "Simulator RNG seed");

    auto* cmd_catalog = app.add_subcommand("catalog", "List technologies and encoding profiles");

    auto* cmd_reach = app.add_subcommand("reach", "Maximum reach for a technology and split plan");
    std::string reach_tech;
    std::string reach_split = "8,8";
    cmd_reach->add_option("--tech", reach_tech, "Technology label (Ta..Te)")->required();
    cmd_reach->add_option("--split", reach_split,
                          "Comma-separated per-level split factors, e.g. 8,16");

    auto* cmd_table = app.add_subcommand("table", "Emit a report table (ids: 1, 3, 4, 5, 6)");
    int table_id = 0;
    cmd_table->add_option("id", table_id, "Table id")->required();

    auto* cmd_whatif = app.add_subcommand("whatif", "Feasibility and energy for one combination");
    std::string wi_tech, wi_scenario, wi_codec = "AVC";
    bool wi_nonfunc = false;
    cmd_whatif->add_option("--tech", wi_tech, "Technology label")->required();
    cmd_whatif->add_option("--scenario", wi_scenario, "Scenario id (Sc1..Sc4)")->required();
    cmd_whatif->add_option("--codec", wi_codec, "AVC or HEVC")
        ->transform(CLI::IsMember({"AVC", "HEVC"}, CLI::ignore_case));
    cmd_whatif->add_flag("--nonfunc,!--no-nonfunc", wi_nonfunc,
                         "Enable non-functional technologies");

    auto* cmd_sim = app.add_subcommand("microreg-sim", "Stream-aggregation simulator");
    int sim_viewers = 1000;
    double sim_window = 1800.0, sim_interval = 5.0, sim_bitrate = 5.0, sim_capacity = 2549.76;
    std::string sim_process = "uniform";
    cmd_sim->add_option("--viewers", sim_viewers, "Number of viewer requests");
    cmd_sim->add_option("--window", sim_window, "Arrival window in seconds");
    cmd_sim->add_option("--interval", sim_interval, "Synchronization interval in seconds");
    cmd_sim->add_option("--bitrate", sim_bitrate, "Stream bitrate in Mbps");
    cmd_sim->add_option("--capacity", sim_capacity, "Reference capacity in Mbps");
    cmd_sim->add_option("--process", sim_process, "Arrival process: uniform or poisson")
        ->check(CLI::IsMember({"uniform", "poisson"}));

    auto* cmd_pricing = app.add_subcommand("pricing", "Best-practice tariff model");
    double pr_ea = 1.0, pr_k = 1.0, pr_c = 0.10, pr_fee = 0.0, pr_grid = 1e-4;
    bool pr_optimize = false;
    cmd_pricing->add_option("--ea", pr_ea, "kWh per service with the assessed practice")
        ->required();
    cmd_pricing->add_option("--k", pr_k, "Tariff intensity factor");
    cmd_pricing->add_option("--c", pr_c, "Electricity price, $ per kWh");
    cmd_pricing->add_option("--fee", pr_fee, "Best-practice license fee per service, [0,1)");
    cmd_pricing->add_flag("--optimize", pr_optimize, "Grid-search the holder-optimal fee");
    cmd_pricing->add_option("--grid", pr_grid, "Grid step for --optimize");

    // Let the global flags (--format, --units, ...) appear after a subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        const OutputFormat format = *output_format_from_string(format_str);
        const EnergyUnit unit = *energy_unit_from_string(units_str);
        RunData data = config_path.empty() ? builtin_run_data() : load_config_file(config_path);

        if (*cmd_catalog) {
            std::cout << render_catalog(data, format);
            return kExitOk;
        }
        if (*cmd_reach) {
            const TechnologySpec* tech = find_technology(data.catalog, reach_tech);
            if (!tech) throw UnknownIdentifier("unknown technology: " + reach_tech);
            std::cout << render_reach(*tech, parse_split(reach_split), format);
            return kExitOk;
        }
        if (*cmd_table) {
            std::cout << render_table(data, table_id, format, unit);
            return kExitOk;
        }
        if (*cmd_whatif) {
            const WhatIfResult r =
                run_whatif(data, wi_tech, wi_scenario, *codec_from_string(wi_codec), wi_nonfunc);
            std::cout << render_whatif(r, format, unit);
            return r.cell.feasible ? kExitOk : kExitInfeasible;
        }
        if (*cmd_sim) {
            MicroRegConfig cfg;
            cfg.window_s = sim_window;
            cfg.sync_interval_s = sim_interval;
            cfg.stream_bitrate_mbps = sim_bitrate;
            cfg.rng_seed = seed;
            ArrivalProcess process{};
            arrival_process_from_string(sim_process, process);
            const MicroRegRun run = run_microreg(sim_viewers, cfg, process, sim_capacity);
            std::cout << render_microreg(run, format);
            return kExitOk;
        }
        if (*cmd_pricing) {
            PricingParams params{pr_ea, pr_k, pr_c, pr_fee};
            if (params.fee < 0.0 || params.fee >= 1.0)
                throw UnknownIdentifier("fee must lie in [0, 1)");
            const PricingRun run = run_pricing(params, pr_optimize, pr_grid);
            std::cout << render_pricing(run, format);
            return kExitOk;
        }
    } catch (const BadConfig& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownIdentifier& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
