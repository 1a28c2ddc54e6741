#pragma once

#include "bbplan/config.hpp"
#include "bbplan/energy.hpp"
#include "bbplan/feasibility.hpp"
#include "bbplan/microreg.hpp"
#include "bbplan/pricing.hpp"

#include <string>

namespace bbplan {

enum class OutputFormat { Markdown, Csv, Json };

std::optional<OutputFormat> output_format_from_string(const std::string& s);

/// Fixed-decimal rendering used everywhere numbers are printed, so reports
/// are byte-stable across runs.
std::string fmt_fixed(double v, int decimals);

/// Report ids follow the CLI contract: 1 reach, 3 feasibility mesh,
/// 4 enhancement summary, 5 energy coefficients, 6 energy matrix.
std::string render_table(const RunData& data, int table_id, OutputFormat format,
                         EnergyUnit unit = EnergyUnit::Joule);

std::string render_catalog(const RunData& data, OutputFormat format);

std::string render_reach(const TechnologySpec& tech, const SplitPlan& split, OutputFormat format);

struct WhatIfResult {
    std::string tech_label;
    std::string scenario_id;
    Codec codec{};
    bool nonfunc = false;
    FeasibilityCell cell;
    std::optional<double> joules_per_gb;
    std::optional<double> joules_per_video_second;
};

WhatIfResult run_whatif(const RunData& data, const std::string& tech, const std::string& scenario,
                        Codec codec, bool nonfunc);

std::string render_whatif(const WhatIfResult& r, OutputFormat format, EnergyUnit unit);

struct MicroRegRun {
    MicroRegConfig config;
    int viewers = 0;
    ArrivalProcess process = ArrivalProcess::Uniform;
    double reference_capacity_mbps = 0.0;
    AggregationResult result;
    double savings = 0.0;
};

MicroRegRun run_microreg(int viewers, const MicroRegConfig& config, ArrivalProcess process,
                         double reference_capacity_mbps);

std::string render_microreg(const MicroRegRun& run, OutputFormat format);

struct PricingRun {
    PricingParams params;
    double delta = 0.0;
    double rate = 0.0;
    double cost = 0.0;
    double objective = 0.0;
    std::optional<FeeOptimum> optimum; // present when optimization was requested
};

PricingRun run_pricing(const PricingParams& params, bool optimize, double grid_step);

std::string render_pricing(const PricingRun& run, OutputFormat format);

} // namespace bbplan
