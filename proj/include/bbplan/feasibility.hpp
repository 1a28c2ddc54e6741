#pragma once

#include "bbplan/catalog.hpp"

#include <map>
#include <string>
#include <vector>

namespace bbplan {

/// How the non-functional technologies act on a scenario's aggregate demand.
enum class NonFuncModel { StreamCap, AggregateRatio, NoEffect };

struct Scenario {
    std::string id; // Sc1..Sc4 for the built-ins
    int homes = 0;
    double channels_per_home = 1.0;
    double reserved_internet_mbps = 0.0;
    Resolution video_class = Resolution::HD;
    double arrival_window_s = 1800.0; // StreamCap model
    double sync_interval_s = 5.0;     // StreamCap model
    NonFuncModel nonfunc_model = NonFuncModel::NoEffect;
    double aggregate_ratio = 1.0; // AggregateRatio model
    int required_split = 1;
    std::map<std::string, int> split_override; // per-technology label
};

struct Enhancements {
    bool nonfunc = false;
    Codec codec = Codec::AVC;
};

enum class Violation { PerLineLimit, AggregateCapacity, SplitUnsupported };

std::string to_string(Violation v);
std::string to_string(NonFuncModel m);
std::optional<NonFuncModel> nonfunc_model_from_string(const std::string& s);

struct FeasibilityCell {
    bool feasible = false;
    double per_home_demand_mbps = 0.0;
    double aggregate_demand_mbps = 0.0;
    std::vector<Violation> violated; // feasible <=> empty
};

/// Built-in scenarios Sc1..Sc4.
std::vector<Scenario> builtin_scenarios();

const Scenario* find_scenario(const std::vector<Scenario>& scenarios, const std::string& id);

/// Per-home downstream demand: bitrate x channels + reserved Internet share.
/// Throws ResolutionMismatch when the encoding does not serve the scenario's
/// video class.
double per_home_demand(const Scenario& scenario, const EncodingProfile& encoding);

/// Metro-area aggregate demand, with the scenario's non-functional reduction
/// applied when `nonfunc` is set.
double aggregate_demand(const Scenario& scenario, const EncodingProfile& encoding, bool nonfunc);

/// Evaluates all three deliverability constraints. Infeasibility is a value;
/// every violated constraint is reported.
FeasibilityCell check_feasibility(const TechnologySpec& tech, const Scenario& scenario,
                                  const EncodingProfile& encoding, const Enhancements& enh);

struct MatrixEntry {
    std::string tech_label;
    std::string scenario_id;
    Codec codec{};
    bool nonfunc = false;
    FeasibilityCell cell;
};

/// 80-cell mesh: technology x scenario x codec x non-functional state.
/// For each (scenario, codec) the low-grade profile of the scenario's video
/// class is used.
std::vector<MatrixEntry> feasibility_matrix(const std::vector<TechnologySpec>& catalog,
                                            const std::vector<Scenario>& scenarios,
                                            const std::vector<EncodingProfile>& encodings);

const MatrixEntry* find_cell(const std::vector<MatrixEntry>& matrix, const std::string& tech,
                             const std::string& scenario, Codec codec, bool nonfunc);

struct GroupSummary {
    std::string group_name;
    int pairs = 0;        // technology x scenario pairs in the group
    int baseline = 0;     // (AVC, w/o) already feasible
    int nonfunc_only = 0; // (codec, w/o) infeasible -> (codec, w/) feasible, per codec
    int hevc_only = 0;    // (AVC, w/o) infeasible -> (HEVC, w/o) feasible
    int both = 0;         // (AVC, w/o) infeasible -> (HEVC, w/) feasible
};

struct EnhancementSummary {
    GroupSummary below_40g;   // ds capacity under 40 Gbps
    GroupSummary at_least_40g;
};

EnhancementSummary enhancement_summary(const std::vector<MatrixEntry>& matrix,
                                       const std::vector<TechnologySpec>& catalog);

} // namespace bbplan
