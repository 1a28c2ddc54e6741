#include "bbplan/feasibility.hpp"

#include "bbplan/errors.hpp"

#include <algorithm>
#include <cmath>

namespace bbplan {

namespace {
constexpr double kEps = 1e-9;
} // namespace

std::string to_string(Violation v) {
    switch (v) {
    case Violation::PerLineLimit: return "PerLineLimit";
    case Violation::AggregateCapacity: return "AggregateCapacity";
    case Violation::SplitUnsupported: return "SplitUnsupported";
    }
    return "?";
}

std::string to_string(NonFuncModel m) {
    switch (m) {
    case NonFuncModel::StreamCap: return "StreamCap";
    case NonFuncModel::AggregateRatio: return "AggregateRatio";
    case NonFuncModel::NoEffect: return "NoEffect";
    }
    return "?";
}

std::optional<NonFuncModel> nonfunc_model_from_string(const std::string& s) {
    if (s == "StreamCap") return NonFuncModel::StreamCap;
    if (s == "AggregateRatio") return NonFuncModel::AggregateRatio;
    if (s == "NoEffect") return NonFuncModel::NoEffect;
    return std::nullopt;
}

std::vector<Scenario> builtin_scenarios() {
    std::vector<Scenario> out;

    Scenario sc1;
    sc1.id = "Sc1";
    sc1.homes = 1000;
    sc1.channels_per_home = 1.0;
    sc1.video_class = Resolution::HD;
    sc1.arrival_window_s = 1800.0; // requests arrive in the first 30 minutes
    sc1.sync_interval_s = 5.0;
    sc1.nonfunc_model = NonFuncModel::StreamCap;
    sc1.required_split = 1024;
    out.push_back(sc1);

    Scenario sc2;
    sc2.id = "Sc2";
    sc2.homes = 256;
    sc2.channels_per_home = 1.85;
    sc2.reserved_internet_mbps = 1.0;
    sc2.video_class = Resolution::HD;
    sc2.nonfunc_model = NonFuncModel::NoEffect; // IPTV delivery is already aggregated
    sc2.required_split = 256;
    sc2.split_override = {{"Tb", 128}, {"Tc", 128}};
    out.push_back(sc2);

    Scenario sc3;
    sc3.id = "Sc3";
    sc3.homes = 256;
    sc3.channels_per_home = 1.85;
    sc3.video_class = Resolution::HD;
    sc3.nonfunc_model = NonFuncModel::AggregateRatio;
    sc3.aggregate_ratio = 0.46875;
    sc3.required_split = 256;
    sc3.split_override = {{"Tb", 128}, {"Tc", 128}};
    out.push_back(sc3);

    Scenario sc4 = sc3;
    sc4.id = "Sc4";
    sc4.video_class = Resolution::FourK;
    out.push_back(sc4);

    return out;
}

const Scenario* find_scenario(const std::vector<Scenario>& scenarios, const std::string& id) {
    auto it = std::find_if(scenarios.begin(), scenarios.end(),
                           [&](const Scenario& s) { return s.id == id; });
    return it == scenarios.end() ? nullptr : &*it;
}

double per_home_demand(const Scenario& scenario, const EncodingProfile& encoding) {
    if (encoding.resolution != scenario.video_class) {
        throw ResolutionMismatch("encoding resolution " + to_string(encoding.resolution) +
                                 " does not match scenario video class " +
                                 to_string(scenario.video_class));
    }
    return encoding.bitrate_mbps * scenario.channels_per_home + scenario.reserved_internet_mbps;
}

double aggregate_demand(const Scenario& scenario, const EncodingProfile& encoding, bool nonfunc) {
    const double per_home = per_home_demand(scenario, encoding);
    const double raw = scenario.homes * per_home;
    if (!nonfunc) return raw;
    switch (scenario.nonfunc_model) {
    case NonFuncModel::StreamCap: {
        const double slots = std::ceil(scenario.arrival_window_s / scenario.sync_interval_s);
        return std::min(static_cast<double>(scenario.homes), slots) * per_home;
    }
    case NonFuncModel::AggregateRatio:
        return raw * scenario.aggregate_ratio;
    case NonFuncModel::NoEffect:
        return raw;
    }
    return raw;
}

FeasibilityCell check_feasibility(const TechnologySpec& tech, const Scenario& scenario,
                                  const EncodingProfile& encoding, const Enhancements& enh) {
    FeasibilityCell cell;
    cell.per_home_demand_mbps = per_home_demand(scenario, encoding);
    cell.aggregate_demand_mbps = aggregate_demand(scenario, encoding, enh.nonfunc);

    if (tech.per_line_limit_mbps && cell.per_home_demand_mbps > *tech.per_line_limit_mbps + kEps)
        cell.violated.push_back(Violation::PerLineLimit);

    // The OLT carries the full metro-area aggregate even when a split
    // override reduces the tree fan-out.
    if (cell.aggregate_demand_mbps > tech.ds_capacity_mbps + kEps)
        cell.violated.push_back(Violation::AggregateCapacity);

    if (tech.kind == TechKind::Pon) {
        int required = scenario.required_split;
        if (auto it = scenario.split_override.find(tech.label);
            it != scenario.split_override.end())
            required = it->second;
        auto supported = max_supported_split(tech);
        if (!supported || required > *supported)
            cell.violated.push_back(Violation::SplitUnsupported);
    }

    cell.feasible = cell.violated.empty();
    return cell;
}

std::vector<MatrixEntry> feasibility_matrix(const std::vector<TechnologySpec>& catalog,
                                            const std::vector<Scenario>& scenarios,
                                            const std::vector<EncodingProfile>& encodings) {
    std::vector<MatrixEntry> matrix;
    for (const Scenario& sc : scenarios) {
        for (Codec codec : {Codec::AVC, Codec::HEVC}) {
            const EncodingProfile* enc = find_encoding(encodings, codec, sc.video_class, Grade::Low);
            if (!enc)
                throw UnknownIdentifier("no low-grade " + to_string(codec) + " profile for " +
                                        to_string(sc.video_class));
            for (const TechnologySpec& tech : catalog) {
                for (bool nonfunc : {false, true}) {
                    MatrixEntry e;
                    e.tech_label = tech.label;
                    e.scenario_id = sc.id;
                    e.codec = codec;
                    e.nonfunc = nonfunc;
                    e.cell = check_feasibility(tech, sc, *enc, Enhancements{nonfunc, codec});
                    matrix.push_back(std::move(e));
                }
            }
        }
    }
    return matrix;
}

const MatrixEntry* find_cell(const std::vector<MatrixEntry>& matrix, const std::string& tech,
                             const std::string& scenario, Codec codec, bool nonfunc) {
    auto it = std::find_if(matrix.begin(), matrix.end(), [&](const MatrixEntry& e) {
        return e.tech_label == tech && e.scenario_id == scenario && e.codec == codec &&
               e.nonfunc == nonfunc;
    });
    return it == matrix.end() ? nullptr : &*it;
}

EnhancementSummary enhancement_summary(const std::vector<MatrixEntry>& matrix,
                                       const std::vector<TechnologySpec>& catalog) {
    EnhancementSummary sum;
    sum.below_40g.group_name = "<40 Gbps";
    sum.at_least_40g.group_name = ">=40 Gbps";

    std::vector<std::string> scenario_ids;
    for (const MatrixEntry& e : matrix)
        if (std::find(scenario_ids.begin(), scenario_ids.end(), e.scenario_id) ==
            scenario_ids.end())
            scenario_ids.push_back(e.scenario_id);

    auto feasible = [&](const std::string& t, const std::string& s, Codec c, bool nf) {
        const MatrixEntry* e = find_cell(matrix, t, s, c, nf);
        return e != nullptr && e->cell.feasible;
    };

    for (const TechnologySpec& tech : catalog) {
        const bool high = tech.ds_capacity_mbps >= mbps_from_gbps(40.0);
        GroupSummary& g = high ? sum.at_least_40g : sum.below_40g;
        for (const std::string& sc : scenario_ids) {
            ++g.pairs;
            const bool avc_wo = feasible(tech.label, sc, Codec::AVC, false);
            const bool avc_w = feasible(tech.label, sc, Codec::AVC, true);
            const bool hevc_wo = feasible(tech.label, sc, Codec::HEVC, false);
            const bool hevc_w = feasible(tech.label, sc, Codec::HEVC, true);
            if (avc_wo) ++g.baseline;
            if (!avc_wo && avc_w) ++g.nonfunc_only;
            if (!hevc_wo && hevc_w) ++g.nonfunc_only;
            if (!avc_wo && hevc_wo) ++g.hevc_only;
            if (!avc_wo && hevc_w) ++g.both;
        }
    }
    return sum;
}

} // namespace bbplan
