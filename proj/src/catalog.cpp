#include "bbplan/catalog.hpp"

#include <algorithm>
#include <cmath>

namespace bbplan {

namespace {
constexpr double kReachEps = 1e-9;
constexpr double kDbPerSplitDoubling = 3.5;
} // namespace

long long SplitPlan::total() const {
    long long t = 1;
    for (int s : levels) t *= s;
    return t;
}

double SplitPlan::split_loss_db() const {
    double loss = 0.0;
    for (int s : levels) loss += kDbPerSplitDoubling * std::log2(static_cast<double>(s));
    return loss;
}

std::string to_string(Codec c) { return c == Codec::AVC ? "AVC" : "HEVC"; }
std::string to_string(Resolution r) { return r == Resolution::HD ? "HD" : "4K"; }
std::string to_string(Grade g) { return g == Grade::Low ? "low" : "high"; }

std::optional<Codec> codec_from_string(const std::string& s) {
    if (s == "AVC" || s == "avc") return Codec::AVC;
    if (s == "HEVC" || s == "hevc") return Codec::HEVC;
    return std::nullopt;
}

std::optional<Resolution> resolution_from_string(const std::string& s) {
    if (s == "HD" || s == "hd") return Resolution::HD;
    if (s == "4K" || s == "4k") return Resolution::FourK;
    return std::nullopt;
}

std::optional<Grade> grade_from_string(const std::string& s) {
    if (s == "low") return Grade::Low;
    if (s == "high") return Grade::High;
    return std::nullopt;
}

std::vector<TechnologySpec> builtin_catalog() {
    std::vector<TechnologySpec> cat;

    TechnologySpec ta;
    ta.label = "Ta";
    ta.name = "OC-48";
    ta.kind = TechKind::Copper;
    ta.ds_capacity_mbps = mbps_from_gbps(2.49);
    ta.us_capacity_mbps = mbps_from_gbps(2.49);
    ta.per_line_limit_mbps = 7.0; // ADSL/VDSL drop, 7/3 Mbps DS/US
    ta.fixed_reach_km = 4.5;
    ta.copper_max_split = 256;
    cat.push_back(ta);

    TechnologySpec tb;
    tb.label = "Tb";
    tb.name = "GPON B+";
    tb.ds_capacity_mbps = mbps_from_gbps(2.50);
    tb.us_capacity_mbps = mbps_from_gbps(1.25);
    tb.optical_budget_db = 28.0;
    tb.attenuation_db_per_km = 0.6;
    cat.push_back(tb);

    TechnologySpec tc;
    tc.label = "Tc";
    tc.name = "40G TDM PON";
    tc.ds_capacity_mbps = mbps_from_gbps(40.0);
    tc.us_capacity_mbps = mbps_from_gbps(10.0);
    tc.optical_budget_db = 31.0;
    tc.attenuation_db_per_km = 0.6;
    cat.push_back(tc);

    TechnologySpec td;
    td.label = "Td";
    td.name = "TWDM";
    td.ds_capacity_mbps = mbps_from_gbps(40.0);
    td.us_capacity_mbps = mbps_from_gbps(10.0);
    td.optical_budget_db = 35.0;
    td.attenuation_db_per_km = 0.4;
    cat.push_back(td);

    TechnologySpec te;
    te.label = "Te";
    te.name = "OFDM";
    te.ds_capacity_mbps = mbps_from_gbps(40.0);
    te.us_capacity_mbps = mbps_from_gbps(10.0);
    te.optical_budget_db = 34.5;
    te.attenuation_db_per_km = 0.6;
    cat.push_back(te);

    return cat;
}

std::vector<EncodingProfile> builtin_encodings() {
    return {
        {Codec::AVC, Resolution::HD, Grade::Low, 6.0},
        {Codec::HEVC, Resolution::HD, Grade::High, 4.9},
        {Codec::HEVC, Resolution::HD, Grade::Low, 3.0},
        {Codec::AVC, Resolution::FourK, Grade::Low, 16.0},
        {Codec::HEVC, Resolution::FourK, Grade::High, 20.0},
        {Codec::HEVC, Resolution::FourK, Grade::Low, 8.0},
    };
}

std::optional<double> reach_km(const TechnologySpec& tech, const SplitPlan& split) {
    if (tech.kind == TechKind::Copper) {
        if (tech.copper_max_split && split.total() > *tech.copper_max_split) return std::nullopt;
        return tech.fixed_reach_km;
    }
    const double budget = *tech.optical_budget_db - tech.patch_margin_db - split.split_loss_db();
    if (budget <= kReachEps) return std::nullopt; // exactly-zero budgets count as unreachable
    return budget / *tech.attenuation_db_per_km;
}

std::optional<int> max_supported_split(const TechnologySpec& tech,
                                       const std::vector<int>& candidates) {
    if (tech.kind == TechKind::Copper) return kUnlimitedSplit;
    std::optional<int> best;
    for (int s : candidates) {
        if (reach_km(tech, SplitPlan::single(s)).has_value()) {
            if (!best || s > *best) best = s;
        }
    }
    return best;
}

const TechnologySpec* find_technology(const std::vector<TechnologySpec>& catalog,
                                      const std::string& label) {
    auto it = std::find_if(catalog.begin(), catalog.end(),
                           [&](const TechnologySpec& t) { return t.label == label; });
    return it == catalog.end() ? nullptr : &*it;
}

const EncodingProfile* find_encoding(const std::vector<EncodingProfile>& encodings,
                                     Codec codec, Resolution res, Grade grade) {
    auto it = std::find_if(encodings.begin(), encodings.end(), [&](const EncodingProfile& e) {
        return e.codec == codec && e.resolution == res && e.grade == grade;
    });
    return it == encodings.end() ? nullptr : &*it;
}

} // namespace bbplan
