#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace bbplan {

/// Bandwidths are Mbps everywhere internally; Gbps is presentation only.
/// Binary conversion, matching the source arithmetic (1000 x 5.26 Mbps -> 5.14 Gbps).
inline constexpr double kMbpsPerGbps = 1024.0;

inline constexpr double mbps_from_gbps(double gbps) { return gbps * kMbpsPerGbps; }

/// Ordered per-level split factors of a PON tree. Each 2x split costs ~3.5 dB.
struct SplitPlan {
    std::vector<int> levels;

    SplitPlan() = default;
    explicit SplitPlan(std::vector<int> lv) : levels(std::move(lv)) {}

    /// Total fan-out S = product of the level factors.
    long long total() const;

    /// Sum of per-level losses, 3.5 * log2(S_l) each. Equal to the
    /// total-form loss 3.5 * log2(S) for every plan.
    double split_loss_db() const;

    static SplitPlan single(int s) { return SplitPlan{{s}}; }
};

enum class TechKind { Copper, Pon };

struct TechnologySpec {
    std::string label; // Ta..Te for the built-ins
    std::string name;
    TechKind kind = TechKind::Pon;
    double ds_capacity_mbps = 0.0;
    double us_capacity_mbps = 0.0;
    std::optional<double> optical_budget_db;     // PON only
    std::optional<double> attenuation_db_per_km; // PON only
    double patch_margin_db = 3.0;                // fiber patching margin
    std::optional<double> per_line_limit_mbps;   // absent = unlimited
    std::optional<double> fixed_reach_km;        // copper only
    std::optional<int> copper_max_split;         // largest fan-out a copper plant serves
};

enum class Codec { AVC, HEVC };
enum class Resolution { HD, FourK };
enum class Grade { Low, High };

struct EncodingProfile {
    Codec codec{};
    Resolution resolution{};
    Grade grade{};
    double bitrate_mbps = 0.0;
};

std::string to_string(Codec c);
std::string to_string(Resolution r);
std::string to_string(Grade g);
std::optional<Codec> codec_from_string(const std::string& s);
std::optional<Resolution> resolution_from_string(const std::string& s);
std::optional<Grade> grade_from_string(const std::string& s);

/// The five built-in metro access technologies (Ta..Te).
std::vector<TechnologySpec> builtin_catalog();

/// The six built-in codec/resolution bitrate profiles.
std::vector<EncodingProfile> builtin_encodings();

/// Legacy HD bitrate used by the narrative aggregate figures (5.14 Gbps etc.);
/// not part of the default profile set.
inline constexpr double kLegacyHdBitrateMbps = 5.26;

/// Maximum reach in km for a technology at the given split plan.
/// nullopt means the split losses exhaust the optical budget (reach <= 0).
/// Copper returns its fixed reach, up to its plant's split ceiling.
std::optional<double> reach_km(const TechnologySpec& tech, const SplitPlan& split);

/// Marker for technologies with no split ceiling (copper plants).
inline constexpr int kUnlimitedSplit = std::numeric_limits<int>::max();

inline const std::vector<int>& default_split_candidates() {
    static const std::vector<int> c{64, 128, 256, 512, 1024};
    return c;
}

/// Largest candidate split with positive reach; nullopt if none is reachable.
/// Copper returns kUnlimitedSplit (the split concept does not apply).
std::optional<int> max_supported_split(const TechnologySpec& tech,
                                       const std::vector<int>& candidates = default_split_candidates());

const TechnologySpec* find_technology(const std::vector<TechnologySpec>& catalog,
                                      const std::string& label);
const EncodingProfile* find_encoding(const std::vector<EncodingProfile>& encodings,
                                     Codec codec, Resolution res, Grade grade);

} // namespace bbplan
