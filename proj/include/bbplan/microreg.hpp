#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bbplan {

enum class ArrivalProcess { Uniform, Poisson };

std::string to_string(ArrivalProcess p);
bool arrival_process_from_string(const std::string& s, ArrivalProcess& out);

/// Stream-start aggregation policy. Delayed variant is named but not modeled;
/// selecting it raises Unsupported.
enum class MicroRegPolicy { Immediate, Delayed };

struct MicroRegConfig {
    double sync_interval_s = 5.0;
    double window_s = 1800.0;
    double stream_bitrate_mbps = 5.0;
    std::uint64_t rng_seed = 0;
    MicroRegPolicy policy = MicroRegPolicy::Immediate;
};

struct AggregationResult {
    int active_streams = 0;
    std::vector<long long> assignments; // slot index per request
    double max_wait_s = 0.0;            // strictly below the sync interval
    double aggregate_bandwidth_mbps = 0.0;
};

/// Deterministic for a fixed seed; all arrivals land in [0, window).
std::vector<double> generate_arrivals(int n, double window_s, ArrivalProcess process,
                                      std::uint64_t seed);

/// Snap every request forward to the next synchronization boundary
/// k * sync_interval >= arrival; one shared stream per occupied boundary.
AggregationResult aggregate_streams(const std::vector<double>& arrivals,
                                    const MicroRegConfig& config);

/// Signed saving fraction 1 - aggregate/reference. Negative means the
/// aggregate exceeds the reference capacity.
double bandwidth_savings(const AggregationResult& result, double reference_capacity_mbps);

} // namespace bbplan
