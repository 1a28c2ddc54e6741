#include "bbplan/microreg.hpp"

#include "bbplan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace bbplan {

std::string to_string(ArrivalProcess p) {
    return p == ArrivalProcess::Uniform ? "uniform" : "poisson";
}

bool arrival_process_from_string(const std::string& s, ArrivalProcess& out) {
    if (s == "uniform") {
        out = ArrivalProcess::Uniform;
        return true;
    }
    if (s == "poisson") {
        out = ArrivalProcess::Poisson;
        return true;
    }
    return false;
}

std::vector<double> generate_arrivals(int n, double window_s, ArrivalProcess process,
                                      std::uint64_t seed) {
    std::vector<double> arrivals;
    arrivals.reserve(static_cast<std::size_t>(std::max(n, 0)));
    std::mt19937_64 rng(seed);
    if (process == ArrivalProcess::Uniform) {
        std::uniform_real_distribution<double> dist(0.0, window_s);
        for (int i = 0; i < n; ++i) {
            double a = dist(rng);
            if (a >= window_s) a = std::nextafter(window_s, 0.0);
            arrivals.push_back(a);
        }
    } else {
        // Exponential gaps at rate n/window, wrapped into the window.
        std::exponential_distribution<double> gap(n > 0 ? n / window_s : 1.0);
        double t = 0.0;
        for (int i = 0; i < n; ++i) {
            t += gap(rng);
            arrivals.push_back(std::fmod(t, window_s));
        }
    }
    return arrivals;
}

AggregationResult aggregate_streams(const std::vector<double>& arrivals,
                                    const MicroRegConfig& config) {
    if (config.policy == MicroRegPolicy::Delayed)
        throw Unsupported("delayed micro-registration is not modeled");

    AggregationResult result;
    result.assignments.reserve(arrivals.size());
    std::set<long long> occupied;
    for (double a : arrivals) {
        const long long slot = static_cast<long long>(std::ceil(a / config.sync_interval_s));
        const double wait = slot * config.sync_interval_s - a;
        result.assignments.push_back(slot);
        result.max_wait_s = std::max(result.max_wait_s, wait);
        occupied.insert(slot);
    }
    result.active_streams = static_cast<int>(occupied.size());
    result.aggregate_bandwidth_mbps = result.active_streams * config.stream_bitrate_mbps;
    return result;
}

double bandwidth_savings(const AggregationResult& result, double reference_capacity_mbps) {
    return 1.0 - result.aggregate_bandwidth_mbps / reference_capacity_mbps;
}

} // namespace bbplan
