#pragma once

#include <optional>
#include <string>

namespace bbplan {

/// Best-practice delta tariff inputs. The service price is normalized to $1,
/// so the license fee lives in [0, 1).
struct PricingParams {
    double e_a = 1.0;    // kWh per service with practice A (best practice = 1 kWh)
    double k = 1.0;      // intensity factor, > 0
    double c_elec = 0.1; // $ per kWh
    double fee = 0.0;    // license fee per service, [0, 1)
};

/// Excess consumption over the best practice: e_a - 1 kWh.
/// Throws BelowBaseline for e_a < 1; the model is one-sided.
double practice_delta(double e_a);

/// Skewed per-kWh rate K * delta * c. The caller chooses whether delta is the
/// plain or the fee-adjusted difference.
double bpdf_rate(double k, double delta, double c_elec);

/// Operator's total energy cost per service:
/// c * (1 + K * delta^2 / (1 + K * fee)).
double total_cost(const PricingParams& params);

/// Best-practice holder's net revenue per service:
/// fee + differential tariff revenue (all of it accrues to the holder).
double holder_objective(const PricingParams& params);

struct FeeOptimum {
    double fee_star = 0.0;
    double j_star = 0.0;
    /// Stationary point of J in (0,1), when one exists. It is a minimum
    /// (J is convex in the fee), so the argmax sits on the domain boundary.
    std::optional<double> interior_critical_point;
    std::string diagnosis; // "boundary" or "interior"
};

/// Grid search of the holder objective over fees [0, 1 - grid_step],
/// ties broken toward the smaller fee.
FeeOptimum optimize_fee(double k, double delta, double c_elec, double grid_step);

} // namespace bbplan
