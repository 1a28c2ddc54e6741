#include "bbplan/pricing.hpp"

#include "bbplan/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace bbplan {

double practice_delta(double e_a) {
    if (e_a < 1.0) throw BelowBaseline("practice consumption below the 1 kWh baseline");
    return e_a - 1.0;
}

double bpdf_rate(double k, double delta, double c_elec) { return k * delta * c_elec; }

double total_cost(const PricingParams& params) {
    const double delta = practice_delta(params.e_a);
    return params.c_elec * (1.0 + params.k * delta * delta / (1.0 + params.k * params.fee));
}

double holder_objective(const PricingParams& params) {
    const double delta = practice_delta(params.e_a);
    return params.fee +
           (params.k * delta * delta / (1.0 + params.k * params.fee)) * params.c_elec;
}

FeeOptimum optimize_fee(double k, double delta, double c_elec, double grid_step) {
    if (grid_step <= 0.0) throw std::invalid_argument("grid_step must be positive");

    auto objective = [&](double fee) {
        return fee + (k * delta * delta / (1.0 + k * fee)) * c_elec;
    };

    FeeOptimum opt;
    opt.fee_star = 0.0;
    opt.j_star = objective(0.0);
    for (double fee = grid_step; fee < 1.0 - grid_step / 2.0; fee += grid_step) {
        const double j = objective(fee);
        if (j > opt.j_star) { // ties keep the smaller fee
            opt.j_star = j;
            opt.fee_star = fee;
        }
    }

    // dJ/df = 1 - K^2 delta^2 c / (1 + K f)^2 vanishes at f = (K delta sqrt(c) - 1) / K.
    // d2J/df2 > 0 there, so the stationary point is a minimum and the maximum
    // sits on the boundary of [0, 1).
    if (k > 0.0) {
        const double f = (k * delta * std::sqrt(c_elec) - 1.0) / k;
        if (f > 0.0 && f < 1.0) opt.interior_critical_point = f;
    }
    opt.diagnosis = "boundary";
    return opt;
}

} // namespace bbplan
