#include "bbplan/energy.hpp"

#include "bbplan/errors.hpp"

#include <algorithm>
#include <cmath>

namespace bbplan {

namespace {

double require(const std::optional<double>& v, const char* name) {
    if (!v) throw MissingParams(std::string("power parameter missing: ") + name);
    return *v;
}

/// OLT correction factor (1/40 - 1/n_s0); zero when the whole correction
/// triple is absent, MissingParams when only part of it is supplied.
double olt_correction_w(const PowerParams& p, double bw_d_mbps) {
    const bool any = p.n_s0 || p.n_h0 || p.p_delta_olt0_w;
    if (!any) return 0.0;
    if (!p.n_s0) throw MissingParams("power parameter missing: n_s0");
    const double n_h0 = require(p.n_h0, "n_h0");
    const double p_olt0 = require(p.p_delta_olt0_w, "p_delta_olt0");
    const double span = p.onu_interp.bw_hi_mbps - p.onu_interp.bw_lo_mbps;
    return (n_h0 * p_olt0 * bw_d_mbps / span) * (1.0 / 40.0 - 1.0 / *p.n_s0);
}

double onu_slope_w_per_mbps(const OnuInterp& i) {
    return i.watts_delta / (i.bw_hi_mbps - i.bw_lo_mbps);
}

} // namespace

double n_active_homes(double n_s, double bw_max_mbps, double bw_d_mbps) {
    return std::min(n_s, bw_max_mbps / bw_d_mbps);
}

double power_per_home(const PowerParams& params, const TechnologySpec& tech, double bw_d_mbps,
                      int n_s) {
    const double p_port = require(params.p_olt_port_w, "p_olt_port");
    const double p_user = require(params.p_olt_user_w, "p_olt_user");
    const double p_onu00 = require(params.p_onu00_w, "p_onu00");

    const double n_h = n_active_homes(static_cast<double>(n_s), tech.ds_capacity_mbps, bw_d_mbps);
    const double olt = (p_port + n_h * p_user) / n_h;
    const double onu = (p_onu00 + onu_slope_w_per_mbps(params.onu_interp) *
                                      (bw_d_mbps - params.onu_interp.bw_lo_mbps)) *
                       (static_cast<double>(n_s) / n_h);
    return olt + onu + olt_correction_w(params, bw_d_mbps);
}

EnergyCoefficients derive_coefficients(const PowerParams& params, int n_s) {
    const double p_port = require(params.p_olt_port_w, "p_olt_port");
    const double p_user = require(params.p_olt_user_w, "p_olt_user");
    const double p_onu00 = require(params.p_onu00_w, "p_onu00");
    const double slope = onu_slope_w_per_mbps(params.onu_interp);

    // Split-limited regime (n_h = n_s). Energy per Gb is (1024/BW) * P(BW),
    // which collapses to A/BW + B because P is affine in BW.
    EnergyCoefficients c;
    c.a_delta = kMbpsPerGbps *
                (p_port / n_s + p_user + p_onu00 - slope * params.onu_interp.bw_lo_mbps);
    c.b_delta = kMbpsPerGbps * slope;
    if (params.n_s0 || params.n_h0 || params.p_delta_olt0_w) {
        // The correction term is linear in BW, so its energy share is constant.
        c.b_delta += kMbpsPerGbps * olt_correction_w(params, 1.0);
    }
    return c;
}

std::map<std::string, EnergyCoefficients> builtin_coefficients() {
    return {
        {"Tb", {9228.0, 0.0312}},
        {"Tc", {14480.0, 0.3751}},
        {"Td", {13531.0, 1.2810}},
        {"Te", {21368.0, 4.2286}},
    };
}

double energy_per_gb(const EnergyCoefficients& coeffs, double bw_d_mbps) {
    return coeffs.a_delta / bw_d_mbps + coeffs.b_delta;
}

double per_video_second(double e_per_gb_j, double bitrate_mbps) {
    return e_per_gb_j / (kMbpsPerGbps / bitrate_mbps);
}

double burst_energy_per_gb(const EnergyCoefficients& coeffs, double bw_burst_mbps,
                           double bw_stream_mbps) {
    if (!(bw_burst_mbps >= bw_stream_mbps) || !(bw_stream_mbps > 0.0))
        throw std::invalid_argument("burst bandwidth must satisfy bw_burst >= bw_stream > 0");
    const double duty = bw_stream_mbps / bw_burst_mbps;
    return duty * energy_per_gb(coeffs, bw_burst_mbps);
}

std::vector<EnergyCell> energy_matrix(const std::map<std::string, EnergyCoefficients>& coeffs,
                                      const std::vector<TechnologySpec>& catalog,
                                      const std::vector<Scenario>& scenarios,
                                      const std::vector<EncodingProfile>& encodings) {
    std::vector<EnergyCell> out;
    for (const Scenario& sc : scenarios) {
        for (Codec codec : {Codec::AVC, Codec::HEVC}) {
            const EncodingProfile* enc = find_encoding(encodings, codec, sc.video_class, Grade::Low);
            if (!enc)
                throw UnknownIdentifier("no low-grade " + to_string(codec) + " profile for " +
                                        to_string(sc.video_class));
            for (const TechnologySpec& tech : catalog) {
                auto cit = coeffs.find(tech.label);
                if (cit == coeffs.end()) continue;
                for (bool nonfunc : {false, true}) {
                    EnergyCell cell;
                    cell.tech_label = tech.label;
                    cell.scenario_id = sc.id;
                    cell.codec = codec;
                    cell.nonfunc = nonfunc;
                    cell.bw_d_mbps = per_home_demand(sc, *enc);
                    const FeasibilityCell f =
                        check_feasibility(tech, sc, *enc, Enhancements{nonfunc, codec});
                    cell.feasible = f.feasible;
                    if (f.feasible) {
                        double e = energy_per_gb(cit->second, cell.bw_d_mbps);
                        if (nonfunc && sc.nonfunc_model == NonFuncModel::AggregateRatio)
                            e *= sc.aggregate_ratio;
                        cell.joules_per_gb = e;
                    }
                    out.push_back(std::move(cell));
                }
            }
        }
    }
    return out;
}

const EnergyCell* find_energy_cell(const std::vector<EnergyCell>& matrix, const std::string& tech,
                                   const std::string& scenario, Codec codec, bool nonfunc) {
    auto it = std::find_if(matrix.begin(), matrix.end(), [&](const EnergyCell& c) {
        return c.tech_label == tech && c.scenario_id == scenario && c.codec == codec &&
               c.nonfunc == nonfunc;
    });
    return it == matrix.end() ? nullptr : &*it;
}

double convert_energy(double joules, EnergyUnit unit) {
    switch (unit) {
    case EnergyUnit::Joule: return joules;
    case EnergyUnit::WattHour: return joules * 0.000278;
    case EnergyUnit::KiloCalorie: return joules / 4184.0;
    case EnergyUnit::Btu: return joules / 1055.06;
    }
    return joules;
}

std::string to_string(EnergyUnit u) {
    switch (u) {
    case EnergyUnit::Joule: return "J";
    case EnergyUnit::WattHour: return "Wh";
    case EnergyUnit::KiloCalorie: return "kcal";
    case EnergyUnit::Btu: return "BTU";
    }
    return "J";
}

std::optional<EnergyUnit> energy_unit_from_string(const std::string& s) {
    if (s == "J") return EnergyUnit::Joule;
    if (s == "Wh") return EnergyUnit::WattHour;
    if (s == "kcal") return EnergyUnit::KiloCalorie;
    if (s == "BTU") return EnergyUnit::Btu;
    return std::nullopt;
}

} // namespace bbplan
