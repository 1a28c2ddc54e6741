#pragma once

#include "bbplan/catalog.hpp"
#include "bbplan/feasibility.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bbplan {

/// Short-form per-Gb energy law: E = a_delta / BW_D + b_delta.
struct EnergyCoefficients {
    double a_delta = 0.0; // W*Mb
    double b_delta = 0.0; // J
};

/// Linear ONU power interpolation between two bandwidth anchors.
struct OnuInterp {
    double bw_lo_mbps = 100.0;
    double bw_hi_mbps = 1024.0;
    double watts_delta = 1.0; // power added going from the low to the high anchor
};

/// Inputs of the full differential power expression. OLT-side figures come
/// from external equipment data and may be absent; operations that need an
/// absent field throw MissingParams.
struct PowerParams {
    std::optional<double> p_olt_port_w;     // per OLT port
    std::optional<double> p_olt_user_w;     // per connected home
    std::optional<double> p_onu00_w;        // ONU zero-offset
    std::optional<int> n_s0;                // split serving both 100 Mbps and 1 Gbps
    std::optional<double> n_h0;             // active homes at 100 Mbps
    std::optional<double> p_delta_olt0_w;   // OLT differential power at 100 Mbps
    OnuInterp onu_interp;
};

/// Homes concurrently active at bandwidth bw_d: min(split, capacity quotient).
/// The fractional quotient is kept; the model amortizes, it does not schedule.
double n_active_homes(double n_s, double bw_max_mbps, double bw_d_mbps);

/// Differential power drawn per active home (W).
double power_per_home(const PowerParams& params, const TechnologySpec& tech, double bw_d_mbps,
                      int n_s);

/// Collapses the full per-Gb energy expression into (a_delta, b_delta) for the
/// split-limited regime (active homes = n_s).
EnergyCoefficients derive_coefficients(const PowerParams& params, int n_s);

/// Published coefficients for Tb..Te (Ta's copper plant is out of the model).
std::map<std::string, EnergyCoefficients> builtin_coefficients();

/// Joules per 1 Gb downloaded at bandwidth bw_d.
double energy_per_gb(const EnergyCoefficients& coeffs, double bw_d_mbps);

/// Joules per second of video watched, for a stream of the given bitrate.
/// One second of video carries bitrate/1024 Gb, so this is e * bitrate / 1024.
double per_video_second(double e_per_gb_j, double bitrate_mbps);

/// Burst transmission: send at bw_burst with duty cycle bw_stream/bw_burst,
/// ONU quasi-off between bursts.
double burst_energy_per_gb(const EnergyCoefficients& coeffs, double bw_burst_mbps,
                           double bw_stream_mbps);

struct EnergyCell {
    std::string tech_label;
    std::string scenario_id;
    Codec codec{};
    bool nonfunc = false;
    double bw_d_mbps = 0.0;
    bool feasible = false;
    std::optional<double> joules_per_gb; // absent when the combination is infeasible
};

/// Per-Gb energy for every modeled (technology, scenario, codec, nonfunc)
/// combination. Technologies without coefficients (Ta) are skipped; their
/// cells carry only bandwidth annotations at the reporting layer.
std::vector<EnergyCell> energy_matrix(const std::map<std::string, EnergyCoefficients>& coeffs,
                                      const std::vector<TechnologySpec>& catalog,
                                      const std::vector<Scenario>& scenarios,
                                      const std::vector<EncodingProfile>& encodings);

const EnergyCell* find_energy_cell(const std::vector<EnergyCell>& matrix, const std::string& tech,
                                   const std::string& scenario, Codec codec, bool nonfunc);

/// Energy presentation units. Conversion constants are the conventional ones:
/// 1 J = 0.000278 Wh, 4184 J = 1 kcal_th, 1055.06 J = 1 BTU.
enum class EnergyUnit { Joule, WattHour, KiloCalorie, Btu };

double convert_energy(double joules, EnergyUnit unit);
std::string to_string(EnergyUnit u);
std::optional<EnergyUnit> energy_unit_from_string(const std::string& s);

} // namespace bbplan
