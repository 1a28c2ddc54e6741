#include "bbplan/energy.hpp"

#include "bbplan/errors.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace bbplan;

namespace {

PowerParams sample_params() {
    PowerParams p;
    p.p_olt_port_w = 40.0;
    p.p_olt_user_w = 0.5;
    p.p_onu00_w = 12.0;
    p.n_s0 = 256;
    p.n_h0 = 100.0;
    p.p_delta_olt0_w = 7.4;
    return p;
}

TechnologySpec wideband_tech() {
    TechnologySpec t;
    t.label = "X";
    t.ds_capacity_mbps = 1e9; // keep the active-home count split-limited
    t.us_capacity_mbps = 1e9;
    t.optical_budget_db = 35.0;
    t.attenuation_db_per_km = 0.4;
    return t;
}

} // namespace

TEST_CASE("active homes: split- and capacity-limited regimes") {
    CHECK(n_active_homes(256, 40960, 6.55) == doctest::Approx(256.0));
    CHECK(n_active_homes(256, 2560, 12.1) == doctest::Approx(2560.0 / 12.1));
    CHECK(n_active_homes(128, 1e12, 100.0) == doctest::Approx(128.0));
}

TEST_CASE("built-in coefficients") {
    const auto coeffs = builtin_coefficients();
    REQUIRE(coeffs.size() == 4); // copper is out of the differential model
    CHECK(coeffs.count("Ta") == 0);
    CHECK(coeffs.at("Tc").a_delta == doctest::Approx(14480.0));
    CHECK(coeffs.at("Te").b_delta == doctest::Approx(4.2286));
    for (const auto& [label, c] : coeffs) {
        CHECK(c.a_delta > 0);
        CHECK(c.b_delta >= 0);
    }
}

TEST_CASE("energy per Gb: reference points") {
    const auto coeffs = builtin_coefficients();
    CHECK(energy_per_gb(coeffs.at("Td"), 6.55) == doctest::Approx(2067.1).epsilon(0.001));
    CHECK(energy_per_gb(coeffs.at("Te"), 12.1) == doctest::Approx(1770.2).epsilon(0.001));
    // Published Tc coefficients are rounded; agreement is within 1%.
    CHECK(energy_per_gb(coeffs.at("Tc"), 11.1) == doctest::Approx(1317.9).epsilon(0.01));
    CHECK(energy_per_gb(coeffs.at("Tc"), 11.1) == doctest::Approx(1304.9).epsilon(0.001));
}

TEST_CASE("energy per Gb decreases in bandwidth toward b_delta") {
    const EnergyCoefficients c{1000.0, 2.5};
    double prev = energy_per_gb(c, 1.0);
    for (double bw = 2.0; bw <= 4096.0; bw *= 2.0) {
        const double e = energy_per_gb(c, bw);
        CHECK(e < prev);
        prev = e;
    }
    CHECK(energy_per_gb(c, 1e12) == doctest::Approx(c.b_delta));
}

TEST_CASE("per-video-second conversion") {
    CHECK(per_video_second(1317.9, 6.0) == doctest::Approx(7.72).epsilon(0.001));
    CHECK(per_video_second(2635.5, 3.0) == doctest::Approx(7.72).epsilon(0.001));
    CHECK(per_video_second(123.4, 1024.0) == doctest::Approx(123.4));
    // Exact identity: E * bitrate / 1024.
    for (double e : {1.0, 55.5, 2067.1})
        for (double b : {0.5, 3.0, 16.0})
            CHECK(per_video_second(e, b) == doctest::Approx(e * b / 1024.0).epsilon(1e-12));
}

TEST_CASE("burst transmission") {
    const auto coeffs = builtin_coefficients();
    const auto& tc = coeffs.at("Tc");

    // Double-rate burst at the Sc3 HEVC point.
    CHECK(burst_energy_per_gb(tc, 11.1, 5.55) == doctest::Approx(652.4).epsilon(0.001));
    // Equal rates degenerate to continuous streaming.
    CHECK(burst_energy_per_gb(tc, 5.55, 5.55) == doctest::Approx(energy_per_gb(tc, 5.55)));
    // Roughly a factor 4 against continuous AVC per video-second.
    const double continuous_avc = per_video_second(energy_per_gb(tc, 11.1), 6.0);
    const double burst_hevc = per_video_second(burst_energy_per_gb(tc, 11.1, 5.55), 3.0);
    CHECK(continuous_avc / burst_hevc == doctest::Approx(4.0).epsilon(0.03));

    CHECK_THROWS_AS(burst_energy_per_gb(tc, 3.0, 5.55), std::invalid_argument);
}

TEST_CASE("burst never costs more than continuous at the stream rate") {
    const EnergyCoefficients c{9000.0, 1.5};
    for (double stream : {2.0, 5.55, 11.1}) {
        const double continuous = energy_per_gb(c, stream);
        for (double factor : {1.0, 1.5, 2.0, 4.0, 16.0}) {
            const double burst = burst_energy_per_gb(c, stream * factor, stream);
            CHECK(burst <= continuous + 1e-9);
            if (factor == 1.0) CHECK(burst == doctest::Approx(continuous));
        }
    }
}

TEST_CASE("power model basics") {
    const auto tech = wideband_tech();

    SUBCASE("zeroed parameters reduce to the interpolation term") {
        PowerParams p;
        p.p_olt_port_w = 0.0;
        p.p_olt_user_w = 0.0;
        p.p_onu00_w = 0.0;
        const double w = power_per_home(p, tech, 562.0, 64);
        CHECK(w == doctest::Approx((562.0 - 100.0) / 924.0));
    }
    SUBCASE("increasing the port power increases the result") {
        PowerParams p = sample_params();
        const double base = power_per_home(p, tech, 300.0, 128);
        p.p_olt_port_w = *p.p_olt_port_w + 10.0;
        CHECK(power_per_home(p, tech, 300.0, 128) > base);
    }
    SUBCASE("missing fields are reported") {
        PowerParams p = sample_params();
        p.p_onu00_w.reset();
        CHECK_THROWS_AS(power_per_home(p, tech, 300.0, 128), MissingParams);
        PowerParams q = sample_params();
        q.n_h0.reset(); // partial correction triple
        CHECK_THROWS_AS(power_per_home(q, tech, 300.0, 128), MissingParams);
    }
}

TEST_CASE("derived coefficients reproduce the full expression") {
    const auto tech = wideband_tech();
    const PowerParams p = sample_params();
    for (int n_s : {64, 128, 256}) {
        const EnergyCoefficients c = derive_coefficients(p, n_s);
        CHECK(c.a_delta > 0);
        for (double bw = 100.0; bw <= 1024.0; bw += 77.0) {
            const double full = (kMbpsPerGbps / bw) * power_per_home(p, tech, bw, n_s);
            const double collapsed = energy_per_gb(c, bw);
            CHECK(full == doctest::Approx(collapsed).epsilon(1e-9));
        }
    }
}

TEST_CASE("derived coefficients agree with a two-point fit") {
    const auto tech = wideband_tech();
    const PowerParams p = sample_params();
    const int n_s = 256;
    // Solve E = A/bw + B from two evaluations of the full expression.
    const double bw1 = 150.0, bw2 = 900.0;
    const double e1 = (kMbpsPerGbps / bw1) * power_per_home(p, tech, bw1, n_s);
    const double e2 = (kMbpsPerGbps / bw2) * power_per_home(p, tech, bw2, n_s);
    const double a_fit = (e1 - e2) / (1.0 / bw1 - 1.0 / bw2);
    const double b_fit = e1 - a_fit / bw1;
    const EnergyCoefficients c = derive_coefficients(p, n_s);
    CHECK(c.a_delta == doctest::Approx(a_fit).epsilon(1e-9));
    CHECK(c.b_delta == doctest::Approx(b_fit).epsilon(1e-7));
}

TEST_CASE("all-zero parameters derive to (0, 0)") {
    PowerParams p;
    p.p_olt_port_w = 0.0;
    p.p_olt_user_w = 0.0;
    p.p_onu00_w = 0.0;
    p.onu_interp.watts_delta = 0.0;
    const EnergyCoefficients c = derive_coefficients(p, 128);
    CHECK(c.a_delta == doctest::Approx(0.0));
    CHECK(c.b_delta == doctest::Approx(0.0));
}

TEST_CASE("energy matrix reproduces the published figures") {
    const auto matrix = energy_matrix(builtin_coefficients(), builtin_catalog(),
                                      builtin_scenarios(), builtin_encodings());
    for (const auto& g : fixtures::energy_table()) {
        CAPTURE(g.scenario);
        CAPTURE(g.tech);
        for (bool nf : {false, true}) {
            const EnergyCell* cell = find_energy_cell(matrix, g.tech, g.scenario, g.codec, nf);
            REQUIRE(cell);
            const double want = nf ? g.with_nonfunc_j : g.without_nonfunc_j;
            if (fixtures::is_na(want)) {
                CHECK_FALSE(cell->joules_per_gb.has_value());
                continue;
            }
            REQUIRE(cell->joules_per_gb.has_value());
            if (nf && g.with_misprint) {
                // Published figure is inconsistent with its own ratio
                // construction; check against the consistent value.
                CHECK(fixtures::rel_err(*cell->joules_per_gb, g.with_corrected_j) < g.rel_tol);
            } else {
                CHECK(fixtures::rel_err(*cell->joules_per_gb, want) < g.rel_tol);
            }
        }
    }
}

TEST_CASE("energy matrix: spot values and structure") {
    const auto matrix = energy_matrix(builtin_coefficients(), builtin_catalog(),
                                      builtin_scenarios(), builtin_encodings());
    const EnergyCell* c = find_energy_cell(matrix, "Td", "Sc4", Codec::AVC, true);
    REQUIRE(c);
    CHECK(*c->joules_per_gb == doctest::Approx(214.9).epsilon(0.001));

    // Sc2 columns identical with and without nonfunc.
    for (const char* tech : {"Tb", "Tc", "Td", "Te"}) {
        for (Codec codec : {Codec::AVC, Codec::HEVC}) {
            const EnergyCell* wo = find_energy_cell(matrix, tech, "Sc2", codec, false);
            const EnergyCell* w = find_energy_cell(matrix, tech, "Sc2", codec, true);
            REQUIRE(wo);
            REQUIRE(w);
            CHECK(wo->joules_per_gb.has_value() == w->joules_per_gb.has_value());
            if (wo->joules_per_gb)
                CHECK(*wo->joules_per_gb == doctest::Approx(*w->joules_per_gb));
        }
    }
}

TEST_CASE("energy unit conversions") {
    CHECK(convert_energy(1.0, EnergyUnit::Joule) == doctest::Approx(1.0));
    CHECK(convert_energy(1.0, EnergyUnit::WattHour) == doctest::Approx(0.000278));
    CHECK(convert_energy(4184.0, EnergyUnit::KiloCalorie) == doctest::Approx(1.0));
    CHECK(convert_energy(1055.06, EnergyUnit::Btu) == doctest::Approx(1.0));
}
