#include "bbplan/config.hpp"

#include "bbplan/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace bbplan {

namespace {

using nlohmann::json;

void check_fields(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
                return it.key() == a;
            }) == allowed.end())
            throw BadConfig("unknown field '" + it.key() + "' in " + where);
    }
}

double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw BadConfig(where + " must be a number");
    return v.get<double>();
}

int as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw BadConfig(where + " must be an integer");
    return v.get<int>();
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw BadConfig(where + " must be a string");
    return v.get<std::string>();
}

TechnologySpec parse_technology(const json& j) {
    check_fields(j, "technologies[]",
                 {"label", "name", "kind", "ds_capacity", "us_capacity", "optical_budget",
                  "attenuation", "patch_margin", "per_line_limit", "fixed_reach", "max_split"});
    TechnologySpec t;
    if (!j.contains("label")) throw BadConfig("technology entry requires a label");
    t.label = as_string(j.at("label"), "technology label");
    if (j.contains("name")) t.name = as_string(j.at("name"), "technology name");
    const std::string kind =
        j.contains("kind") ? as_string(j.at("kind"), "technology kind") : "pon";
    if (kind == "pon")
        t.kind = TechKind::Pon;
    else if (kind == "copper")
        t.kind = TechKind::Copper;
    else
        throw BadConfig("technology kind must be 'pon' or 'copper'");
    if (!j.contains("ds_capacity") || !j.contains("us_capacity"))
        throw BadConfig("technology " + t.label + " requires ds_capacity and us_capacity (Mbps)");
    t.ds_capacity_mbps = as_number(j.at("ds_capacity"), "ds_capacity");
    t.us_capacity_mbps = as_number(j.at("us_capacity"), "us_capacity");
    if (t.ds_capacity_mbps <= 0 || t.us_capacity_mbps <= 0)
        throw BadConfig("technology " + t.label + " capacities must be positive");
    if (j.contains("optical_budget"))
        t.optical_budget_db = as_number(j.at("optical_budget"), "optical_budget");
    if (j.contains("attenuation"))
        t.attenuation_db_per_km = as_number(j.at("attenuation"), "attenuation");
    if (j.contains("patch_margin"))
        t.patch_margin_db = as_number(j.at("patch_margin"), "patch_margin");
    if (j.contains("per_line_limit")) {
        const json& v = j.at("per_line_limit");
        if (v.is_string() && v.get<std::string>() == "unlimited")
            t.per_line_limit_mbps.reset();
        else
            t.per_line_limit_mbps = as_number(v, "per_line_limit");
    }
    if (j.contains("fixed_reach")) t.fixed_reach_km = as_number(j.at("fixed_reach"), "fixed_reach");
    if (j.contains("max_split")) t.copper_max_split = as_int(j.at("max_split"), "max_split");

    if (t.kind == TechKind::Pon && (!t.optical_budget_db || !t.attenuation_db_per_km))
        throw BadConfig("pon technology " + t.label + " requires optical_budget and attenuation");
    if (t.kind == TechKind::Copper && !t.fixed_reach_km)
        throw BadConfig("copper technology " + t.label + " requires fixed_reach");
    return t;
}

EncodingProfile parse_encoding(const json& j) {
    check_fields(j, "encodings[]", {"codec", "resolution", "grade", "bitrate"});
    EncodingProfile e;
    for (const char* f : {"codec", "resolution", "grade", "bitrate"})
        if (!j.contains(f)) throw BadConfig(std::string("encoding entry requires ") + f);
    auto codec = codec_from_string(as_string(j.at("codec"), "codec"));
    auto res = resolution_from_string(as_string(j.at("resolution"), "resolution"));
    auto grade = grade_from_string(as_string(j.at("grade"), "grade"));
    if (!codec || !res || !grade) throw BadConfig("bad codec/resolution/grade in encoding entry");
    e.codec = *codec;
    e.resolution = *res;
    e.grade = *grade;
    e.bitrate_mbps = as_number(j.at("bitrate"), "bitrate");
    if (e.bitrate_mbps <= 0) throw BadConfig("encoding bitrate must be positive");
    return e;
}

Scenario parse_scenario(const json& j) {
    check_fields(j, "scenarios[]",
                 {"id", "homes", "channels_per_home", "reserved_internet", "video_class",
                  "arrival_window", "sync_interval", "nonfunc_model", "aggregate_ratio",
                  "required_split", "split_override"});
    Scenario s;
    if (!j.contains("id")) throw BadConfig("scenario entry requires an id");
    s.id = as_string(j.at("id"), "scenario id");
    if (!j.contains("homes") || !j.contains("required_split"))
        throw BadConfig("scenario " + s.id + " requires homes and required_split");
    s.homes = as_int(j.at("homes"), "homes");
    if (s.homes < 1) throw BadConfig("scenario homes must be >= 1");
    s.required_split = as_int(j.at("required_split"), "required_split");
    if (j.contains("channels_per_home"))
        s.channels_per_home = as_number(j.at("channels_per_home"), "channels_per_home");
    if (s.channels_per_home <= 0) throw BadConfig("channels_per_home must be positive");
    if (j.contains("reserved_internet"))
        s.reserved_internet_mbps = as_number(j.at("reserved_internet"), "reserved_internet");
    if (s.reserved_internet_mbps < 0) throw BadConfig("reserved_internet must be >= 0");
    if (j.contains("video_class")) {
        auto res = resolution_from_string(as_string(j.at("video_class"), "video_class"));
        if (!res) throw BadConfig("bad video_class in scenario " + s.id);
        s.video_class = *res;
    }
    if (j.contains("arrival_window"))
        s.arrival_window_s = as_number(j.at("arrival_window"), "arrival_window");
    if (j.contains("sync_interval"))
        s.sync_interval_s = as_number(j.at("sync_interval"), "sync_interval");
    if (j.contains("nonfunc_model")) {
        auto m = nonfunc_model_from_string(as_string(j.at("nonfunc_model"), "nonfunc_model"));
        if (!m) throw BadConfig("bad nonfunc_model in scenario " + s.id);
        s.nonfunc_model = *m;
    }
    if (j.contains("aggregate_ratio"))
        s.aggregate_ratio = as_number(j.at("aggregate_ratio"), "aggregate_ratio");
    if (j.contains("split_override")) {
        const json& ov = j.at("split_override");
        if (!ov.is_object()) throw BadConfig("split_override must be an object");
        for (auto it = ov.begin(); it != ov.end(); ++it)
            s.split_override[it.key()] = as_int(it.value(), "split_override value");
    }
    return s;
}

PowerParams parse_power_params(const json& j) {
    check_fields(j, "power_params",
                 {"p_olt_port", "p_olt_user", "p_onu00", "n_s0", "n_h0", "p_delta_olt0",
                  "onu_interp"});
    PowerParams p;
    if (j.contains("p_olt_port")) p.p_olt_port_w = as_number(j.at("p_olt_port"), "p_olt_port");
    if (j.contains("p_olt_user")) p.p_olt_user_w = as_number(j.at("p_olt_user"), "p_olt_user");
    if (j.contains("p_onu00")) p.p_onu00_w = as_number(j.at("p_onu00"), "p_onu00");
    if (j.contains("n_s0")) p.n_s0 = as_int(j.at("n_s0"), "n_s0");
    if (j.contains("n_h0")) p.n_h0 = as_number(j.at("n_h0"), "n_h0");
    if (j.contains("p_delta_olt0"))
        p.p_delta_olt0_w = as_number(j.at("p_delta_olt0"), "p_delta_olt0");
    if (j.contains("onu_interp")) {
        const json& oi = j.at("onu_interp");
        check_fields(oi, "onu_interp", {"bw_lo", "bw_hi", "watts_delta"});
        if (oi.contains("bw_lo")) p.onu_interp.bw_lo_mbps = as_number(oi.at("bw_lo"), "bw_lo");
        if (oi.contains("bw_hi")) p.onu_interp.bw_hi_mbps = as_number(oi.at("bw_hi"), "bw_hi");
        if (oi.contains("watts_delta"))
            p.onu_interp.watts_delta = as_number(oi.at("watts_delta"), "watts_delta");
    }
    return p;
}

} // namespace

RunData builtin_run_data() {
    RunData d;
    d.catalog = builtin_catalog();
    d.encodings = builtin_encodings();
    d.split_candidates = default_split_candidates();
    d.scenarios = builtin_scenarios();
    d.coefficients = builtin_coefficients();
    return d;
}

RunData load_config_text(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw BadConfig(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw BadConfig("config root must be an object");
    check_fields(root, "config root",
                 {"schema_version", "technologies", "encodings", "split_candidates", "scenarios",
                  "coefficients", "power_params"});
    if (!root.contains("schema_version") || as_int(root.at("schema_version"), "schema_version") != 1)
        throw BadConfig("config requires schema_version = 1");

    RunData d = builtin_run_data();

    if (root.contains("technologies")) {
        for (const json& tj : root.at("technologies")) {
            TechnologySpec t = parse_technology(tj);
            auto it = std::find_if(d.catalog.begin(), d.catalog.end(),
                                   [&](const TechnologySpec& x) { return x.label == t.label; });
            if (it != d.catalog.end())
                *it = t;
            else
                d.catalog.push_back(std::move(t));
        }
    }
    if (root.contains("encodings")) {
        for (const json& ej : root.at("encodings")) {
            EncodingProfile e = parse_encoding(ej);
            auto it = std::find_if(d.encodings.begin(), d.encodings.end(),
                                   [&](const EncodingProfile& x) {
                                       return x.codec == e.codec && x.resolution == e.resolution &&
                                              x.grade == e.grade;
                                   });
            if (it != d.encodings.end())
                *it = e;
            else
                d.encodings.push_back(e);
        }
    }
    if (root.contains("split_candidates")) {
        d.split_candidates.clear();
        for (const json& v : root.at("split_candidates"))
            d.split_candidates.push_back(as_int(v, "split_candidates[]"));
        std::sort(d.split_candidates.begin(), d.split_candidates.end());
    }
    if (root.contains("scenarios")) {
        for (const json& sj : root.at("scenarios")) {
            Scenario s = parse_scenario(sj);
            auto it = std::find_if(d.scenarios.begin(), d.scenarios.end(),
                                   [&](const Scenario& x) { return x.id == s.id; });
            if (it != d.scenarios.end())
                *it = s;
            else
                d.scenarios.push_back(std::move(s));
        }
    }
    if (root.contains("coefficients")) {
        const json& cj = root.at("coefficients");
        if (!cj.is_object()) throw BadConfig("coefficients must be an object keyed by label");
        for (auto it = cj.begin(); it != cj.end(); ++it) {
            check_fields(it.value(), "coefficients." + it.key(), {"a_delta", "b_delta"});
            EnergyCoefficients c;
            c.a_delta = as_number(it.value().at("a_delta"), "a_delta");
            c.b_delta = as_number(it.value().at("b_delta"), "b_delta");
            if (c.a_delta <= 0 || c.b_delta < 0)
                throw BadConfig("coefficients for " + it.key() + " out of range");
            d.coefficients[it.key()] = c;
        }
    }
    if (root.contains("power_params")) d.power_params = parse_power_params(root.at("power_params"));

    return d;
}

RunData load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadConfig("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config_text(buf.str());
}

} // namespace bbplan
