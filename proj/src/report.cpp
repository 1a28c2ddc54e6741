#include "bbplan/report.hpp"

#include "bbplan/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bbplan {

namespace {

using nlohmann::ordered_json;

constexpr const char* kCheck = "✓";
constexpr const char* kCross = "✗";

int unit_decimals(EnergyUnit u) {
    switch (u) {
    case EnergyUnit::Joule: return 1;
    case EnergyUnit::WattHour: return 4;
    case EnergyUnit::KiloCalorie: return 4;
    case EnergyUnit::Btu: return 3;
    }
    return 1;
}

double round_to(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string trim_num(double v, int decimals) { return fmt_fixed(v, decimals); }

const std::vector<SplitPlan>& reach_split_plans() {
    static const std::vector<SplitPlan> plans{SplitPlan{{8, 8}}, SplitPlan{{8, 16}},
                                              SplitPlan{{16, 16}}, SplitPlan{{32, 16}}};
    return plans;
}

std::string plan_name(const SplitPlan& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.levels.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.levels[i]);
    }
    return s + ")";
}

// ---- table 1: reach -------------------------------------------------------

std::string render_reach_table(const RunData& data, OutputFormat format) {
    const auto& plans = reach_split_plans();
    if (format == OutputFormat::Json) {
        ordered_json out;
        out["table"] = 1;
        out["rows"] = ordered_json::array();
        for (const TechnologySpec& t : data.catalog) {
            ordered_json row;
            row["label"] = t.label;
            row["name"] = t.name;
            row["ds_gbps"] = round_to(t.ds_capacity_mbps / kMbpsPerGbps, 2);
            row["us_gbps"] = round_to(t.us_capacity_mbps / kMbpsPerGbps, 2);
            row["optical_budget_db"] =
                t.optical_budget_db ? ordered_json(*t.optical_budget_db) : ordered_json(nullptr);
            row["attenuation_db_per_km"] = t.attenuation_db_per_km
                                               ? ordered_json(*t.attenuation_db_per_km)
                                               : ordered_json(nullptr);
            ordered_json reach = ordered_json::object();
            for (const SplitPlan& p : plans) {
                auto r = reach_km(t, p);
                reach[plan_name(p)] = r ? ordered_json(round_to(*r, 1)) : ordered_json(nullptr);
            }
            row["reach_km"] = reach;
            out["rows"].push_back(row);
        }
        return dump(out);
    }

    std::ostringstream os;
    const char sep = (format == OutputFormat::Csv) ? ',' : '|';
    auto cell = [&](const std::string& s) {
        if (format == OutputFormat::Csv)
            os << s << sep;
        else
            os << ' ' << s << ' ' << sep;
    };
    auto endrow = [&]() {
        if (format == OutputFormat::Csv) {
            os.seekp(-1, std::ios_base::cur);
            os << '\n';
        } else {
            os << '\n';
        }
    };
    if (format == OutputFormat::Markdown) os << "|";
    for (const std::string& h :
         {std::string("Label"), std::string("Technology"), std::string("DS (Gbps)"),
          std::string("US (Gbps)"), std::string("OB (dB)"), std::string("Atten. (dB/km)"),
          std::string("d_max ") + plan_name(plans[0]), std::string("d_max ") + plan_name(plans[1]),
          std::string("d_max ") + plan_name(plans[2]), std::string("d_max ") + plan_name(plans[3])})
        cell(h);
    endrow();
    if (format == OutputFormat::Markdown) {
        os << "|";
        for (int i = 0; i < 10; ++i) os << "---|";
        os << '\n';
    }
    for (const TechnologySpec& t : data.catalog) {
        if (format == OutputFormat::Markdown) os << "|";
        cell(t.label);
        cell(t.name);
        cell(trim_num(t.ds_capacity_mbps / kMbpsPerGbps, 2));
        cell(trim_num(t.us_capacity_mbps / kMbpsPerGbps, 2));
        cell(t.optical_budget_db ? trim_num(*t.optical_budget_db, 1) : "N/A");
        cell(t.attenuation_db_per_km ? trim_num(*t.attenuation_db_per_km, 1) : "N/A");
        for (const SplitPlan& p : plans) {
            auto r = reach_km(t, p);
            cell(r ? trim_num(*r, 1) : "N/A");
        }
        endrow();
    }
    return os.str();
}

// ---- table 3: feasibility mesh --------------------------------------------

std::string render_feasibility_table(const RunData& data, OutputFormat format) {
    const auto matrix = feasibility_matrix(data.catalog, data.scenarios, data.encodings);

    std::vector<std::string> scenario_ids;
    for (const Scenario& s : data.scenarios) scenario_ids.push_back(s.id);

    if (format == OutputFormat::Json) {
        ordered_json out;
        out["table"] = 3;
        out["cells"] = ordered_json::array();
        for (const MatrixEntry& e : matrix) {
            ordered_json c;
            c["scenario"] = e.scenario_id;
            c["encoding"] = to_string(e.codec);
            c["technology"] = e.tech_label;
            c["nonfunc"] = e.nonfunc;
            c["feasible"] = e.cell.feasible;
            ordered_json v = ordered_json::array();
            for (Violation viol : e.cell.violated) v.push_back(to_string(viol));
            c["violations"] = v;
            out["cells"].push_back(c);
        }
        return dump(out);
    }

    std::ostringstream os;
    if (format == OutputFormat::Csv) {
        os << "scenario,encoding,technology,nonfunc,feasible\n";
        for (const MatrixEntry& e : matrix)
            os << e.scenario_id << ',' << to_string(e.codec) << ',' << e.tech_label << ','
               << (e.nonfunc ? "true" : "false") << ',' << (e.cell.feasible ? "true" : "false")
               << '\n';
        return os.str();
    }

    os << "| Scenario | Encoding |";
    for (const TechnologySpec& t : data.catalog) os << ' ' << t.label << " w/o | " << t.label
                                                    << " w/ |";
    os << "\n|";
    for (std::size_t i = 0; i < 2 + 2 * data.catalog.size(); ++i) os << "---|";
    os << '\n';
    for (const std::string& sc : scenario_ids) {
        for (Codec codec : {Codec::AVC, Codec::HEVC}) {
            os << "| " << sc << " | " << to_string(codec) << " |";
            for (const TechnologySpec& t : data.catalog) {
                for (bool nf : {false, true}) {
                    const MatrixEntry* e = find_cell(matrix, t.label, sc, codec, nf);
                    os << ' ' << (e && e->cell.feasible ? kCheck : kCross) << " |";
                }
            }
            os << '\n';
        }
    }
    return os.str();
}

// ---- table 4: enhancement summary ------------------------------------------

std::string render_summary_table(const RunData& data, OutputFormat format) {
    const auto matrix = feasibility_matrix(data.catalog, data.scenarios, data.encodings);
    const EnhancementSummary sum = enhancement_summary(matrix, data.catalog);

    auto note = [&](std::ostringstream& os) {
        os << "Note: the " << sum.at_least_40g.group_name << " baseline here is the cell-by-cell "
           << "recount from the feasibility mesh (" << sum.at_least_40g.baseline << "/"
           << sum.at_least_40g.pairs << "). An alternative summary reads 6/"
           << sum.at_least_40g.pairs << " for the same group; the recount is authoritative.\n";
    };

    if (format == OutputFormat::Json) {
        ordered_json out;
        out["table"] = 4;
        auto group = [](const GroupSummary& g) {
            ordered_json j;
            j["group"] = g.group_name;
            j["pairs"] = g.pairs;
            j["baseline"] = g.baseline;
            j["nonfunc_only"] = g.nonfunc_only;
            j["hevc_only"] = g.hevc_only;
            j["both"] = g.both;
            return j;
        };
        out["groups"] = ordered_json::array({group(sum.below_40g), group(sum.at_least_40g)});
        out["notes"] = ordered_json::array();
        std::ostringstream n;
        note(n);
        std::string line = n.str();
        if (!line.empty() && line.back() == '\n') line.pop_back();
        out["notes"].push_back(line);
        return dump(out);
    }

    std::ostringstream os;
    if (format == OutputFormat::Csv) {
        os << "group,pairs,baseline,nonfunc_only,hevc_only,both\n";
        for (const GroupSummary* g : {&sum.below_40g, &sum.at_least_40g})
            os << g->group_name << ',' << g->pairs << ',' << g->baseline << ','
               << g->nonfunc_only << ',' << g->hevc_only << ',' << g->both << '\n';
        note(os);
        return os.str();
    }

    os << "| Enhancement | " << sum.below_40g.group_name << " | " << sum.at_least_40g.group_name
       << " |\n|---|---|---|\n";
    os << "| none | " << sum.below_40g.baseline << "/" << sum.below_40g.pairs << " | "
       << sum.at_least_40g.baseline << "/" << sum.at_least_40g.pairs << " |\n";
    os << "| non-functional | " << sum.below_40g.nonfunc_only << " | "
       << sum.at_least_40g.nonfunc_only << " |\n";
    os << "| HEVC | " << sum.below_40g.hevc_only << " | " << sum.at_least_40g.hevc_only << " |\n";
    os << "| non-functional + HEVC | " << sum.below_40g.both << " | " << sum.at_least_40g.both
       << " |\n\n";
    note(os);
    return os.str();
}

// ---- table 5: energy coefficients ------------------------------------------

std::string render_coefficients_table(const RunData& data, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json out;
        out["table"] = 5;
        out["coefficients"] = ordered_json::object();
        for (const auto& [label, c] : data.coefficients) {
            ordered_json j;
            j["a_delta"] = round_to(c.a_delta, 4);
            j["b_delta"] = round_to(c.b_delta, 4);
            out["coefficients"][label] = j;
        }
        return dump(out);
    }
    std::ostringstream os;
    if (format == OutputFormat::Csv) {
        os << "technology,a_delta_wmb,b_delta_j\n";
        for (const auto& [label, c] : data.coefficients)
            os << label << ',' << trim_num(c.a_delta, 1) << ',' << trim_num(c.b_delta, 4) << '\n';
        return os.str();
    }
    os << "| Technology | A (W*Mb) | B (J) |\n|---|---|---|\n";
    for (const auto& [label, c] : data.coefficients)
        os << "| " << label << " | " << trim_num(c.a_delta, 1) << " | " << trim_num(c.b_delta, 4)
           << " |\n";
    return os.str();
}

// ---- table 6: energy matrix -------------------------------------------------

std::string render_energy_table(const RunData& data, OutputFormat format, EnergyUnit unit) {
    const auto ematrix = energy_matrix(data.coefficients, data.catalog, data.scenarios,
                                       data.encodings);
    const auto fmatrix = feasibility_matrix(data.catalog, data.scenarios, data.encodings);
    const int dec = unit_decimals(unit);

    std::vector<std::string> energy_techs;
    for (const TechnologySpec& t : data.catalog)
        if (data.coefficients.count(t.label)) energy_techs.push_back(t.label);
    std::vector<std::string> annotation_techs;
    for (const TechnologySpec& t : data.catalog)
        if (!data.coefficients.count(t.label)) annotation_techs.push_back(t.label);

    auto bw_of = [&](const Scenario& sc, Codec codec) {
        const EncodingProfile* enc = find_encoding(data.encodings, codec, sc.video_class,
                                                   Grade::Low);
        return enc ? per_home_demand(sc, *enc) : 0.0;
    };

    if (format == OutputFormat::Json) {
        ordered_json out;
        out["table"] = 6;
        out["units"] = to_string(unit);
        out["rows"] = ordered_json::array();
        for (const Scenario& sc : data.scenarios) {
            for (Codec codec : {Codec::AVC, Codec::HEVC}) {
                ordered_json row;
                row["scenario"] = sc.id;
                row["encoding"] = to_string(codec);
                row["bw_d_mbps"] = round_to(bw_of(sc, codec), 2);
                ordered_json cells = ordered_json::object();
                for (const std::string& t : annotation_techs) {
                    const MatrixEntry* wo = find_cell(fmatrix, t, sc.id, codec, false);
                    const MatrixEntry* w = find_cell(fmatrix, t, sc.id, codec, true);
                    ordered_json c;
                    c["feasible_without_nonfunc"] = wo && wo->cell.feasible;
                    c["feasible_with_nonfunc"] = w && w->cell.feasible;
                    cells[t] = c;
                }
                for (const std::string& t : energy_techs) {
                    ordered_json c;
                    for (bool nf : {false, true}) {
                        const EnergyCell* e = find_energy_cell(ematrix, t, sc.id, codec, nf);
                        const char* key = nf ? "with_nonfunc" : "without_nonfunc";
                        if (e && e->joules_per_gb)
                            c[key] = round_to(convert_energy(*e->joules_per_gb, unit), dec);
                        else
                            c[key] = nullptr;
                    }
                    cells[t] = c;
                }
                row["cells"] = cells;
                out["rows"].push_back(row);
            }
        }
        return dump(out);
    }

    std::ostringstream os;
    if (format == OutputFormat::Csv) {
        os << "scenario,encoding,technology,bw_d_mbps,without_nonfunc,with_nonfunc\n";
        for (const Scenario& sc : data.scenarios) {
            for (Codec codec : {Codec::AVC, Codec::HEVC}) {
                for (const std::string& t : energy_techs) {
                    os << sc.id << ',' << to_string(codec) << ',' << t << ','
                       << trim_num(bw_of(sc, codec), 2);
                    for (bool nf : {false, true}) {
                        const EnergyCell* e = find_energy_cell(ematrix, t, sc.id, codec, nf);
                        os << ',';
                        if (e && e->joules_per_gb)
                            os << trim_num(convert_energy(*e->joules_per_gb, unit), dec);
                        else
                            os << "infeasible";
                    }
                    os << '\n';
                }
            }
        }
        return os.str();
    }

    os << "| Scenario | Encoding | BW_D (Mbps) |";
    for (const std::string& t : annotation_techs) os << ' ' << t << " w/o | " << t << " w/ |";
    for (const std::string& t : energy_techs) os << ' ' << t << " w/o | " << t << " w/ |";
    os << "\n|";
    for (std::size_t i = 0;
         i < 3 + 2 * (annotation_techs.size() + energy_techs.size()); ++i)
        os << "---|";
    os << '\n';
    for (const Scenario& sc : data.scenarios) {
        for (Codec codec : {Codec::AVC, Codec::HEVC}) {
            os << "| " << sc.id << " | " << to_string(codec) << " | "
               << trim_num(bw_of(sc, codec), 2) << " |";
            for (const std::string& t : annotation_techs) {
                for (bool nf : {false, true}) {
                    const MatrixEntry* e = find_cell(fmatrix, t, sc.id, codec, nf);
                    os << ' ' << (e && e->cell.feasible ? kCheck : kCross) << " |";
                }
            }
            for (const std::string& t : energy_techs) {
                for (bool nf : {false, true}) {
                    const EnergyCell* e = find_energy_cell(ematrix, t, sc.id, codec, nf);
                    if (e && e->joules_per_gb)
                        os << ' ' << trim_num(convert_energy(*e->joules_per_gb, unit), dec)
                           << " |";
                    else
                        os << ' ' << kCross << " |";
                }
            }
            os << '\n';
        }
    }
    os << "\nEnergy unit: " << to_string(unit) << " per 1 Gb downloaded.\n";
    return os.str();
}

} // namespace

std::optional<OutputFormat> output_format_from_string(const std::string& s) {
    if (s == "md" || s == "markdown") return OutputFormat::Markdown;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string fmt_fixed(double v, int decimals) {
    // Round half away from zero before printing; printf's round-half-even
    // would turn 1.25 into "1.2".
    const double scale = std::pow(10.0, decimals);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, std::round(v * scale) / scale);
    return buf;
}

std::string render_table(const RunData& data, int table_id, OutputFormat format,
                         EnergyUnit unit) {
    switch (table_id) {
    case 1: return render_reach_table(data, format);
    case 3: return render_feasibility_table(data, format);
    case 4: return render_summary_table(data, format);
    case 5: return render_coefficients_table(data, format);
    case 6: return render_energy_table(data, format, unit);
    default: throw UnknownIdentifier("no such table id: " + std::to_string(table_id));
    }
}

std::string render_catalog(const RunData& data, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json out;
        out["technologies"] = ordered_json::array();
        for (const TechnologySpec& t : data.catalog) {
            ordered_json j;
            j["label"] = t.label;
            j["name"] = t.name;
            j["kind"] = t.kind == TechKind::Pon ? "pon" : "copper";
            j["ds_capacity_mbps"] = round_to(t.ds_capacity_mbps, 2);
            j["us_capacity_mbps"] = round_to(t.us_capacity_mbps, 2);
            if (t.optical_budget_db) j["optical_budget_db"] = *t.optical_budget_db;
            if (t.attenuation_db_per_km) j["attenuation_db_per_km"] = *t.attenuation_db_per_km;
            if (t.per_line_limit_mbps) j["per_line_limit_mbps"] = *t.per_line_limit_mbps;
            if (t.fixed_reach_km) j["fixed_reach_km"] = *t.fixed_reach_km;
            auto ms = max_supported_split(t, data.split_candidates);
            if (ms && *ms != kUnlimitedSplit) j["max_supported_split"] = *ms;
            out["technologies"].push_back(j);
        }
        out["encodings"] = ordered_json::array();
        for (const EncodingProfile& e : data.encodings) {
            ordered_json j;
            j["codec"] = to_string(e.codec);
            j["resolution"] = to_string(e.resolution);
            j["grade"] = to_string(e.grade);
            j["bitrate_mbps"] = e.bitrate_mbps;
            out["encodings"].push_back(j);
        }
        return dump(out);
    }
    std::ostringstream os;
    os << "Technologies:\n";
    for (const TechnologySpec& t : data.catalog) {
        os << "  " << t.label << "  " << t.name << "  DS "
           << fmt_fixed(t.ds_capacity_mbps / kMbpsPerGbps, 2) << " Gbps, US "
           << fmt_fixed(t.us_capacity_mbps / kMbpsPerGbps, 2) << " Gbps";
        if (t.optical_budget_db)
            os << ", OB " << fmt_fixed(*t.optical_budget_db, 1) << " dB, atten "
               << fmt_fixed(*t.attenuation_db_per_km, 1) << " dB/km";
        if (t.per_line_limit_mbps)
            os << ", per-line limit " << fmt_fixed(*t.per_line_limit_mbps, 0) << " Mbps";
        if (t.fixed_reach_km) os << ", fixed reach " << fmt_fixed(*t.fixed_reach_km, 1) << " km";
        auto ms = max_supported_split(t, data.split_candidates);
        if (ms && *ms != kUnlimitedSplit) os << ", max split " << *ms;
        os << '\n';
    }
    os << "Encodings:\n";
    for (const EncodingProfile& e : data.encodings)
        os << "  " << to_string(e.codec) << " " << to_string(e.resolution) << " "
           << to_string(e.grade) << "  " << fmt_fixed(e.bitrate_mbps, 1) << " Mbps\n";
    return os.str();
}

std::string render_reach(const TechnologySpec& tech, const SplitPlan& split,
                         OutputFormat format) {
    const auto r = reach_km(tech, split);
    if (format == OutputFormat::Json) {
        ordered_json out;
        out["technology"] = tech.label;
        out["split"] = split.levels;
        out["total_split"] = split.total();
        out["reach_km"] = r ? ordered_json(round_to(*r, 2)) : ordered_json(nullptr);
        return dump(out);
    }
    std::ostringstream os;
    os << tech.label << " at split " << plan_name(split) << " (S=" << split.total() << "): ";
    if (r)
        os << fmt_fixed(*r, 2) << " km\n";
    else
        os << "not reachable (split losses exhaust the optical budget)\n";
    return os.str();
}

WhatIfResult run_whatif(const RunData& data, const std::string& tech, const std::string& scenario,
                        Codec codec, bool nonfunc) {
    const TechnologySpec* t = find_technology(data.catalog, tech);
    if (!t) throw UnknownIdentifier("unknown technology: " + tech);
    const Scenario* sc = find_scenario(data.scenarios, scenario);
    if (!sc) throw UnknownIdentifier("unknown scenario: " + scenario);
    const EncodingProfile* enc = find_encoding(data.encodings, codec, sc->video_class, Grade::Low);
    if (!enc)
        throw UnknownIdentifier("no low-grade " + to_string(codec) + " profile for " +
                                to_string(sc->video_class));

    WhatIfResult r;
    r.tech_label = tech;
    r.scenario_id = scenario;
    r.codec = codec;
    r.nonfunc = nonfunc;
    r.cell = check_feasibility(*t, *sc, *enc, Enhancements{nonfunc, codec});
    if (r.cell.feasible) {
        auto cit = data.coefficients.find(tech);
        if (cit != data.coefficients.end()) {
            double e = energy_per_gb(cit->second, r.cell.per_home_demand_mbps);
            if (nonfunc && sc->nonfunc_model == NonFuncModel::AggregateRatio)
                e *= sc->aggregate_ratio;
            r.joules_per_gb = e;
            r.joules_per_video_second = per_video_second(e, enc->bitrate_mbps);
        }
    }
    return r;
}

std::string render_whatif(const WhatIfResult& r, OutputFormat format, EnergyUnit unit) {
    const int dec = unit_decimals(unit);
    if (format == OutputFormat::Json) {
        ordered_json out;
        out["technology"] = r.tech_label;
        out["scenario"] = r.scenario_id;
        out["encoding"] = to_string(r.codec);
        out["nonfunc"] = r.nonfunc;
        out["feasible"] = r.cell.feasible;
        out["per_home_demand_mbps"] = round_to(r.cell.per_home_demand_mbps, 2);
        out["aggregate_demand_mbps"] = round_to(r.cell.aggregate_demand_mbps, 1);
        ordered_json v = ordered_json::array();
        for (Violation viol : r.cell.violated) v.push_back(to_string(viol));
        out["violations"] = v;
        out["energy_units"] = to_string(unit);
        out["energy_per_gb"] = r.joules_per_gb
                                   ? ordered_json(round_to(convert_energy(*r.joules_per_gb, unit), dec))
                                   : ordered_json(nullptr);
        out["energy_per_video_second"] =
            r.joules_per_video_second
                ? ordered_json(round_to(convert_energy(*r.joules_per_video_second, unit), dec + 2))
                : ordered_json(nullptr);
        return dump(out);
    }
    std::ostringstream os;
    os << r.tech_label << " / " << r.scenario_id << " / " << to_string(r.codec) << " / "
       << (r.nonfunc ? "with" : "without") << " non-functional technologies\n";
    os << "  per-home demand:  " << fmt_fixed(r.cell.per_home_demand_mbps, 2) << " Mbps\n";
    os << "  aggregate demand: " << fmt_fixed(r.cell.aggregate_demand_mbps, 1) << " Mbps\n";
    if (r.cell.feasible) {
        os << "  feasible: yes\n";
    } else {
        os << "  feasible: no\n  violated constraints:\n";
        for (Violation v : r.cell.violated) os << "    - " << to_string(v) << '\n';
    }
    if (r.joules_per_gb) {
        os << "  energy: " << fmt_fixed(convert_energy(*r.joules_per_gb, unit), dec) << ' '
           << to_string(unit) << " per Gb, "
           << fmt_fixed(convert_energy(*r.joules_per_video_second, unit), dec + 2) << ' '
           << to_string(unit) << " per video-second\n";
    }
    return os.str();
}

MicroRegRun run_microreg(int viewers, const MicroRegConfig& config, ArrivalProcess process,
                         double reference_capacity_mbps) {
    MicroRegRun run;
    run.config = config;
    run.viewers = viewers;
    run.process = process;
    run.reference_capacity_mbps = reference_capacity_mbps;
    const auto arrivals = generate_arrivals(viewers, config.window_s, process, config.rng_seed);
    run.result = aggregate_streams(arrivals, config);
    run.savings = bandwidth_savings(run.result, reference_capacity_mbps);
    return run;
}

std::string render_microreg(const MicroRegRun& run, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json out;
        out["viewers"] = run.viewers;
        out["window_s"] = run.config.window_s;
        out["sync_interval_s"] = run.config.sync_interval_s;
        out["stream_bitrate_mbps"] = run.config.stream_bitrate_mbps;
        out["reference_capacity_mbps"] = run.reference_capacity_mbps;
        out["seed"] = run.config.rng_seed;
        out["process"] = to_string(run.process);
        out["active_streams"] = run.result.active_streams;
        out["max_wait_s"] = round_to(run.result.max_wait_s, 3);
        out["aggregate_bandwidth_mbps"] = round_to(run.result.aggregate_bandwidth_mbps, 1);
        out["savings"] = round_to(run.savings, 4);
        return dump(out);
    }
    std::ostringstream os;
    os << run.viewers << " viewers over " << fmt_fixed(run.config.window_s, 0) << " s ("
       << to_string(run.process) << " arrivals, seed " << run.config.rng_seed << "), sync every "
       << fmt_fixed(run.config.sync_interval_s, 0) << " s\n";
    os << "  active streams:      " << run.result.active_streams << '\n';
    os << "  max startup wait:    " << fmt_fixed(run.result.max_wait_s, 2) << " s\n";
    os << "  aggregate bandwidth: " << fmt_fixed(run.result.aggregate_bandwidth_mbps, 1)
       << " Mbps\n";
    if (run.savings >= 0.0)
        os << "  saving vs capacity:  " << fmt_fixed(run.savings * 100.0, 1) << " %\n";
    else
        os << "  exceeds capacity by  " << fmt_fixed(-run.savings * 100.0, 1) << " %\n";
    return os.str();
}

PricingRun run_pricing(const PricingParams& params, bool optimize, double grid_step) {
    PricingRun run;
    run.params = params;
    run.delta = practice_delta(params.e_a);
    run.rate = bpdf_rate(params.k, run.delta, params.c_elec);
    run.cost = total_cost(params);
    run.objective = holder_objective(params);
    if (optimize) run.optimum = optimize_fee(params.k, run.delta, params.c_elec, grid_step);
    return run;
}

std::string render_pricing(const PricingRun& run, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json out;
        out["e_a"] = run.params.e_a;
        out["k"] = run.params.k;
        out["c_elec"] = run.params.c_elec;
        out["fee"] = run.params.fee;
        out["delta"] = round_to(run.delta, 6);
        out["bpdf_rate"] = round_to(run.rate, 6);
        out["total_cost"] = round_to(run.cost, 6);
        out["objective"] = round_to(run.objective, 6);
        if (run.optimum) {
            out["fee_star"] = round_to(run.optimum->fee_star, 6);
            out["j_star"] = round_to(run.optimum->j_star, 6);
            out["interior_critical_point"] =
                run.optimum->interior_critical_point
                    ? ordered_json(round_to(*run.optimum->interior_critical_point, 6))
                    : ordered_json(nullptr);
            out["diagnosis"] = run.optimum->diagnosis;
        }
        return dump(out);
    }
    std::ostringstream os;
    os << "E_A = " << fmt_fixed(run.params.e_a, 3) << " kWh, K = " << fmt_fixed(run.params.k, 3)
       << ", c = $" << fmt_fixed(run.params.c_elec, 4) << "/kWh, fee = $"
       << fmt_fixed(run.params.fee, 4) << '\n';
    os << "  delta:       " << fmt_fixed(run.delta, 4) << " kWh\n";
    os << "  skewed rate: $" << fmt_fixed(run.rate, 4) << "/kWh\n";
    os << "  total cost:  $" << fmt_fixed(run.cost, 4) << " per service\n";
    os << "  holder J:    $" << fmt_fixed(run.objective, 4) << " per service\n";
    if (run.optimum) {
        os << "  optimal fee: $" << fmt_fixed(run.optimum->fee_star, 4) << " (J = $"
           << fmt_fixed(run.optimum->j_star, 4) << ", " << run.optimum->diagnosis
           << " maximum";
        if (run.optimum->interior_critical_point)
            os << "; interior stationary point at $"
               << fmt_fixed(*run.optimum->interior_critical_point, 4) << " is a minimum";
        os << ")\n";
    }
    return os.str();
}

} // namespace bbplan
