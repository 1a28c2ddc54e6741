#pragma once

#include "bbplan/catalog.hpp"
#include "bbplan/energy.hpp"
#include "bbplan/feasibility.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bbplan {

/// Everything a run computes from: built-ins, optionally overridden or
/// extended by a JSON config file (see docs/config-schema.md).
struct RunData {
    std::vector<TechnologySpec> catalog;
    std::vector<EncodingProfile> encodings;
    std::vector<int> split_candidates;
    std::vector<Scenario> scenarios;
    std::map<std::string, EnergyCoefficients> coefficients;
    std::optional<PowerParams> power_params;
};

RunData builtin_run_data();

/// Parses and validates a config document. Entries matching an existing
/// label/id/profile replace it; new ones are appended. Unknown fields are
/// rejected, not ignored. Throws BadConfig.
RunData load_config_text(const std::string& json_text);

RunData load_config_file(const std::string& path);

} // namespace bbplan
