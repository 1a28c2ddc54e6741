#pragma once

#include <stdexcept>
#include <string>

namespace bbplan {

/// Scenario video class and encoding resolution disagree.
struct ResolutionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Practice consumes less than the normalized best-practice baseline.
struct BelowBaseline : std::domain_error {
    using std::domain_error::domain_error;
};

/// A power-model parameter required by the requested computation is absent.
struct MissingParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Config file failed schema validation.
struct BadConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Identifier does not resolve against the loaded catalog/scenarios.
struct UnknownIdentifier : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Named but not implemented policy variant.
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bbplan
