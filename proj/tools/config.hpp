#pragma once

// Run configuration files: one YAML document naming an experiment, the shared
// settings, and that experiment's parameters.
//
//   experiment: verify_p1_monotonicity
//   seed: 42
//   n: 2
//   k: 1
//   p: 1
//   grassmann: {kind: haar, count: 200}
//   params:
//     g: {kind: gaussian, a: 2}
//     h: {kind: gaussian, a: 1}
//
// Unknown keys are errors. Omitted keys take the library defaults; a haar
// rule without its own seed uses the run seed.

#include <string>
#include <variant>

#include "kplane/experiments.hpp"

namespace kplane::cli {

using ExperimentParams = std::variant<P1Params, AffirmativeParams, CounterexampleParams, SlicingParams,
                                      PinchedParams, SolmonParams, CapProfileParams, DecayParams>;

struct RunConfig {
  std::string experiment;
  RunSettings settings;
  std::string output;  // directory under the output root; empty writes to the root
  ExperimentParams params;

  bool operator==(const RunConfig&) const = default;
};

/// Default parameters for a catalog name; throws ConfigError for unknown names.
ExperimentParams default_params(const std::string& experiment);

/// Parses and validates; every failure is a ConfigError naming the key.
RunConfig parse_config(const std::string& text);
/// Reads `path`; unreadable files raise ConfigError.
RunConfig load_config(const std::string& path);
/// YAML with every non-default value; parse_config(emit_config(c)) == c.
std::string emit_config(const RunConfig& config);

/// Checks 0 < k < n, p >= 1 and the experiment name.
void validate(const RunConfig& config);

}  // namespace kplane::cli
