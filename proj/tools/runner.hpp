#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"

namespace kplane::cli {

ExperimentReport run_experiment(const RunConfig& config);

/// 0 holds, 2 fails, 3 inconclusive.
int exit_status(Verdict v);

/// Writes report.json and, when the report has a profile, profile.csv into
/// `directory` (created if missing). Returns the report path.
std::string write_outputs(const ExperimentReport& report, const std::string& directory);

/// Entry point of the kplane executable; usage and config errors return 1.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace kplane::cli
