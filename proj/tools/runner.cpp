#include "runner.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "kplane/error.hpp"
#include "kplane/parallel.hpp"

namespace kplane::cli {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};

std::string csv_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void print_summary(const ExperimentReport& r, std::ostream& out) {
  for (const auto& [k, v] : r.quantities) out << "  " << k << " = " << csv_number(v) << "\n";
  for (const auto& c : r.checks) {
    out << "  check " << c.name << ": margin " << csv_number(c.margin) << " (tolerance "
        << csv_number(c.tolerance) << ") " << (c.passed() ? "ok" : "FAILED") << "\n";
  }
}

}  // namespace

ExperimentReport run_experiment(const RunConfig& c) {
  const RunSettings& s = c.settings;
  return std::visit(
      Overloaded{
          [&](const P1Params& p) { return verify_p1_monotonicity(s, p); },
          [&](const AffirmativeParams& p) { return verify_affirmative_chain(s, p); },
          [&](const CounterexampleParams& p) { return search_counterexample(s, p); },
          [&](const SlicingParams& p) { return verify_general_slicing(s, p); },
          [&](const PinchedParams& p) { return verify_pinched_gaussian_slicing(s, p); },
          [&](const SolmonParams& p) { return solmon_ratio(s, p); },
          [&](const CapProfileParams& p) { return cap_measure_profile(s, p); },
          [&](const DecayParams& p) { return decay_profile(s, p); },
      },
      c.params);
}

int exit_status(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return 0;
    case Verdict::fails:
      return 2;
    case Verdict::inconclusive:
      return 3;
  }
  return 3;
}

std::string write_outputs(const ExperimentReport& report, const std::string& directory) {
  namespace fs = std::filesystem;
  const fs::path dir(directory.empty() ? "." : directory);
  fs::create_directories(dir);
  const fs::path json_path = dir / "report.json";
  {
    std::ofstream out(json_path);
    if (!out) throw ConfigError("cannot write '" + json_path.string() + "'");
    out << report.to_json().dump(2) << "\n";
  }
  if (!report.profile.empty()) {
    std::ofstream out(dir / "profile.csv");
    if (!out) throw ConfigError("cannot write '" + (dir / "profile.csv").string() + "'");
    for (std::size_t i = 0; i < report.profile_columns.size(); ++i) {
      out << (i ? "," : "") << report.profile_columns[i];
    }
    out << "\n";
    for (const auto& row : report.profile) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_number(row[i]);
      out << "\n";
    }
  }
  return json_path.string();
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radon transforms on affine Grassmannians: numerical experiments"};
  app.require_subcommand(1);
  std::string config_path, output_dir;
  unsigned thread_count = 0;
  bool verbose = false;
  auto* run = app.add_subcommand("run", "run the experiment described by a config file");
  run->add_option("config", config_path, "YAML run config")->required();
  run->add_option("--output-dir", output_dir, "directory for report.json and profile.csv");
  run->add_option("--threads", thread_count, "worker threads (results do not depend on it)");
  run->add_flag("-v,--verbose", verbose, "print every quantity and check");
  app.add_subcommand("list", "list the available experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 1;
  }

  if (app.got_subcommand("list")) {
    for (const auto& e : experiment_catalog()) out << e.name << "\t" << e.description << "\n";
    return 0;
  }

  RunConfig config;
  try {
    config = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  }
  if (output_dir.empty()) {
    if (const char* env = std::getenv("KPLANE_OUTPUT_DIR")) output_dir = env;
  }
  if (thread_count > 0) parallel::set_threads(thread_count);

  ExperimentReport report;
  try {
    report = run_experiment(config);
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "run error: " << e.what() << "\n";
    return 1;
  }

  std::filesystem::path dir = output_dir.empty() ? std::filesystem::path(".") : std::filesystem::path(output_dir);
  if (!config.output.empty()) dir /= config.output;
  std::string path;
  try {
    path = write_outputs(report, dir.string());
  } catch (const std::exception& e) {
    err << "output error: " << e.what() << "\n";
    return 1;
  }
  out << report.name << ": " << verdict_name(report.verdict) << " (" << report.runtime_ms << " ms) -> "
      << path << "\n";
  if (!report.diagnostic.empty()) err << report.name << ": " << report.diagnostic << "\n";
  if (verbose) print_summary(report, out);
  return exit_status(report.verdict);
}

}  // namespace kplane::cli
