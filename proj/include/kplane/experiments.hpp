#pragma once

// End-to-end numerical checks of the comparison and slicing results, and the
// counterexample search for non-admissible functions.
//
// Inputs are declarative (FieldSpec, FunctionSpec, GrassmannRuleSpec) so every
// report records exactly what it ran; results depend only on the inputs and
// the seed, never on the thread count.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kplane/analysis.hpp"
#include "kplane/fields.hpp"
#include "kplane/geometry.hpp"
#include "kplane/transforms.hpp"

namespace kplane {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Declarative inputs

/// kind: "gaussian" (weight e^{-a|x-c|^2}), "bump" (weight b(|x-c|/radius)) or
/// "sum" of `terms`.
struct FieldSpec {
  std::string kind = "gaussian";
  double a = 1.0;
  double radius = 1.0;
  double weight = 1.0;
  std::vector<double> center;
  std::vector<FieldSpec> terms;

  bool operator==(const FieldSpec&) const = default;
};

/// kind:
///   "gaussian"   amplitude e^{-a|z - P c|^2}
///   "bump"       amplitude b(|z - P c| / radius)
///   "constant"   amplitude
///   "sum"        sum of `terms`, times amplitude
///   "radon"      amplitude R_{n-k} field (closed-form route)
///   "admissible" amplitude (R_{n-k} field)^{1/(p-1)}; p defaults to the run's p
///   "pinched"    random positive Gaussian combination clipped into
///                [beta e^{-a|z|^2}, gamma e^{-a|z|^2}], see pinched_function
struct FunctionSpec {
  std::string kind = "gaussian";
  double a = 1.0;
  double radius = 1.0;
  double amplitude = 1.0;
  double p = 0.0;
  std::vector<double> center;
  std::vector<FunctionSpec> terms;
  std::vector<FieldSpec> field;  // one entry for "radon" and "admissible"
  double beta = 1.0;
  double gamma = 2.0;
  int components = 4;
  std::uint64_t seed = 0;

  bool operator==(const FunctionSpec&) const = default;
};

/// kind: "haar" (count, seed), "equiangular" (count lines, n = 2) or
/// "sphere" (budget; k = 1 or k = n - 1, n <= 4).
struct GrassmannRuleSpec {
  std::string kind = "haar";
  std::size_t count = 200;
  int budget = 48;
  std::uint64_t seed = 0;

  bool operator==(const GrassmannRuleSpec&) const = default;
};

/// Points x = r theta for r in `radii` equally spaced values on [0, max_radius]
/// and `directions` random unit vectors theta, where pointwise hypotheses such
/// as R* g <= R* h are checked.
struct PointGrid {
  int radii = 16;
  int directions = 32;
  double max_radius = 8.0;

  bool operator==(const PointGrid&) const = default;
};

SpatialField build_field(const FieldSpec& spec, int n);
GrassmannFunction build_function(const FunctionSpec& spec, int n, int k, double p);
GrassmannQuadrature build_rule(const GrassmannRuleSpec& spec, int n, int k);
Mat grid_points(const PointGrid& grid, int n, std::uint64_t seed);

/// clamp(sum_i c_i e^{-a_i|z - P c_i|^2}, beta e^{-alpha|z|^2}, gamma e^{-alpha|z|^2})
/// with `components` random weights, rates near alpha and centers near 0.
GrassmannFunction pinched_function(int n, int k, double alpha, double beta, double gamma,
                                   int components, std::uint64_t seed);

Json to_json(const FieldSpec& s);
Json to_json(const FunctionSpec& s);
Json to_json(const GrassmannRuleSpec& s);
Json to_json(const PointGrid& s);
Json to_json(const PlaneQuadratureSpec& s);

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { holds, fails, inconclusive };

const char* verdict_name(Verdict v);

/// One asserted inequality: passes when margin >= -tolerance.
struct Check {
  std::string name;
  double margin = 0.0;
  double tolerance = 0.0;

  bool passed() const { return margin >= -tolerance; }
};

struct ExperimentReport {
  std::string name;
  Json inputs = Json::object();
  std::vector<std::pair<std::string, double>> quantities;
  std::vector<Check> checks;
  Verdict verdict = Verdict::inconclusive;
  std::uint64_t seed = 0;
  /// Wall time; kept out of to_json() so reports stay byte-identical.
  std::int64_t runtime_ms = 0;
  std::string diagnostic;
  Json details = Json::object();
  std::vector<std::string> profile_columns;
  std::vector<std::vector<double>> profile;

  void set(const std::string& key, double value);
  /// Throws ParameterError when the quantity is missing.
  double quantity(const std::string& key) const;
  bool has(const std::string& key) const;
  /// holds when every check passes, fails otherwise.
  void conclude();
  Json to_json() const;
};

inline constexpr int kReportSchemaVersion = 1;

/// Settings shared by every experiment.
struct RunSettings {
  int n = 2;
  int k = 1;
  double p = 2.0;
  GrassmannRuleSpec grassmann;
  PlaneQuadratureSpec plane;
  PointGrid grid;
  std::uint64_t seed = 0;

  bool operator==(const RunSettings&) const = default;
};

// ---------------------------------------------------------------------------
// Experiments

struct P1Params {
  FunctionSpec g;
  FunctionSpec h;
  std::vector<double> eps_grid{1.0, 0.3, 0.1, 0.03, 0.01};
  /// When > 0, g is first multiplied by this factor times min(R*h / R*g)
  /// over the grid.
  double scale_to_hypothesis = 0.0;
  double tolerance = 1e-6;

  bool operator==(const P1Params&) const = default;
};

ExperimentReport verify_p1_monotonicity(const RunSettings& run, const P1Params& params);

struct AffirmativeParams {
  FieldSpec witness;
  FunctionSpec h;
  /// When true, h is multiplied by max(1, max R*g / R*h) over the grid so the
  /// hypothesis holds there.
  bool dominate = false;
  /// Polar rule budget for the spatial pairings over R^n; 0 uses twice the
  /// plane budget when n = 2 and the plane budget otherwise.
  int ball_budget = 0;
  double link_tolerance = 1e-5;  // relative, equality links
  double tolerance = 1e-6;       // absolute, inequality links and conclusion

  bool operator==(const AffirmativeParams&) const = default;
};

ExperimentReport verify_affirmative_chain(const RunSettings& run, const AffirmativeParams& params);

struct CounterexampleParams {
  FieldSpec phi;
  /// Atoms b(|z - P c|/s) for every center and width.
  std::vector<std::vector<double>> centers{{}};
  std::vector<double> widths;  // empty: geometric grid of `atom_count` on [0.05, 4]
  int atom_count = 24;
  double delta_factor = 0.05;    // delta = delta_factor * sup R* h
  double outside_factor = 1e-3;  // eta >= outside_factor * delta off O
  double pairing_floor = 1e-3;   // -int phi eta >= pairing_floor
  int solve_directions = 8;
  int solve_near = 46;           // radii on [0, near_radius]
  double near_radius = 6.0;
  int solve_far = 20;            // geometric radii on [near_radius, far_radius]
  double far_radius = 400.0;
  int dense_factor = 4;          // verification grid density multiple
  int dense_directions = 32;
  double dense_far_radius = 1600.0;
  int offset_grid = 4001;        // z samples per plane for epsilon and g >= 0
  double tolerance = 1e-3;       // required |g|_p - |h|_p

  bool operator==(const CounterexampleParams&) const = default;
};

/// Found certificates are stored in details: widths, centers, coefficients, epsilon.
ExperimentReport search_counterexample(const RunSettings& run, const CounterexampleParams& params);

/// Gaussian family gamma e^{-a|z|^2} used as the admissible candidates.
struct GaussianFamily {
  double alpha = 1.0;
  std::vector<double> scales{0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};  // a = scale * alpha
  double gamma = 1.0;

  bool operator==(const GaussianFamily&) const = default;
};

std::vector<AdmissibleFunction> build_family(const GaussianFamily& fam, int n, int k, double p);

struct SlicingParams {
  FunctionSpec g;
  FunctionSpec h;
  FunctionSpec w;
  GaussianFamily family;
  DominationGrid domination;
  double tolerance = 1e-6;

  bool operator==(const SlicingParams&) const = default;
};

ExperimentReport verify_general_slicing(const RunSettings& run, const SlicingParams& params);

struct PinchedParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 2.0;
  int components = 4;  // random Gaussians in the pinched combination
  FunctionSpec h;      // default: constant 1
  FunctionSpec w;
  DominationGrid domination;
  double tolerance = 1e-6;

  PinchedParams() {
    h.kind = "constant";
    w.kind = "bump";
    w.radius = 2.0;
  }
  bool operator==(const PinchedParams&) const = default;
};

ExperimentReport verify_pinched_gaussian_slicing(const RunSettings& run, const PinchedParams& params);

struct SolmonParams {
  FunctionSpec g;
  std::vector<double> radii{8.0, 16.0};
  int ball_budget = 24;     // polar rule budget for the L^q integral over R^n
  double stability = 0.02;  // allowed relative change of the ratio across radii

  bool operator==(const SolmonParams&) const = default;
};

ExperimentReport solmon_ratio(const RunSettings& run, const SolmonParams& params);

struct CapProfileParams {
  std::vector<double> ratios{0.1, 0.5, 0.9};
  int profile_points = 24;  // log-spaced ratios on [2^-6, 1] for the CSV
  std::size_t mc_count = 100000;

  bool operator==(const CapProfileParams&) const = default;
};

ExperimentReport cap_measure_profile(const RunSettings& run, const CapProfileParams& params);

struct DecayParams {
  FunctionSpec psi;
  std::vector<double> radii;  // empty: 8 log-spaced radii over one decade past 4x the support
  int directions = 8;
  double slope_slack = 0.15;

  DecayParams() { psi.kind = "bump"; }
  bool operator==(const DecayParams&) const = default;
};

ExperimentReport decay_profile(const RunSettings& run, const DecayParams& params);

struct ExperimentInfo {
  std::string name;
  std::string description;
};

/// Sorted by name.
const std::vector<ExperimentInfo>& experiment_catalog();

}  // namespace kplane
