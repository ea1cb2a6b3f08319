#include "config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "kplane/error.hpp"

namespace kplane::cli {

template <class IO> void visit(IO& io, FieldSpec& s);
template <class IO> void visit(IO& io, FunctionSpec& s);
template <class IO> void visit(IO& io, GrassmannRuleSpec& s);
template <class IO> void visit(IO& io, PlaneQuadratureSpec& s);
template <class IO> void visit(IO& io, PointGrid& s);
template <class IO> void visit(IO& io, GaussianFamily& s);
template <class IO> void visit(IO& io, DominationGrid& s);
template <class IO> void visit(IO& io, P1Params& s);
template <class IO> void visit(IO& io, AffirmativeParams& s);
template <class IO> void visit(IO& io, CounterexampleParams& s);
template <class IO> void visit(IO& io, SlicingParams& s);
template <class IO> void visit(IO& io, PinchedParams& s);
template <class IO> void visit(IO& io, SolmonParams& s);
template <class IO> void visit(IO& io, CapProfileParams& s);
template <class IO> void visit(IO& io, DecayParams& s);

namespace {

static_assert(std::is_same_v<std::size_t, std::uint64_t>);

const std::vector<std::string> kFieldKinds = {"gaussian", "bump", "sum"};
const std::vector<std::string> kFunctionKinds = {"gaussian", "bump",       "constant", "sum",
                                                 "radon",    "admissible", "pinched"};
const std::vector<std::string> kRuleKinds = {"haar", "equiangular", "sphere"};

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);
  // Keep a decimal point so the value reads back as a real.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

// ---------------------------------------------------------------------------
// Reading

class Reader {
 public:
  Reader(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) throw ConfigError(where() + "expected a mapping");
  }

  bool has(const char* key) const { return node_ && node_.IsMap() && node_[key]; }

  template <class T>
  void operator()(const char* key, T& value, const T& = T{}, bool = false) {
    if (!has(key)) return;
    seen_.insert(key);
    read(node_[key], child(key), value);
  }

  void kind(const std::string& value, const std::vector<std::string>& allowed) const {
    if (std::find(allowed.begin(), allowed.end(), value) == allowed.end()) {
      throw ConfigError(where() + "unknown kind '" + value + "' (expected one of: " + join(allowed) + ")");
    }
  }

  void finish() const {
    if (!node_ || !node_.IsMap()) return;
    for (const auto& kv : node_) {
      const std::string key = kv.first.as<std::string>();
      if (!seen_.count(key)) throw ConfigError("unknown key '" + child(key) + "'");
    }
  }

 private:
  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  std::string where() const { return path_.empty() ? "" : "'" + path_ + "': "; }

  static void scalar_check(const YAML::Node& n, const std::string& path) {
    if (!n.IsScalar()) throw ConfigError("'" + path + "': expected a scalar");
  }

  static void read(const YAML::Node& n, const std::string& path, double& v) {
    scalar_check(n, path);
    const std::string s = n.Scalar();
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) throw ConfigError("'" + path + "': expected a number, got '" + s + "'");
  }
  static void read(const YAML::Node& n, const std::string& path, int& v) {
    scalar_check(n, path);
    const std::string s = n.Scalar();
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw ConfigError("'" + path + "': expected an integer, got '" + s + "'");
    }
  }
  static void read(const YAML::Node& n, const std::string& path, std::uint64_t& v) {
    scalar_check(n, path);
    const std::string s = n.Scalar();
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw ConfigError("'" + path + "': expected a non-negative integer, got '" + s + "'");
    }
  }
  static void read(const YAML::Node& n, const std::string& path, bool& v) {
    scalar_check(n, path);
    const std::string s = n.Scalar();
    if (s == "true") {
      v = true;
    } else if (s == "false") {
      v = false;
    } else {
      throw ConfigError("'" + path + "': expected true or false, got '" + s + "'");
    }
  }
  static void read(const YAML::Node& n, const std::string& path, std::string& v) {
    scalar_check(n, path);
    v = n.Scalar();
  }
  static void read(const YAML::Node& n, const std::string& path, PlaneScheme& v) {
    std::string s;
    read(n, path, s);
    try {
      v = parse_scheme(s);
    } catch (const ParameterError& e) {
      throw ConfigError("'" + path + "': " + e.what());
    }
  }
  template <class T>
  static void read(const YAML::Node& n, const std::string& path, std::vector<T>& v) {
    if (!n.IsSequence()) throw ConfigError("'" + path + "': expected a list");
    v.clear();
    for (std::size_t i = 0; i < n.size(); ++i) {
      T item{};
      read(n[i], path + "[" + std::to_string(i) + "]", item);
      v.push_back(std::move(item));
    }
  }
  template <class T>
    requires std::is_class_v<T> && requires(Reader& r, T& t) { visit(r, t); }
  static void read(const YAML::Node& n, const std::string& path, T& v) {
    Reader sub(n, path);
    visit(sub, v);
    sub.finish();
  }

  YAML::Node node_;
  std::string path_;
  std::set<std::string> seen_;
};

// ---------------------------------------------------------------------------
// Writing: only values that differ from the defaults, plus forced keys.

class Writer {
 public:
  explicit Writer(YAML::Emitter& out) : out_(out) {}

  template <class T>
  void operator()(const char* key, const T& value, const T& fallback = T{}, bool always = false) {
    if (!always && value == fallback) return;
    out_ << YAML::Key << key << YAML::Value;
    write(value);
  }

  void kind(const std::string&, const std::vector<std::string>&) const {}

 private:
  void write(double v) { out_ << format_double(v); }
  void write(int v) { out_ << v; }
  void write(std::uint64_t v) { out_ << v; }
  void write(bool v) { out_ << (v ? "true" : "false"); }
  void write(const std::string& v) { out_ << v; }
  void write(PlaneScheme v) { out_ << scheme_name(v); }
  template <class T>
  void write(const std::vector<T>& v) {
    constexpr bool flat = std::is_arithmetic_v<T>;
    out_ << (flat ? YAML::Flow : YAML::Block) << YAML::BeginSeq;
    for (const auto& x : v) write(x);
    out_ << YAML::EndSeq;
  }
  template <class T>
    requires std::is_class_v<T> && requires(Writer& w, T& t) { visit(w, t); }
  void write(const T& v) {
    T copy = v;
    out_ << YAML::BeginMap;
    visit(*this, copy);
    out_ << YAML::EndMap;
  }

  YAML::Emitter& out_;
};

}  // namespace

// One field table per record, shared by Reader and Writer.

template <class IO>
void visit(IO& io, FieldSpec& s) {
  const FieldSpec d;
  io("kind", s.kind, d.kind, true);
  io.kind(s.kind, kFieldKinds);
  io("a", s.a, d.a);
  io("radius", s.radius, d.radius);
  io("weight", s.weight, d.weight);
  io("center", s.center, d.center);
  io("terms", s.terms, d.terms);
}

template <class IO>
void visit(IO& io, FunctionSpec& s) {
  const FunctionSpec d;
  io("kind", s.kind, d.kind, true);
  io.kind(s.kind, kFunctionKinds);
  io("a", s.a, d.a);
  io("radius", s.radius, d.radius);
  io("amplitude", s.amplitude, d.amplitude);
  io("p", s.p, d.p);
  io("center", s.center, d.center);
  io("terms", s.terms, d.terms);
  io("field", s.field, d.field);
  io("beta", s.beta, d.beta);
  io("gamma", s.gamma, d.gamma);
  io("components", s.components, d.components);
  io("seed", s.seed, d.seed);
}

template <class IO>
void visit(IO& io, GrassmannRuleSpec& s) {
  const GrassmannRuleSpec d;
  io("kind", s.kind, d.kind, true);
  io.kind(s.kind, kRuleKinds);
  io("count", s.count, d.count);
  io("budget", s.budget, d.budget);
  io("seed", s.seed, d.seed, true);
}

template <class IO>
void visit(IO& io, PlaneQuadratureSpec& s) {
  const PlaneQuadratureSpec d;
  io("scheme", s.scheme, d.scheme);
  io("budget", s.budget, d.budget);
  io("truncation_radius", s.truncation_radius, d.truncation_radius);
  io("seed", s.seed, d.seed);
}

template <class IO>
void visit(IO& io, PointGrid& s) {
  const PointGrid d;
  io("radii", s.radii, d.radii);
  io("directions", s.directions, d.directions);
  io("max_radius", s.max_radius, d.max_radius);
}

template <class IO>
void visit(IO& io, GaussianFamily& s) {
  const GaussianFamily d;
  io("alpha", s.alpha, d.alpha);
  io("scales", s.scales, d.scales);
  io("gamma", s.gamma, d.gamma);
}

template <class IO>
void visit(IO& io, DominationGrid& s) {
  const DominationGrid d;
  io("radial", s.radial, d.radial);
  io("directions", s.directions, d.directions);
}

template <class IO>
void visit(IO& io, P1Params& s) {
  const P1Params d;
  io("g", s.g, d.g);
  io("h", s.h, d.h);
  io("eps_grid", s.eps_grid, d.eps_grid);
  io("scale_to_hypothesis", s.scale_to_hypothesis, d.scale_to_hypothesis);
  io("tolerance", s.tolerance, d.tolerance);
}

template <class IO>
void visit(IO& io, AffirmativeParams& s) {
  const AffirmativeParams d;
  io("witness", s.witness, d.witness);
  io("h", s.h, d.h);
  io("dominate", s.dominate, d.dominate);
  io("ball_budget", s.ball_budget, d.ball_budget);
  io("link_tolerance", s.link_tolerance, d.link_tolerance);
  io("tolerance", s.tolerance, d.tolerance);
}

template <class IO>
void visit(IO& io, CounterexampleParams& s) {
  const CounterexampleParams d;
  io("phi", s.phi, d.phi);
  io("centers", s.centers, d.centers);
  io("widths", s.widths, d.widths);
  io("atom_count", s.atom_count, d.atom_count);
  io("delta_factor", s.delta_factor, d.delta_factor);
  io("outside_factor", s.outside_factor, d.outside_factor);
  io("pairing_floor", s.pairing_floor, d.pairing_floor);
  io("solve_directions", s.solve_directions, d.solve_directions);
  io("solve_near", s.solve_near, d.solve_near);
  io("near_radius", s.near_radius, d.near_radius);
  io("solve_far", s.solve_far, d.solve_far);
  io("far_radius", s.far_radius, d.far_radius);
  io("dense_factor", s.dense_factor, d.dense_factor);
  io("dense_directions", s.dense_directions, d.dense_directions);
  io("dense_far_radius", s.dense_far_radius, d.dense_far_radius);
  io("offset_grid", s.offset_grid, d.offset_grid);
  io("tolerance", s.tolerance, d.tolerance);
}

template <class IO>
void visit(IO& io, SlicingParams& s) {
  const SlicingParams d;
  io("g", s.g, d.g);
  io("h", s.h, d.h);
  io("w", s.w, d.w);
  io("family", s.family, d.family);
  io("domination", s.domination, d.domination);
  io("tolerance", s.tolerance, d.tolerance);
}

template <class IO>
void visit(IO& io, PinchedParams& s) {
  const PinchedParams d;
  io("alpha", s.alpha, d.alpha);
  io("beta", s.beta, d.beta);
  io("gamma", s.gamma, d.gamma);
  io("components", s.components, d.components);
  io("h", s.h, d.h);
  io("w", s.w, d.w);
  io("domination", s.domination, d.domination);
  io("tolerance", s.tolerance, d.tolerance);
}

template <class IO>
void visit(IO& io, SolmonParams& s) {
  const SolmonParams d;
  io("g", s.g, d.g);
  io("radii", s.radii, d.radii);
  io("ball_budget", s.ball_budget, d.ball_budget);
  io("stability", s.stability, d.stability);
}

template <class IO>
void visit(IO& io, CapProfileParams& s) {
  const CapProfileParams d;
  io("ratios", s.ratios, d.ratios);
  io("profile_points", s.profile_points, d.profile_points);
  io("mc_count", s.mc_count, d.mc_count);
}

template <class IO>
void visit(IO& io, DecayParams& s) {
  const DecayParams d;
  io("psi", s.psi, d.psi);
  io("radii", s.radii, d.radii);
  io("directions", s.directions, d.directions);
  io("slope_slack", s.slope_slack, d.slope_slack);
}

ExperimentParams default_params(const std::string& experiment) {
  if (experiment == "verify_p1_monotonicity") return P1Params{};
  if (experiment == "verify_affirmative_chain") return AffirmativeParams{};
  if (experiment == "search_counterexample") return CounterexampleParams{};
  if (experiment == "verify_general_slicing") return SlicingParams{};
  if (experiment == "verify_pinched_gaussian_slicing") return PinchedParams{};
  if (experiment == "solmon_ratio") return SolmonParams{};
  if (experiment == "cap_measure_profile") return CapProfileParams{};
  if (experiment == "decay_profile") return DecayParams{};
  std::string names;
  for (const auto& e : experiment_catalog()) names += (names.empty() ? "" : ", ") + e.name;
  throw ConfigError("unknown experiment '" + experiment + "' (available: " + names + ")");
}

void validate(const RunConfig& c) {
  default_params(c.experiment);
  const auto& s = c.settings;
  if (!(s.k > 0 && s.k < s.n)) {
    throw ConfigError("invalid dimensions (n, k) = (" + std::to_string(s.n) + ", " + std::to_string(s.k) +
                      "): need 0 < k < n");
  }
  if (!(s.p >= 1.0)) throw ConfigError("invalid exponent p = " + format_double(s.p) + ": need p >= 1");
  try {
    s.plane.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(std::string("'plane': ") + e.what());
  }
}

RunConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("malformed YAML: ") + e.what());
  }
  if (!root.IsMap()) throw ConfigError("config must be a mapping");
  Reader top(root, "");
  RunConfig c;
  if (!top.has("experiment")) throw ConfigError("missing key 'experiment'");
  if (!top.has("seed")) throw ConfigError("missing key 'seed' (runs never draw an implicit seed)");
  top("experiment", c.experiment);
  c.params = default_params(c.experiment);
  auto& s = c.settings;
  top("seed", s.seed);
  top("n", s.n);
  top("k", s.k);
  top("p", s.p);
  s.grassmann.seed = s.seed;
  top("grassmann", s.grassmann);
  top("plane", s.plane);
  top("grid", s.grid);
  top("output", c.output);
  if (top.has("params")) {
    std::visit([&](auto& params) { top("params", params); }, c.params);
  }
  top.finish();
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string emit_config(const RunConfig& c) {
  YAML::Emitter out;
  Writer w(out);
  RunConfig copy = c;
  auto& s = copy.settings;
  const RunSettings d;
  out << YAML::BeginMap;
  w("experiment", copy.experiment, {}, true);
  w("seed", s.seed, d.seed, true);
  w("n", s.n, d.n, true);
  w("k", s.k, d.k, true);
  w("p", s.p, d.p, true);
  w("grassmann", s.grassmann, d.grassmann, true);
  w("plane", s.plane, d.plane);
  w("grid", s.grid, d.grid);
  w("output", copy.output);
  std::visit(
      [&](auto& params) {
        using T = std::decay_t<decltype(params)>;
        w("params", params, T{});
      },
      copy.params);
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace kplane::cli
