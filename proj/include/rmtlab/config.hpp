#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rmtlab/errors.hpp"
#include "rmtlab/greencmp.hpp"
#include "rmtlab/random.hpp"

namespace rmtlab {

enum class Experiment { LocalLaw, Rigidity, Edge, GreenComparison, Moments, All };

inline std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::LocalLaw: return "localaw";
    case Experiment::Rigidity: return "rigidity";
    case Experiment::Edge: return "edge";
    case Experiment::GreenComparison: return "greencmp";
    case Experiment::Moments: return "moments";
    case Experiment::All: return "all";
  }
  return "unknown";
}

inline Experiment parse_experiment(std::string_view s) {
  for (auto e : {Experiment::LocalLaw, Experiment::Rigidity, Experiment::Edge, Experiment::GreenComparison,
                 Experiment::Moments, Experiment::All}) {
    if (s == to_string(e)) return e;
  }
  throw ConfigError("unknown experiment '" + std::string(s) +
                    "' (expected localaw, rigidity, edge, greencmp, moments, all)");
}

inline std::vector<Experiment> expand(Experiment e) {
  if (e != Experiment::All) return {e};
  return {Experiment::LocalLaw, Experiment::Rigidity, Experiment::Edge, Experiment::GreenComparison,
          Experiment::Moments};
}

/// Trial counts used when none is configured.
inline long default_trials(Experiment e) {
  switch (e) {
    case Experiment::LocalLaw: return 100;
    case Experiment::Rigidity: return 100;
    case Experiment::Edge: return 2000;
    case Experiment::GreenComparison: return 400;
    case Experiment::Moments: return 20000;
    case Experiment::All: break;
  }
  return 100;
}

struct RunConfig {
  Experiment experiment = Experiment::All;
  long n = 200;  // columns
  long m = 800;  // rows
  EntryDistribution dist = EntryDistribution::Gaussian;
  std::optional<long> trials;
  std::uint64_t seed = 1;
  double epsilon = 0.05;           // spectral parameter z = lambda_+ + i N^{-2/3-eps}
  double eta_exponent = -0.9;      // local-law grid reaches eta = N^{eta_exponent}
  double envelope_exponent = 3.0;  // poly-log envelope (log N)^exponent
  double shift_exponent = 0.1;     // sandwich shift N^{-shift_exponent}
  long edge_k = 2;                 // extreme eigenvalues kept per edge
  FunctionalKind functional = FunctionalKind::Tanh;
  std::string out = "results";
  unsigned workers = default_workers();

  long trials_for(Experiment e) const { return trials.value_or(default_trials(e)); }

  /// Rejects anything a module would reject, before any computation starts.
  void validate() const {
    if (n < 2 || m < 2) throw ConfigError("n and m must both be >= 2");
    if (n == m) throw ConfigError("n == m gives d = 1, which is excluded");
    EnsembleSpec{m, n, dist, seed}.validate();
    if (trials && *trials < 1) throw ConfigError("trials must be >= 1 (got " + std::to_string(*trials) + ")");
    if (!(epsilon > 0.0 && epsilon < 1.0 / 3.0)) throw ConfigError("epsilon must lie in (0, 1/3)");
    if (!(eta_exponent > -1.0 && eta_exponent < 0.0)) throw ConfigError("eta_exponent must lie in (-1, 0)");
    if (!(envelope_exponent > 0.0 && std::isfinite(envelope_exponent))) throw ConfigError("envelope_exponent must be positive");
    if (!(shift_exponent > 0.0 && std::isfinite(shift_exponent))) throw ConfigError("shift_exponent must be positive");
    if (edge_k < 1 || edge_k > std::min(n, m)) throw ConfigError("edge_k must lie in [1, min(n, m)]");
    if (out.empty()) throw ConfigError("output directory must not be empty");
    if (workers < 1) throw ConfigError("workers must be >= 1");
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError("invalid value '" + std::string(v) + "' for " + std::string(key));
  }
  return out;
}

}  // namespace detail

/// Applies one key = value setting. Keys match the long command-line flags.
inline void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  using detail::parse_number;
  if (key == "experiment") c.experiment = parse_experiment(value);
  else if (key == "n") c.n = parse_number<long>(key, value);
  else if (key == "m") c.m = parse_number<long>(key, value);
  else if (key == "dist") c.dist = parse_distribution(value);
  else if (key == "trials") c.trials = parse_number<long>(key, value);
  else if (key == "seed") c.seed = parse_number<std::uint64_t>(key, value);
  else if (key == "epsilon") c.epsilon = parse_number<double>(key, value);
  else if (key == "eta_exponent") c.eta_exponent = parse_number<double>(key, value);
  else if (key == "envelope_exponent") c.envelope_exponent = parse_number<double>(key, value);
  else if (key == "shift_exponent") c.shift_exponent = parse_number<double>(key, value);
  else if (key == "edge_k") c.edge_k = parse_number<long>(key, value);
  else if (key == "functional") c.functional = parse_functional(value);
  else if (key == "out") c.out = std::string(value);
  else if (key == "workers") c.workers = parse_number<unsigned>(key, value);
  else throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

/// Plain key = value lines; '#' starts a comment.
inline void load_config_file(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::string_view v = line;
    if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = detail::trim(v);
    if (v.empty()) continue;
    const auto eq = v.find('=');
    if (eq == std::string_view::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    try {
      apply_setting(c, detail::trim(v.substr(0, eq)), detail::trim(v.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

/// Default output directory, overridable through RMTLAB_OUT.
inline std::string default_output_dir() {
  const char* env = std::getenv("RMTLAB_OUT");
  return env && *env ? std::string(env) : std::string("results");
}

}  // namespace rmtlab
