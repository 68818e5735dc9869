#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmtlab/config.hpp"
#include "rmtlab/edgestats.hpp"
#include "rmtlab/greencmp.hpp"
#include "rmtlab/lawcheck.hpp"
#include "rmtlab/momentcmp.hpp"

namespace rmtlab {

/// Per-trial scalars, one row per trial (per evaluation for `moments`).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t index_of(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw ConfigError("table has no column '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - columns.begin());
  }

  std::vector<double> column(std::string_view name) const {
    const std::size_t j = index_of(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[j]);
    return out;
  }

  /// Values of `name` on rows where `key` equals `value`.
  std::vector<double> column_where(std::string_view name, std::string_view key, double value) const {
    const std::size_t j = index_of(name), kj = index_of(key);
    std::vector<double> out;
    for (const auto& r : rows) {
      if (r[kj] == value) out.push_back(r[j]);
    }
    return out;
  }
};

struct Gate {
  std::string name;
  double measured = 0.0;
  std::string relation;  // "<=" or ">="
  double bound = 0.0;
  bool passed = false;
};

inline Gate make_gate(std::string name, double measured, std::string_view relation, double bound) {
  const bool ok = relation == "<=" ? measured <= bound : measured >= bound;  // NaN fails either way
  return {std::move(name), measured, std::string(relation), bound, ok};
}

struct Summary {
  std::vector<std::pair<std::string, double>> aggregates;
  std::vector<Gate> gates;

  void add(std::string key, double v) { aggregates.emplace_back(std::move(key), v); }
  bool passed() const {
    return std::all_of(gates.begin(), gates.end(), [](const Gate& g) { return g.passed; });
  }
};

struct RunReport {
  Experiment experiment = Experiment::LocalLaw;
  RunConfig config;
  Table table;
  Summary summary;
  bool interrupted = false;
  double wall_seconds = 0.0;

  bool passed() const { return !interrupted && summary.passed(); }
};

// Stream tags for per-trial seeds: trial t of an experiment uses
// derive_seed(seed, stream, t), so results do not depend on the worker count.
inline constexpr std::uint64_t kLocalLawStream = 0x10ca1;
inline constexpr std::uint64_t kRigidityStream = 0x121d;
inline constexpr std::uint64_t kIdentityStream = 0x1de7;
inline constexpr std::uint64_t kMomentStream = 0x303;

namespace detail {

inline double fraction_at_most(const std::vector<double>& v, double bound) {
  if (v.empty()) return 0.0;
  const auto held = std::count_if(v.begin(), v.end(), [&](double x) { return x <= bound; });
  return static_cast<double>(held) / static_cast<double>(v.size());
}

inline double max_of(const std::vector<double>& v) {
  return v.empty() ? std::numeric_limits<double>::quiet_NaN() : *std::max_element(v.begin(), v.end());
}

inline Gate completion_gate(const Table& t, double requested) {
  return make_gate("completed_trials", static_cast<double>(t.rows.size()), ">=", requested);
}

inline Spectrum correlation_spectrum(const EnsembleSpec& spec, std::uint64_t trial, std::uint64_t stream) {
  return eigenvalues(standardize_columns(sample_raw(spec.for_trial(trial, stream))), EigenMethod::Gram);
}

inline std::vector<std::string> edge_columns(long k) {
  std::vector<std::string> cols{"trial"};
  for (const char* side : {"max", "min"}) {
    for (const char* ens : {"corr", "cov"}) {
      for (long i = 1; i <= k; ++i) cols.push_back(std::string(ens) + "_" + side + "_" + std::to_string(i));
    }
  }
  return cols;
}

inline EdgeSample edge_sample_from(const Table& t, std::string_view ens, std::string_view side, long k) {
  EdgeSample s;
  s.k = k;
  std::vector<std::size_t> idx;
  for (long i = 1; i <= k; ++i) idx.push_back(t.index_of(std::string(ens) + "_" + std::string(side) + "_" + std::to_string(i)));
  for (const auto& r : t.rows) {
    for (std::size_t j : idx) s.values.push_back(r[j]);
  }
  s.seeds.assign(t.rows.size(), 0);
  return s;
}

}  // namespace detail

// Local law -------------------------------------------------------------------------

inline Table run_local_law(const RunConfig& c) {
  const MPLaw law = MPLaw::for_dims(c.m, c.n);
  const auto dom = SpectralDomain::standard(law, c.n, c.eta_exponent);
  const EnsembleSpec spec{c.m, c.n, c.dist, c.seed};
  const double scale = std::pow(static_cast<double>(c.n), 2.0 / 3.0);
  Table t{{"trial", "sup_deviation", "extreme_excess"}, {}};
  t.rows.resize(static_cast<std::size_t>(c.trials_for(Experiment::LocalLaw)));
  const std::size_t done = parallel_for(
      t.rows.size(),
      [&](std::size_t i) {
        const auto s = detail::correlation_spectrum(spec, i, kLocalLawStream);
        const double sup = local_law_deviation(s, law, dom).supremum();
        const double out = std::max({s.largest() - law.lambda_plus(), law.lambda_minus() - s.smallest_nontrivial(), 0.0});
        t.rows[i] = {static_cast<double>(i), sup, out * scale};
      },
      c.workers);
  t.rows.resize(done);
  return t;
}

inline Summary summarize_local_law(const RunConfig& c, const Table& t) {
  Summary s;
  const double env = polylog_envelope(static_cast<double>(c.n), c.envelope_exponent);
  const auto sup = t.column("sup_deviation"), ext = t.column("extreme_excess");
  s.add("trials", static_cast<double>(t.rows.size()));
  s.add("envelope", env);
  s.add("max_sup_deviation", detail::max_of(sup));
  s.add("median_sup_deviation", sup.empty() ? std::numeric_limits<double>::quiet_NaN() : median(sup));
  s.add("max_extreme_excess", detail::max_of(ext));
  s.gates.push_back(make_gate("local_law_frequency", detail::fraction_at_most(sup, env), ">=", 0.99));
  s.gates.push_back(make_gate("extreme_bound_frequency", detail::fraction_at_most(ext, env), ">=", 0.99));
  s.gates.push_back(detail::completion_gate(t, static_cast<double>(c.trials_for(Experiment::LocalLaw))));
  return s;
}

// Rigidity --------------------------------------------------------------------------

inline Table run_rigidity(const RunConfig& c) {
  const MPLaw law = MPLaw::for_dims(c.m, c.n);
  const EnsembleSpec spec{c.m, c.n, c.dist, c.seed};
  Table t{{"trial", "max_normalized_deviation", "esd_kolmogorov"}, {}};
  t.rows.resize(static_cast<std::size_t>(c.trials_for(Experiment::Rigidity)));
  const std::size_t done = parallel_for(
      t.rows.size(),
      [&](std::size_t i) {
        const auto s = detail::correlation_spectrum(spec, i, kRigidityStream);
        t.rows[i] = {static_cast<double>(i), rigidity_profile(s, law).max_normalized(), esd_kolmogorov_distance(s, law)};
      },
      c.workers);
  t.rows.resize(done);
  return t;
}

inline Summary summarize_rigidity(const RunConfig& c, const Table& t) {
  Summary s;
  const double env = polylog_envelope(static_cast<double>(c.n), c.envelope_exponent);
  const auto dev = t.column("max_normalized_deviation"), esd = t.column("esd_kolmogorov");
  s.add("trials", static_cast<double>(t.rows.size()));
  s.add("envelope", env);
  s.add("max_normalized_deviation", detail::max_of(dev));
  s.add("median_esd_kolmogorov", esd.empty() ? std::numeric_limits<double>::quiet_NaN() : median(esd));
  s.gates.push_back(make_gate("rigidity_frequency", detail::fraction_at_most(dev, env), ">=", 0.99));
  s.gates.push_back(detail::completion_gate(t, static_cast<double>(c.trials_for(Experiment::Rigidity))));
  return s;
}

// Edge statistics --------------------------------------------------------------------

inline Table run_edge(const RunConfig& c) {
  const EnsembleSpec spec{c.m, c.n, c.dist, c.seed};
  const long trials = c.trials_for(Experiment::Edge);
  const auto [corr_hi, corr_lo] = collect_edge_samples(spec, EnsembleKind::Correlation, c.edge_k, trials, 0, c.workers);
  const auto [cov_hi, cov_lo] = stop_requested()
                                    ? std::pair<EdgeSample, EdgeSample>{}
                                    : collect_edge_samples(spec, EnsembleKind::Covariance, c.edge_k, trials, 0, c.workers);
  Table t{detail::edge_columns(c.edge_k), {}};
  const std::size_t done = std::min(corr_hi.trials(), cov_hi.trials());
  for (std::size_t i = 0; i < done; ++i) {
    std::vector<double> row{static_cast<double>(i)};
    for (const EdgeSample* e : {&corr_hi, &cov_hi, &corr_lo, &cov_lo}) {
      for (long j = 0; j < c.edge_k; ++j) row.push_back(e->at(i, static_cast<std::size_t>(j)));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Summary summarize_edge(const RunConfig& c, const Table& t) {
  Summary s;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double ne = static_cast<double>(t.rows.size()) / 2.0;  // n1 n2 / (n1 + n2) with n1 = n2
  s.add("trials", static_cast<double>(t.rows.size()));
  const double shift = std::pow(static_cast<double>(c.n), -c.shift_exponent);
  s.add("sandwich_shift", shift);
  for (const char* side : {"max", "min"}) {
    const std::string tag = side == std::string_view("max") ? "largest" : "smallest";
    const auto a = t.column(std::string("corr_") + side + "_1"), b = t.column(std::string("cov_") + side + "_1");
    const double d = t.rows.empty() ? nan : ks_statistic(a, b);
    const double p = t.rows.empty() ? nan : ks_pvalue(d, ne);
    s.add("ks_" + tag + "_statistic", d);
    s.add("ks_" + tag + "_pvalue", p);
    s.gates.push_back(make_gate("ks_" + tag + "_pvalue", p, ">=", 0.01));
  }
  for (const char* side : {"max", "min"}) {
    const std::string tag = side == std::string_view("max") ? "largest" : "smallest";
    if (t.rows.empty()) {
      s.gates.push_back(make_gate("sandwich_" + tag + "_excess", nan, "<=", 0.0));
      continue;
    }
    const auto rep = universality_gap(detail::edge_sample_from(t, "corr", side, c.edge_k),
                                      detail::edge_sample_from(t, "cov", side, c.edge_k), shift, 0.0);
    s.add("sandwich_" + tag + "_thresholds", static_cast<double>(rep.thresholds));
    s.add("sandwich_" + tag + "_worst_violation", rep.worst_violation);
    s.add("sandwich_" + tag + "_se_at_worst", rep.se_at_worst);
    // max over thresholds of (violation - 2 SE); <= 0 means the sandwich holds everywhere
    s.gates.push_back(make_gate("sandwich_" + tag + "_excess", rep.worst_excess, "<=", 0.0));
  }
  const std::function<double(double)> tw = [](double x) { return tw1_cdf(x); };
  for (const char* ens : {"corr", "cov"}) {
    const auto v = t.column(std::string(ens) + "_max_1");
    double mean = 0;
    for (double x : v) mean += x;
    s.add(std::string("mean_rescaled_largest_") + ens, v.empty() ? nan : mean / static_cast<double>(v.size()));
    const double d = v.empty() ? nan : ks_statistic(v, tw);
    s.add(std::string("tw1_ks_") + ens, d);
    s.gates.push_back(make_gate(std::string("tw1_ks_") + ens, d, "<=", 0.05));
  }
  s.gates.push_back(detail::completion_gate(t, static_cast<double>(c.trials_for(Experiment::Edge))));
  return s;
}

// Green function comparison ---------------------------------------------------------

inline Table run_green_comparison(const RunConfig& c) {
  const MPLaw law = MPLaw::for_dims(c.m, c.n);
  const cplx z = edge_parameter(law, c.n, c.epsilon);
  const EnsembleSpec spec{c.m, c.n, c.dist, c.seed};
  const long trials = c.trials_for(Experiment::GreenComparison);
  Table t{{"trial", "identity_residual", "interlacing", "abs_B", "abs_y1", "abs_y2", "abs_y3", "telescoping"}, {}};
  t.rows.resize(static_cast<std::size_t>(trials));
  const std::size_t done = parallel_for(
      t.rows.size(),
      [&](std::size_t i) {
        const auto x = standardize_columns(sample_raw(spec.for_trial(i, kIdentityStream)));
        const auto r = identity_suite(x, z, law);
        const auto e = expansion_quantities(x, z, law);
        t.rows[i] = {static_cast<double>(i), r.max_exact(), r.interlacing, std::abs(e.B),
                     std::abs(e.y[0]), std::abs(e.y[1]), std::abs(e.y[2]), 0.0};
      },
      c.workers);
  t.rows.resize(done);
  if (stop_requested()) return t;
  const auto tel = telescoping_difference(spec, 1, TestFunctional{c.functional}, z, static_cast<long>(done), c.workers);
  t.rows.resize(tel.per_trial.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) t.rows[i].back() = tel.per_trial[i];
  return t;
}

inline Summary summarize_green_comparison(const RunConfig& c, const Table& t) {
  Summary s;
  const auto mean_of = [&](std::string_view col) { return estimate_of(t.column(col)).mean; };
  s.add("trials", static_cast<double>(t.rows.size()));
  s.add("eta", edge_parameter(MPLaw::for_dims(c.m, c.n), c.n, c.epsilon).imag());
  s.add("max_identity_residual", detail::max_of(t.column("identity_residual")));
  s.add("max_interlacing", detail::max_of(t.column("interlacing")));
  for (const char* k : {"abs_B", "abs_y1", "abs_y2", "abs_y3"}) s.add(std::string("mean_") + k, mean_of(k));
  const Estimate tel = estimate_of(t.column("telescoping"));
  s.add("telescoping_mean", tel.mean);
  s.add("telescoping_se", tel.se);
  s.gates.push_back(make_gate("identity_residual", detail::max_of(t.column("identity_residual")), "<=", 1e-8));
  const double tol = 5.0 * tel.se + 10.0 * std::pow(static_cast<double>(c.n), -7.0 / 6.0);
  s.gates.push_back(make_gate("telescoping_single_step", t.rows.empty() ? std::numeric_limits<double>::quiet_NaN() : std::abs(tel.mean), "<=", tol));
  s.gates.push_back(detail::completion_gate(t, static_cast<double>(c.trials_for(Experiment::GreenComparison))));
  return s;
}

// Moment calculus -------------------------------------------------------------------

// Row kinds in the moments table.
inline constexpr double kQuarticCheck = 1;     // Gaussian single-block quartic, coupled difference
inline constexpr double kThirdMomentCheck = 2;  // E ytilde^3 - E y^3, centered exponential
inline constexpr double kSumBoundCheck = 3;    // brute-force partition sum / structured bound

inline const std::vector<long>& quartic_grid() {
  static const std::vector<long> g{10, 20, 40};
  return g;
}
inline const std::vector<long>& third_moment_grid() {
  static const std::vector<long> g{100, 200, 400, 800, 1600};
  return g;
}
inline const std::vector<long>& exact_slope_grid() {
  static const std::vector<long> g{100, 200, 400, 800, 1600};
  return g;
}
inline constexpr long kSumBoundRows = 12;
inline constexpr long kSumBoundCols = 6;
inline constexpr long kSumBoundInstances = 10;

/// (a, b) pairs with 1 <= a and a + b <= 2.
inline const std::vector<std::pair<int, int>>& sum_bound_shapes() {
  static const std::vector<std::pair<int, int>> s{{1, 0}, {2, 0}, {1, 1}};
  return s;
}

inline Table run_moments(const RunConfig& c) {
  Table t{{"check", "m", "a", "b", "index", "value"}, {}};
  const long trials = c.trials_for(Experiment::Moments);
  const auto quartic = Partition::from_blocks({{1, 2, 3, 4}});
  const auto cubic = Partition::from_blocks({{1, 2, 3}});
  for (long m : quartic_grid()) {
    if (stop_requested()) return t;
    const auto v = moment_difference_samples(EntryDistribution::Gaussian, m, quartic, {1, 1, 1, 1}, trials,
                                             {.seed = derive_seed(c.seed, kMomentStream + 1, static_cast<std::uint64_t>(m)), .workers = c.workers});
    for (std::size_t i = 0; i < v.size(); ++i) t.rows.push_back({kQuarticCheck, double(m), 2, 0, double(i), v[i]});
  }
  for (long m : third_moment_grid()) {
    if (stop_requested()) return t;
    const auto v = moment_difference_samples(EntryDistribution::CenteredExponential, m, cubic, {1, 1, 1}, trials,
                                             {.seed = derive_seed(c.seed, kMomentStream + 2, static_cast<std::uint64_t>(m)), .workers = c.workers});
    for (std::size_t i = 0; i < v.size(); ++i) t.rows.push_back({kThirdMomentCheck, double(m), 0, 0, double(i), -v[i]});
  }
  const MPLaw law = MPLaw::for_dims(kSumBoundRows, kSumBoundCols);
  const cplx z = edge_parameter(law, kSumBoundCols, c.epsilon);
  for (long inst = 0; inst < kSumBoundInstances; ++inst) {
    if (stop_requested()) return t;
    const EnsembleSpec spec{kSumBoundRows, kSumBoundCols, EntryDistribution::Gaussian, derive_seed(c.seed, kMomentStream + 3)};
    const auto x = standardize_columns(sample_raw(spec.for_trial(static_cast<std::uint64_t>(inst), kMomentStream)));
    for (auto [a, b] : sum_bound_shapes()) {
      const auto parts = enumerate_partitions(2 * a + 2 * b);
      for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto r = sum_bound_check(x, z, parts[p], a, b);
        t.rows.push_back({kSumBoundCheck, double(kSumBoundRows), double(a), double(b), double(inst * 1000 + static_cast<long>(p)), r.ratio()});
      }
    }
  }
  return t;
}

inline Summary summarize_moments(const RunConfig& c, const Table& t) {
  Summary s;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const auto quartic = Partition::from_blocks({{1, 2, 3, 4}});
  const auto rows_for = [&](double check, long m) {
    std::vector<double> out;
    const std::size_t kc = t.index_of("check"), km = t.index_of("m"), kv = t.index_of("value");
    for (const auto& r : t.rows) {
      if (r[kc] == check && r[km] == static_cast<double>(m)) out.push_back(r[kv]);
    }
    return out;
  };
  for (long m : quartic_grid()) {
    const auto v = rows_for(kQuarticCheck, m);
    const Estimate e = estimate_of(v);
    const double exact = gaussian_moment_difference_exact(quartic, m);
    const std::string tag = "quartic_m" + std::to_string(m);
    s.add(tag + "_mean", e.mean);
    s.add(tag + "_se", e.se);
    s.add(tag + "_exact", exact);
    s.gates.push_back(make_gate(tag + "_vs_exact", v.empty() ? nan : std::abs(e.mean - exact), "<=", 5.0 * e.se));
  }
  const auto exact_fit = scaling_fit(exact_slope_grid(), [&](long m) {
    return Estimate{gaussian_moment_difference_exact(quartic, m), 0.0, 1};
  });
  s.add("quartic_exact_slope", exact_fit.fit.slope);
  s.gates.push_back(make_gate("quartic_exact_slope_error", std::abs(exact_fit.fit.slope + 3.0), "<=", 1e-2));

  bool have_all = true;
  for (long m : third_moment_grid()) have_all = have_all && !rows_for(kThirdMomentCheck, m).empty();
  if (have_all) {
    const auto fit = scaling_fit(third_moment_grid(), [&](long m) { return estimate_of(rows_for(kThirdMomentCheck, m)); });
    double min_snr = std::numeric_limits<double>::infinity();
    for (const auto& p : fit.points) min_snr = std::min(min_snr, std::abs(p.mean) / p.se);
    s.add("third_moment_min_snr", min_snr);
    s.add("third_moment_slope", fit.inconclusive ? nan : fit.fit.slope);
    s.add("third_moment_slope_se", fit.inconclusive ? nan : fit.fit.slope_se);
    s.gates.push_back(make_gate("third_moment_signal", min_snr, ">=", 3.0));
    s.gates.push_back(make_gate("third_moment_slope_error", fit.inconclusive ? nan : std::abs(fit.fit.slope + 2.5), "<=", 0.3));
  } else {
    s.gates.push_back(make_gate("third_moment_slope_error", nan, "<=", 0.3));
  }

  const auto ratios = t.column_where("value", "check", kSumBoundCheck);
  s.add("sum_bound_evaluations", static_cast<double>(ratios.size()));
  s.add("sum_bound_max_ratio", detail::max_of(ratios));
  s.gates.push_back(make_gate("sum_bound_max_ratio", detail::max_of(ratios), "<=", 50.0));

  double expected_rows = static_cast<double>(c.trials_for(Experiment::Moments)) *
                         static_cast<double>(quartic_grid().size() + third_moment_grid().size());
  for (auto [a, b] : sum_bound_shapes()) {
    expected_rows += static_cast<double>(kSumBoundInstances * static_cast<long>(enumerate_partitions(2 * a + 2 * b).size()));
  }
  s.gates.push_back(make_gate("completed_rows", static_cast<double>(t.rows.size()), ">=", expected_rows));
  return s;
}

// Dispatch ---------------------------------------------------------------------------

inline Summary summarize(Experiment e, const RunConfig& c, const Table& t) {
  switch (e) {
    case Experiment::LocalLaw: return summarize_local_law(c, t);
    case Experiment::Rigidity: return summarize_rigidity(c, t);
    case Experiment::Edge: return summarize_edge(c, t);
    case Experiment::GreenComparison: return summarize_green_comparison(c, t);
    case Experiment::Moments: return summarize_moments(c, t);
    case Experiment::All: break;
  }
  throw ConfigError("summarize: 'all' is not a single experiment");
}

/// Runs one experiment (not `all`); the config must already be validated.
inline RunReport run_experiment(Experiment e, const RunConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  r.experiment = e;
  r.config = c;
  r.config.experiment = e;
  switch (e) {
    case Experiment::LocalLaw: r.table = run_local_law(c); break;
    case Experiment::Rigidity: r.table = run_rigidity(c); break;
    case Experiment::Edge: r.table = run_edge(c); break;
    case Experiment::GreenComparison: r.table = run_green_comparison(c); break;
    case Experiment::Moments: r.table = run_moments(c); break;
    case Experiment::All: throw ConfigError("run_experiment: expand 'all' first");
  }
  r.interrupted = stop_requested();
  r.summary = summarize(e, r.config, r.table);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace rmtlab
