// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Usage: acceptance [--only 1,4,9]

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rmtlab/report_io.hpp"

using namespace rmtlab;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const Gate& gate_named(const Summary& s, std::string_view name) {
  for (const auto& g : s.gates) {
    if (g.name == name) return g;
  }
  throw std::runtime_error("missing gate " + std::string(name));
}

std::string describe(const Gate& g) {
  return fmt("%s %.4g %s %.4g", g.name.c_str(), g.measured, g.relation.c_str(), g.bound);
}

RunConfig desk_config(Experiment e, EntryDistribution dist = EntryDistribution::Gaussian) {
  RunConfig c;
  c.experiment = e;
  c.n = 200;
  c.m = 800;
  c.dist = dist;
  c.seed = 20260101;
  return c;
}

// 1. Exact resolvent identities -------------------------------------------------------
Outcome identities() {
  double worst = 0.0;
  long checked = 0;
  for (auto [n, m] : {std::pair{40L, 80L}, std::pair{80L, 40L}}) {
    const MPLaw law = MPLaw::for_dims(m, n);
    const EnsembleSpec spec{m, n, EntryDistribution::Gaussian, 101};
    const std::vector<cplx> zs{edge_parameter(law, n, 0.05), cplx(0.5 * (law.lambda_minus() + law.lambda_plus()), 0.05),
                               cplx(0.0, 1.0)};
    for (std::uint64_t t = 0; t < 100; ++t) {
      const auto x = standardize_columns(sample_raw(spec.for_trial(t, 1)));
      for (cplx z : zs) {
        worst = std::max(worst, identity_suite(x, z, law).max_exact());
        ++checked;
      }
    }
  }
  return {worst <= 1e-8, fmt("max relative residual %.3g <= 1e-8 over %ld (instance, z) pairs", worst, checked)};
}

// 2. MP self-consistency and total mass ----------------------------------------------
Outcome mp_law() {
  double worst_sc = 0.0, worst_mass = 0.0;
  boost::math::quadrature::tanh_sinh<double> ts;
  for (double d : {0.25, 0.5, 2.0, 4.0}) {
    const MPLaw law(d);
    for (int i = 0; i < 100; ++i) {
      const double e = -1.0 + (law.lambda_plus() + 2.0) * i / 99.0;
      for (int j = 0; j < 100; ++j) {
        const double eta = std::pow(10.0, -3.0 + 4.0 * j / 99.0);
        worst_sc = std::max(worst_sc, law.self_consistency_residual({e, eta}));
      }
    }
    const double mass = ts.integrate([&](double x) { return law.density(x); }, law.lambda_minus(), law.lambda_plus());
    worst_mass = std::max(worst_mass, std::abs(mass - std::min(1.0, 1.0 / d)));
  }
  return {worst_sc <= 1e-12 && worst_mass <= 1e-10,
          fmt("self-consistency %.3g <= 1e-12 on 4x10^4 points, |mass - min(1,1/d)| %.3g <= 1e-10", worst_sc, worst_mass)};
}

// 3. Classical locations --------------------------------------------------------------
Outcome classical() {
  const long n = 200;
  boost::math::quadrature::tanh_sinh<double> ts;
  double worst_edge = 0.0, worst_int = 0.0;
  for (double d : {0.25, 0.5, 2.0, 4.0}) {
    const MPLaw law(d);
    const auto g = classical_locations(law, n);
    if (d < 1.0) worst_edge = std::max(worst_edge, std::abs(g.values.back() - law.lambda_minus()));
    for (long j = 1; j <= g.resolved(); ++j) {
      const double gj = g.values[static_cast<std::size_t>(j - 1)];
      const double upper = gj >= law.lambda_plus() ? 0.0 : ts.integrate([&](double x) { return law.density(x); }, gj, law.lambda_plus());
      worst_int = std::max(worst_int, std::abs(upper - static_cast<double>(j) / n));
    }
  }
  return {worst_edge <= 1e-8 && worst_int <= 1e-8,
          fmt("|gamma_N - lambda_-| %.3g <= 1e-8, max |integral - j/N| %.3g <= 1e-8 (N=200, quadrature oracle)", worst_edge, worst_int)};
}

// 4-5. Rigidity and local law ----------------------------------------------------------
Outcome rigidity() {
  auto c = desk_config(Experiment::Rigidity);
  c.trials = 100;
  const auto s = run_experiment(Experiment::Rigidity, c).summary;
  const auto& g = gate_named(s, "rigidity_frequency");
  return {g.passed, describe(g) + fmt(" (envelope (log N)^3 = %.4g)", polylog_envelope(200))};
}

Outcome local_law() {
  auto c = desk_config(Experiment::LocalLaw);
  c.trials = 100;
  const auto s = run_experiment(Experiment::LocalLaw, c).summary;
  const auto& g = gate_named(s, "local_law_frequency");
  return {g.passed, describe(g) + " (eta >= N^-0.9)"};
}

// 6-7. Edge universality and the TW1 limit ---------------------------------------------
Summary& edge_summary(EntryDistribution dist) {
  static std::map<EntryDistribution, Summary> cache;
  if (!cache.count(dist)) {
    auto c = desk_config(Experiment::Edge, dist);
    c.trials = 2000;
    cache[dist] = run_experiment(Experiment::Edge, c).summary;
  }
  return cache[dist];
}

Outcome edge_universality() {
  bool ok = true;
  std::string detail;
  for (auto dist : {EntryDistribution::Gaussian, EntryDistribution::CenteredExponential}) {
    const auto& s = edge_summary(dist);
    detail += std::string(detail.empty() ? "" : "; ") + std::string(to_string(dist)) + ":";
    for (const char* name : {"ks_largest_pvalue", "ks_smallest_pvalue", "sandwich_largest_excess", "sandwich_smallest_excess"}) {
      const auto& g = gate_named(s, name);
      ok = ok && g.passed;
      detail += " " + describe(g);
    }
  }
  return {ok, detail};
}

Outcome tw_limit() {
  const auto& s = edge_summary(EntryDistribution::Gaussian);
  const auto& corr = gate_named(s, "tw1_ks_corr");
  const auto& cov = gate_named(s, "tw1_ks_cov");
  // Median over replicates of the one-sample KS distance, for each ensemble.
  const std::function<double(double)> tw = [](double x) { return tw1_cdf(x); };
  bool decreasing = true;
  std::string trend;
  for (auto kind : {EnsembleKind::Covariance, EnsembleKind::Correlation}) {
    std::vector<double> medians;
    for (long n : {100L, 200L, 400L}) {
      const EnsembleSpec spec{4 * n, n, EntryDistribution::Gaussian, 20260107};
      std::vector<double> ks;
      for (long r = 0; r < 5; ++r) {
        const auto [hi, lo] = collect_edge_samples(spec, kind, 1, 400, r * 400);
        ks.push_back(ks_statistic(hi.column(0), tw));
      }
      medians.push_back(median(ks));
    }
    const bool dec = medians[0] > medians[1] && medians[1] > medians[2];
    decreasing = decreasing && dec;
    trend += fmt(", median KS %s (5x400) %.4f, %.4f, %.4f %s", std::string(to_string(kind)).c_str(), medians[0],
                 medians[1], medians[2], dec ? "decreasing" : "NOT decreasing");
  }
  return {corr.passed && cov.passed && decreasing, describe(cov) + ", " + describe(corr) + trend};
}

// 8. Expansion scaling -------------------------------------------------------------------
// The gate is on log E|.|. The means are dominated by rare near-resonances of
// the removed-column resolvent, so median slopes are printed alongside.
Outcome expansion_scaling() {
  const std::vector<long> grid{100, 200, 400, 800, 1600};
  std::vector<double> ns;
  std::vector<std::vector<double>> means(4), medians(4);
  for (long n : grid) {
    const long m = n / 2;  // d = 2
    const MPLaw law = MPLaw::for_dims(m, n);
    const cplx z = edge_parameter(law, n, 0.05);
    const long trials = n <= 400 ? 400 : n == 800 ? 200 : 100;
    const EnsembleSpec spec{m, n, EntryDistribution::Gaussian, 20260108};
    std::vector<std::vector<double>> vals(4, std::vector<double>(static_cast<std::size_t>(trials)));
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
      const auto e = expansion_quantities(standardize_columns(sample_raw(spec.for_trial(t, 8))), z, law);
      vals[0][t] = std::abs(e.B);
      for (std::size_t k = 0; k < 3; ++k) vals[k + 1][t] = std::abs(e.y[k]);
    });
    ns.push_back(static_cast<double>(n));
    for (std::size_t q = 0; q < 4; ++q) {
      means[q].push_back(estimate_of(vals[q]).mean);
      medians[q].push_back(median(vals[q]));
    }
  }
  const double targets[4] = {-1.0 / 3.0, -1.0 / 3.0, -2.0 / 3.0, -1.0};
  const char* names[4] = {"B", "y1", "y2", "y3"};
  bool ok = true;
  std::string detail, robust;
  for (std::size_t q = 0; q < 4; ++q) {
    const double slope = log_log_fit(ns, means[q]).slope;
    ok = ok && std::abs(slope - targets[q]) <= 0.1;
    detail += fmt("%s%s %.3f (target %.3f)", q ? ", " : "", names[q], slope, targets[q]);
    robust += fmt("%s%s %.3f", q ? ", " : "", names[q], log_log_fit(ns, medians[q]).slope);
  }
  return {ok, "slopes of log E|.|: " + detail + " +- 0.1; median slopes (diagnostic): " + robust +
                  "; N in {100..1600}, M = N/2"};
}

// 9-10. Moment calculus and the sum bound --------------------------------------------------
Summary& moment_summary() {
  static Summary s = [] {
    auto c = desk_config(Experiment::Moments);
    c.trials = 20000;
    return run_experiment(Experiment::Moments, c).summary;
  }();
  return s;
}

Outcome moment_calculus() {
  const auto& s = moment_summary();
  bool ok = true;
  std::string detail;
  for (const char* name : {"quartic_m10_vs_exact", "quartic_m20_vs_exact", "quartic_m40_vs_exact",
                           "quartic_exact_slope_error", "third_moment_slope_error"}) {
    const auto& g = gate_named(s, name);
    ok = ok && g.passed;
    detail += std::string(detail.empty() ? "" : ", ") + describe(g);
  }
  return {ok, detail};
}

Outcome sum_bound() {
  const auto& g = gate_named(moment_summary(), "sum_bound_max_ratio");
  return {g.passed, describe(g) + " (M=12, N=6, 10 instances, all partitions with a+b <= 2)"};
}

// 11. Telescoping -------------------------------------------------------------------------
Outcome telescoping() {
  const TestFunctional f{FunctionalKind::Tanh};
  bool ok = true;
  std::string detail;
  for (long n : {50L, 100L, 200L}) {
    const long m = 2 * n;
    const EnsembleSpec spec{m, n, EntryDistribution::CenteredExponential, 20260111};
    const auto r = telescoping_difference(spec, 1, f, edge_parameter(MPLaw::for_dims(m, n), n, 0.05), 2000);
    const double tol = 5 * r.estimate.se + 10 * std::pow(static_cast<double>(n), -7.0 / 6.0);
    ok = ok && std::abs(r.estimate.mean) <= tol;
    detail += fmt("N=%ld |%.3g| <= %.3g; ", n, r.estimate.mean, tol);
  }
  // Sum over all columns against the direct endpoint difference, N = 50.
  const long n = 50, m = 100;
  const EnsembleSpec spec{m, n, EntryDistribution::CenteredExponential, 20260112};
  const cplx z = edge_parameter(MPLaw::for_dims(m, n), n, 0.05);
  double sum = 0.0, var = 0.0;
  for (long g = 1; g <= n; ++g) {
    const auto r = telescoping_difference(spec, g, f, z, 400);
    sum += r.estimate.mean;
    var += r.estimate.se * r.estimate.se;
  }
  const auto e = endpoint_difference(spec, f, z, 4000);
  const double combined = std::sqrt(var + e.estimate.se * e.estimate.se);
  const bool sum_ok = std::abs(sum - e.estimate.mean) <= 5 * combined;
  return {ok && sum_ok, detail + fmt("gamma-sum %.4g vs endpoint %.4g, |diff| %.3g <= 5 x %.3g", sum, e.estimate.mean,
                                     std::abs(sum - e.estimate.mean), combined)};
}

// 12. Determinism -------------------------------------------------------------------------
Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "rmtlab_acceptance_determinism";
  bool ok = true;
  std::string detail;
  for (auto e : expand(Experiment::All)) {
    RunConfig c = desk_config(e);
    c.n = 60;
    c.m = 120;
    c.trials = e == Experiment::Moments ? 500 : 40;
    std::string bytes[2];
    for (int rep = 0; rep < 2; ++rep) {
      c.workers = rep == 0 ? 1 : 3;
      const fs::path dir = base / std::to_string(rep);
      fs::remove_all(dir);
      write_report(dir, run_experiment(e, c));
      std::ifstream in(dir / csv_name(e), std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      bytes[rep] = ss.str();
    }
    const bool same = bytes[0] == bytes[1] && !bytes[0].empty();
    ok = ok && same;
    detail += fmt("%s%s %s (%zu bytes)", detail.empty() ? "" : ", ", std::string(to_string(e)).c_str(),
                  same ? "identical" : "DIFFERENT", bytes[0].size());
  }
  fs::remove_all(base);
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');) only.insert(std::stoi(tok));
    }
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exact resolvent identities", identities},
      {"MP self-consistency and mass", mp_law},
      {"classical locations", classical},
      {"rigidity frequency", rigidity},
      {"local law frequency", local_law},
      {"edge universality (corr vs cov)", edge_universality},
      {"TW1 limit", tw_limit},
      {"expansion scaling", expansion_scaling},
      {"moment calculus", moment_calculus},
      {"partition sum bound", sum_bound},
      {"telescoping", telescoping},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s: %s [%.1fs]\n", o.passed ? "PASS" : "FAIL", id, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.passed;
  }
  return failures == 0 ? 0 : 1;
}
