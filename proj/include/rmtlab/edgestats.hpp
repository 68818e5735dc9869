#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rmtlab/ensemble.hpp"
#include "rmtlab/errors.hpp"
#include "rmtlab/parallel.hpp"
#include "rmtlab/spectra.hpp"
#include "rmtlab/tw1_table.hpp"

namespace rmtlab {

// Tracy-Widom (beta = 1) reference ------------------------------------------------

/// Tabulated TW1 CDF with monotone piecewise-cubic (Fritsch-Carlson) interpolation.
/// Outside the tabulated range the CDF is clamped to 0 and 1.
class Tw1Reference {
 public:
  Tw1Reference(std::vector<double> s, std::vector<double> f, int version = 0)
      : s_(std::move(s)), f_(std::move(f)), version_(version) {
    if (s_.size() < 2 || s_.size() != f_.size()) throw ConfigError("Tw1Reference: need >= 2 paired points");
    for (std::size_t i = 0; i < s_.size(); ++i) {
      if (!(f_[i] >= 0.0 && f_[i] <= 1.0)) throw ConfigError("Tw1Reference: CDF value outside [0, 1]");
      if (i > 0 && !(s_[i] > s_[i - 1])) throw ConfigError("Tw1Reference: abscissae not strictly increasing");
      if (i > 0 && f_[i] < f_[i - 1]) throw ConfigError("Tw1Reference: CDF values decrease");
    }
    build_slopes();
  }

  /// The table compiled into the library.
  static const Tw1Reference& embedded() {
    static const Tw1Reference ref = [] {
      std::vector<double> s(detail::kTw1Cdf.size()), f(detail::kTw1Cdf.begin(), detail::kTw1Cdf.end());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = detail::kTw1Lo + detail::kTw1Step * static_cast<double>(i);
      return Tw1Reference(std::move(s), std::move(f), detail::kTw1TableVersion);
    }();
    return ref;
  }

  /// Two-column text table; '#' starts a comment, "# version: <n>" sets the version.
  static Tw1Reference from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open TW1 table '" + path + "'");
    std::vector<double> s, f;
    int version = 0;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') {
        const auto pos = line.find("version:");
        if (pos != std::string::npos) version = std::stoi(line.substr(pos + 8));
        continue;
      }
      std::istringstream ls(line);
      double a = 0, b = 0;
      std::string extra;
      if (!(ls >> a >> b) || (ls >> extra)) {
        throw ConfigError(path + ":" + std::to_string(lineno) + ": expected two numeric columns");
      }
      s.push_back(a);
      f.push_back(b);
    }
    return Tw1Reference(std::move(s), std::move(f), version);
  }

  double lo() const { return s_.front(); }
  double hi() const { return s_.back(); }
  int version() const { return version_; }
  std::size_t size() const { return s_.size(); }

  double cdf(double x) const {
    if (std::isnan(x)) return x;
    if (x <= s_.front()) return x < s_.front() ? 0.0 : f_.front();
    if (x >= s_.back()) return x > s_.back() ? 1.0 : f_.back();
    const auto it = std::upper_bound(s_.begin(), s_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - s_.begin()) - 1;
    const double h = s_[i + 1] - s_[i];
    const double t = (x - s_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double v = (2 * t3 - 3 * t2 + 1) * f_[i] + (t3 - 2 * t2 + t) * h * m_[i] + (-2 * t3 + 3 * t2) * f_[i + 1] +
                     (t3 - t2) * h * m_[i + 1];
    return std::clamp(v, f_[i], f_[i + 1]);
  }

  /// Mean of the tabulated law (midpoint rule on the CDF increments).
  double mean() const {
    double acc = s_.front() * f_.front();
    for (std::size_t i = 0; i + 1 < s_.size(); ++i) acc += 0.5 * (s_[i] + s_[i + 1]) * (f_[i + 1] - f_[i]);
    return acc + s_.back() * (1.0 - f_.back());
  }

 private:
  void build_slopes() {
    const std::size_t n = s_.size();
    std::vector<double> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (f_[i + 1] - f_[i]) / (s_[i + 1] - s_[i]);
    m_.assign(n, 0.0);
    m_.front() = delta.front();
    m_.back() = delta.back();
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (delta[i - 1] * delta[i] <= 0.0) continue;
      // Weighted harmonic mean keeps the interpolant monotone.
      const double h0 = s_[i] - s_[i - 1], h1 = s_[i + 1] - s_[i];
      const double w1 = 2 * h1 + h0, w2 = h1 + 2 * h0;
      m_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }

  std::vector<double> s_;
  std::vector<double> f_;
  std::vector<double> m_;
  int version_ = 0;
};

inline double tw1_cdf(double s) { return Tw1Reference::embedded().cdf(s); }

// Edge rescaling -------------------------------------------------------------------

enum class EdgeSide { Largest, Smallest };

inline std::string_view to_string(EdgeSide s) { return s == EdgeSide::Largest ? "largest" : "smallest"; }

/// Affine map taking M lambda near the chosen edge to the TW1 scale. The
/// smallest edge is centered at (sqrt N - sqrt M)^2 and negated so that the
/// limit is again TW1 rather than its mirror image.
struct EdgeScaling {
  double center = 0.0;  // in units of M lambda
  double scale = 0.0;
  double sign = 1.0;

  static EdgeScaling of(long rows, long cols, EdgeSide side) {
    const double sm = std::sqrt(static_cast<double>(rows)), sn = std::sqrt(static_cast<double>(cols));
    EdgeScaling e;
    if (side == EdgeSide::Largest) {
      e.center = (sn + sm) * (sn + sm);
      e.scale = (sn + sm) * std::cbrt(1.0 / sn + 1.0 / sm);
    } else {
      e.center = (sn - sm) * (sn - sm);
      e.scale = std::abs(sm - sn) * std::cbrt(std::abs(1.0 / sn - 1.0 / sm));
      e.sign = -1.0;
    }
    return e;
  }

  double operator()(double lambda, long rows) const {
    return sign * (static_cast<double>(rows) * lambda - center) / scale;
  }
};

/// Rescaled k largest (lambda_1..lambda_k) or k smallest nontrivial
/// (lambda_min(M,N), lambda_min(M,N)-1, ...) eigenvalues. Both sides come out
/// in descending order.
inline std::vector<double> rescale_edge(const Spectrum& s, long k, EdgeSide side) {
  const long avail = s.nontrivial();
  if (k < 1 || k > avail) {
    throw ConfigError("rescale_edge: k=" + std::to_string(k) + " outside [1, " + std::to_string(avail) + "]");
  }
  const auto map = EdgeScaling::of(s.rows, s.cols, side);
  std::vector<double> out(static_cast<std::size_t>(k));
  for (long j = 0; j < k; ++j) {
    const long idx = side == EdgeSide::Largest ? j : avail - 1 - j;
    out[static_cast<std::size_t>(j)] = map(s.values[static_cast<std::size_t>(idx)], s.rows);
  }
  return out;
}

// Kolmogorov-Smirnov --------------------------------------------------------------

/// sup_x |F_n(x) - F(x)| for a continuous reference CDF.
inline double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw ConfigError("ks_statistic: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

/// sup_x |F_a(x) - F_b(x)| between two empirical CDFs.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw ConfigError("ks_statistic: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

/// Kolmogorov survival function Q(t) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 t^2).
inline double kolmogorov_survival(double t) {
  if (t <= 0.0) return 1.0;
  if (t < 0.2) return 1.0;  // series converges slowly; Q is 1 to double precision here
  double acc = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * t * t);
    acc += (k % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * acc, 0.0, 1.0);
}

/// Asymptotic p-value for a KS statistic d at effective sample size ne
/// (n for one sample, n m/(n+m) for two), with the Stephens small-sample correction.
inline double ks_pvalue(double d, double ne) {
  const double r = std::sqrt(ne);
  return kolmogorov_survival((r + 0.12 + 0.11 / r) * d);
}

// Edge samples --------------------------------------------------------------------

enum class EnsembleKind { Correlation, Covariance };

inline std::string_view to_string(EnsembleKind e) {
  return e == EnsembleKind::Correlation ? "correlation" : "covariance";
}

/// Rescaled extreme eigenvalues, one row of k values per trial.
struct EdgeSample {
  EnsembleKind ensemble = EnsembleKind::Covariance;
  EdgeSide side = EdgeSide::Largest;
  long k = 1;
  std::vector<double> values;          // trials x k, row major
  std::vector<std::uint64_t> seeds;    // per-trial ensemble seed

  std::size_t trials() const { return seeds.size(); }
  double at(std::size_t trial, long j) const { return values[trial * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)]; }
  std::vector<double> column(long j) const {
    std::vector<double> c(trials());
    for (std::size_t t = 0; t < trials(); ++t) c[t] = at(t, j);
    return c;
  }
};

/// Stream tags keep correlation and covariance draws independent of each other,
/// which the two-sample tests require.
inline constexpr std::uint64_t kCorrelationStream = 0xC0;
inline constexpr std::uint64_t kCovarianceStream = 0xCF;

inline DataMatrix draw_ensemble(const EnsembleSpec& trial_spec, EnsembleKind kind) {
  auto raw = sample_raw(trial_spec);
  return kind == EnsembleKind::Correlation ? standardize_columns(raw) : raw;
}

/// Samples `trials` matrices and records both edges' k rescaled values.
/// Returns {largest, smallest}. `first_trial` offsets the trial counter so
/// batches can be drawn without overlap.
inline std::pair<EdgeSample, EdgeSample> collect_edge_samples(const EnsembleSpec& spec, EnsembleKind kind, long k,
                                                              long trials, long first_trial = 0,
                                                              unsigned workers = default_workers()) {
  spec.validate();
  if (trials < 1) throw ConfigError("collect_edge_samples: trials must be >= 1");
  if (k < 1 || k > std::min(spec.rows, spec.cols)) throw ConfigError("collect_edge_samples: k out of range");
  const std::uint64_t stream = kind == EnsembleKind::Correlation ? kCorrelationStream : kCovarianceStream;
  EdgeSample hi, lo;
  hi.ensemble = lo.ensemble = kind;
  hi.side = EdgeSide::Largest;
  lo.side = EdgeSide::Smallest;
  hi.k = lo.k = k;
  const auto n = static_cast<std::size_t>(trials);
  hi.values.resize(n * static_cast<std::size_t>(k));
  lo.values.resize(n * static_cast<std::size_t>(k));
  hi.seeds.resize(n);
  const std::size_t done = parallel_for(
      n,
      [&](std::size_t t) {
        const auto ts = spec.for_trial(static_cast<std::uint64_t>(first_trial) + t, stream);
        const auto s = eigenvalues(draw_ensemble(ts, kind), EigenMethod::Gram);
        const auto a = rescale_edge(s, k, EdgeSide::Largest);
        const auto b = rescale_edge(s, k, EdgeSide::Smallest);
        std::copy(a.begin(), a.end(), hi.values.begin() + static_cast<std::ptrdiff_t>(t * k));
        std::copy(b.begin(), b.end(), lo.values.begin() + static_cast<std::ptrdiff_t>(t * k));
        hi.seeds[t] = ts.seed;
      },
      workers);
  hi.seeds.resize(done);
  hi.values.resize(done * static_cast<std::size_t>(k));
  lo.values.resize(done * static_cast<std::size_t>(k));
  lo.seeds = hi.seeds;
  return {std::move(hi), std::move(lo)};
}

// Sandwich comparison ----------------------------------------------------------------

struct SandwichReport {
  std::size_t thresholds = 0;
  double worst_violation = 0.0;  // max over thresholds of the sandwich violation
  double worst_excess = 0.0;     // max over thresholds of violation - (2 SE + extra)
  double se_at_worst = 0.0;
  double tolerance_extra = 0.0;
  std::vector<double> worst_threshold;
  bool passed = true;
};

namespace detail {

inline double joint_fraction(const EdgeSample& s, const std::vector<double>& thr, double shift) {
  std::size_t hit = 0;
  for (std::size_t t = 0; t < s.trials(); ++t) {
    bool all = true;
    for (long j = 0; j < s.k && all; ++j) all = s.at(t, j) <= thr[static_cast<std::size_t>(j)] + shift;
    hit += all;
  }
  return static_cast<double>(hit) / static_cast<double>(s.trials());
}

inline double pooled_quantile(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const double pos = p * static_cast<double>(v.size() - 1);
  const auto i = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(i);
  return i + 1 < v.size() ? v[i] * (1 - frac) + v[i + 1] * frac : v[i];
}

}  // namespace detail

/// Checks P_cov(all <= s - shift) <= P_corr(all <= s) <= P_cov(all <= s + shift)
/// up to 2 Monte Carlo standard errors plus `extra`, on a threshold grid built
/// from pooled quantiles (19 levels for k = 1; a 9-level grid per coordinate for k > 1).
inline SandwichReport universality_gap(const EdgeSample& corr, const EdgeSample& cov, double shift, double extra) {
  if (corr.k != cov.k || corr.side != cov.side) throw ConfigError("universality_gap: mismatched k or side");
  if (corr.trials() == 0 || cov.trials() == 0) throw ConfigError("universality_gap: empty sample");
  if (shift < 0.0) throw ConfigError("universality_gap: shift must be >= 0");
  const long k = corr.k;
  std::vector<double> levels;
  if (k == 1) {
    for (int i = 1; i <= 19; ++i) levels.push_back(0.05 * i);
  } else {
    for (int i = 1; i <= 9; ++i) levels.push_back(0.1 * i);
  }
  std::vector<std::vector<double>> per_coord(static_cast<std::size_t>(k));
  for (long j = 0; j < k; ++j) {
    auto pooled = corr.column(j);
    const auto c = cov.column(j);
    pooled.insert(pooled.end(), c.begin(), c.end());
    for (double p : levels) per_coord[static_cast<std::size_t>(j)].push_back(detail::pooled_quantile(pooled, p));
  }

  SandwichReport rep;
  rep.tolerance_extra = extra;
  rep.worst_excess = -std::numeric_limits<double>::infinity();
  const double nc = static_cast<double>(corr.trials()), nv = static_cast<double>(cov.trials());
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  for (;;) {
    std::vector<double> thr(static_cast<std::size_t>(k));
    for (long j = 0; j < k; ++j) thr[static_cast<std::size_t>(j)] = per_coord[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]];
    const double pc = detail::joint_fraction(corr, thr, 0.0);
    const double lo = detail::joint_fraction(cov, thr, -shift);
    const double hi = detail::joint_fraction(cov, thr, shift);
    const double violation = std::max({lo - pc, pc - hi, 0.0});
    const double pv = lo - pc >= pc - hi ? lo : hi;
    const double se = std::sqrt(pc * (1 - pc) / nc + pv * (1 - pv) / nv);
    const double excess = violation - (2.0 * se + extra);
    ++rep.thresholds;
    if (rep.worst_threshold.empty() || violation > rep.worst_violation) {
      rep.worst_violation = violation;
      rep.se_at_worst = se;
      rep.worst_threshold = thr;
    }
    rep.worst_excess = std::max(rep.worst_excess, excess);
    if (excess > 0.0) rep.passed = false;
    // Advance the odometer over the per-coordinate grid.
    long j = 0;
    while (j < k && ++idx[static_cast<std::size_t>(j)] == levels.size()) idx[static_cast<std::size_t>(j++)] = 0;
    if (j == k) break;
  }
  return rep;
}

}  // namespace rmtlab
