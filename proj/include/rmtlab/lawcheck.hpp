#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "rmtlab/errors.hpp"
#include "rmtlab/mplaw.hpp"
#include "rmtlab/spectra.hpp"

namespace rmtlab {

/// Fraction-of-trials gate: an event required to hold with high probability is
/// accepted when it holds in at least `required` of the trials.
struct FrequencyGate {
  long held = 0;
  long trials = 0;
  double required = 0.99;

  void record(bool ok) {
    ++trials;
    held += ok;
  }
  double frequency() const { return trials > 0 ? static_cast<double>(held) / trials : 0.0; }
  bool passed() const { return trials > 0 && static_cast<double>(held) >= required * trials - 1e-9; }
};

struct LocalLawGrid {
  std::vector<cplx> z;
  std::vector<double> deviation;  // N eta |m(z) - m_W(z)|

  double supremum() const {
    return deviation.empty() ? 0.0 : *std::max_element(deviation.begin(), deviation.end());
  }
};

/// N eta |m(z) - m_W(z)| at every point of the domain grid, for any Stieltjes transform m.
template <class StieltjesFn>
LocalLawGrid local_law_deviation(StieltjesFn&& m, long n, const MPLaw& law, const SpectralDomain& domain) {
  domain.validate(law);
  LocalLawGrid out;
  out.z = domain.grid();
  if (out.z.empty()) throw ConfigError("local_law_deviation: empty grid");
  out.deviation.reserve(out.z.size());
  for (cplx z : out.z) {
    out.deviation.push_back(static_cast<double>(n) * z.imag() * std::abs(m(z) - law.stieltjes(z)));
  }
  return out;
}

inline LocalLawGrid local_law_deviation(const Spectrum& s, const MPLaw& law, const SpectralDomain& domain) {
  return local_law_deviation([&](cplx z) { return empirical_stieltjes(s, z); }, s.cols, law, domain);
}

/// lambda_- - envelope N^{-2/3} <= smallest nontrivial eigenvalue and
/// largest eigenvalue <= lambda_+ + envelope N^{-2/3}.
inline bool extreme_bound_check(const Spectrum& s, const MPLaw& law, double envelope) {
  if (!(envelope > 0.0)) throw ConfigError("extreme_bound_check: envelope must be positive");
  const double slack = envelope * std::pow(static_cast<double>(s.cols), -2.0 / 3.0);
  return law.lambda_minus() - slack <= s.smallest_nontrivial() && s.largest() <= law.lambda_plus() + slack;
}

struct RigidityProfile {
  std::vector<double> deviation;   // |lambda_j - gamma_j|
  std::vector<double> normalized;  // |lambda_j - gamma_j| N^{2/3} jhat^{1/3}

  double max_normalized() const {
    return normalized.empty() ? 0.0 : *std::max_element(normalized.begin(), normalized.end());
  }
};

/// Distance of j from the nearer end of 1..min(M, N).
inline long edge_distance(long j, long rows, long cols) {
  return std::min(std::min(rows, cols) + 1 - j, j);
}

inline RigidityProfile rigidity_profile(const Spectrum& s, const MPLaw& law) {
  const long k = s.nontrivial();
  const auto gamma = classical_locations(law, s.cols);
  if (gamma.resolved() < k) throw ComputationError("rigidity_profile: classical locations unresolved below min(M, N)");
  RigidityProfile p;
  p.deviation.resize(static_cast<std::size_t>(k));
  p.normalized.resize(static_cast<std::size_t>(k));
  const double n23 = std::pow(static_cast<double>(s.cols), 2.0 / 3.0);
  for (long j = 1; j <= k; ++j) {
    const auto i = static_cast<std::size_t>(j - 1);
    p.deviation[i] = std::abs(s.values[i] - gamma.values[i]);
    p.normalized[i] = p.deviation[i] * n23 * std::cbrt(static_cast<double>(edge_distance(j, s.rows, s.cols)));
  }
  return p;
}

/// sup_x |F_N(x) - F_MP(x)| for the empirical CDF of the N eigenvalues of X^T X.
inline double esd_kolmogorov_distance(const Spectrum& s, const MPLaw& law) {
  std::vector<double> v(s.values.begin(), s.values.begin() + s.cols);
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size();) {
    // Tied values form one jump of the empirical CDF.
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    const double f = law.cdf(v[i]);
    // The MP CDF jumps only at the atom at zero.
    const double f_left = v[i] == 0.0 ? 0.0 : f;
    worst = std::max({worst, std::abs(static_cast<double>(j) / n - f), std::abs(static_cast<double>(i) / n - f_left)});
    i = j;
  }
  return worst;
}

/// max over sampled (i, j) of |G_ij - delta_ij m_W| / (sqrt(Im m_W / (N eta)) + 1/(N eta)).
inline double entrywise_ratio(const DataMatrix& x, const MPLaw& law, cplx z,
                              const std::vector<std::pair<long, long>>& pairs) {
  const auto g = resolvent_entries(x, z, pairs);
  const cplx mw = law.stieltjes(z);
  const double neta = static_cast<double>(x.cols()) * z.imag();
  const double scale = std::sqrt(mw.imag() / neta) + 1.0 / neta;
  double worst = 0.0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const cplx target = pairs[k].first == pairs[k].second ? mw : cplx(0.0);
    worst = std::max(worst, std::abs(g[k] - target) / scale);
  }
  return worst;
}

}  // namespace rmtlab
