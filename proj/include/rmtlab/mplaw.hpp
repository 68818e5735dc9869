#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "rmtlab/errors.hpp"

namespace rmtlab {

using cplx = std::complex<double>;

struct ClassicalLocations;

/// Marchenko-Pastur law for aspect ratio d = N/M (d > 0, d != 1), normalized as
/// the limiting spectral distribution of the N x N matrix X^T X whose entries
/// have variance 1/M. For d > 1 the absolutely continuous part carries mass
/// 1/d and the remaining 1 - 1/d sits at zero.
class MPLaw {
 public:
  explicit MPLaw(double d) : d_(d) {
    if (!(d > 0.0) || d == 1.0 || !std::isfinite(d)) {
      throw ConfigError("MPLaw: aspect ratio must be positive and != 1 (got " + std::to_string(d) + ")");
    }
    const double r = std::sqrt(d);
    lambda_plus_ = (1.0 + r) * (1.0 + r);
    lambda_minus_ = (1.0 - r) * (1.0 - r);
  }

  static MPLaw for_dims(long rows, long cols) {
    return MPLaw(static_cast<double>(cols) / static_cast<double>(rows));
  }

  double d() const { return d_; }
  double lambda_plus() const { return lambda_plus_; }
  double lambda_minus() const { return lambda_minus_; }

  /// Mass of the density on (0, inf): min(1, 1/d).
  double total_mass() const { return std::min(1.0, 1.0 / d_); }

  double density(double x) const {
    if (x <= 0.0) return 0.0;
    const double s = (lambda_plus_ - x) * (x - lambda_minus_);
    if (s <= 0.0) return 0.0;
    return std::sqrt(s) / (2.0 * std::numbers::pi * d_ * x);
  }

  /// Mass of the density on [lambda_-, x], in closed form.
  double lower_mass(double x) const {
    if (x <= lambda_minus_) return 0.0;
    if (x >= lambda_plus_) return total_mass();
    return mass_at_angle(angle_of(x));
  }

  /// Mass of the density on [x, lambda_+].
  double upper_mass(double x) const { return total_mass() - lower_mass(x); }

  /// CDF of the full limiting law, including the atom at 0 when d > 1.
  double cdf(double x) const {
    if (x < 0.0) return 0.0;
    return std::max(0.0, 1.0 - 1.0 / d_) + lower_mass(x);
  }

  /// Stieltjes transform of the full limiting law (atom included), Im z > 0.
  cplx stieltjes(cplx z) const {
    if (!(z.imag() > 0.0)) throw DomainError("stieltjes: requires Im z > 0");
    // Product of principal roots: cut on [lambda_-, lambda_+] and ~ z at infinity,
    // which selects the branch with Im m > 0 in the upper half plane.
    const cplx w = std::sqrt(z - lambda_minus_) * std::sqrt(z - lambda_plus_);
    const cplx m = (1.0 - d_ - z + w) / (2.0 * d_ * z);
    if (m.imag() < -1e-12 * std::abs(m) || !std::isfinite(m.real()) || !std::isfinite(m.imag())) {
      throw ComputationError("stieltjes: branch selection produced Im m < 0");
    }
    return m;
  }

  /// |d z m^2 + (z - 1 + d) m + 1| at m = stieltjes(z).
  double self_consistency_residual(cplx z) const {
    const cplx m = stieltjes(z);
    return std::abs(d_ * z * m * m + (z - 1.0 + d_) * m + 1.0);
  }

 private:
  // x = c - r cos t with c = 1 + d, r = 2 sqrt(d), t in [0, pi].
  double angle_of(double x) const {
    const double c = 1.0 + d_, r = 2.0 * std::sqrt(d_);
    return std::acos(std::clamp((c - x) / r, -1.0, 1.0));
  }

  // (2/pi) * [ sin t / r + c t / r^2 - |1-d|/(2d) * atan(k tan(t/2)) ],  k = (1+sqrt d)/|1-sqrt d|
  double mass_at_angle(double t) const {
    const double c = 1.0 + d_, r = 2.0 * std::sqrt(d_);
    const double k = (1.0 + std::sqrt(d_)) / std::abs(1.0 - std::sqrt(d_));
    const double arc = std::atan2(k * std::sin(0.5 * t), std::cos(0.5 * t));
    const double i = std::sin(t) / r + c * t / (r * r) - std::abs(1.0 - d_) / (2.0 * d_) * arc;
    return 2.0 / std::numbers::pi * i;
  }

  // d(lower_mass)/dt
  double mass_rate(double t) const {
    const double c = 1.0 + d_, r = 2.0 * std::sqrt(d_);
    const double s = std::sin(t);
    return 2.0 / std::numbers::pi * s * s / (c - r * std::cos(t));
  }

  friend ClassicalLocations classical_locations(const MPLaw&, long);

  double d_;
  double lambda_plus_;
  double lambda_minus_;
};

/// Quantile points gamma_j with upper_mass(gamma_j) = j/N, j = 1..N (stored 0-based).
/// Indices with j/N beyond the total mass (only possible for d > 1) are pinned
/// to lambda_- and marked in `pinned`.
struct ClassicalLocations {
  std::vector<double> values;
  std::vector<bool> pinned;

  /// Number of leading indices that are genuine solutions.
  long resolved() const {
    return static_cast<long>(std::find(pinned.begin(), pinned.end(), true) - pinned.begin());
  }
};

inline ClassicalLocations classical_locations(const MPLaw& law, long n) {
  if (n < 1) throw ConfigError("classical_locations: N must be >= 1");
  ClassicalLocations out;
  out.values.resize(static_cast<std::size_t>(n));
  out.pinned.assign(static_cast<std::size_t>(n), false);
  const double total = law.total_mass();
  constexpr double kMassTol = 1e-13;

  double t_hi = std::numbers::pi;  // gamma_j decreases in j, so t_j does too
  for (long j = 1; j <= n; ++j) {
    const double target = static_cast<double>(j) / static_cast<double>(n);
    auto& slot = out.values[static_cast<std::size_t>(j - 1)];
    if (target >= total - kMassTol) {
      slot = law.lambda_minus();
      out.pinned[static_cast<std::size_t>(j - 1)] = target > total + kMassTol;
      continue;
    }
    // Solve lower_mass(t) = total - target on [0, t_hi]: bracketed Newton.
    const double goal = total - target;
    double lo = 0.0, hi = t_hi, t = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      const double f = law.mass_at_angle(t) - goal;
      if (std::abs(f) < 1e-15) break;
      if (f > 0) hi = t; else lo = t;
      const double rate = law.mass_rate(t);
      double next = rate > 0 ? t - f / rate : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - t) < 1e-16) {
        t = next;
        break;
      }
      t = next;
    }
    t_hi = t;
    const double c = 1.0 + law.d(), r = 2.0 * std::sqrt(law.d());
    slot = c - r * std::cos(t);
  }
  return out;
}

/// (log N)^{log log N}; requires log log N > 0, i.e. N > e.
inline double varphi(double n) {
  if (!(n > std::numbers::e)) throw DomainError("varphi: needs N > e so that log log N > 0");
  const double l = std::log(n);
  return std::pow(l, std::log(l));
}

/// Poly-log envelope (log N)^exponent used in place of the unspecified varphi^{C}.
inline double polylog_envelope(double n, double exponent = 3.0) {
  return std::pow(std::log(n), exponent);
}

/// Rectangular (E, eta) grid inside the local-law domain
/// 1_{d>1} lambda_-/5 <= E <= 5 lambda_+,  eta_min <= eta <= 10 (1 + d).
struct SpectralDomain {
  double e_min = 0.0;
  double e_max = 0.0;
  double eta_min = 0.0;
  double eta_max = 0.0;
  int e_points = 48;
  int eta_points = 12;

  /// E linear over the full admissible range; eta logarithmic from N^{eta_exponent} to 1.
  static SpectralDomain standard(const MPLaw& law, long n, double eta_exponent = -0.9) {
    SpectralDomain dom;
    dom.e_min = law.d() > 1.0 ? law.lambda_minus() / 5.0 : 0.0;
    dom.e_max = 5.0 * law.lambda_plus();
    dom.eta_min = std::pow(static_cast<double>(n), eta_exponent);
    dom.eta_max = 1.0;
    return dom;
  }

  void validate(const MPLaw& law) const {
    if (e_points < 1 || eta_points < 1) throw ConfigError("SpectralDomain: empty grid");
    if (!(eta_min > 0.0) || eta_max < eta_min) throw ConfigError("SpectralDomain: bad eta range");
    if (eta_max > 10.0 * (1.0 + law.d())) throw ConfigError("SpectralDomain: eta_max above 10(1+d)");
    const double e_floor = law.d() > 1.0 ? law.lambda_minus() / 5.0 : 0.0;
    if (e_min < e_floor - 1e-15 || e_max > 5.0 * law.lambda_plus() + 1e-15 || e_max < e_min) {
      throw ConfigError("SpectralDomain: energy range outside [1_{d>1} lambda_-/5, 5 lambda_+]");
    }
  }

  std::vector<cplx> grid() const {
    std::vector<cplx> zs;
    zs.reserve(static_cast<std::size_t>(e_points * eta_points));
    for (int a = 0; a < eta_points; ++a) {
      const double frac = eta_points == 1 ? 0.0 : static_cast<double>(a) / (eta_points - 1);
      const double eta = eta_min * std::pow(eta_max / eta_min, frac);
      for (int b = 0; b < e_points; ++b) {
        const double ef = e_points == 1 ? 0.0 : static_cast<double>(b) / (e_points - 1);
        zs.emplace_back(e_min + (e_max - e_min) * ef, eta);
      }
    }
    return zs;
  }
};

}  // namespace rmtlab
