#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rmtlab/ensemble.hpp"
#include "rmtlab/errors.hpp"
#include "rmtlab/mplaw.hpp"
#include "rmtlab/parallel.hpp"
#include "rmtlab/spectra.hpp"
#include "rmtlab/stats.hpp"

namespace rmtlab {

/// Spectral parameter near the upper edge: z = lambda_+ + offset + i N^{-2/3-eps}.
inline cplx edge_parameter(const MPLaw& law, long n, double eps, double offset = 0.0) {
  return {law.lambda_plus() + offset, std::pow(static_cast<double>(n), -2.0 / 3.0 - eps)};
}

/// eta Im tr G^(1) - Im(eta / z), from columns 2..N only.
inline double baseline_mu(const DataMatrix& x, cplx z) {
  if (!(z.imag() > 0.0)) throw DomainError("baseline_mu: requires Im z > 0");
  if (x.cols() < 2) throw ConfigError("baseline_mu: needs N >= 2");
  const Eigen::MatrixXd x1 = x.entries().rightCols(x.cols() - 1);
  const GramFactor f(x1);
  const double eta = z.imag();
  return eta * f.right_trace(z).imag() - (eta / z).imag();
}

struct Expansion {
  cplx B;
  std::array<cplx, 3> y;  // y_1, y_2, y_3
};

/// B = -z m_W [ (x, calG x) - (-1/(z m_W) - 1) ] and y_k = eta z m_W (-B)^{k-1} (x, calG^2 x).
inline Expansion expansion_from(cplx z, cplx mw, cplx quad1, cplx quad2) {
  Expansion e;
  e.B = -z * mw * (quad1 - (-1.0 / (z * mw) - 1.0));
  cplx p = 1.0;
  for (int k = 0; k < 3; ++k) {
    e.y[static_cast<std::size_t>(k)] = z.imag() * z * mw * p * quad2;
    p *= -e.B;
  }
  return e;
}

inline Expansion expansion_quantities(const DataMatrix& x, cplx z, const MPLaw& law) {
  if (!(z.imag() > 0.0)) throw DomainError("expansion_quantities: requires Im z > 0");
  const ColumnResolvent r(x, false);
  return expansion_from(z, law.stieltjes(z), r.quad_form(z, 1), r.quad_form(z, 2));
}

/// Residuals |lhs - rhs| / max(1, |lhs|, |rhs|) of the exact resolvent identities.
struct IdentityResiduals {
  double trace_shift = 0.0;    // tr G^(1) - tr calG^(1) = (M - N + 1)/z
  double trace_drop = 0.0;     // tr G - tr G^(1) + 1/z = z G_11 (x, calG^2 x)
  double schur = 0.0;          // G_11 = 1/(-z - z (x, calG x))
  double expansion = 0.0;      // G_11 = m_W / (B + 1)
  double mu_split = 0.0;       // eta Im tr G = mu + Im(eta z G_11 (x, calG^2 x))
  double interlacing = 0.0;    // |tr G^(1) - tr G| * eta   (bounded by a constant)
  double square_trace = 0.0;   // |tr calG^2| - Im tr calG / eta   (<= 0 always)

  double max_exact() const { return std::max({trace_shift, trace_drop, schur, expansion, mu_split}); }
};

namespace detail {

inline double rel_residual(cplx a, cplx b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline cplx trace_from_eigenvalues(const Eigen::VectorXd& ev, cplx z) {
  cplx acc = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) acc += 1.0 / (ev(i) - z);
  return acc;
}

}  // namespace detail

/// Each identity is checked with its two sides computed by different routes:
/// the two traces in the first identity come from separate eigensolves of
/// X1^T X1 and X1 X1^T; tr G comes from the singular values of X while G_11
/// and the quadratic forms come from Gram factorizations.
inline IdentityResiduals identity_suite(const DataMatrix& x, cplx z, const MPLaw& law) {
  if (!(z.imag() > 0.0)) throw DomainError("identity_suite: requires Im z > 0");
  const ColumnResolvent r(x, true);
  const double m = static_cast<double>(x.rows()), n = static_cast<double>(x.cols());
  const double eta = z.imag();
  IdentityResiduals out;

  const Eigen::MatrixXd x1 = x.entries().rightCols(x.cols() - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(Eigen::MatrixXd(x1.transpose() * x1), Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> big(Eigen::MatrixXd(x1 * x1.transpose()), Eigen::EigenvaluesOnly);
  const cplx tr_g1_direct = detail::trace_from_eigenvalues(small.eigenvalues(), z);
  const cplx tr_cg1_direct = detail::trace_from_eigenvalues(big.eigenvalues(), z);
  out.trace_shift = detail::rel_residual(tr_g1_direct - tr_cg1_direct, (m - n + 1.0) / z);

  const cplx g11 = r.G11(z);
  const cplx q1 = r.quad_form(z, 1), q2 = r.quad_form(z, 2);
  const cplx tr_g = r.trace_G(z);
  const cplx tr_g1 = r.trace_G1(z);
  out.trace_drop = detail::rel_residual(tr_g - tr_g1 + 1.0 / z, z * g11 * q2);
  out.schur = detail::rel_residual(g11, 1.0 / (-z - z * q1));

  const cplx mw = law.stieltjes(z);
  const auto e = expansion_from(z, mw, q1, q2);
  out.expansion = detail::rel_residual(g11, mw / (e.B + 1.0));

  const double mu = eta * tr_g1.imag() - (eta / z).imag();
  out.mu_split = detail::rel_residual(eta * tr_g.imag(), mu + (eta * z * g11 * q2).imag());

  out.interlacing = std::abs(tr_g1 - tr_g) * eta;
  out.square_trace = std::abs(r.removed().left_trace_sq(z)) - r.trace_calG1(z).imag() / eta;
  return out;
}

// Test functionals ---------------------------------------------------------------

enum class FunctionalKind { Identity, Square, Tanh };

inline std::string_view to_string(FunctionalKind f) {
  switch (f) {
    case FunctionalKind::Identity: return "identity";
    case FunctionalKind::Square: return "square";
    case FunctionalKind::Tanh: return "tanh";
  }
  return "unknown";
}

inline FunctionalKind parse_functional(std::string_view s) {
  if (s == "identity") return FunctionalKind::Identity;
  if (s == "square") return FunctionalKind::Square;
  if (s == "tanh") return FunctionalKind::Tanh;
  throw ConfigError("unknown test functional '" + std::string(s) + "' (expected identity, square, tanh)");
}

/// Smooth scalar functional with closed-form derivatives up to order 4.
struct TestFunctional {
  FunctionalKind kind = FunctionalKind::Identity;

  double operator()(double x) const { return derivative(x, 0); }

  double derivative(double x, int order) const {
    switch (kind) {
      case FunctionalKind::Identity: return order == 0 ? x : order == 1 ? 1.0 : 0.0;
      case FunctionalKind::Square: return order == 0 ? x * x : order == 1 ? 2 * x : order == 2 ? 2.0 : 0.0;
      case FunctionalKind::Tanh: {
        const double t = std::tanh(x), s = 1 - t * t;
        switch (order) {
          case 0: return t;
          case 1: return s;
          case 2: return -2 * t * s;
          case 3: return s * (6 * t * t - 2);
          case 4: return 8 * t * s * (2 - 3 * t * t);
          default: throw ConfigError("TestFunctional: derivative order > 4");
        }
      }
    }
    return 0.0;
  }

  /// max over the grid and orders 0..4 of |F^(a)(x)| (|x| + 1)^{-c1}.
  double growth_constant(double c1, double range = 50.0, int points = 20001) const {
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
      const double x = -range + 2 * range * i / (points - 1);
      for (int a = 0; a <= 4; ++a) worst = std::max(worst, std::abs(derivative(x, a)) * std::pow(std::abs(x) + 1, -c1));
    }
    return worst;
  }
};

// Telescoping ---------------------------------------------------------------------

/// N eta Im m(z) = eta Im tr G for the given data matrix.
inline double scaled_im_trace(const DataMatrix& x, cplx z) {
  return z.imag() * resolvent_trace(eigenvalues(x, EigenMethod::Gram), z).imag();
}

struct TelescopingResult {
  Estimate estimate;
  std::vector<double> per_trial;  // F(X_gamma) - F(X_{gamma-1}), coupled
};

/// E F(N eta Im m_gamma) - E F(N eta Im m_{gamma-1}), where X_gamma and
/// X_{gamma-1} come from the same raw draw and differ only in column gamma
/// (raw versus its normalized copy). Trials use streams keyed by gamma so
/// different steps are independent.
inline TelescopingResult telescoping_difference(const EnsembleSpec& spec, long gamma, const TestFunctional& f, cplx z,
                                                long trials, unsigned workers = default_workers()) {
  spec.validate();
  if (gamma < 1 || gamma > spec.cols) throw ConfigError("telescoping_difference: gamma out of range");
  if (trials < 1) throw ConfigError("telescoping_difference: trials must be >= 1");
  if (!(z.imag() > 0.0)) throw DomainError("telescoping_difference: requires Im z > 0");
  TelescopingResult out;
  out.per_trial.resize(static_cast<std::size_t>(trials));
  const std::size_t done = parallel_for(
      static_cast<std::size_t>(trials),
      [&](std::size_t t) {
        const auto raw = sample_raw(spec.for_trial(t, 0x7e1e00ULL + static_cast<std::uint64_t>(gamma)));
        const auto std_ = standardize_columns(raw);
        const double a = scaled_im_trace(column_swap(std_, raw, gamma), z);
        const double b = scaled_im_trace(column_swap(std_, raw, gamma - 1), z);
        out.per_trial[t] = f(a) - f(b);
      },
      workers);
  out.per_trial.resize(done);
  out.estimate = estimate_of(out.per_trial);
  return out;
}

/// E F(covariance) - E F(correlation) estimated directly from coupled endpoint pairs.
inline TelescopingResult endpoint_difference(const EnsembleSpec& spec, const TestFunctional& f, cplx z, long trials,
                                             unsigned workers = default_workers()) {
  spec.validate();
  if (trials < 1) throw ConfigError("endpoint_difference: trials must be >= 1");
  TelescopingResult out;
  out.per_trial.resize(static_cast<std::size_t>(trials));
  const std::size_t done = parallel_for(
      static_cast<std::size_t>(trials),
      [&](std::size_t t) {
        const auto raw = sample_raw(spec.for_trial(t, 0xe7d0ULL));
        out.per_trial[t] = f(scaled_im_trace(raw, z)) - f(scaled_im_trace(standardize_columns(raw), z));
      },
      workers);
  out.per_trial.resize(done);
  out.estimate = estimate_of(out.per_trial);
  return out;
}

}  // namespace rmtlab
