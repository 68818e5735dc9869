#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "rmtlab/errors.hpp"
#include "rmtlab/random.hpp"

namespace rmtlab {

/// Aspect-ratio guard: theta < d < 1/theta and |d - 1| > theta.
inline constexpr double kDefaultTheta = 0.05;

/// Sampling contract for one raw data matrix: M x N entries M^{-1/2} q with
/// E q = 0, E q^2 = 1, drawn from `dist`. Column j uses its own stream keyed by
/// (seed, j), so the matrix is a pure function of the spec.
struct EnsembleSpec {
  long rows = 0;     // M
  long cols = 0;     // N
  EntryDistribution dist = EntryDistribution::Gaussian;
  std::uint64_t seed = 0;

  double aspect_ratio() const { return static_cast<double>(cols) / static_cast<double>(rows); }

  void validate(double theta = kDefaultTheta) const {
    if (rows <= 0 || cols <= 0) {
      throw ConfigError("ensemble dimensions must be positive (M=" + std::to_string(rows) +
                        ", N=" + std::to_string(cols) + ")");
    }
    const double d = aspect_ratio();
    if (!(d > theta && d < 1.0 / theta)) {
      throw ConfigError("aspect ratio d=N/M=" + std::to_string(d) + " outside (theta, 1/theta) for theta=" +
                        std::to_string(theta));
    }
    if (!(std::abs(d - 1.0) > theta)) {
      throw ConfigError("aspect ratio d=N/M=" + std::to_string(d) + " too close to 1 (theta=" +
                        std::to_string(theta) + ")");
    }
  }

  /// Same dimensions and distribution with an independent key for trial `trial`
  /// of stream `stream` (streams separate e.g. correlation and covariance samples).
  EnsembleSpec for_trial(std::uint64_t trial, std::uint64_t stream = 0) const {
    EnsembleSpec s = *this;
    s.seed = derive_seed(seed, stream, trial);
    return s;
  }
};

/// An M x N data matrix. `standardized` means every column has unit Euclidean norm.
class DataMatrix {
 public:
  DataMatrix() = default;

  DataMatrix(Eigen::MatrixXd entries, bool standardized)
      : entries_(std::move(entries)), standardized_(standardized) {
    if (standardized_) {
      for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
        if (std::abs(entries_.col(j).squaredNorm() - 1.0) > 1e-12) {
          throw DegenerateInputError("column " + std::to_string(j + 1) +
                                     " is flagged standardized but does not have unit norm");
        }
      }
    }
  }

  const Eigen::MatrixXd& entries() const { return entries_; }
  long rows() const { return static_cast<long>(entries_.rows()); }
  long cols() const { return static_cast<long>(entries_.cols()); }
  bool standardized() const { return standardized_; }

  /// Copy with column `j` (0-based) replaced; the flag is recomputed only if it was set.
  DataMatrix with_column(long j, const Eigen::VectorXd& column) const {
    Eigen::MatrixXd e = entries_;
    e.col(j) = column;
    bool unit = standardized_ && std::abs(column.squaredNorm() - 1.0) <= 1e-12;
    return DataMatrix(std::move(e), unit);
  }

  friend bool operator==(const DataMatrix& a, const DataMatrix& b) {
    return a.standardized_ == b.standardized_ && a.entries_.rows() == b.entries_.rows() &&
           a.entries_.cols() == b.entries_.cols() && a.entries_ == b.entries_;
  }

 private:
  Eigen::MatrixXd entries_;
  bool standardized_ = false;
};

/// One raw column: M i.i.d. draws of M^{-1/2} q from the stream keyed by (seed, column).
inline Eigen::VectorXd sample_column(const EnsembleSpec& spec, long column) {
  RandomStream rng(derive_seed(spec.seed, 0x636f6cULL, static_cast<std::uint64_t>(column)));
  const double scale = 1.0 / std::sqrt(static_cast<double>(spec.rows));
  Eigen::VectorXd v(spec.rows);
  for (long i = 0; i < spec.rows; ++i) v(i) = scale * rng.entry(spec.dist);
  return v;
}

inline DataMatrix sample_raw(const EnsembleSpec& spec, double theta = kDefaultTheta) {
  spec.validate(theta);
  Eigen::MatrixXd x(spec.rows, spec.cols);
  for (long j = 0; j < spec.cols; ++j) x.col(j) = sample_column(spec, j);
  return DataMatrix(std::move(x), false);
}

/// Divides every column by its Euclidean norm.
inline DataMatrix standardize_columns(const DataMatrix& raw) {
  if (raw.standardized()) throw ConfigError("standardize_columns: input is already standardized");
  Eigen::MatrixXd x = raw.entries();
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double norm = x.col(j).norm();
    if (norm == 0.0) {
      throw DegenerateInputError("standardize_columns: column " + std::to_string(j + 1) + " is zero");
    }
    x.col(j) /= norm;
  }
  return DataMatrix(std::move(x), true);
}

/// Interpolating matrix between the two ensembles: column j (1-based) is taken
/// from `raw` when j <= gamma and from `standardized` otherwise. gamma = 0 gives
/// the correlation factor, gamma = N the covariance factor.
inline DataMatrix column_swap(const DataMatrix& standardized, const DataMatrix& raw, long gamma) {
  if (standardized.rows() != raw.rows() || standardized.cols() != raw.cols()) {
    throw ConfigError("column_swap: dimension mismatch");
  }
  if (!standardized.standardized() || raw.standardized()) {
    throw ConfigError("column_swap: expects (standardized, raw) inputs in that order");
  }
  if (gamma < 0 || gamma > raw.cols()) {
    throw ConfigError("column_swap: gamma=" + std::to_string(gamma) + " outside [0, " +
                      std::to_string(raw.cols()) + "]");
  }
  if (gamma == 0) return standardized;
  Eigen::MatrixXd x = standardized.entries();
  x.leftCols(gamma) = raw.entries().leftCols(gamma);
  return DataMatrix(std::move(x), false);
}

// Large-deviation spot checks -------------------------------------------------

/// |sum_i a_i A_i| against factor * sigma * ||A||.
inline std::pair<double, double> linear_form_bound(const Eigen::VectorXd& a, const Eigen::VectorXd& coeffs,
                                                   double sigma, double factor) {
  return {std::abs(a.dot(coeffs)), factor * sigma * coeffs.norm()};
}

/// |sum_i a_i B_ii a_i - sigma^2 sum_i B_ii| against factor * sigma^2 * (sum_i B_ii^2)^{1/2}.
inline std::pair<double, double> diagonal_form_bound(const Eigen::VectorXd& a, const Eigen::MatrixXd& b,
                                                     double sigma, double factor) {
  double lhs = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) lhs += a(i) * b(i, i) * a(i) - sigma * sigma * b(i, i);
  return {std::abs(lhs), factor * sigma * sigma * b.diagonal().norm()};
}

/// |sum_{i != j} a_i B_ij a_j| against factor * sigma^2 * (sum_{i != j} B_ij^2)^{1/2}.
inline std::pair<double, double> offdiagonal_form_bound(const Eigen::VectorXd& a, const Eigen::MatrixXd& b,
                                                        double sigma, double factor) {
  const double full = a.dot(b * a);
  const double diag = (a.array() * b.diagonal().array() * a.array()).sum();
  const double off_norm2 = b.squaredNorm() - b.diagonal().squaredNorm();
  return {std::abs(full - diag), factor * sigma * sigma * std::sqrt(std::max(off_norm2, 0.0))};
}

struct LargeDeviationReport {
  long trials = 0;
  long linear_failures = 0;
  long diagonal_failures = 0;
  long offdiagonal_failures = 0;
  long any_failures = 0;
  double factor = 0.0;

  double failure_rate() const { return trials > 0 ? static_cast<double>(any_failures) / trials : 0.0; }
};

/// Empirical frequency with which a standardized column a (sigma^2 = 1/M)
/// violates the three large-deviation bounds against random Gaussian test
/// vectors A and symmetric test matrices B, with the poly-log factor
/// (log M)^log_exponent.
inline LargeDeviationReport large_deviation_check(const EnsembleSpec& spec, long trials,
                                                  double log_exponent = 3.0) {
  spec.validate();
  if (trials < 1) throw ConfigError("large_deviation_check: trials must be >= 1");
  const long m = spec.rows;
  const double sigma = 1.0 / std::sqrt(static_cast<double>(m));
  const double factor = std::pow(std::log(static_cast<double>(m)), log_exponent);

  LargeDeviationReport report;
  report.trials = trials;
  report.factor = factor;
  for (long t = 0; t < trials; ++t) {
    const EnsembleSpec ts = spec.for_trial(static_cast<std::uint64_t>(t), 0x6c64ULL);
    Eigen::VectorXd a = sample_column(ts, 0);
    a /= a.norm();

    RandomStream rng(derive_seed(ts.seed, 0x74657374ULL));
    Eigen::VectorXd coeffs(m);
    for (long i = 0; i < m; ++i) coeffs(i) = rng.normal();
    Eigen::MatrixXd b(m, m);
    for (long j = 0; j < m; ++j) {
      for (long i = 0; i <= j; ++i) b(i, j) = b(j, i) = rng.normal();
    }

    const auto [l1, r1] = linear_form_bound(a, coeffs, sigma, factor);
    const auto [l2, r2] = diagonal_form_bound(a, b, sigma, factor);
    const auto [l3, r3] = offdiagonal_form_bound(a, b, sigma, factor);
    const bool f1 = l1 > r1, f2 = l2 > r2, f3 = l3 > r3;
    report.linear_failures += f1;
    report.diagonal_failures += f2;
    report.offdiagonal_failures += f3;
    report.any_failures += (f1 || f2 || f3);
  }
  return report;
}

}  // namespace rmtlab
