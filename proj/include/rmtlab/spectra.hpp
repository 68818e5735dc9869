#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "rmtlab/ensemble.hpp"
#include "rmtlab/errors.hpp"
#include "rmtlab/mplaw.hpp"

namespace rmtlab {

/// Svd: squared singular values of X (bidiagonal divide and conquer); the
/// reference path. Gram: eigenvalues of the smaller of X^T X and X X^T, about
/// five times faster and used by the Monte Carlo drivers.
enum class EigenMethod { Svd, Gram };

/// Eigenvalues of the N x N matrix X^T X, descending and zero padded to max(M, N).
struct Spectrum {
  std::vector<double> values;
  long rows = 0;  // M
  long cols = 0;  // N

  long size() const { return static_cast<long>(values.size()); }
  long nontrivial() const { return std::min(rows, cols); }
  double largest() const { return values.front(); }
  /// Smallest of the min(M, N) computed eigenvalues.
  double smallest_nontrivial() const { return values[static_cast<std::size_t>(nontrivial() - 1)]; }

  /// Builds a spectrum from given values (sorted and padded here); used for
  /// synthetic inputs such as lambda_j = gamma_j.
  static Spectrum from_values(std::vector<double> v, long rows, long cols) {
    const auto target = static_cast<std::size_t>(std::max(rows, cols));
    if (v.size() > target) throw ConfigError("Spectrum::from_values: more values than max(M, N)");
    std::sort(v.begin(), v.end(), std::greater<>());
    v.resize(target, 0.0);
    Spectrum s;
    s.values = std::move(v);
    s.rows = rows;
    s.cols = cols;
    return s;
  }
};

namespace detail {

inline std::vector<double> clamped_nonnegative(const Eigen::VectorXd& v) {
  std::vector<double> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = std::max(0.0, v(i));
  return out;
}

inline cplx ipow(cplx w, int power) {
  cplx r = 1.0;
  for (int i = 0; i < power; ++i) r *= w;
  return r;
}

inline void require_finite(const Eigen::MatrixXd& x, const char* where) {
  if (!x.allFinite()) throw ComputationError(std::string(where) + ": input has non-finite entries");
}

}  // namespace detail

inline Spectrum eigenvalues(const Eigen::MatrixXd& x, EigenMethod method = EigenMethod::Svd) {
  detail::require_finite(x, "eigenvalues");
  const long m = static_cast<long>(x.rows()), n = static_cast<long>(x.cols());
  if (m == 0 || n == 0) throw ConfigError("eigenvalues: empty matrix");
  std::vector<double> v;
  if (method == EigenMethod::Svd) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(x);
    if (svd.info() != Eigen::Success) {
      throw ComputationError("eigenvalues: SVD did not converge (M=" + std::to_string(m) +
                             ", N=" + std::to_string(n) + ")");
    }
    const Eigen::VectorXd s = svd.singularValues();
    v.resize(static_cast<std::size_t>(s.size()));
    for (Eigen::Index i = 0; i < s.size(); ++i) v[static_cast<std::size_t>(i)] = s(i) * s(i);
  } else {
    const Eigen::MatrixXd gram = n <= m ? Eigen::MatrixXd(x.transpose() * x) : Eigen::MatrixXd(x * x.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ComputationError("eigenvalues: symmetric eigensolver did not converge");
    v = detail::clamped_nonnegative(es.eigenvalues());
  }
  return Spectrum::from_values(std::move(v), m, n);
}

inline Spectrum eigenvalues(const DataMatrix& x, EigenMethod method = EigenMethod::Svd) {
  return eigenvalues(x.entries(), method);
}

/// (1/N) sum_{j <= N} 1/(lambda_j - z) over the eigenvalues of X^T X.
inline cplx empirical_stieltjes(const Spectrum& s, cplx z) {
  if (!(z.imag() > 0.0)) throw DomainError("empirical_stieltjes: requires Im z > 0");
  cplx acc = 0.0;
  for (long j = 0; j < s.cols; ++j) acc += 1.0 / (s.values[static_cast<std::size_t>(j)] - z);
  return acc / static_cast<double>(s.cols);
}

/// Trace of (X^T X - z)^{-1}, i.e. N * empirical_stieltjes.
inline cplx resolvent_trace(const Spectrum& s, cplx z) {
  return empirical_stieltjes(s, z) * static_cast<double>(s.cols);
}

/// Thin spectral factorization of an M x n matrix A = U diag(sigma) V^T kept
/// only on its range, built from the eigendecomposition of the smaller Gram
/// matrix. Resolvents of A A^T and A^T A follow for every z from the same
/// factorization; the kernel contributes 1/(-z) terms.
class GramFactor {
 public:
  GramFactor() = default;

  explicit GramFactor(const Eigen::MatrixXd& a) : rows_(a.rows()), cols_(a.cols()) {
    detail::require_finite(a, "GramFactor");
    left_basis_ = rows_ <= cols_;
    const Eigen::MatrixXd gram = left_basis_ ? Eigen::MatrixXd(a * a.transpose()) : Eigen::MatrixXd(a.transpose() * a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    if (es.info() != Eigen::Success) throw ComputationError("GramFactor: symmetric eigensolver did not converge");
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double top = ev.size() > 0 ? std::max(ev.maxCoeff(), 0.0) : 0.0;
    const double floor = top * 1e-13;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
      if (ev(k) > floor && ev(k) > 0.0) keep.push_back(k);
    }
    const auto r = static_cast<Eigen::Index>(keep.size());
    sq_.resize(r);
    basis_.resize(gram.rows(), r);
    for (Eigen::Index i = 0; i < r; ++i) {
      sq_(i) = ev(keep[static_cast<std::size_t>(i)]);
      basis_.col(i) = es.eigenvectors().col(keep[static_cast<std::size_t>(i)]);
    }
  }

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  Eigen::Index rank() const { return sq_.size(); }
  const Eigen::VectorXd& squared_singular_values() const { return sq_; }

  /// U^T y for y in R^M. `a` must be the matrix this factor was built from.
  Eigen::VectorXd left_projection(const Eigen::MatrixXd& a, const Eigen::VectorXd& y) const {
    if (left_basis_) return basis_.transpose() * y;
    // u_k = A v_k / sigma_k
    return ((basis_.transpose() * (a.transpose() * y)).array() / sq_.array().sqrt()).matrix();
  }

  /// V^T w for w in R^n.
  Eigen::VectorXd right_projection(const Eigen::MatrixXd& a, const Eigen::VectorXd& w) const {
    if (!left_basis_) return basis_.transpose() * w;
    return ((basis_.transpose() * (a * w)).array() / sq_.array().sqrt()).matrix();
  }

  /// Right singular vectors V (n x rank).
  Eigen::MatrixXd right_vectors(const Eigen::MatrixXd& a) const {
    if (!left_basis_) return basis_;
    Eigen::MatrixXd v = a.transpose() * basis_;
    for (Eigen::Index k = 0; k < v.cols(); ++k) v.col(k) /= std::sqrt(sq_(k));
    return v;
  }

  /// (p, (D - z)^{-k} p) summed over the range plus kernel mass `norm2 - |p|^2` at eigenvalue 0.
  cplx form(const Eigen::VectorXd& proj, double norm2, cplx z, int power) const {
    cplx acc = 0.0;
    double captured = 0.0;
    for (Eigen::Index i = 0; i < sq_.size(); ++i) {
      const double p2 = proj(i) * proj(i);
      captured += p2;
      acc += p2 / detail::ipow(sq_(i) - z, power);
    }
    const double kernel = std::max(0.0, norm2 - captured);
    if (kernel > 0.0) acc += kernel / detail::ipow(-z, power);
    return acc;
  }

  /// tr (A A^T - z)^{-1}.
  cplx left_trace(cplx z) const { return range_trace(z, 1) + static_cast<double>(rows_ - rank()) / (-z); }
  /// tr (A^T A - z)^{-1}.
  cplx right_trace(cplx z) const { return range_trace(z, 1) + static_cast<double>(cols_ - rank()) / (-z); }
  /// tr (A A^T - z)^{-2}.
  cplx left_trace_sq(cplx z) const {
    return range_trace(z, 2) + static_cast<double>(rows_ - rank()) / (z * z);
  }

 private:
  cplx range_trace(cplx z, int power) const {
    cplx acc = 0.0;
    for (Eigen::Index i = 0; i < sq_.size(); ++i) acc += 1.0 / detail::ipow(sq_(i) - z, power);
    return acc;
  }

  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  bool left_basis_ = true;
  Eigen::VectorXd sq_;
  Eigen::MatrixXd basis_;
};

/// Resolvent quantities at one z. G = (X^T X - z)^{-1}; X^(1) drops column 1;
/// G^(1) = (X^(1)T X^(1) - z)^{-1} and calG^(1) = (X^(1) X^(1)T - z)^{-1}.
struct ResolventSample {
  cplx z;
  cplx trace_G;
  cplx G11;
  cplx trace_G1;      // tr G^(1)
  cplx trace_calG1;   // tr calG^(1)
  cplx trace_calG1_sq;  // tr (calG^(1))^2
  cplx quad1;  // (x_1, calG^(1) x_1)
  cplx quad2;  // (x_1, (calG^(1))^2 x_1)
};

/// Factorizations of X and of X with its first column removed, shared across
/// every z. tr G comes from the singular values of X, a separate path from the
/// Gram factors used for G_11 and the removed-column quantities.
class ColumnResolvent {
 public:
  explicit ColumnResolvent(const DataMatrix& x, bool with_full = true) : x_(x.entries()) {
    if (x_.cols() < 2) throw ConfigError("ColumnResolvent: needs N >= 2");
    x1_ = x_.rightCols(x_.cols() - 1);
    col1_ = x_.col(0);
    removed_ = GramFactor(x1_);
    proj1_ = removed_.left_projection(x1_, col1_);
    if (with_full) {
      full_ = GramFactor(x_);
      Eigen::VectorXd e1 = Eigen::VectorXd::Zero(x_.cols());
      e1(0) = 1.0;
      row1_ = full_.right_projection(x_, e1);
      spectrum_ = eigenvalues(x_, EigenMethod::Svd);
      has_full_ = true;
    }
  }

  long rows() const { return static_cast<long>(x_.rows()); }
  long cols() const { return static_cast<long>(x_.cols()); }
  const Eigen::VectorXd& column1() const { return col1_; }
  const GramFactor& removed() const { return removed_; }

  cplx quad_form(cplx z, int power) const {
    check(z);
    return removed_.form(proj1_, col1_.squaredNorm(), z, power);
  }
  cplx trace_G1(cplx z) const { check(z); return removed_.right_trace(z); }
  cplx trace_calG1(cplx z) const { check(z); return removed_.left_trace(z); }

  cplx G11(cplx z) const {
    check(z);
    require_full();
    return full_.form(row1_, 1.0, z, 1);
  }
  cplx trace_G(cplx z) const {
    require_full();
    return resolvent_trace(spectrum_, z);
  }

  ResolventSample at(cplx z) const {
    ResolventSample s;
    s.z = z;
    s.quad1 = quad_form(z, 1);
    s.quad2 = quad_form(z, 2);
    s.trace_G1 = trace_G1(z);
    s.trace_calG1 = trace_calG1(z);
    s.trace_calG1_sq = removed_.left_trace_sq(z);
    if (has_full_) {
      s.G11 = G11(z);
      s.trace_G = trace_G(z);
    }
    return s;
  }

 private:
  static void check(cplx z) {
    if (!(z.imag() > 0.0)) throw DomainError("resolvent: requires Im z > 0");
  }
  void require_full() const {
    if (!has_full_) throw ConfigError("ColumnResolvent: built without the full-matrix factorization");
  }

  Eigen::MatrixXd x_;
  Eigen::MatrixXd x1_;
  Eigen::VectorXd col1_;
  GramFactor removed_;
  Eigen::VectorXd proj1_;
  GramFactor full_;
  Eigen::VectorXd row1_;
  Spectrum spectrum_;
  bool has_full_ = false;
};

inline ResolventSample resolvent_quantities(const DataMatrix& x, cplx z) {
  if (!(z.imag() > 0.0)) throw DomainError("resolvent_quantities: requires Im z > 0");
  return ColumnResolvent(x).at(z);
}

/// G_ij for sampled index pairs, from the right singular vectors of X.
inline std::vector<cplx> resolvent_entries(const DataMatrix& x, cplx z,
                                           const std::vector<std::pair<long, long>>& pairs) {
  if (!(z.imag() > 0.0)) throw DomainError("resolvent_entries: requires Im z > 0");
  const Eigen::MatrixXd& a = x.entries();
  GramFactor f(a);
  const Eigen::MatrixXd v = f.right_vectors(a);
  const Eigen::VectorXd& sq = f.squared_singular_values();
  std::vector<cplx> out;
  out.reserve(pairs.size());
  for (const auto& [i, j] : pairs) {
    cplx acc = 0.0;
    double captured = 0.0;
    for (Eigen::Index k = 0; k < sq.size(); ++k) {
      const double w = v(i, k) * v(j, k);
      captured += w;
      acc += w / (sq(k) - z);
    }
    acc += ((i == j ? 1.0 : 0.0) - captured) / (-z);
    out.push_back(acc);
  }
  return out;
}

}  // namespace rmtlab
