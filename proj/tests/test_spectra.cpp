#include <gtest/gtest.h>

#include <cmath>

#include "rmtlab/spectra.hpp"

using namespace rmtlab;

namespace {

DataMatrix gaussian(long m, long n, std::uint64_t seed, bool standardize = false) {
  EnsembleSpec s{m, n, EntryDistribution::Gaussian, seed};
  auto raw = sample_raw(s, 0.01);
  return standardize ? standardize_columns(raw) : raw;
}

// Dense complex resolvent, used as the oracle for the factorized paths.
Eigen::MatrixXcd dense_resolvent(const Eigen::MatrixXd& a, cplx z) {
  const Eigen::MatrixXcd h = (a.transpose() * a).cast<cplx>();
  return (h - z * Eigen::MatrixXcd::Identity(h.rows(), h.cols())).inverse();
}

}  // namespace

TEST(Eigenvalues, Identity) {
  const auto s = eigenvalues(Eigen::MatrixXd::Identity(2, 2));
  ASSERT_EQ(s.size(), 2);
  EXPECT_NEAR(s.values[0], 1.0, 1e-15);
  EXPECT_NEAR(s.values[1], 1.0, 1e-15);
}

TEST(Eigenvalues, RankDeficient) {
  Eigen::MatrixXd x(3, 2);
  x << 1, 2, 0.5, 1, -2, -4;
  for (auto method : {EigenMethod::Svd, EigenMethod::Gram}) {
    const auto s = eigenvalues(x, method);
    EXPECT_NEAR(s.values[1], 0.0, 1e-12);
    EXPECT_NEAR(s.values[0], x.squaredNorm(), 1e-12);
  }
}

TEST(Eigenvalues, PaddingWhenWide) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Random(2, 3);
  const auto s = eigenvalues(x);
  ASSERT_EQ(s.size(), 3);
  EXPECT_EQ(s.values[2], 0.0);
  EXPECT_EQ(s.nontrivial(), 2);
}

TEST(Eigenvalues, TraceAndOrdering) {
  for (auto [m, n] : {std::pair{80L, 40L}, std::pair{40L, 80L}}) {
    const auto x = gaussian(m, n, 5);
    const auto s = eigenvalues(x);
    EXPECT_EQ(s.size(), std::max(m, n));
    double sum = 0;
    for (std::size_t j = 0; j < s.values.size(); ++j) {
      EXPECT_GE(s.values[j], 0.0);
      if (j > 0) {
        EXPECT_LE(s.values[j], s.values[j - 1]);
      }
      sum += s.values[j];
    }
    EXPECT_NEAR(sum / x.entries().squaredNorm(), 1.0, 1e-8);
  }
}

TEST(Eigenvalues, GramPathAgreesWithSvd) {
  for (auto [m, n] : {std::pair{400L, 100L}, std::pair{100L, 300L}}) {
    const auto x = gaussian(m, n, 17, true);
    const auto a = eigenvalues(x, EigenMethod::Svd);
    const auto b = eigenvalues(x, EigenMethod::Gram);
    for (std::size_t j = 0; j < a.values.size(); ++j) EXPECT_NEAR(a.values[j], b.values[j], 1e-11);
  }
}

TEST(Eigenvalues, NonFiniteInput) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Ones(3, 2);
  x(1, 1) = std::nan("");
  EXPECT_THROW(eigenvalues(x), ComputationError);
}

TEST(EmpiricalStieltjes, SingleEigenvalue) {
  const auto s = Spectrum::from_values({1.0}, 1, 1);
  const cplx m = empirical_stieltjes(s, {0.0, 1.0});
  EXPECT_NEAR(m.real(), 0.5, 1e-15);
  EXPECT_NEAR(m.imag(), 0.5, 1e-15);
  EXPECT_THROW(empirical_stieltjes(s, {0.0, 0.0}), DomainError);
}

TEST(EmpiricalStieltjes, AsymptoticsAndPositivity) {
  const auto s = eigenvalues(gaussian(60, 30, 2));
  const cplx big(3e5, 1e5);
  EXPECT_LT(std::abs(empirical_stieltjes(s, big) + 1.0 / big), 1e-9);
  for (double e : {-1.0, 0.0, 0.5, 1.0, 2.5, 10.0})
    for (double eta : {1e-8, 1e-3, 1.0}) EXPECT_GT(empirical_stieltjes(s, {e, eta}).imag(), 0.0);
}

TEST(EmpiricalStieltjes, WideMatrixIncludesZeros) {
  // N > M: N - M eigenvalues of X^T X vanish and enter the average.
  const auto x = gaussian(20, 40, 8);
  const auto s = eigenvalues(x);
  const cplx z(0.7, 0.2);
  const cplx dense = dense_resolvent(x.entries(), z).trace() / 40.0;
  EXPECT_LT(std::abs(empirical_stieltjes(s, z) - dense), 1e-12);
}

TEST(Resolvent, MatchesDenseInverse) {
  for (auto [m, n] : {std::pair{50L, 20L}, std::pair{20L, 50L}, std::pair{30L, 31L}}) {
    const auto x = gaussian(m, n, 23, true);
    const cplx z(1.3, 0.05);
    const auto r = resolvent_quantities(x, z);

    const Eigen::MatrixXd a = x.entries();
    const Eigen::MatrixXd a1 = a.rightCols(n - 1);
    const Eigen::VectorXd x1 = a.col(0);
    const Eigen::MatrixXcd g = dense_resolvent(a, z);
    const Eigen::MatrixXcd g1 = dense_resolvent(a1, z);
    const Eigen::MatrixXcd cg1 =
        ((a1 * a1.transpose()).cast<cplx>() - z * Eigen::MatrixXcd::Identity(m, m)).inverse();
    const Eigen::VectorXcd xc = x1.cast<cplx>();

    EXPECT_LT(std::abs(r.trace_G - g.trace()), 1e-9);
    EXPECT_LT(std::abs(r.G11 - g(0, 0)), 1e-10);
    EXPECT_LT(std::abs(r.trace_G1 - g1.trace()), 1e-9);
    EXPECT_LT(std::abs(r.trace_calG1 - cg1.trace()), 1e-9);
    EXPECT_LT(std::abs(r.trace_calG1_sq - (cg1 * cg1).trace()), 1e-8);
    EXPECT_LT(std::abs(r.quad1 - xc.dot(cg1 * xc)), 1e-10);
    EXPECT_LT(std::abs(r.quad2 - xc.dot(cg1 * cg1 * xc)), 1e-9);
    EXPECT_GT(r.trace_G.imag(), 0.0);
  }
}

TEST(Resolvent, SmallExactTraceDifference) {
  // M = 3, N = 2, z = i: tr G^(1) - tr calG^(1) = (M - N + 1)/z = -2i.
  const auto x = gaussian(3, 2, 4);
  const auto r = resolvent_quantities(x, {0.0, 1.0});
  EXPECT_LT(std::abs(r.trace_G1 - r.trace_calG1 - cplx(0.0, -2.0)), 1e-10);
}

TEST(Resolvent, EntriesMatchDense) {
  const auto x = gaussian(30, 45, 12, true);
  const cplx z(0.9, 0.1);
  const auto g = dense_resolvent(x.entries(), z);
  std::vector<std::pair<long, long>> pairs{{0, 0}, {3, 7}, {44, 44}, {12, 40}};
  const auto got = resolvent_entries(x, z, pairs);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    EXPECT_LT(std::abs(got[k] - g(pairs[k].first, pairs[k].second)), 1e-10);
}

TEST(Resolvent, InterlacingBound) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto x = gaussian(80, 40, 100 + t, true);
    const double eta = 1e-3;
    const auto r = resolvent_quantities(x, {1.0 + 0.1 * t, eta});
    EXPECT_LE(std::abs(r.trace_G1 - r.trace_G), 10.0 / eta);
  }
}

TEST(Resolvent, DomainErrors) {
  const auto x = gaussian(10, 5, 1);
  EXPECT_THROW(resolvent_quantities(x, {1.0, 0.0}), DomainError);
  ColumnResolvent cr(x, false);
  EXPECT_THROW(cr.G11({1.0, 0.1}), ConfigError);
}
