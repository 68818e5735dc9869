#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "rmtlab/greencmp.hpp"
#include "rmtlab/momentcmp.hpp"

using namespace rmtlab;

namespace {

using BlockSet = std::set<std::set<int>>;

BlockSet as_sets(const Partition& p) {
  BlockSet out;
  for (const auto& b : p.blocks) out.emplace(b.begin(), b.end());
  return out;
}

// Every map {1..n} -> {1..n} induces a partition through its fibres.
std::set<BlockSet> partitions_by_brute_force(int n) {
  std::set<BlockSet> out;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::map<int, std::set<int>> fibres;
    for (int i = 0; i < n; ++i) fibres[f[static_cast<std::size_t>(i)]].insert(i + 1);
    BlockSet bs;
    for (auto& [_, s] : fibres) bs.insert(s);
    out.insert(bs);
    int d = 0;
    while (d < n && ++f[static_cast<std::size_t>(d)] == n) f[static_cast<std::size_t>(d++)] = 0;
    if (d == n) break;
  }
  return out;
}

DataMatrix gaussian_correlation(long m, long n, std::uint64_t seed) {
  return standardize_columns(sample_raw(EnsembleSpec{m, n, EntryDistribution::Gaussian, seed}));
}

}  // namespace

TEST(Partitions, MatchBruteForceCounts) {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = enumerate_partitions(n);
    const auto oracle = partitions_by_brute_force(n);
    std::set<BlockSet> seen;
    for (const auto& p : parts) seen.insert(as_sets(p));
    EXPECT_EQ(seen.size(), parts.size()) << "duplicates at n=" << n;
    EXPECT_EQ(seen, oracle) << "n=" << n;
  }
  EXPECT_EQ(enumerate_partitions(2).size(), 2u);
  EXPECT_EQ(enumerate_partitions(4).size(), 15u);
  EXPECT_EQ(enumerate_partitions(6).size(), 203u);
  EXPECT_THROW(enumerate_partitions(0), ConfigError);
  EXPECT_THROW(enumerate_partitions(7), ConfigError);
}

TEST(Partitions, CanonicalOrder) {
  for (const auto& p : enumerate_partitions(5)) {
    for (std::size_t b = 1; b < p.blocks.size(); ++b) EXPECT_LT(p.blocks[b - 1][0], p.blocks[b][0]);
    for (const auto& blk : p.blocks) EXPECT_TRUE(std::is_sorted(blk.begin(), blk.end()));
  }
  EXPECT_EQ(enumerate_partitions(3).front().to_string(), "{{1,2,3}}");
  EXPECT_EQ(enumerate_partitions(3).back().to_string(), "{{1},{2},{3}}");
}

TEST(Partitions, FromBlocksValidates) {
  EXPECT_THROW(Partition::from_blocks({{1, 2}, {2, 3}}), ConfigError);
  EXPECT_THROW(Partition::from_blocks({{1}, {3}}), ConfigError);
  EXPECT_THROW(Partition::from_blocks({{1}, {}}), ConfigError);
  EXPECT_EQ(Partition::from_blocks({{3, 5, 6}, {1}, {2, 4}}), Partition::from_blocks({{1}, {2, 4}, {3, 5, 6}}));
}

TEST(Indicator, WorkedExample) {
  const auto a = Partition::from_blocks({{1}, {2, 4}, {3, 5, 6}});
  EXPECT_EQ(indicator(a, {1, 2, 3, 2, 3, 3}, true), 1);
  EXPECT_EQ(indicator(a, {2, 2, 3, 2, 3, 3}, true), 0);
  EXPECT_EQ(indicator(a, {2, 2, 3, 2, 3, 3}, false), 1);
  // k1 = k3 is not waived: neither position is in a two-element block.
  EXPECT_EQ(indicator(a, {3, 2, 3, 2, 3, 3}, false), 0);
  EXPECT_THROW(indicator(a, {1, 2, 3}, true), ConfigError);
}

TEST(Indicator, ExactlyOnePatternAndRelaxationDominates) {
  RandomStream rng(17);
  for (int n : {2, 4, 6}) {
    const auto parts = enumerate_partitions(n);
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<long> k(static_cast<std::size_t>(n));
      for (auto& v : k) v = 1 + static_cast<long>(rng.uniform() * 3);
      int total = 0;
      for (const auto& p : parts) {
        const int strict = indicator(p, k, true), relaxed = indicator(p, k, false);
        EXPECT_LE(strict, relaxed);
        total += strict;
      }
      EXPECT_EQ(total, 1);
    }
  }
}

TEST(BlockStatsTest, Examples) {
  auto s = block_stats(Partition::from_blocks({{1}, {2, 4}, {3, 5, 6}}), 1, 2);
  EXPECT_EQ(s.singletons, 1);
  EXPECT_EQ(s.paired, 0);
  EXPECT_EQ(s.two_triples, 0);
  s = block_stats(Partition::from_blocks({{1, 2}, {3, 4}, {5, 6}}), 1, 2);
  EXPECT_EQ(s.paired, 2);
  s = block_stats(Partition::from_blocks({{1, 2}, {3, 4}, {5, 6}}), 3, 0);
  EXPECT_EQ(s.paired, 0);
  s = block_stats(Partition::from_blocks({{1, 2, 3}, {4, 5, 6}}), 2, 1);
  EXPECT_EQ(s.two_triples, 1);
  EXPECT_EQ(block_stats(Partition::from_blocks({{1, 2, 3}, {4}}), 1, 1).two_triples, 0);
  EXPECT_THROW(block_stats(Partition::from_blocks({{1, 2}}), 1, 1), ConfigError);
}

TEST(GaussianSphere, ExactFormula) {
  const auto quartic = Partition::from_blocks({{1, 2, 3, 4}});
  EXPECT_NEAR(gaussian_moment_difference_exact(quartic, 10), -0.005, 1e-15);
  for (long m : {5L, 40L, 300L}) {
    EXPECT_NEAR(gaussian_moment_difference_exact(quartic, m), -6.0 / (m * m * (m + 2.0)), 1e-15);
  }
  EXPECT_EQ(gaussian_moment_difference_exact(Partition::from_blocks({{1, 2}}), 17), 0.0);
  EXPECT_EQ(gaussian_moment_difference_exact(Partition::from_blocks({{1, 2, 3}, {4}}), 17), 0.0);
  // Two pairs: E y1^2 y2^2 = 1/(M(M+2)) on the sphere against 1/M^2.
  EXPECT_NEAR(gaussian_moment_difference_exact(Partition::from_blocks({{1, 2}, {3, 4}}), 8), 1.0 / 80 - 1.0 / 64, 1e-15);
}

TEST(GaussianSphere, ExactSlope) {
  const auto quartic = Partition::from_blocks({{1, 2, 3, 4}});
  const auto fit = scaling_fit({100, 200, 400, 800, 1600}, [&](long m) {
    return Estimate{gaussian_moment_difference_exact(quartic, m), 0.0, 1};
  });
  ASSERT_FALSE(fit.inconclusive);
  EXPECT_NEAR(fit.fit.slope, -3.0, 1e-2);
  EXPECT_EQ(predicted_moment_exponent(quartic, 2, 0), -3);
}

TEST(MomentDifference, GaussianQuarticMatchesExact) {
  const auto quartic = Partition::from_blocks({{1, 2, 3, 4}});
  for (long m : {10L, 20L}) {
    const auto e = moment_difference(EntryDistribution::Gaussian, m, quartic, {3, 3, 3, 3}, 40000, {.seed = 5});
    EXPECT_NEAR(e.mean, gaussian_moment_difference_exact(quartic, m), 5 * e.se) << "M=" << m;
    EXPECT_LT(e.se, 0.2 * std::abs(e.mean));
  }
}

TEST(MomentDifference, SecondMomentAndOddPatterns) {
  const auto pair = Partition::from_blocks({{1, 2}});
  auto e = moment_difference(EntryDistribution::Gaussian, 12, pair, {4, 4}, 20000, {.seed = 6});
  EXPECT_LE(std::abs(e.mean), 5 * e.se);
  const auto odd = Partition::from_blocks({{1, 2, 3}, {4}});
  e = moment_difference(EntryDistribution::Rademacher, 12, odd, {1, 1, 1, 2}, 20000, {.seed = 7});
  EXPECT_LE(std::abs(e.mean), 5 * e.se + 1e-15);
}

TEST(MomentDifference, ZeroWhenIndicatorVanishes) {
  const auto a = Partition::from_blocks({{1, 2}, {3, 4}});
  const auto e = moment_difference(EntryDistribution::CenteredExponential, 10, a, {1, 1, 1, 1}, 50);
  EXPECT_EQ(e.mean, 0.0);
  EXPECT_EQ(e.se, 0.0);
  EXPECT_THROW(moment_difference(EntryDistribution::Gaussian, 10, a, {1, 1, 2, 11}, 5), ConfigError);
  EXPECT_THROW(moment_difference(EntryDistribution::Gaussian, 10, a, {1, 1, 2, 2}, 0), ConfigError);
}

TEST(MomentDifference, ShiftAveragingKeepsMeanAndCutsNoise) {
  const auto quartic = Partition::from_blocks({{1, 2, 3, 4}});
  const auto plain = moment_difference(EntryDistribution::Gaussian, 16, quartic, {2, 2, 2, 2}, 40000,
                                       {.seed = 9, .average_shifts = false});
  const auto avg = moment_difference(EntryDistribution::Gaussian, 16, quartic, {2, 2, 2, 2}, 40000, {.seed = 9});
  EXPECT_LT(avg.se, plain.se);
  EXPECT_NEAR(plain.mean, avg.mean, 5 * std::hypot(plain.se, avg.se));
}

TEST(MomentDifference, DeterministicAcrossWorkers) {
  const auto a = Partition::from_blocks({{1, 2, 3}, {4, 5, 6}});
  const auto x = moment_difference(EntryDistribution::CenteredExponential, 20, a, {1, 1, 1, 2, 2, 2}, 300,
                                   {.seed = 3, .average_shifts = true, .workers = 1});
  const auto y = moment_difference(EntryDistribution::CenteredExponential, 20, a, {1, 1, 1, 2, 2, 2}, 300,
                                   {.seed = 3, .average_shifts = true, .workers = 4});
  EXPECT_EQ(x.mean, y.mean);
  EXPECT_EQ(x.se, y.se);
}

TEST(ScalingFitTest, InconclusiveWhenSignalBelowNoise) {
  const auto fit = scaling_fit({10, 20}, [](long) { return Estimate{1e-6, 1e-5, 10}; });
  EXPECT_TRUE(fit.inconclusive);
  EXPECT_THROW(scaling_fit({10}, [](long) { return Estimate{}; }), ConfigError);
}

TEST(TaylorTerms, LeadingOrderIsMaxOfSingletonsAndOne) {
  for (int n : {2, 4, 6}) {
    for (const auto& p : enumerate_partitions(n)) {
      const int n1 = block_stats(p, n / 2, 0).singletons;
      const auto orders = taylor_term_orders(p, 6);
      int best = std::numeric_limits<int>::min();
      for (const auto& o : orders) {
        if (!o.any_nonzero) continue;
        best = std::max(best, o.best);
        EXPECT_GE(o.n, n1) << p.to_string();
        if (o.nonzero_with_fresh) {
          EXPECT_GE(o.n, 2) << p.to_string();
        }
      }
      EXPECT_EQ(best, -std::max(n1, 1)) << p.to_string();
    }
  }
}

TEST(TaylorTerms, FirstOrderTermSurvivesWithoutSingletons) {
  // With no singleton blocks, placing the single r on a block index gives a
  // nonzero n = 1 term (for the Gaussian quartic: E ytilde^4 (1/M - ytilde^2) = -12/M^3).
  const auto orders = taylor_term_orders(Partition::from_blocks({{1, 2, 3, 4}}), 3);
  EXPECT_TRUE(orders[0].any_nonzero);
  EXPECT_FALSE(orders[0].nonzero_with_fresh);
  EXPECT_EQ(orders[0].best, -1);
}

TEST(SumBound, BoundMonotone) {
  BlockStats s;
  const double base = sum_bound_value(100, 1, 1, s);
  s.singletons = 1;
  EXPECT_GT(sum_bound_value(100, 1, 1, s), base);
  s.paired = 1;
  EXPECT_GT(sum_bound_value(100, 1, 1, s), sum_bound_value(100, 1, 1, BlockStats{1, 0, 0}));
}

TEST(SumBound, SingleBlockMatchesSpectralTrace) {
  const auto x = gaussian_correlation(12, 6, 31);
  const cplx z{1.5, 0.2};
  const Eigen::MatrixXd x1 = x.entries().rightCols(5);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(x1 * x1.transpose()));
  const auto& u = es.eigenvectors();
  const auto& lam = es.eigenvalues();
  auto diag = [&](long k, int power) {
    cplx acc = 0.0;
    for (Eigen::Index j = 0; j < lam.size(); ++j) acc += u(k, j) * u(k, j) / std::pow(lam(j) - z, power);
    return acc;
  };
  for (auto [a, b] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 0}, std::pair{1, 2}}) {
    const auto p = Partition::from_blocks({[&] {
      std::vector<int> all(static_cast<std::size_t>(2 * a + 2 * b));
      std::iota(all.begin(), all.end(), 1);
      return all;
    }()});
    cplx expect = 0.0;
    for (long k = 0; k < 12; ++k) expect += std::pow(diag(k, 2), a) * std::pow(diag(k, 1), b);
    expect *= std::pow(z.imag(), a);
    const auto r = sum_bound_check(x, z, p, a, b);
    EXPECT_LT(std::abs(r.sum - expect), 1e-10 * std::max(1.0, std::abs(expect))) << a << "," << b;
  }
  // a = 1, b = 0 single block is the trace of calG^2.
  cplx tr = 0.0;
  for (Eigen::Index j = 0; j < lam.size(); ++j) tr += 1.0 / ((lam(j) - z) * (lam(j) - z));
  EXPECT_LT(std::abs(sum_bound_check(x, z, Partition::from_blocks({{1, 2}}), 1, 0).sum - z.imag() * tr), 1e-10);
}

TEST(SumBound, PartitionsCompleteTheFullSum) {
  const auto x = gaussian_correlation(8, 4, 32);
  const cplx z{2.0, 0.1};
  const auto [y, zm] = removed_resolvent_matrices(x, z);
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}}) {
    cplx total = 0.0;
    for (const auto& p : enumerate_partitions(2 * a + 2 * b)) total += partition_sum(y, zm, p, a, b);
    const cplx expect = std::pow(y.sum(), a) * std::pow(zm.sum(), b);
    EXPECT_LT(std::abs(total - expect), 1e-9 * std::abs(expect)) << a << "," << b;
  }
}

TEST(SumBound, ConjugationFlag) {
  const auto x = gaussian_correlation(8, 4, 33);
  const cplx z{2.0, 0.1};
  const auto p = Partition::from_blocks({{1, 3}, {2, 4}});
  const auto plain = sum_bound_check(x, z, p, 1, 1);
  const auto both = sum_bound_check(x, z, p, 1, 1, 0b11);
  EXPECT_LT(std::abs(both.sum - std::conj(plain.sum)), 1e-12 * std::abs(plain.sum));
}

TEST(SumBound, SmallInstanceWithinCalibratedConstant) {
  const long m = 12, n = 6;
  const MPLaw law = MPLaw::for_dims(m, n);
  const cplx z = edge_parameter(law, n, 0.05);
  for (std::uint64_t t = 0; t < 3; ++t) {
    const auto x = gaussian_correlation(m, n, 40 + t);
    for (const auto& p : enumerate_partitions(4)) {
      const auto r = sum_bound_check(x, z, p, 1, 1);
      EXPECT_TRUE(r.passed()) << p.to_string() << " ratio=" << r.ratio();
    }
  }
  EXPECT_THROW(sum_bound_check(gaussian_correlation(25, 6, 1), z, Partition::from_blocks({{1, 2}}), 1, 0), ConfigError);
  EXPECT_THROW(sum_bound_check(gaussian_correlation(12, 6, 1), z, Partition::from_blocks({{1, 2}}), 0, 1), ConfigError);
}
