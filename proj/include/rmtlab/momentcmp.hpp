#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rmtlab/ensemble.hpp"
#include "rmtlab/errors.hpp"
#include "rmtlab/parallel.hpp"
#include "rmtlab/random.hpp"
#include "rmtlab/spectra.hpp"
#include "rmtlab/stats.hpp"

namespace rmtlab {

/// Set partition of {1..n}. `label[i]` is the block of element i + 1; blocks
/// are numbered in order of their least element, and elements within a block
/// are increasing.
struct Partition {
  int n = 0;
  std::vector<int> label;
  std::vector<std::vector<int>> blocks;  // 1-based elements

  static Partition from_labels(std::vector<int> labels) {
    Partition p;
    p.n = static_cast<int>(labels.size());
    // Relabel by first appearance so the representation is canonical.
    std::vector<int> remap;
    for (int& l : labels) {
      if (l < 0) throw ConfigError("Partition: negative block label");
      if (static_cast<std::size_t>(l) >= remap.size()) remap.resize(static_cast<std::size_t>(l) + 1, -1);
      if (remap[static_cast<std::size_t>(l)] < 0) remap[static_cast<std::size_t>(l)] = static_cast<int>(p.blocks.size()), p.blocks.emplace_back();
      l = remap[static_cast<std::size_t>(l)];
    }
    p.label = std::move(labels);
    for (int i = 0; i < p.n; ++i) p.blocks[static_cast<std::size_t>(p.label[static_cast<std::size_t>(i)])].push_back(i + 1);
    return p;
  }

  static Partition from_blocks(const std::vector<std::vector<int>>& blocks) {
    int n = 0;
    for (const auto& b : blocks) {
      if (b.empty()) throw ConfigError("Partition: empty block");
      for (int e : b) n = std::max(n, e);
    }
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      for (int e : blocks[bi]) {
        if (e < 1 || labels[static_cast<std::size_t>(e - 1)] >= 0) {
          throw ConfigError("Partition: blocks must be disjoint subsets of {1..n}");
        }
        labels[static_cast<std::size_t>(e - 1)] = static_cast<int>(bi);
      }
    }
    for (int l : labels) {
      if (l < 0) throw ConfigError("Partition: blocks do not cover {1..n}");
    }
    return from_labels(std::move(labels));
  }

  std::size_t block_count() const { return blocks.size(); }
  std::size_t block_size(std::size_t b) const { return blocks[b].size(); }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      s += b ? ",{" : "{";
      for (std::size_t i = 0; i < blocks[b].size(); ++i) s += (i ? "," : "") + std::to_string(blocks[b][i]);
      s += "}";
    }
    return s + "}";
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.label == b.label; }
};

/// All partitions of {1..n}, 1 <= n <= 6, via restricted growth strings.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1 || n > 6) throw ConfigError("enumerate_partitions: n must be in [1, 6]");
  std::vector<Partition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.push_back(Partition::from_labels(rgs));
    // Next restricted growth string: rgs[i] <= 1 + max(rgs[0..i-1]).
    int i = n - 1;
    for (; i > 0; --i) {
      const int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[static_cast<std::size_t>(i)] < cap) break;
    }
    if (i == 0) break;
    ++rgs[static_cast<std::size_t>(i)];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

/// Strict: indices equal within blocks and distinct across blocks. Relaxed:
/// cross-block distinctness is waived whenever one of the two positions lies
/// in a block of exactly two elements.
inline int indicator(const Partition& a, const std::vector<long>& k, bool strict) {
  if (static_cast<int>(k.size()) != a.n) throw ConfigError("indicator: index vector length does not match partition");
  for (int i = 0; i < a.n; ++i) {
    for (int j = i + 1; j < a.n; ++j) {
      const int bi = a.label[static_cast<std::size_t>(i)], bj = a.label[static_cast<std::size_t>(j)];
      const bool eq = k[static_cast<std::size_t>(i)] == k[static_cast<std::size_t>(j)];
      if (bi == bj) {
        if (!eq) return 0;
      } else if (eq) {
        if (strict) return 0;
        if (a.block_size(static_cast<std::size_t>(bi)) != 2 && a.block_size(static_cast<std::size_t>(bj)) != 2) return 0;
      }
    }
  }
  return 1;
}

struct BlockStats {
  int singletons = 0;      // N(A,1)
  int paired = 0;          // N(A,2)
  int two_triples = 0;     // I_(A,3)
};

inline BlockStats block_stats(const Partition& p, int a, int b) {
  if (a < 0 || b < 0 || p.n != 2 * a + 2 * b) throw ConfigError("block_stats: partition size must equal 2a + 2b");
  BlockStats s;
  for (const auto& blk : p.blocks) {
    if (blk.size() == 1) ++s.singletons;
    // {2i-1, 2i} with a < i <= a + b
    if (blk.size() == 2 && blk[0] % 2 == 1 && blk[1] == blk[0] + 1 && (blk[1] / 2) > a) ++s.paired;
  }
  s.two_triples = (a + b == 3 && p.blocks.size() == 2 && p.blocks[0].size() == 3 && p.blocks[1].size() == 3) ? 1 : 0;
  return s;
}

/// Predicted exponent -(a+b) - max(N(A,1), 1) of the moment difference.
inline int predicted_moment_exponent(const Partition& p, int a, int b) {
  return -(a + b) - std::max(block_stats(p, a, b).singletons, 1);
}

// Moment differences -------------------------------------------------------------

namespace detail {

inline double double_factorial_odd(int m) {  // (m-1)!! for even m
  double r = 1.0;
  for (int i = m - 1; i > 1; i -= 2) r *= i;
  return r;
}

inline void require_index_vector(const Partition& a, const std::vector<long>& k, long m) {
  if (static_cast<int>(k.size()) != a.n) throw ConfigError("index vector length does not match partition");
  for (long v : k) {
    if (v < 1 || v > m) throw ConfigError("index " + std::to_string(v) + " outside [1, M]");
  }
}

}  // namespace detail

/// Exact E prod y - E prod ytilde for Gaussian entries, where y is uniform on
/// the unit sphere of R^M and ytilde ~ N(0, I/M), for the pattern with one
/// distinct index per block of A.
inline double gaussian_moment_difference_exact(const Partition& a, long m) {
  if (m < 1) throw ConfigError("gaussian_moment_difference_exact: M must be >= 1");
  double num = 1.0;
  int half = 0;
  for (const auto& blk : a.blocks) {
    const int s = static_cast<int>(blk.size());
    if (s % 2) return 0.0;
    num *= detail::double_factorial_odd(s);
    half += s / 2;
  }
  double sphere = num, gauss = num;
  for (int r = 0; r < half; ++r) {
    sphere /= static_cast<double>(m) + 2.0 * r;
    gauss /= static_cast<double>(m);
  }
  return sphere - gauss;
}

struct MomentDifferenceOptions {
  std::uint64_t seed = 1;
  /// Average each trial over the M cyclic relabelings k -> k + s (mod M). By
  /// exchangeability this leaves the expectation unchanged and cuts the variance.
  bool average_shifts = true;
  unsigned workers = default_workers();
};

/// Per-trial values of prod y_{k_i} - prod ytilde_{k_i}, with y = ytilde / |ytilde|
/// computed from the same draw. All zeros when I(A,k) = 0.
inline std::vector<double> moment_difference_samples(EntryDistribution dist, long m, const Partition& a,
                                                     const std::vector<long>& k, long trials,
                                                     const MomentDifferenceOptions& opt = {}) {
  detail::require_index_vector(a, k, m);
  if (trials < 1) throw ConfigError("moment_difference: trials must be >= 1");
  if (!indicator(a, k, true)) return std::vector<double>(static_cast<std::size_t>(trials), 0.0);

  // Distinct index per block and the power it carries.
  std::vector<long> idx(a.block_count());
  std::vector<int> pow(a.block_count());
  for (std::size_t b = 0; b < a.block_count(); ++b) {
    idx[b] = k[static_cast<std::size_t>(a.blocks[b][0] - 1)] - 1;
    pow[b] = static_cast<int>(a.block_size(b));
  }
  const long shifts = opt.average_shifts ? m : 1;
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<double> values(static_cast<std::size_t>(trials));
  const std::size_t done = parallel_for(
      values.size(),
      [&](std::size_t t) {
        RandomStream rng(derive_seed(opt.seed, 0x6d6f6dULL, t));
        std::vector<double> yt(static_cast<std::size_t>(m));
        double norm2 = 0.0;
        for (auto& v : yt) {
          v = scale * rng.entry(dist);
          norm2 += v * v;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        double acc = 0.0;
        for (long s = 0; s < shifts; ++s) {
          double pt = 1.0, py = 1.0;
          for (std::size_t b = 0; b < idx.size(); ++b) {
            const double v = yt[static_cast<std::size_t>((idx[b] + s) % m)];
            for (int p = 0; p < pow[b]; ++p) {
              pt *= v;
              py *= v * inv;
            }
          }
          acc += py - pt;
        }
        values[t] = acc / static_cast<double>(shifts);
      },
      opt.workers);
  values.resize(done);
  return values;
}

/// Coupled Monte Carlo estimate of E(I(A,k) prod y_{k_i}) - E(I(A,k) prod ytilde_{k_i}).
inline Estimate moment_difference(EntryDistribution dist, long m, const Partition& a, const std::vector<long>& k,
                                  long trials, const MomentDifferenceOptions& opt = {}) {
  return estimate_of(moment_difference_samples(dist, m, a, k, trials, opt));
}

/// E ytilde^3 - E y^3 for a single coordinate (the standardized-versus-raw third moment gap).
inline Estimate third_moment_gap(EntryDistribution dist, long m, long trials, const MomentDifferenceOptions& opt = {}) {
  const auto a = Partition::from_blocks({{1, 2, 3}});
  auto e = moment_difference(dist, m, a, {1, 1, 1}, trials, opt);
  e.mean = -e.mean;
  return e;
}

struct ScalingFit {
  LinearFit fit;
  std::vector<double> m_grid;
  std::vector<Estimate> points;
  bool inconclusive = false;  // some point had |mean| < 3 SE
};

/// Slope of log|difference| against log M from Monte Carlo points.
template <class PointFn>
ScalingFit scaling_fit(const std::vector<long>& m_grid, PointFn&& point) {
  if (m_grid.size() < 2) throw ConfigError("scaling_fit: needs >= 2 grid points");
  ScalingFit out;
  std::vector<double> ys;
  for (long m : m_grid) {
    const Estimate e = point(m);
    out.m_grid.push_back(static_cast<double>(m));
    out.points.push_back(e);
    ys.push_back(e.mean);
    if (!(std::abs(e.mean) >= 3.0 * e.se) || e.mean == 0.0) out.inconclusive = true;
  }
  if (!out.inconclusive) out.fit = log_log_fit(out.m_grid, ys);
  return out;
}

// Taylor-term structure ----------------------------------------------------------

/// For the expansion of the moment difference in powers of sum_r (1/M - ytilde_r^2),
/// a term with n factors places each r_j either on the index of some block of
/// A or on a fresh index. Its expectation is generically nonzero only if every
/// singleton block receives at least one r and every fresh index occurs at
/// least twice. Such a term has size M^{-(a+b) - n + f}, f = number of fresh
/// indices. This records, for each n, the largest -n + f over nonzero patterns.
struct TaylorTermOrder {
  int n = 0;
  bool any_nonzero = false;
  int best = std::numeric_limits<int>::min();  // max of -n + f
  bool nonzero_with_fresh = false;             // some nonzero pattern uses a fresh index
};

inline std::vector<TaylorTermOrder> taylor_term_orders(const Partition& a, int n_max) {
  if (n_max < 1 || n_max > 10) throw ConfigError("taylor_term_orders: n_max must be in [1, 10]");
  const int nb = static_cast<int>(a.block_count());
  std::vector<TaylorTermOrder> out;
  for (int n = 1; n <= n_max; ++n) {
    TaylorTermOrder rec;
    rec.n = n;
    // Assignment codes: [0, nb) = block, nb + c = fresh class c (canonical order).
    std::vector<int> code(static_cast<std::size_t>(n), 0);
    // Fresh classes are opened in order, so each pattern is visited once.
    std::function<void(int, int)> rec_fn = [&](int pos, int used) {
      if (pos == n) {
        std::vector<int> block_hits(static_cast<std::size_t>(nb), 0), fresh_count(static_cast<std::size_t>(n), 0);
        int f = 0;
        for (int c : code) {
          if (c < nb) ++block_hits[static_cast<std::size_t>(c)];
          else {
            f = std::max(f, c - nb + 1);
            ++fresh_count[static_cast<std::size_t>(c - nb)];
          }
        }
        for (int b = 0; b < nb; ++b) {
          if (a.block_size(static_cast<std::size_t>(b)) == 1 && block_hits[static_cast<std::size_t>(b)] == 0) return;
        }
        for (int c = 0; c < f; ++c) {
          if (fresh_count[static_cast<std::size_t>(c)] < 2) return;
        }
        rec.any_nonzero = true;
        rec.best = std::max(rec.best, -n + f);
        if (f > 0) rec.nonzero_with_fresh = true;
        return;
      }
      for (int c = 0; c <= nb + used; ++c) {
        code[static_cast<std::size_t>(pos)] = c;
        rec_fn(pos + 1, c == nb + used ? used + 1 : used);
      }
    };
    rec_fn(0, 0);
    out.push_back(rec);
  }
  return out;
}

// Brute-force sum bound ------------------------------------------------------------

struct SumBound {
  std::complex<double> sum;
  double lhs = 0.0;    // |eta^a sum_k I(A,k) Y...Y Z...Z|
  double bound = 0.0;  // (N^{2/3})^{a+b} (N^{1/2})^{N1 + I3} (N^{1/3})^{N2}
  double ratio() const { return bound > 0 ? lhs / bound : std::numeric_limits<double>::infinity(); }
  bool passed(double constant = 50.0) const { return lhs <= constant * bound; }
};

inline double sum_bound_value(double n, int a, int b, const BlockStats& s) {
  return std::pow(n, 2.0 / 3.0 * (a + b)) * std::pow(n, 0.5 * (s.singletons + s.two_triples)) *
         std::pow(n, 1.0 / 3.0 * s.paired);
}

/// Y = (calG^(1))^2 and Z = calG^(1), the M x M removed-column resolvent and its square.
inline std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> removed_resolvent_matrices(const DataMatrix& x, cplx z) {
  if (!(z.imag() > 0.0)) throw DomainError("removed_resolvent_matrices: requires Im z > 0");
  const Eigen::MatrixXd x1 = x.entries().rightCols(x.cols() - 1);
  const Eigen::MatrixXcd h = (x1 * x1.transpose()).cast<cplx>();
  const Eigen::MatrixXcd zmat = (h - z * Eigen::MatrixXcd::Identity(h.rows(), h.cols())).inverse();
  return {zmat * zmat, zmat};
}

/// Sums over index vectors with I(A,k) = 1 by enumerating assignments of
/// values to blocks (M^{#blocks} work). Bit i of `conjugate` replaces the i-th
/// factor by its complex conjugate.
inline cplx partition_sum(const Eigen::MatrixXcd& y, const Eigen::MatrixXcd& zm, const Partition& p, int a, int b,
                          bool strict = true, unsigned conjugate = 0) {
  if (p.n != 2 * a + 2 * b) throw ConfigError("partition_sum: partition size must equal 2a + 2b");
  const long m = static_cast<long>(y.rows());
  const std::size_t nb = p.block_count();
  std::vector<long> val(nb, 0);
  std::vector<long> k(static_cast<std::size_t>(p.n));
  cplx total = 0.0;
  for (;;) {
    for (int i = 0; i < p.n; ++i) k[static_cast<std::size_t>(i)] = val[static_cast<std::size_t>(p.label[static_cast<std::size_t>(i)])];
    bool ok = true;
    if (strict) {
      for (std::size_t u = 0; u < nb && ok; ++u)
        for (std::size_t v = u + 1; v < nb && ok; ++v) ok = val[u] != val[v];
    } else {
      ok = indicator(p, k, false) == 1;
    }
    if (ok) {
      cplx term = 1.0;
      for (int i = 0; i < a + b; ++i) {
        const cplx f = (i < a ? y : zm)(k[2 * i], k[2 * i + 1]);
        term *= (conjugate >> i) & 1u ? std::conj(f) : f;
      }
      total += term;
    }
    std::size_t d = 0;
    while (d < nb && ++val[d] == m) val[d++] = 0;
    if (d == nb) break;
  }
  return total;
}

inline SumBound sum_bound_check(const DataMatrix& x, cplx z, const Partition& p, int a, int b, unsigned conjugate = 0) {
  if (x.rows() > 24) throw ConfigError("sum_bound_check: brute force limited to M <= 24");
  if (a < 1 || a > 3 || a + b < 1 || a + b > 3 || b < 0) throw ConfigError("sum_bound_check: need 1 <= a <= 3, 1 <= a+b <= 3");
  const auto stats = block_stats(p, a, b);
  const auto [y, zm] = removed_resolvent_matrices(x, z);
  SumBound out;
  out.sum = std::pow(z.imag(), a) * partition_sum(y, zm, p, a, b, true, conjugate);
  out.lhs = std::abs(out.sum);
  out.bound = sum_bound_value(static_cast<double>(x.cols()), a, b, stats);
  return out;
}

}  // namespace rmtlab
