#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <string_view>

#include "rmtlab/errors.hpp"

namespace rmtlab {

/// SplitMix64 finalizer. Used to derive independent stream keys from a base seed.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based key derivation: the result depends only on (base, a, b), so
/// any (trial, column) pair can be regenerated without replaying other draws.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) noexcept {
  return mix64(mix64(base ^ mix64(a + 0x632be59bd9b4e019ULL)) ^ mix64(b + 0x8cb92ba72f3d8dd7ULL));
}

enum class EntryDistribution { Gaussian, Rademacher, CenteredExponential, CenteredUniform };

inline std::string_view to_string(EntryDistribution d) {
  switch (d) {
    case EntryDistribution::Gaussian: return "gaussian";
    case EntryDistribution::Rademacher: return "rademacher";
    case EntryDistribution::CenteredExponential: return "exponential";
    case EntryDistribution::CenteredUniform: return "uniform";
  }
  return "unknown";
}

inline EntryDistribution parse_distribution(std::string_view name) {
  if (name == "gaussian") return EntryDistribution::Gaussian;
  if (name == "rademacher") return EntryDistribution::Rademacher;
  if (name == "exponential") return EntryDistribution::CenteredExponential;
  if (name == "uniform") return EntryDistribution::CenteredUniform;
  throw ConfigError("unknown entry distribution '" + std::string(name) +
                    "' (expected gaussian, rademacher, exponential, uniform)");
}

/// Deterministic random stream. The engine is std::mt19937_64; the transforms
/// to uniform/normal/exponential are written out so that output does not
/// depend on the standard library's distribution implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : engine_(key) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // Box-Muller; 1 - u lies in (0, 1] so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  double exponential() { return -std::log(1.0 - uniform()); }

  double sign() { return (engine_() >> 63) ? 1.0 : -1.0; }

  /// One standardized draw q with E q = 0 and E q^2 = 1.
  double entry(EntryDistribution d) {
    switch (d) {
      case EntryDistribution::Gaussian: return normal();
      case EntryDistribution::Rademacher: return sign();
      case EntryDistribution::CenteredExponential: return exponential() - 1.0;
      case EntryDistribution::CenteredUniform: return std::numbers::sqrt3 * (2.0 * uniform() - 1.0);
    }
    return 0.0;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rmtlab
