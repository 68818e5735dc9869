#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "rmtlab/mplaw.hpp"
#include "rmtlab/stats.hpp"

using namespace rmtlab;

namespace {

// Independent oracle: tanh-sinh quadrature of the density, which handles the
// square-root endpoint behaviour.
double quad_mass(const MPLaw& law, double lo, double hi) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate([&](double x) { return law.density(x); }, lo, hi, 1e-14);
}

}  // namespace

TEST(MPLaw, Edges) {
  const MPLaw law(0.25);
  EXPECT_DOUBLE_EQ(law.lambda_plus(), 2.25);
  EXPECT_DOUBLE_EQ(law.lambda_minus(), 0.25);
  EXPECT_GT(MPLaw(4.0).lambda_minus(), 0.0);
  EXPECT_THROW(MPLaw(1.0), ConfigError);
  EXPECT_THROW(MPLaw(0.0), ConfigError);
}

TEST(MPLaw, DensitySupport) {
  const MPLaw law(0.5);
  EXPECT_EQ(law.density(law.lambda_plus()), 0.0);
  EXPECT_EQ(law.density(law.lambda_minus()), 0.0);
  EXPECT_EQ(law.density(law.lambda_plus() + 0.1), 0.0);
  EXPECT_EQ(law.density(0.0), 0.0);
  EXPECT_EQ(law.density(-1.0), 0.0);
  EXPECT_GT(law.density(1.0), 0.0);
  EXPECT_EQ(MPLaw(2.0).density(0.0), 0.0);
}

TEST(MPLaw, TotalMassByQuadrature) {
  for (double d : {0.25, 0.5, 2.0, 4.0}) {
    const MPLaw law(d);
    EXPECT_NEAR(quad_mass(law, law.lambda_minus(), law.lambda_plus()), std::min(1.0, 1.0 / d), 1e-10) << d;
  }
}

TEST(MPLaw, ClosedFormMassMatchesQuadrature) {
  for (double d : {0.1, 0.25, 0.5, 0.8, 1.3, 2.0, 4.0, 9.0}) {
    const MPLaw law(d);
    for (int i = 1; i < 20; ++i) {
      const double x = law.lambda_minus() + (law.lambda_plus() - law.lambda_minus()) * i / 20.0;
      EXPECT_NEAR(law.lower_mass(x), quad_mass(law, law.lambda_minus(), x), 1e-11) << "d=" << d << " x=" << x;
    }
    EXPECT_NEAR(law.lower_mass(law.lambda_plus() - 1e-15), law.total_mass(), 1e-7);
  }
}

TEST(MPLaw, CdfIncludesAtom) {
  const MPLaw law(4.0);
  EXPECT_NEAR(law.cdf(0.0), 0.75, 1e-15);
  EXPECT_NEAR(law.cdf(100.0), 1.0, 1e-15);
  EXPECT_EQ(law.cdf(-0.1), 0.0);
  EXPECT_NEAR(MPLaw(0.5).cdf(MPLaw(0.5).lambda_plus()), 1.0, 1e-15);
}

TEST(Stieltjes, EdgeLimit) {
  const MPLaw law(0.25);
  const cplx m = law.stieltjes({2.25, 1e-12});
  EXPECT_NEAR(m.real(), -4.0 / 3.0, 1e-5);
  EXPECT_NEAR(m.imag(), 0.0, 1e-5);
}

TEST(Stieltjes, SelfConsistencyGrid) {
  for (double d : {0.25, 0.5, 2.0, 4.0}) {
    const MPLaw law(d);
    double worst = 0.0;
    for (int a = 0; a < 100; ++a) {
      for (int b = 0; b < 100; ++b) {
        const double e = -2.0 + (law.lambda_plus() + 4.0) * a / 99.0;
        const double eta = std::pow(10.0, -6.0 + 7.0 * b / 99.0);
        const cplx z(e, eta);
        worst = std::max(worst, law.self_consistency_residual(z));
        EXPECT_GT(law.stieltjes(z).imag(), 0.0);
      }
    }
    EXPECT_LE(worst, 1e-12) << d;
  }
}

TEST(Stieltjes, LargeZAsymptotics) {
  const MPLaw law(0.5);
  for (cplx z : {cplx(1e4, 1e4), cplx(-3e3, 2e3), cplx(0.0, 5e4)}) {
    const cplx m = law.stieltjes(z);
    EXPECT_LT(std::abs(m + 1.0 / z), 10.0 / std::norm(z));
  }
}

TEST(Stieltjes, MatchesDensityQuadrature) {
  // m(z) = (1 - 1/d)_+ / (0 - z) + int rho(x)/(x - z) dx, evaluated by quadrature.
  boost::math::quadrature::gauss_kronrod<double, 61> gk;
  for (double d : {0.3, 3.0}) {
    const MPLaw law(d);
    const cplx z(1.1, 0.7);
    auto part = [&](bool imag) {
      return gk.integrate(
          [&](double x) {
            const cplx v = law.density(x) / (x - z);
            return imag ? v.imag() : v.real();
          },
          law.lambda_minus(), law.lambda_plus(), 15, 1e-13);
    };
    cplx expect(part(false), part(true));
    expect += std::max(0.0, 1.0 - 1.0 / d) / (-z);
    EXPECT_LT(std::abs(law.stieltjes(z) - expect), 1e-10) << d;
  }
}

TEST(Stieltjes, DensityInversion) {
  const MPLaw law(0.5);
  for (double x : {0.2, 0.8, 1.5, 2.5}) {
    EXPECT_NEAR(law.stieltjes({x, 1e-6}).imag() / std::numbers::pi, law.density(x), 1e-4) << x;
  }
}

TEST(Stieltjes, DomainError) {
  const MPLaw law(0.5);
  EXPECT_THROW(law.stieltjes({1.0, 0.0}), DomainError);
  EXPECT_THROW(law.stieltjes({1.0, -1.0}), DomainError);
}

TEST(Stieltjes, EdgeMagnitudes) {
  // Near the upper edge at eta0 = N^{-2/3-eps}: |m| bounded above and below,
  // and Im m decays like N^{-1/3}.
  const MPLaw law(0.5);
  const double eps = 0.05;
  std::vector<double> ns, ims;
  for (double n = 1e3; n <= 1e6 + 1; n *= 10) {
    const double eta = std::pow(n, -2.0 / 3.0 - eps);
    double worst_im = 0.0;
    for (double off : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      const double e = law.lambda_plus() + off * std::pow(n, -2.0 / 3.0 + eps);
      const cplx m = law.stieltjes({e, eta});
      EXPECT_LE(std::abs(m), 10.0);
      EXPECT_GE(std::abs(m), 0.1);
      worst_im = std::max(worst_im, m.imag());
    }
    ns.push_back(n);
    ims.push_back(law.stieltjes({law.lambda_plus(), eta}).imag());
    EXPECT_LE(worst_im, 10.0 * std::pow(n, -1.0 / 3.0 + eps));
  }
  // At E = lambda_+ exactly, Im m ~ sqrt(eta) = N^{-1/3 - eps/2}.
  const auto fit = log_log_fit(ns, ims);
  EXPECT_NEAR(fit.slope, -1.0 / 3.0, 0.05);
}

TEST(ClassicalLocations, FullMassAndDefiningIntegral) {
  for (double d : {0.25, 0.5}) {
    const MPLaw law(d);
    const long n = 200;
    const auto g = classical_locations(law, n);
    EXPECT_NEAR(g.values.back(), law.lambda_minus(), 1e-8);
    EXPECT_EQ(g.resolved(), n);
    for (long j = 1; j <= n; ++j) {
      const double gj = g.values[j - 1];
      EXPECT_NEAR(quad_mass(law, gj, law.lambda_plus()), double(j) / n, 1e-8) << j;
    }
    for (long j = 1; j < n; ++j) EXPECT_GT(g.values[j - 1], g.values[j]);
    EXPECT_LT(g.values[0], law.lambda_plus());
  }
}

TEST(ClassicalLocations, PinnedBeyondMass) {
  const MPLaw law(2.0);  // mass 1/2 on the positive axis
  const long n = 100;
  const auto g = classical_locations(law, n);
  EXPECT_EQ(g.resolved(), 50);
  for (long j = 51; j <= n; ++j) {
    EXPECT_TRUE(g.pinned[j - 1]);
    EXPECT_EQ(g.values[j - 1], law.lambda_minus());
  }
  EXPECT_NEAR(g.values[49], law.lambda_minus(), 1e-8);
  EXPECT_NEAR(law.upper_mass(g.values[9]), 0.1, 1e-12);
}

TEST(Varphi, ClosedForms) {
  EXPECT_NEAR(varphi(std::exp(std::numbers::e)), std::numbers::e, 1e-12);
  const double e2 = std::numbers::e * std::numbers::e;
  // log N = e^2 and log log N = 2, so the value is (e^2)^2.
  EXPECT_NEAR(varphi(std::exp(e2)) / std::exp(4.0), 1.0, 1e-12);
  double prev = varphi(16);
  for (int n = 17; n < 5000; n += 7) {
    const double v = varphi(n);
    EXPECT_GT(v, prev);
    prev = v;
  }
  EXPECT_THROW(varphi(2), DomainError);
  EXPECT_THROW(varphi(std::numbers::e), DomainError);
}

TEST(SpectralDomain, StandardGridInsideDomain) {
  const MPLaw law(4.0);
  const auto dom = SpectralDomain::standard(law, 200);
  EXPECT_NO_THROW(dom.validate(law));
  const auto zs = dom.grid();
  EXPECT_EQ(zs.size(), 48u * 12u);
  for (auto z : zs) {
    EXPECT_GE(z.real(), law.lambda_minus() / 5 - 1e-15);
    EXPECT_LE(z.real(), 5 * law.lambda_plus() + 1e-12);
    EXPECT_GE(z.imag(), std::pow(200.0, -0.9) * (1 - 1e-12));
    EXPECT_LE(z.imag(), 1.0 + 1e-12);
  }
  SpectralDomain bad = dom;
  bad.eta_max = 100.0;
  EXPECT_THROW(bad.validate(law), ConfigError);
}
