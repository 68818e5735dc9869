// Small tour of the library: one correlation matrix against the MP law, then
// rescaled largest eigenvalues of both ensembles against TW1.
//
//   edge_tour [N] [M] [trials]

#include <cstdio>
#include <cstdlib>

#include "rmtlab/rmtlab.hpp"

using namespace rmtlab;

int main(int argc, char** argv) {
  const long n = argc > 1 ? std::atol(argv[1]) : 100;
  const long m = argc > 2 ? std::atol(argv[2]) : 4 * n;
  const long trials = argc > 3 ? std::atol(argv[3]) : 300;

  const MPLaw law = MPLaw::for_dims(m, n);
  const EnsembleSpec spec{m, n, EntryDistribution::CenteredExponential, 7};
  const auto s = eigenvalues(standardize_columns(sample_raw(spec)), EigenMethod::Gram);
  const auto g = classical_locations(law, n);
  std::printf("N=%ld M=%ld d=%.3f  MP support [%.4f, %.4f]\n", n, m, law.d(), law.lambda_minus(), law.lambda_plus());
  std::printf("  j    lambda_j    gamma_j\n");
  for (long j : {1L, 2L, n / 4, n / 2, n - 1, n}) {
    const auto i = static_cast<std::size_t>(j - 1);
    std::printf("%4ld  %9.5f  %9.5f\n", j, s.values[i], g.values[i]);
  }
  std::printf("ESD Kolmogorov distance to MP: %.4f\n", esd_kolmogorov_distance(s, law));
  std::printf("rigidity max |l_j - g_j| N^{2/3} jhat^{1/3}: %.3f\n\n", rigidity_profile(s, law).max_normalized());

  const std::function<double(double)> tw = [](double x) { return tw1_cdf(x); };
  for (auto kind : {EnsembleKind::Correlation, EnsembleKind::Covariance}) {
    const auto [hi, lo] = collect_edge_samples(spec, kind, 1, trials);
    const auto top = hi.column(0);
    std::printf("%-11s mean rescaled lambda_1 %+.3f (TW1 mean %+.3f), KS vs TW1 %.3f\n",
                std::string(to_string(kind)).c_str(), estimate_of(top).mean, Tw1Reference::embedded().mean(),
                ks_statistic(top, tw));
  }
  return 0;
}
