#include "trigspline/smoothing.hpp"

#include <cmath>
#include <string>

#include "detail/sum_util.hpp"

namespace trigspline {

void MultiplierFamily::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    fail(errc::invalid_argument, "alpha must be finite and > 0");
  if (n < 1) fail(errc::invalid_argument, "multiplier family needs n >= 1");
}

double modified_fejer(int k, double alpha, int n) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    fail(errc::invalid_argument, "alpha must be finite and > 0");
  if (n < 1) fail(errc::invalid_argument, "modified Fejer factor needs n >= 1");
  if (k < 0 || k > n)
    fail(errc::invalid_argument,
         "k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  return std::pow(1.0 - static_cast<double>(k) / (n + 1), alpha);
}

std::vector<double> MultiplierFamily::weights() const {
  validate();
  std::vector<double> w(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) w[static_cast<size_t>(k - 1)] = modified_fejer(k, alpha, n);
  return w;
}

TrigSpline smooth_spline(const TrigSpline& s, const MultiplierFamily& fam) {
  fam.validate();
  if (fam.n != s.harmonics())
    fail(errc::incompatible, "multiplier family order " + std::to_string(fam.n) +
                                 " does not match spectrum order " + std::to_string(s.harmonics()));
  return s.with_multipliers(fam.weights());
}

FilterKernel::FilterKernel(std::vector<double> w) : weights(std::move(w)) {
  if (weights.empty() || weights.size() % 2 == 0)
    fail(errc::invalid_filter,
         "filter must have an odd number of weights, got " + std::to_string(weights.size()));
  detail::Kahan sum;
  for (double v : weights) {
    if (!std::isfinite(v)) fail(errc::invalid_filter, "filter weights must be finite");
    sum.add(v);
  }
  if (std::abs(sum.value() - 1.0) > 1e-15)
    fail(errc::invalid_filter,
         "filter weights must sum to 1 (got " + std::to_string(sum.value()) + ")");
  center = static_cast<int>(weights.size()) / 2;
}

FilterKernel FilterKernel::default_low_pass() { return FilterKernel({0.25, 0.5, 0.25}); }

SampleSet smooth_data(const SampleSet& samples, const FilterKernel& kernel) {
  const int N = samples.grid.size();
  const int len = static_cast<int>(kernel.weights.size());
  if (len > N)
    fail(errc::invalid_filter, "filter length " + std::to_string(len) +
                                   " exceeds the grid size " + std::to_string(N));
  std::vector<double> out(static_cast<size_t>(N));
  for (int j = 0; j < N; ++j) {
    detail::Kahan acc;
    for (int o = -kernel.center; o <= kernel.center; ++o) {
      const int idx = ((j + o) % N + N) % N;
      acc.add(kernel.weights[static_cast<size_t>(kernel.center + o)] *
              samples.values[static_cast<size_t>(idx)]);
    }
    out[static_cast<size_t>(j)] = acc.value();
  }
  return SampleSet(samples.grid, std::move(out));
}

}  // namespace trigspline
