#include "trigspline/fourier.hpp"

#include <cmath>
#include <string>

#include "detail/sum_util.hpp"

namespace trigspline {

namespace {

void check_order(const DiscreteSpectrum& spec, int m) {
  if (m < 0 || m > spec.harmonics())
    fail(errc::order_out_of_range, "order m = " + std::to_string(m) + " outside [0, " +
                                       std::to_string(spec.harmonics()) + "]");
}

}  // namespace

DiscreteSpectrum bessel_coefficients(const SampleSet& samples) {
  const int N = samples.grid.size();
  const int n = samples.grid.harmonics();
  DiscreteSpectrum spec;
  spec.grid_variant = samples.grid.variant();
  spec.a.resize(static_cast<size_t>(n));
  spec.b.resize(static_cast<size_t>(n));

  detail::Kahan s0;
  for (int j = 0; j < N; ++j) s0.add(samples.values[static_cast<size_t>(j)]);
  spec.a0 = (2.0 / N) * s0.value();

  // One pass per coefficient: matching the plain sin/cos call pattern of
  // the quadrature oracle keeps the N-panel rectangle rule bit-identical
  // (a fused sincos can differ in the last ulp).
  for (int k = 1; k <= n; ++k) {
    detail::Kahan sa;
    for (int j = 0; j < N; ++j) {
      const double arg = static_cast<double>(k) * samples.grid.node(j);
      sa.add(samples.values[static_cast<size_t>(j)] * std::cos(arg));
    }
    spec.a[static_cast<size_t>(k - 1)] = (2.0 / N) * sa.value();
    detail::Kahan sb;
    for (int j = 0; j < N; ++j) {
      const double arg = static_cast<double>(k) * samples.grid.node(j);
      sb.add(samples.values[static_cast<size_t>(j)] * std::sin(arg));
    }
    spec.b[static_cast<size_t>(k - 1)] = (2.0 / N) * sb.value();
  }
  return spec;
}

double eval_trig_polynomial(const DiscreteSpectrum& spec, int m, double x) {
  check_order(spec, m);
  detail::Kahan acc;
  for (int k = 1; k <= m; ++k) {
    const double arg = static_cast<double>(k) * x;
    acc.add(spec.a[static_cast<size_t>(k - 1)] * std::cos(arg));
    acc.add(spec.b[static_cast<size_t>(k - 1)] * std::sin(arg));
  }
  return spec.a0 / 2.0 + acc.value();
}

DiscreteSpectrum truncate_spectrum(const DiscreteSpectrum& spec, int m) {
  check_order(spec, m);
  DiscreteSpectrum out = spec;
  for (int k = m + 1; k <= spec.harmonics(); ++k) {
    out.a[static_cast<size_t>(k - 1)] = 0.0;
    out.b[static_cast<size_t>(k - 1)] = 0.0;
  }
  return out;
}

double residual_discrete(const DiscreteSpectrum& spec, int m, const SampleSet& samples) {
  check_order(spec, m);
  if (spec.grid_variant != samples.grid.variant() || spec.grid_size() != samples.grid.size())
    fail(errc::incompatible, "spectrum and samples live on different grids");
  detail::Kahan acc;
  for (int j = 0; j < samples.grid.size(); ++j) {
    const double d =
        eval_trig_polynomial(spec, m, samples.grid.node(j)) - samples.values[static_cast<size_t>(j)];
    acc.add(d * d);
  }
  return acc.value();
}

}  // namespace trigspline
