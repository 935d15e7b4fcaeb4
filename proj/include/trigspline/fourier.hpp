#pragma once

#include <vector>

#include "trigspline/grid.hpp"

namespace trigspline {

// Discrete Fourier coefficients a0, a_k, b_k (k = 1..n) of a sample set on
// an odd grid, or a plain bandlimited coefficient container when used as a
// continuum Fourier spectrum.
struct DiscreteSpectrum {
  double a0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;
  int grid_variant = 0;

  int harmonics() const { return static_cast<int>(a.size()); }
  int grid_size() const { return 2 * harmonics() + 1; }
};

// a0 = (2/N) sum f_j, a_k = (2/N) sum f_j cos(k x_j), b_k likewise with sin,
// for k = 1..n. Compensated summation keeps the full-order residual at
// machine-epsilon scale.
DiscreteSpectrum bessel_coefficients(const SampleSet& samples);

// a0/2 + sum_{k<=m} (a_k cos kx + b_k sin kx). Requires 0 <= m <= n.
double eval_trig_polynomial(const DiscreteSpectrum& spec, int m, double x);

// Zeroes every coefficient with k > m; a0 is kept.
DiscreteSpectrum truncate_spectrum(const DiscreteSpectrum& spec, int m);

// sum_{j=1..N} [T_m(x_j) - f_j]^2 over the sample grid.
double residual_discrete(const DiscreteSpectrum& spec, int m, const SampleSet& samples);

}  // namespace trigspline
