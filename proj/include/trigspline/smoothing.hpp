#pragma once

#include <vector>

#include "trigspline/grid.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {

// Modified Fejer multipliers lambda_k = (1 - k/(n+1))^alpha, alpha > 0.
// alpha = 1 gives the classical Fejer triangle.
struct MultiplierFamily {
  double alpha = 1.0;
  int n = 0;

  void validate() const;
  std::vector<double> weights() const;  // k = 1..n
};

double modified_fejer(int k, double alpha, int n);

// Copy of s with the family's weights attached; term k of the spline is
// then scaled by lambda_k. The family order must match the spectrum.
TrigSpline smooth_spline(const TrigSpline& s, const MultiplierFamily& fam);

// Symmetric-by-position periodic convolution filter: odd number of weights
// summing to 1 (to 1e-15), centered on the middle entry.
struct FilterKernel {
  explicit FilterKernel(std::vector<double> w);

  static FilterKernel default_low_pass();  // [1/4, 1/2, 1/4]

  std::vector<double> weights;
  int center = 0;
};

// Circular convolution of the sample values with the filter; the grid is
// unchanged. Requires the filter to be no longer than the grid.
SampleSet smooth_data(const SampleSet& samples, const FilterKernel& kernel);

}  // namespace trigspline
