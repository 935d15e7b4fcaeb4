#pragma once

#include <optional>
#include <vector>

#include "trigspline/fourier.hpp"
#include "trigspline/grid.hpp"
#include "trigspline/kernels.hpp"
#include "trigspline/regularization.hpp"

namespace trigspline {

// A trigonometric interpolation spline: discrete Fourier coefficients of
// the data, applied to the normalized kernels C_k/hc_k and S_k/hs_k.
// Optionally truncated (least-squares approximation), regularized, or
// smoothed with per-harmonic multipliers. Immutable after construction;
// the with_* helpers return modified copies.
class TrigSpline {
 public:
  static TrigSpline assemble(SplineParams params, DiscreteSpectrum spectrum,
                             std::optional<RegParams> regularization,
                             std::optional<std::vector<double>> multipliers,
                             std::optional<int> truncation);

  const SplineParams& params() const { return params_; }
  const DiscreteSpectrum& spectrum() const { return spectrum_; }
  int harmonics() const { return spectrum_.harmonics(); }
  // Cached interpolation factors hc_k, hs_k, k = 1..n.
  const std::vector<double>& cos_factors() const { return hc_; }
  const std::vector<double>& sin_factors() const { return hs_; }
  const std::optional<RegParams>& regularization() const { return regularization_; }
  const std::optional<std::vector<double>>& multipliers() const { return multipliers_; }
  std::optional<int> truncation() const { return truncation_; }

  TrigSpline with_truncation(int m) const;
  TrigSpline with_regularization(const RegParams& reg) const;  // rejects double application
  TrigSpline with_multipliers(std::vector<double> weights) const;  // likewise

 private:
  TrigSpline() = default;

  SplineParams params_;
  DiscreteSpectrum spectrum_;
  std::vector<double> hc_, hs_;
  std::optional<RegParams> regularization_;
  std::optional<std::vector<double>> multipliers_;
  std::optional<int> truncation_;
};

// Builds the interpolating spline of the samples. The sample grid variant
// must equal params.I2 and the grid size must match params.N.
TrigSpline build_spline(const SampleSet& samples, const SplineParams& params);

// a0/2 + sum_k w_k [a_k C_k(x)/hc_k + b_k S_k(x)/hs_k], with the truncation
// order, multipliers and regularization of s applied.
double eval_spline(const TrigSpline& s, double x);

// Term-wise d-th derivative, d in [1, r-1].
double spline_derivative(const TrigSpline& s, int d, double x);

// Least-squares approximation of order m: keeps harmonics k <= m. The
// kernels are untouched, so the differential properties survive.
TrigSpline approximate_spline(const TrigSpline& s, int m);

// Raw Fourier coefficients of the spline for q = 0..qmax: cos_coef[0] holds
// the constant term a0/2. Used to cross-check quadrature oracles.
struct TermTable {
  std::vector<double> cos_coef;
  std::vector<double> sin_coef;
};

TermTable spline_term_table(const TrigSpline& s, long qmax);

}  // namespace trigspline
