#pragma once

#include <array>
#include <optional>
#include <utility>

#include "trigspline/errors.hpp"

namespace trigspline {

// Truncation control for the kernel series. Summation stops as soon as a
// certified bound on the discarded tail falls below `tolerance`; if that
// cannot be certified within `max_terms` series brackets, evaluation fails
// with a convergence error reporting the bound that was achieved.
struct SeriesConfig {
  double tolerance = 1e-12;
  long max_terms = 1'000'000;
};

// Parameters of a trigonometric spline on an N-point grid.
//
// gamma and eta weight the cosine and sine kernel series; all six entries
// must be nonzero. r >= 1 sets the decay order of the convergence factors
// (v_q = q^-(1+r)), which carries the smoothness of the spline. I1 selects
// the stitching grid, I2 the interpolation grid.
struct SplineParams {
  std::array<double, 3> gamma{1.0, 1.0, 1.0};
  std::array<double, 3> eta{1.0, 1.0, 1.0};
  int r = 1;
  int N = 0;  // odd, >= 3
  int I1 = 0;
  int I2 = 0;
  SeriesConfig series{};

  int n() const { return (N - 1) / 2; }
  void validate() const;
};

enum class KernelKind { cosine, sine };

// Interpolation factors smaller than this are treated as degenerate: the
// spline divides by them.
inline constexpr double kDegenerateFactorThreshold = 1e-9;

// v_k(r) = k^-(1+r): the default convergence factor. Alternate laws with
// the same decay order would have to supply their own tail certificates,
// so the series code below is written against this one.
double convergence_factor(long k, int r);

// Kernel series
//
//   C_k(x) = g1 v_k cos kx
//          + sum_m (-1)^(m I1) [g3 v_(mN+k) cos((mN+k)x) + g2 v_(mN-k) cos((mN-k)x)]
//   S_k(x) = e1 v_k sin kx
//          + sum_m (-1)^(m I1) [e3 v_(mN+k) sin((mN+k)x) - e2 v_(mN-k) sin((mN-k)x)]
//
// and the x-independent interpolation factors
//
//   hc_k = g1 v_k + sum_m (-1)^(m(I1-I2)) [g3 v_(mN+k) + g2 v_(mN-k)]
//   hs_k = e1 v_k + sum_m (-1)^(m(I1-I2)) [e3 v_(mN+k) + e2 v_(mN-k)].
//
// On the interpolation grid C_k(x_j)/hc_k = cos(k x_j) and the sine
// analogue holds, which is what makes the spline interpolate.
//
// All series are summed to a certified absolute tail bound. The direct
// certificate is the integral comparison
//   tail <= (|g2|+|g3|) (MN-k)^-r / (r N)
// after M brackets; when that cannot reach the tolerance in reasonable
// time the evaluator switches to an Euler-Maclaurin tail (non-oscillatory
// part) or summation by parts against the oscillation, both with explicit
// remainder bounds, and near resonance (N x close to a multiple of 2pi) to
// a snap-to-limit bound. Alternating factor series additionally use the
// first-discarded-bracket bound when the brackets are monotone.
double eval_cos_kernel(int k, const SplineParams& p, double x, const SeriesConfig& cfg);
double eval_sin_kernel(int k, const SplineParams& p, double x, const SeriesConfig& cfg);

// hc_k / hs_k. Values with magnitude below kDegenerateFactorThreshold
// raise a degenerate-factor error instead of being returned.
double interp_factor_cos(int k, const SplineParams& p, const SeriesConfig& cfg);
double interp_factor_sin(int k, const SplineParams& p, const SeriesConfig& cfg);

// Regularized kernels C_kR, S_kR: every term at frequency q is weighted by
// tau_q(lambda, p_reg) = 1/(1 + (lambda q)^(2 p_reg)). lambda = 0 reproduces
// the plain kernels exactly.
double eval_regularized_cos_kernel(int k, const SplineParams& p, double lambda, int p_reg,
                                   double x, const SeriesConfig& cfg);
double eval_regularized_sin_kernel(int k, const SplineParams& p, double lambda, int p_reg,
                                   double x, const SeriesConfig& cfg);

// Term-wise d-th derivative of a kernel series. Requires d <= r-1 so the
// differentiated series stays absolutely convergent.
double kernel_derivative(KernelKind kind, int k, const SplineParams& p, int d, double x,
                         const SeriesConfig& cfg,
                         std::optional<std::pair<double, int>> regularization = std::nullopt);

// Diagnostics for tests and verification: the value together with the
// certified tail bound and the number of directly summed brackets.
struct KernelEval {
  double value = 0.0;
  double tail_bound = 0.0;
  long terms = 0;
};

KernelEval eval_kernel_ex(KernelKind kind, int k, const SplineParams& p, double x, int d,
                          std::optional<std::pair<double, int>> regularization,
                          const SeriesConfig& cfg);

// Coefficient of cos(qx) (cosine kind) or sin(qx) (sine kind) in kernel k's
// raw Fourier expansion, including the regularization weight when given.
// Zero for frequencies the kernel does not carry.
double kernel_term_coefficient(KernelKind kind, int k, const SplineParams& p, long q,
                               std::optional<std::pair<double, int>> regularization = std::nullopt);

}  // namespace trigspline
