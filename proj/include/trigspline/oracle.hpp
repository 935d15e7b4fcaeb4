#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "trigspline/fourier.hpp"
#include "trigspline/kernels.hpp"

namespace trigspline::oracle {

// Reference implementations used for verification. They favour plain,
// inspectable summation over speed and are independent of the certified
// series machinery in the main evaluation path.

struct QuadratureConfig {
  enum class Rule { trapezoid, rectangle };

  int points = 4096;  // >= 8
  Rule rule = Rule::trapezoid;
};

// Continuum Fourier coefficients a_k = (1/pi) int f cos kx dx (b_k with
// sin) for k <= max_harmonic, by composite quadrature over [0, 2pi].
// The rectangle rule with exactly N panels reproduces bessel_coefficients
// of the N-point samples bit for bit.
DiscreteSpectrum continuum_fourier(const std::function<double(double)>& f, int max_harmonic,
                                   const QuadratureConfig& cfg);

// delta(m) = int [T_m(x) - f(x)]^2 dx by the same quadrature.
double continuum_residual(const std::function<double(double)>& f, const DiscreteSpectrum& spec,
                          int m, const QuadratureConfig& cfg);

// Naive extended-precision partial sum of a kernel series: the first
// `terms` terms and nothing else, no tail bound. terms = 1 is the head
// term alone; each further term adds one aliased bracket.
double reference_kernel_sum(KernelKind kind, int k, const SplineParams& p, double x, long terms,
                            std::optional<std::pair<double, int>> regularization = std::nullopt,
                            int derivative = 0);

}  // namespace trigspline::oracle
