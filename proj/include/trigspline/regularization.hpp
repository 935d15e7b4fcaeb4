#pragma once

#include <functional>

#include "trigspline/fourier.hpp"

namespace trigspline {

class TrigSpline;

// Regularization parameters: penalty weight lambda >= 0 and smoothness
// order p >= 1 of the penalized derivative.
struct RegParams {
  double lambda = 0.0;
  int p = 1;

  void validate() const;
};

// tau_k(lambda, p) = 1/(1 + (lambda k)^(2p)), the diagonal multiplier that
// solves the penalized least-squares problem. Equals 1 at k = 0 or
// lambda = 0, and exactly 1/2 at lambda*k = 1.
double tau(int k, const RegParams& reg);

// Copy of s with the regularization attached; evaluation then uses the
// weighted kernels. Interpolation factors are kept as built: the weights
// apply to the kernel expansions, not to the spectrum-to-coefficient map.
TrigSpline regularize_spline(const TrigSpline& s, const RegParams& reg);

// Residual of the Euler equation lambda^(2p) g^(2p) + (-1)^p (g - f) = 0
// for bandlimited f, g given as coefficient containers, evaluated with
// exact term-wise derivatives. Vanishes identically when g = tau o f.
double euler_residual(const DiscreteSpectrum& f, const DiscreteSpectrum& g, const RegParams& reg,
                      double x);

// A function together with its derivatives, as the functionals below need
// them. derivative(d, x) must be valid for the orders actually requested.
struct DifferentiableFn {
  std::function<double(double)> value;
  std::function<double(int, double)> derivative;
};

DifferentiableFn make_differentiable(const TrigSpline& s);
DifferentiableFn make_differentiable(const DiscreteSpectrum& spec);

// Psi(g) = integral over [0, 2pi] of [g^(p)(x)]^2, composite trapezoid with
// quad_points panels. Spectrally accurate for smooth periodic integrands.
double smoothness_functional(const DifferentiableFn& g, int p, int quad_points);

// Phi(f, g) = integral of [f - g]^2 + lambda^(2p) [g^(p)]^2.
double regularization_functional(const std::function<double(double)>& f, const DifferentiableFn& g,
                                 const RegParams& reg, int quad_points);

}  // namespace trigspline
