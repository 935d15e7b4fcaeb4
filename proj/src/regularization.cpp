#include "trigspline/regularization.hpp"

#include <cmath>
#include <string>

#include "detail/sum_util.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {

void RegParams::validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    fail(errc::invalid_argument, "lambda must be finite and >= 0");
  if (p < 1) fail(errc::invalid_argument, "regularization order p must be >= 1");
}

double tau(int k, const RegParams& reg) {
  reg.validate();
  if (k < 0) fail(errc::invalid_argument, "tau needs k >= 0");
  return 1.0 / (1.0 + detail::powi(reg.lambda * k, 2 * reg.p));
}

TrigSpline regularize_spline(const TrigSpline& s, const RegParams& reg) {
  return s.with_regularization(reg);
}

double euler_residual(const DiscreteSpectrum& f, const DiscreteSpectrum& g, const RegParams& reg,
                      double x) {
  reg.validate();
  if (f.harmonics() != g.harmonics())
    fail(errc::incompatible, "f and g must be bandlimited to the same order");
  const double lam2p = detail::powi(reg.lambda, 2 * reg.p);
  const double sign = (reg.p % 2 == 0) ? 1.0 : -1.0;  // (-1)^p

  detail::Kahan acc;
  acc.add(sign * (g.a0 - f.a0) / 2.0);
  for (int k = 1; k <= g.harmonics(); ++k) {
    const double c = std::cos(k * x), s = std::sin(k * x);
    const double gk = g.a[static_cast<size_t>(k - 1)] * c + g.b[static_cast<size_t>(k - 1)] * s;
    const double fk = f.a[static_cast<size_t>(k - 1)] * c + f.b[static_cast<size_t>(k - 1)] * s;
    // d^(2p)/dx^(2p) of (a cos kx + b sin kx) = (-1)^p k^(2p) (a cos kx + b sin kx)
    acc.add(lam2p * sign * detail::powi(static_cast<double>(k), 2 * reg.p) * gk);
    acc.add(sign * (gk - fk));
  }
  return acc.value();
}

DifferentiableFn make_differentiable(const TrigSpline& s) {
  return {[s](double x) { return eval_spline(s, x); },
          [s](int d, double x) { return d == 0 ? eval_spline(s, x) : spline_derivative(s, d, x); }};
}

DifferentiableFn make_differentiable(const DiscreteSpectrum& spec) {
  auto deriv = [spec](int d, double x) {
    detail::Kahan acc;
    if (d == 0) acc.add(spec.a0 / 2.0);
    for (int k = 1; k <= spec.harmonics(); ++k) {
      const double a = spec.a[static_cast<size_t>(k - 1)];
      const double b = spec.b[static_cast<size_t>(k - 1)];
      const double qd = detail::powi(static_cast<double>(k), d);
      const double shift = d * (detail::kPi / 2.0);
      acc.add(qd * (a * std::cos(k * x + shift) + b * std::sin(k * x + shift)));
    }
    return acc.value();
  };
  return {[deriv](double x) { return deriv(0, x); }, deriv};
}

namespace {

double trapezoid_periodic(const std::function<double(double)>& f, int points) {
  if (points < 8) fail(errc::invalid_argument, "quadrature needs at least 8 points");
  detail::Kahan acc;
  const double h = detail::kTwoPi / points;
  // On a periodic integrand the closed trapezoid rule collapses to the
  // node sum; evaluate both endpoints anyway to stay honest about f.
  acc.add(0.5 * f(0.0));
  for (int i = 1; i < points; ++i) acc.add(f((detail::kTwoPi * i) / points));
  acc.add(0.5 * f(detail::kTwoPi));
  return h * acc.value();
}

}  // namespace

double smoothness_functional(const DifferentiableFn& g, int p, int quad_points) {
  if (p < 1) fail(errc::invalid_argument, "derivative order p must be >= 1");
  return trapezoid_periodic(
      [&](double x) {
        const double v = g.derivative(p, x);
        return v * v;
      },
      quad_points);
}

double regularization_functional(const std::function<double(double)>& f, const DifferentiableFn& g,
                                 const RegParams& reg, int quad_points) {
  reg.validate();
  const double lam2p = detail::powi(reg.lambda, 2 * reg.p);
  return trapezoid_periodic(
      [&](double x) {
        const double d = f(x) - g.value(x);
        const double gp = g.derivative(reg.p, x);
        return d * d + lam2p * gp * gp;
      },
      quad_points);
}

}  // namespace trigspline
