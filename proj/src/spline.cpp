#include "trigspline/spline.hpp"

#include <cmath>
#include <string>

#include "detail/sum_util.hpp"

namespace trigspline {

TrigSpline TrigSpline::assemble(SplineParams params, DiscreteSpectrum spectrum,
                                std::optional<RegParams> regularization,
                                std::optional<std::vector<double>> multipliers,
                                std::optional<int> truncation) {
  params.validate();
  const int n = params.n();
  if (spectrum.harmonics() != n)
    fail(errc::incompatible, "spectrum has " + std::to_string(spectrum.harmonics()) +
                                 " harmonics, params.N = " + std::to_string(params.N) +
                                 " requires " + std::to_string(n));
  if (spectrum.grid_variant != params.I2)
    fail(errc::incompatible, "spectrum grid variant " + std::to_string(spectrum.grid_variant) +
                                 " does not match interpolation indicator I2 = " +
                                 std::to_string(params.I2));
  for (double c : spectrum.a)
    if (!std::isfinite(c)) fail(errc::invalid_argument, "spectrum coefficients must be finite");
  for (double c : spectrum.b)
    if (!std::isfinite(c)) fail(errc::invalid_argument, "spectrum coefficients must be finite");
  if (!std::isfinite(spectrum.a0)) fail(errc::invalid_argument, "a0 must be finite");
  if (regularization) regularization->validate();
  if (multipliers) {
    if (static_cast<int>(multipliers->size()) != n)
      fail(errc::incompatible, "multiplier list must have length n = " + std::to_string(n));
    for (double w : *multipliers)
      if (!(w > 0.0) || w > 1.0)
        fail(errc::invalid_argument, "multipliers must lie in (0, 1]");
  }
  if (truncation && (*truncation < 0 || *truncation > n))
    fail(errc::order_out_of_range,
         "truncation order " + std::to_string(*truncation) + " outside [0, " + std::to_string(n) + "]");

  TrigSpline s;
  s.params_ = params;
  s.spectrum_ = std::move(spectrum);
  s.regularization_ = regularization;
  s.multipliers_ = std::move(multipliers);
  s.truncation_ = truncation;
  s.hc_.resize(static_cast<size_t>(n));
  s.hs_.resize(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    s.hc_[static_cast<size_t>(k - 1)] = interp_factor_cos(k, params, params.series);
    s.hs_[static_cast<size_t>(k - 1)] = interp_factor_sin(k, params, params.series);
  }
  return s;
}

TrigSpline TrigSpline::with_truncation(int m) const {
  if (m < 0 || m > harmonics())
    fail(errc::order_out_of_range,
         "truncation order " + std::to_string(m) + " outside [0, " + std::to_string(harmonics()) + "]");
  TrigSpline copy = *this;
  copy.truncation_ = m;
  return copy;
}

TrigSpline TrigSpline::with_regularization(const RegParams& reg) const {
  if (regularization_)
    fail(errc::invalid_state, "spline is already regularized; build a fresh one instead");
  reg.validate();
  TrigSpline copy = *this;
  copy.regularization_ = reg;
  return copy;
}

TrigSpline TrigSpline::with_multipliers(std::vector<double> weights) const {
  if (multipliers_)
    fail(errc::invalid_state, "spline is already smoothed; build a fresh one instead");
  if (static_cast<int>(weights.size()) != harmonics())
    fail(errc::incompatible,
         "multiplier list must have length n = " + std::to_string(harmonics()));
  for (double w : weights)
    if (!(w > 0.0) || w > 1.0) fail(errc::invalid_argument, "multipliers must lie in (0, 1]");
  TrigSpline copy = *this;
  copy.multipliers_ = std::move(weights);
  return copy;
}

TrigSpline build_spline(const SampleSet& samples, const SplineParams& params) {
  SplineParams p = params;
  if (p.N == 0) p.N = samples.grid.size();
  p.validate();
  if (p.N != samples.grid.size())
    fail(errc::incompatible, "params.N = " + std::to_string(p.N) + " but samples have " +
                                 std::to_string(samples.grid.size()) + " nodes");
  if (samples.grid.variant() != p.I2)
    fail(errc::incompatible, "samples on grid variant " + std::to_string(samples.grid.variant()) +
                                 " cannot interpolate with I2 = " + std::to_string(p.I2));
  return TrigSpline::assemble(p, bessel_coefficients(samples), std::nullopt, std::nullopt,
                              std::nullopt);
}

namespace {

std::optional<std::pair<double, int>> reg_pair(const TrigSpline& s) {
  if (!s.regularization()) return std::nullopt;
  return std::make_pair(s.regularization()->lambda, s.regularization()->p);
}

double spline_value(const TrigSpline& s, int d, double x) {
  const DiscreteSpectrum& spec = s.spectrum();
  const int K = s.truncation().value_or(spec.harmonics());
  const auto reg = reg_pair(s);
  const SeriesConfig& cfg = s.params().series;

  detail::Kahan acc;
  for (int k = 1; k <= K; ++k) {
    const double w = s.multipliers() ? (*s.multipliers())[static_cast<size_t>(k - 1)] : 1.0;
    const double a = spec.a[static_cast<size_t>(k - 1)];
    const double b = spec.b[static_cast<size_t>(k - 1)];
    if (w == 0.0) continue;
    if (a != 0.0) {
      const double ck = eval_kernel_ex(KernelKind::cosine, k, s.params(), x, d, reg, cfg).value;
      acc.add(w * a / s.cos_factors()[static_cast<size_t>(k - 1)] * ck);
    }
    if (b != 0.0) {
      const double sk = eval_kernel_ex(KernelKind::sine, k, s.params(), x, d, reg, cfg).value;
      acc.add(w * b / s.sin_factors()[static_cast<size_t>(k - 1)] * sk);
    }
  }
  return (d == 0 ? spec.a0 / 2.0 : 0.0) + acc.value();
}

}  // namespace

double eval_spline(const TrigSpline& s, double x) { return spline_value(s, 0, x); }

double spline_derivative(const TrigSpline& s, int d, double x) {
  if (d < 1) fail(errc::invalid_argument, "derivative order must be >= 1");
  if (d >= s.params().r)
    fail(errc::nonconvergent_derivative,
         "derivative order " + std::to_string(d) + " requires spline order r > " +
             std::to_string(d));
  return spline_value(s, d, x);
}

TrigSpline approximate_spline(const TrigSpline& s, int m) { return s.with_truncation(m); }

TermTable spline_term_table(const TrigSpline& s, long qmax) {
  if (qmax < 0) fail(errc::invalid_argument, "qmax must be nonnegative");
  const DiscreteSpectrum& spec = s.spectrum();
  const int N = s.params().N;
  const int n = spec.harmonics();
  const int K = s.truncation().value_or(n);
  const auto reg = reg_pair(s);

  TermTable t;
  t.cos_coef.assign(static_cast<size_t>(qmax) + 1, 0.0);
  t.sin_coef.assign(static_cast<size_t>(qmax) + 1, 0.0);
  t.cos_coef[0] = spec.a0 / 2.0;
  for (long q = 1; q <= qmax; ++q) {
    const long c = q % N;
    if (c == 0) continue;
    const int k = static_cast<int>(c <= n ? c : N - c);
    if (k > K) continue;
    const double w = s.multipliers() ? (*s.multipliers())[static_cast<size_t>(k - 1)] : 1.0;
    const double a = spec.a[static_cast<size_t>(k - 1)];
    const double b = spec.b[static_cast<size_t>(k - 1)];
    if (a != 0.0)
      t.cos_coef[static_cast<size_t>(q)] =
          w * a / s.cos_factors()[static_cast<size_t>(k - 1)] *
          kernel_term_coefficient(KernelKind::cosine, k, s.params(), q, reg);
    if (b != 0.0)
      t.sin_coef[static_cast<size_t>(q)] =
          w * b / s.sin_factors()[static_cast<size_t>(k - 1)] *
          kernel_term_coefficient(KernelKind::sine, k, s.params(), q, reg);
  }
  return t;
}

}  // namespace trigspline
