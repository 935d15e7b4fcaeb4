#include "trigspline/oracle.hpp"

#include <cmath>
#include <string>

#include "detail/sum_util.hpp"

namespace trigspline::oracle {

namespace {

using detail::Kahan;

void check_cfg(const QuadratureConfig& cfg) {
  if (cfg.points < 8) fail(errc::invalid_argument, "quadrature needs at least 8 points");
}

double sample_at(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v))
    fail(errc::quadrature_error, "integrand is not finite at x = " + std::to_string(x));
  return v;
}

// One Fourier coefficient by composite quadrature. The rectangle rule runs
// over the left endpoints x_i = 2 pi i / M with the scale folded to 2/M, so
// that with M = N panels it reproduces Bessel's formulas bit for bit.
double quad_coefficient(const std::function<double(double)>& f, int k, bool sine,
                        const QuadratureConfig& cfg) {
  const int M = cfg.points;
  Kahan acc;
  auto basis = [&](double x) {
    const double arg = static_cast<double>(k) * x;
    return sine ? std::sin(arg) : std::cos(arg);
  };
  if (cfg.rule == QuadratureConfig::Rule::rectangle) {
    for (int i = 0; i < M; ++i) {
      const double x = (detail::kTwoPi * i) / M;
      acc.add(sample_at(f, x) * basis(x));
    }
  } else {
    acc.add(0.5 * sample_at(f, 0.0) * basis(0.0));
    for (int i = 1; i < M; ++i) {
      const double x = (detail::kTwoPi * i) / M;
      acc.add(sample_at(f, x) * basis(x));
    }
    acc.add(0.5 * sample_at(f, detail::kTwoPi) * basis(detail::kTwoPi));
  }
  return (2.0 / M) * acc.value();
}

}  // namespace

DiscreteSpectrum continuum_fourier(const std::function<double(double)>& f, int max_harmonic,
                                   const QuadratureConfig& cfg) {
  check_cfg(cfg);
  if (max_harmonic < 0) fail(errc::invalid_argument, "max_harmonic must be nonnegative");
  DiscreteSpectrum spec;
  spec.a0 = quad_coefficient(f, 0, false, cfg);
  spec.a.resize(static_cast<size_t>(max_harmonic));
  spec.b.resize(static_cast<size_t>(max_harmonic));
  for (int k = 1; k <= max_harmonic; ++k) {
    spec.a[static_cast<size_t>(k - 1)] = quad_coefficient(f, k, false, cfg);
    spec.b[static_cast<size_t>(k - 1)] = quad_coefficient(f, k, true, cfg);
  }
  return spec;
}

double continuum_residual(const std::function<double(double)>& f, const DiscreteSpectrum& spec,
                          int m, const QuadratureConfig& cfg) {
  check_cfg(cfg);
  if (m < 0 || m > spec.harmonics())
    fail(errc::order_out_of_range, "order m = " + std::to_string(m) + " outside [0, " +
                                       std::to_string(spec.harmonics()) + "]");
  const int M = cfg.points;
  Kahan acc;
  auto sq = [&](double x, double weight) {
    const double d = eval_trig_polynomial(spec, m, x) - sample_at(f, x);
    acc.add(weight * d * d);
  };
  if (cfg.rule == QuadratureConfig::Rule::rectangle) {
    for (int i = 0; i < M; ++i) sq((detail::kTwoPi * i) / M, 1.0);
  } else {
    sq(0.0, 0.5);
    for (int i = 1; i < M; ++i) sq((detail::kTwoPi * i) / M, 1.0);
    sq(detail::kTwoPi, 0.5);
  }
  return (detail::kTwoPi / M) * acc.value();
}

double reference_kernel_sum(KernelKind kind, int k, const SplineParams& p, double x, long terms,
                            std::optional<std::pair<double, int>> regularization, int derivative) {
  p.validate();
  if (k < 1 || k > p.n())
    fail(errc::invalid_argument,
         "harmonic k = " + std::to_string(k) + " outside [1, " + std::to_string(p.n()) + "]");
  if (terms < 1) fail(errc::invalid_argument, "reference sum needs terms >= 1");
  if (derivative < 0) fail(errc::invalid_argument, "derivative order must be nonnegative");

  const bool sine = kind == KernelKind::sine;
  const long double sigma = 1.0L + p.r - derivative;
  const long double lx = static_cast<long double>(x);
  const long double phi = derivative * (detail::kPi / 2.0L);
  const long double lambda = regularization ? regularization->first : 0.0L;
  const int preg = regularization ? regularization->second : 1;
  auto tau_w = [&](long double q) -> long double {
    if (lambda <= 0.0L) return 1.0L;
    return 1.0L / (1.0L + std::pow(lambda * q, 2.0L * preg));
  };
  auto term = [&](long double coeff, long double q) -> long double {
    const long double ang = q * lx + phi;
    return coeff * tau_w(q) * std::pow(q, -sigma) * (sine ? std::sin(ang) : std::cos(ang));
  };

  const long double c1 = sine ? p.eta[0] : p.gamma[0];
  const long double cp = sine ? p.eta[2] : p.gamma[2];
  const long double cm = sine ? -p.eta[1] : p.gamma[1];

  long double sum = term(c1, static_cast<long double>(k));
  for (long m = 1; m < terms; ++m) {
    const long double sgn = (p.I1 && (m & 1)) ? -1.0L : 1.0L;
    sum += sgn * term(cp, static_cast<long double>(m) * p.N + k);
    sum += sgn * term(cm, static_cast<long double>(m) * p.N - k);
  }
  return static_cast<double>(sum);
}

}  // namespace trigspline::oracle
