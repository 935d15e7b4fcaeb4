#include "trigspline/kernels.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "detail/series_tail.hpp"
#include "detail/sum_util.hpp"

namespace trigspline {

using detail::Kahan;
using detail::kPi;
using detail::powi;
using detail::tail_integral;
using detail::TailValue;

void SplineParams::validate() const {
  for (double g : gamma)
    if (g == 0.0 || !std::isfinite(g)) fail(errc::invalid_argument, "gamma entries must be nonzero");
  for (double e : eta)
    if (e == 0.0 || !std::isfinite(e)) fail(errc::invalid_argument, "eta entries must be nonzero");
  if (r < 1) fail(errc::invalid_argument, "spline order r must be >= 1");
  if (N < 3 || N % 2 == 0)
    fail(errc::invalid_grid, "grid size N must be odd and >= 3, got " + std::to_string(N));
  if (I1 != 0 && I1 != 1) fail(errc::invalid_argument, "I1 must be 0 or 1");
  if (I2 != 0 && I2 != 1) fail(errc::invalid_argument, "I2 must be 0 or 1");
  if (!(series.tolerance > 0.0)) fail(errc::invalid_argument, "series tolerance must be positive");
  if (series.max_terms < 1) fail(errc::invalid_argument, "series max_terms must be >= 1");
}

double convergence_factor(long k, int r) {
  if (k < 1) fail(errc::invalid_argument, "convergence factor needs k >= 1");
  if (r < 1) fail(errc::invalid_argument, "convergence factor needs r >= 1");
  return std::pow(static_cast<double>(k), -(1.0 + r));
}

namespace {

// One fully resolved series: a kernel, its derivative, or (with
// factor_mode) an interpolation factor summed at x = 0.
struct SeriesSpec {
  bool sine = false;
  int k = 0;
  int N = 0;
  int alt = 0;  // 1 when brackets carry (-1)^m
  int d = 0;
  double sigma = 0.0;  // 1 + r - d
  double c1 = 0.0, cp = 0.0, cm = 0.0;
  bool reg = false;
  double lambda = 0.0;
  int preg = 1;
  bool factor_mode = false;
};

struct EvalOut {
  double value = 0.0;
  double bound = 0.0;
  long terms = 0;
};

double tau_weight(const SeriesSpec& s, double q) {
  if (!s.reg) return 1.0;
  return 1.0 / (1.0 + powi(s.lambda * q, 2 * s.preg));
}

EvalOut sum_series(const SeriesSpec& s, double x, const SeriesConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) fail(errc::invalid_argument, "series tolerance must be positive");
  if (cfg.max_terms < 1) fail(errc::invalid_argument, "series max_terms must be >= 1");

  const double eps = cfg.tolerance;
  const double phi = s.d * (kPi / 2.0);
  const double dN = static_cast<double>(s.N);
  const double dk = static_cast<double>(s.k);

  // Every term vanishes identically at x = 0 for these parities.
  if (x == 0.0 && ((s.sine && s.d % 2 == 0) || (!s.sine && s.d % 2 == 1)))
    return {0.0, 0.0, 0};

  const double head =
      s.c1 * tau_weight(s, dk) * std::pow(dk, -s.sigma) *
      (s.sine ? std::sin(dk * x + phi) : std::cos(dk * x + phi));

  const double delta = s.factor_mode ? (s.alt ? kPi : 0.0)
                                     : detail::wrap_angle(dN * x + (s.alt ? kPi : 0.0));
  const double coef_abs = std::abs(s.cp) + std::abs(s.cm);

  Kahan acc;
  long m = 0;
  long checkpoint = std::min<long>(cfg.max_terms, 64);
  double best_bound = std::numeric_limits<double>::infinity();

  // Rotation state for the angles (mN +- k) x + phi; resynced with direct
  // trig calls periodically to keep drift at rounding level.
  double cp_c = 0, cp_s = 0, cm_c = 0, cm_s = 0;
  const double cw = std::cos(dN * x), sw = std::sin(dN * x);
  auto resync = [&](long mm) {
    const double ap = (static_cast<double>(mm) * dN + dk) * x + phi;
    const double am = (static_cast<double>(mm) * dN - dk) * x + phi;
    cp_c = std::cos(ap);
    cp_s = std::sin(ap);
    cm_c = std::cos(am);
    cm_s = std::sin(am);
  };

  while (true) {
    while (m < checkpoint) {
      ++m;
      if (s.factor_mode) {
        const double qp = static_cast<double>(m) * dN + dk;
        const double qm = static_cast<double>(m) * dN - dk;
        const double sgn = (s.alt && (m & 1)) ? -1.0 : 1.0;
        acc.add(sgn * s.cp * std::pow(qp, -s.sigma));
        acc.add(sgn * s.cm * std::pow(qm, -s.sigma));
        continue;
      }
      if (m % 1024 == 1) {
        resync(m);
      } else {
        double t = cp_c * cw - cp_s * sw;
        cp_s = cp_s * cw + cp_c * sw;
        cp_c = t;
        t = cm_c * cw - cm_s * sw;
        cm_s = cm_s * cw + cm_c * sw;
        cm_c = t;
      }
      const double qp = static_cast<double>(m) * dN + dk;
      const double qm = static_cast<double>(m) * dN - dk;
      const double sgn = (s.alt && (m & 1)) ? -1.0 : 1.0;
      const double tp = s.sine ? cp_s : cp_c;
      const double tm = s.sine ? cm_s : cm_c;
      acc.add(sgn * s.cp * tau_weight(s, qp) * std::pow(qp, -s.sigma) * tp);
      acc.add(sgn * s.cm * tau_weight(s, qm) * std::pow(qm, -s.sigma) * tm);
    }

    // Direct certificate: integral comparison on the absolute series, the
    // lambda-boosted variant under regularization (tau_q <= (lambda q)^-2p),
    // and for alternating factor series with monotone brackets the first
    // discarded bracket.
    double b_direct = coef_abs * tail_integral(s.sigma, s.N, -dk, static_cast<double>(m));
    if (s.reg && s.lambda > 0.0) {
      const double boosted = powi(1.0 / s.lambda, 2 * s.preg) * coef_abs *
                             tail_integral(s.sigma + 2 * s.preg, s.N, -dk, static_cast<double>(m));
      b_direct = std::min(b_direct, boosted);
    }
    if (s.factor_mode && s.alt == 1 && s.cp * s.cm >= 0.0) {
      const double next = std::abs(s.cp) * std::pow(static_cast<double>(m + 1) * dN + dk, -s.sigma) +
                          std::abs(s.cm) * std::pow(static_cast<double>(m + 1) * dN - dk, -s.sigma);
      b_direct = std::min(b_direct, next);
    }
    best_bound = std::min(best_bound, b_direct);
    if (b_direct <= eps) return {head + acc.value(), b_direct, m};

    if (!s.reg) {
      const TailValue tp = detail::tail_osc(s.sigma, s.N, +dk, m, delta);
      const TailValue tm = detail::tail_osc(s.sigma, s.N, -dk, m, delta);
      const double total = std::abs(s.cp) * tp.bound + std::abs(s.cm) * tm.bound;
      best_bound = std::min(best_bound, total);
      if (total <= eps) {
        const std::complex<double> ep = std::polar(1.0, phi + dk * x);
        const std::complex<double> em = std::polar(1.0, phi - dk * x);
        const std::complex<double> tail = s.cp * ep * tp.value + s.cm * em * tm.value;
        const double tv = s.sine ? tail.imag() : tail.real();
        return {head + acc.value() + tv, total, m};
      }
    }

    if (m >= cfg.max_terms) {
      std::ostringstream msg;
      msg << "kernel series did not certify tolerance " << eps << " within " << m
          << " terms (achieved bound " << best_bound << ")";
      fail(errc::convergence_failure, msg.str());
    }
    checkpoint = std::min(cfg.max_terms, checkpoint * 2);
  }
}

SeriesSpec make_kernel_spec(KernelKind kind, int k, const SplineParams& p, int d,
                            const std::optional<std::pair<double, int>>& reg) {
  p.validate();
  if (k < 1 || k > p.n())
    fail(errc::invalid_argument,
         "harmonic k = " + std::to_string(k) + " outside [1, " + std::to_string(p.n()) + "]");
  if (d < 0) fail(errc::invalid_argument, "derivative order must be nonnegative");
  if (d >= p.r)
    fail(errc::nonconvergent_derivative,
         "derivative order " + std::to_string(d) + " requires r > " + std::to_string(d) +
             ": the differentiated series no longer converges absolutely");

  SeriesSpec s;
  s.sine = kind == KernelKind::sine;
  s.k = k;
  s.N = p.N;
  s.alt = p.I1;
  s.d = d;
  s.sigma = 1.0 + p.r - d;
  if (s.sine) {
    s.c1 = p.eta[0];
    s.cp = p.eta[2];
    s.cm = -p.eta[1];
  } else {
    s.c1 = p.gamma[0];
    s.cp = p.gamma[2];
    s.cm = p.gamma[1];
  }
  if (reg) {
    if (!(reg->first >= 0.0) || !std::isfinite(reg->first))
      fail(errc::invalid_argument, "regularization lambda must be finite and >= 0");
    if (reg->second < 1) fail(errc::invalid_argument, "regularization order p must be >= 1");
    s.reg = reg->first > 0.0;  // lambda = 0 is the identity weighting
    s.lambda = reg->first;
    s.preg = reg->second;
  }
  return s;
}

SeriesSpec make_factor_spec(KernelKind kind, int k, const SplineParams& p) {
  p.validate();
  if (k < 1 || k > p.n())
    fail(errc::invalid_argument,
         "harmonic k = " + std::to_string(k) + " outside [1, " + std::to_string(p.n()) + "]");
  SeriesSpec s;
  s.sine = false;
  s.k = k;
  s.N = p.N;
  s.alt = std::abs(p.I1 - p.I2);  // the sign depends only on the parity of I1 - I2
  s.d = 0;
  s.sigma = 1.0 + p.r;
  if (kind == KernelKind::sine) {
    s.c1 = p.eta[0];
    s.cp = p.eta[2];
    s.cm = p.eta[1];
  } else {
    s.c1 = p.gamma[0];
    s.cp = p.gamma[2];
    s.cm = p.gamma[1];
  }
  s.factor_mode = true;
  return s;
}

}  // namespace

KernelEval eval_kernel_ex(KernelKind kind, int k, const SplineParams& p, double x, int d,
                          std::optional<std::pair<double, int>> regularization,
                          const SeriesConfig& cfg) {
  EvalOut out = sum_series(make_kernel_spec(kind, k, p, d, regularization), x, cfg);
  return {out.value, out.bound, out.terms};
}

double eval_cos_kernel(int k, const SplineParams& p, double x, const SeriesConfig& cfg) {
  return eval_kernel_ex(KernelKind::cosine, k, p, x, 0, std::nullopt, cfg).value;
}

double eval_sin_kernel(int k, const SplineParams& p, double x, const SeriesConfig& cfg) {
  return eval_kernel_ex(KernelKind::sine, k, p, x, 0, std::nullopt, cfg).value;
}

double eval_regularized_cos_kernel(int k, const SplineParams& p, double lambda, int p_reg,
                                   double x, const SeriesConfig& cfg) {
  return eval_kernel_ex(KernelKind::cosine, k, p, x, 0, std::make_pair(lambda, p_reg), cfg).value;
}

double eval_regularized_sin_kernel(int k, const SplineParams& p, double lambda, int p_reg,
                                   double x, const SeriesConfig& cfg) {
  return eval_kernel_ex(KernelKind::sine, k, p, x, 0, std::make_pair(lambda, p_reg), cfg).value;
}

double kernel_derivative(KernelKind kind, int k, const SplineParams& p, int d, double x,
                         const SeriesConfig& cfg,
                         std::optional<std::pair<double, int>> regularization) {
  return eval_kernel_ex(kind, k, p, x, d, regularization, cfg).value;
}

static double interp_factor(KernelKind kind, int k, const SplineParams& p,
                            const SeriesConfig& cfg) {
  EvalOut out = sum_series(make_factor_spec(kind, k, p), 0.0, cfg);
  if (std::abs(out.value) < kDegenerateFactorThreshold) {
    std::ostringstream msg;
    msg << (kind == KernelKind::sine ? "hs" : "hc") << "_" << k << " = " << out.value
        << " is below " << kDegenerateFactorThreshold << "; the spline would divide by it";
    fail(errc::degenerate_factor, msg.str());
  }
  return out.value;
}

double interp_factor_cos(int k, const SplineParams& p, const SeriesConfig& cfg) {
  return interp_factor(KernelKind::cosine, k, p, cfg);
}

double interp_factor_sin(int k, const SplineParams& p, const SeriesConfig& cfg) {
  return interp_factor(KernelKind::sine, k, p, cfg);
}

double kernel_term_coefficient(KernelKind kind, int k, const SplineParams& p, long q,
                               std::optional<std::pair<double, int>> regularization) {
  SeriesSpec s = make_kernel_spec(kind, k, p, 0, regularization);
  if (q < 1) return 0.0;
  double raw = 0.0;
  long m = 0;
  if (q == k) {
    raw = s.c1;
  } else if (q > k && (q - k) % p.N == 0) {
    m = (q - k) / p.N;
    raw = s.cp;
  } else if ((q + k) % p.N == 0) {
    m = (q + k) / p.N;
    raw = s.cm;
  } else {
    return 0.0;
  }
  const double sgn = (s.alt && (m & 1)) ? -1.0 : 1.0;
  double w = 1.0;
  if (regularization && regularization->first > 0.0)
    w = 1.0 / (1.0 + powi(regularization->first * static_cast<double>(q), 2 * regularization->second));
  return sgn * raw * w * std::pow(static_cast<double>(q), -s.sigma);
}

}  // namespace trigspline
