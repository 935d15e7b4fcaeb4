#include "trigspline/verify.hpp"

#include <chrono>
#include <memory>
#include <unordered_map>
#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "detail/sum_util.hpp"
#include "trigspline/io.hpp"
#include "trigspline/oracle.hpp"
#include "trigspline/regularization.hpp"
#include "trigspline/smoothing.hpp"
#include "trigspline/spline.hpp"

namespace trigspline::verify {

namespace {

using detail::kPi;
using detail::kTwoPi;

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
double uniform_pm1(std::mt19937_64& rng) { return 2.0 * uniform01(rng) - 1.0; }

SampleSet random_samples(int N, int variant, std::mt19937_64& rng) {
  std::vector<double> v(static_cast<size_t>(N));
  for (double& x : v) x = uniform_pm1(rng);
  return SampleSet(build_grid(N, variant), std::move(v));
}

SplineParams default_params(int N, int r, const SeriesConfig& series) {
  SplineParams p;
  p.N = N;
  p.r = r;
  p.series = series;
  return p;
}


// Memoized spline evaluation for quadrature sweeps: the oracle integrates
// the true evaluations, each node computed once.
std::function<double(double)> cached_eval(const TrigSpline& spl) {
  auto cache = std::make_shared<std::unordered_map<double, double>>();
  return [cache, &spl](double x) {
    auto it = cache->find(x);
    if (it != cache->end()) return it->second;
    const double v = eval_spline(spl, x);
    cache->emplace(x, v);
    return v;
  };
}

struct Reporter {
  std::vector<CheckResult> results;
  const std::function<void(const CheckResult&)>* cb = nullptr;

  void emit(const std::string& name, bool passed, const std::string& detail) {
    CheckResult r{name, passed, detail};
    if (cb && *cb) (*cb)(r);
    results.push_back(std::move(r));
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

// Wraps a check body so an exception becomes a failed check, not a crash.
template <typename Fn>
void guarded(Reporter& rep, const std::string& name, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [passed, detail] = body();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << detail << " [" << std::fixed;
    os.precision(2);
    os << secs << "s]";
    rep.emit(name, passed, os.str());
  } catch (const Error& e) {
    rep.emit(name, false, std::string("error: ") + errc_name(e.code()) + ": " + e.what());
  } catch (const std::exception& e) {
    rep.emit(name, false, std::string("error: ") + e.what());
  }
}

using Outcome = std::pair<bool, std::string>;

// 1. St(x_j) = f_j at every node of the interpolation grid.
Outcome check_interpolation(const SeriesConfig& series) {
  constexpr double kTol = 1e-8;
  std::mt19937_64 rng(20240801);
  double worst = 0.0;
  for (int N : {3, 5, 9}) {
    for (int r : {1, 2, 3}) {
      for (int rep = 0; rep < 20; ++rep) {
        const SampleSet s = random_samples(N, 0, rng);
        const TrigSpline spl = build_spline(s, default_params(N, r, series));
        for (int j = 0; j < N; ++j)
          worst = std::max(worst,
                           std::abs(eval_spline(spl, s.grid.node(j)) -
                                    s.values[static_cast<size_t>(j)]));
      }
    }
  }
  return {worst <= kTol, "max node deviation " + fmt(worst) + " (tol " + fmt(kTol) + ")"};
}

// 2. C_k(x_j)/hc_k = cos k x_j and the sine analogue.
Outcome check_node_identities(const SeriesConfig& series, bool quick) {
  constexpr double kTol = 1e-8;
  double worst = 0.0;
  const std::vector<int> sizes = quick ? std::vector<int>{3, 5} : std::vector<int>{3, 5, 9};
  const std::vector<int> orders = quick ? std::vector<int>{1, 2} : std::vector<int>{1, 2, 3};
  for (int N : sizes) {
    for (int r : orders) {
      const SplineParams p = default_params(N, r, series);
      const UniformGrid grid = build_grid(N, 0);
      for (int k = 1; k <= p.n(); ++k) {
        const double hc = interp_factor_cos(k, p, series);
        const double hs = interp_factor_sin(k, p, series);
        for (int j = 0; j < N; ++j) {
          const double x = grid.node(j);
          worst = std::max(worst, std::abs(eval_cos_kernel(k, p, x, series) / hc - std::cos(k * x)));
          worst = std::max(worst, std::abs(eval_sin_kernel(k, p, x, series) / hs - std::sin(k * x)));
        }
      }
    }
  }
  return {worst <= kTol, "max identity deviation " + fmt(worst) + " (tol " + fmt(kTol) + ")"};
}

// 3. delta*(n) = 0; Bessel truncation beats perturbations; monotone in m.
Outcome check_discrete_lsq(const SeriesConfig&) {
  std::mt19937_64 rng(20240803);
  const int N = 9, n = 4;
  double worst_full = 0.0;
  bool beats = true, monotone = true;
  for (int rep = 0; rep < 5; ++rep) {
    const SampleSet s = random_samples(N, 0, rng);
    const DiscreteSpectrum spec = bessel_coefficients(s);
    worst_full = std::max(worst_full, residual_discrete(spec, n, s));

    const int m = 2;
    const double base = residual_discrete(spec, m, s);
    for (int t = 0; t < 100; ++t) {
      DiscreteSpectrum pert = truncate_spectrum(spec, m);
      // perturb a random nonempty subset of the retained coefficients
      bool any = false;
      while (!any) {
        if (rng() & 1) { pert.a0 += 1e-3 * uniform_pm1(rng); any = true; }
        for (int k = 1; k <= m; ++k) {
          if (rng() & 1) { pert.a[static_cast<size_t>(k - 1)] += 1e-3 * uniform_pm1(rng); any = true; }
          if (rng() & 1) { pert.b[static_cast<size_t>(k - 1)] += 1e-3 * uniform_pm1(rng); any = true; }
        }
      }
      if (!(residual_discrete(pert, m, s) > base)) beats = false;
    }

    double prev = residual_discrete(spec, 0, s);
    for (int mm = 1; mm <= n; ++mm) {
      const double cur = residual_discrete(spec, mm, s);
      if (cur > prev + 1e-12) monotone = false;
      prev = cur;
    }
  }
  const bool pass = worst_full <= 1e-18 && beats && monotone;
  return {pass, "delta*(n) = " + fmt(worst_full) + " (tol 1e-18); perturbations beaten: " +
                    (beats ? "yes" : "no") + "; monotone: " + (monotone ? "yes" : "no")};
}

// 4. tau point value, Euler residual, Phi minimized at tau weights.
Outcome check_regularization(const SeriesConfig&) {
  for (int p = 1; p <= 3; ++p) {
    if (tau(10, RegParams{0.1, p}) != 0.5)
      return {false, "tau_10(0.1, " + std::to_string(p) + ") != 0.5 exactly"};
  }

  std::mt19937_64 rng(20240804);
  DiscreteSpectrum f;
  f.a0 = uniform_pm1(rng);
  f.a.resize(8);
  f.b.resize(8);
  for (int k = 0; k < 8; ++k) {
    f.a[static_cast<size_t>(k)] = uniform_pm1(rng);
    f.b[static_cast<size_t>(k)] = uniform_pm1(rng);
  }
  double worst_euler = 0.0;
  for (double lambda : {0.01, 0.1, 1.0}) {
    for (int p = 1; p <= 3; ++p) {
      const RegParams reg{lambda, p};
      DiscreteSpectrum g = f;
      for (int k = 1; k <= 8; ++k) {
        const double t = tau(k, reg);
        g.a[static_cast<size_t>(k - 1)] *= t;
        g.b[static_cast<size_t>(k - 1)] *= t;
      }
      for (int i = 0; i < 100; ++i) {
        const double x = kTwoPi * uniform01(rng);
        worst_euler = std::max(worst_euler, std::abs(euler_residual(f, g, reg, x)));
      }
    }
  }
  if (worst_euler > 1e-10)
    return {false, "Euler residual " + fmt(worst_euler) + " exceeds 1e-10"};

  // Discretized Phi is minimized by the tau-weighted coefficients.
  const RegParams reg{0.1, 2};
  DiscreteSpectrum small;
  small.a0 = 0.4;
  small.a = {0.9, -0.6, 0.3, 0.8};
  small.b = {-0.2, 0.7, -0.5, 0.1};
  DiscreteSpectrum gtau = small;
  for (int k = 1; k <= 4; ++k) {
    const double t = tau(k, reg);
    gtau.a[static_cast<size_t>(k - 1)] *= t;
    gtau.b[static_cast<size_t>(k - 1)] *= t;
  }
  const auto f_fn = [&](double x) { return eval_trig_polynomial(small, 4, x); };
  const double phi_tau = regularization_functional(f_fn, make_differentiable(gtau), reg, 4096);
  bool minimal = true;
  for (int t = 0; t < 22; ++t) {
    DiscreteSpectrum pert = gtau;
    for (int k = 1; k <= 4; ++k) {
      const double scale =
          t == 0 ? 1.05 : (t == 1 ? 0.95 : 1.0 + 0.05 * (rng() & 1 ? 1.0 : -1.0));
      pert.a[static_cast<size_t>(k - 1)] *= scale;
      pert.b[static_cast<size_t>(k - 1)] *= scale;
    }
    const double phi = regularization_functional(f_fn, make_differentiable(pert), reg, 4096);
    if (!(phi > phi_tau)) minimal = false;
  }
  return {minimal, "tau values exact; Euler residual " + fmt(worst_euler) +
                       "; Phi minimal at tau weights: " + (minimal ? "yes" : "no")};
}

// 5. Regularized coefficients scale as q^-(1+r+2p) once lambda q >= 1.
Outcome check_regularized_decay(const SeriesConfig& series) {
  const int N = 5;
  const double lambda = 2.0 / N;
  double worst_ratio = 0.0;
  for (int r : {1, 2}) {
    for (int p : {1, 2}) {
      for (int k : {1, 2}) {
        const SplineParams params = default_params(N, r, series);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (long q = N; q <= 100L * N; ++q) {
          const double c = kernel_term_coefficient(KernelKind::cosine, k, params, q,
                                                   std::make_pair(lambda, p));
          if (c == 0.0) continue;
          const double scaled = std::abs(c) * std::pow(static_cast<double>(q), 1.0 + r + 2.0 * p);
          lo = std::min(lo, scaled);
          hi = std::max(hi, scaled);
        }
        worst_ratio = std::max(worst_ratio, hi / lo);
      }
    }
  }
  return {worst_ratio <= 2.0,
          "max spread of |c_q| q^(1+r+2p) is " + fmt(worst_ratio) + " (allowed 2)"};
}

// 6. Fejer triangle, smoothed-spline oracle, filter frequency response.
Outcome check_smoothing(const SeriesConfig& series) {
  for (int k = 0; k <= 100; ++k) {
    const double expected = 1.0 - static_cast<double>(k) / 101.0;
    if (modified_fejer(k, 1.0, 100) != expected)
      return {false, "modified Fejer at alpha=1, k=" + std::to_string(k) + " not exact"};
  }

  std::mt19937_64 rng(20240806);
  const int N = 9, n = 4;
  const SampleSet s = random_samples(N, 0, rng);
  const SplineParams params = default_params(N, 2, series);
  const TrigSpline spl = smooth_spline(build_spline(s, params), MultiplierFamily{2.0, n});
  const DiscreteSpectrum& spec = spl.spectrum();

  // independent route: naive long-double partial sums of every series
  const long kTerms = 40000;
  SplineParams eta_as_gamma = params;
  eta_as_gamma.gamma = params.eta;
  std::vector<double> hc_ref(static_cast<size_t>(n)), hs_ref(static_cast<size_t>(n)),
      weights(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    // the hs series has the same all-plus form as hc with eta in place of gamma
    hc_ref[static_cast<size_t>(k - 1)] =
        oracle::reference_kernel_sum(KernelKind::cosine, k, params, 0.0, kTerms);
    hs_ref[static_cast<size_t>(k - 1)] =
        oracle::reference_kernel_sum(KernelKind::cosine, k, eta_as_gamma, 0.0, kTerms);
    weights[static_cast<size_t>(k - 1)] = modified_fejer(k, 2.0, n);
  }
  double worst_eval = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = kTwoPi * uniform01(rng);
    double ref = spec.a0 / 2.0;
    for (int k = 1; k <= n; ++k) {
      const double ck = oracle::reference_kernel_sum(KernelKind::cosine, k, params, x, kTerms);
      const double sk = oracle::reference_kernel_sum(KernelKind::sine, k, params, x, kTerms);
      ref += weights[static_cast<size_t>(k - 1)] *
             (spec.a[static_cast<size_t>(k - 1)] * ck / hc_ref[static_cast<size_t>(k - 1)] +
              spec.b[static_cast<size_t>(k - 1)] * sk / hs_ref[static_cast<size_t>(k - 1)]);
    }
    worst_eval = std::max(worst_eval, std::abs(eval_spline(spl, x) - ref));
  }
  if (worst_eval > 1e-10)
    return {false, "smoothed spline deviates " + fmt(worst_eval) + " from the weighted-sum oracle"};

  // filter response: harmonic k is scaled by sum_o w_o cos(k o h)
  const SampleSet sm = smooth_data(s, FilterKernel::default_low_pass());
  const DiscreteSpectrum before = bessel_coefficients(s);
  const DiscreteSpectrum after = bessel_coefficients(sm);
  double worst_resp = std::abs(after.a0 - before.a0);
  for (int k = 1; k <= n; ++k) {
    const double h = kTwoPi / N;
    const double gain = 0.5 + 0.5 * std::cos(k * h);
    worst_resp = std::max(worst_resp, std::abs(after.a[static_cast<size_t>(k - 1)] -
                                               gain * before.a[static_cast<size_t>(k - 1)]));
    worst_resp = std::max(worst_resp, std::abs(after.b[static_cast<size_t>(k - 1)] -
                                               gain * before.b[static_cast<size_t>(k - 1)]));
  }
  const bool pass = worst_resp <= 1e-10;
  return {pass, "Fejer triangle exact; oracle deviation " + fmt(worst_eval) +
                    "; filter response deviation " + fmt(worst_resp) + " (tol 1e-10)"};
}

// 7. Quadrature coefficients match the analytic term table; rectangle rule
// with N panels reproduces Bessel's formulas bit for bit.
Outcome check_oracle_equivalence(const SeriesConfig& series) {
  std::mt19937_64 rng(20240807);
  const int N = 5;
  const SampleSet s = random_samples(N, 0, rng);
  const TrigSpline spl = build_spline(s, default_params(N, 2, series));
  const long qmax = 3 * N;
  const TermTable table = spline_term_table(spl, qmax);
  const oracle::QuadratureConfig qc{4096, oracle::QuadratureConfig::Rule::trapezoid};
  const DiscreteSpectrum quad =
      oracle::continuum_fourier(cached_eval(spl), static_cast<int>(qmax), qc);
  double worst = std::abs(quad.a0 / 2.0 - table.cos_coef[0]);
  for (long q = 1; q <= qmax; ++q) {
    worst = std::max(worst, std::abs(quad.a[static_cast<size_t>(q - 1)] -
                                     table.cos_coef[static_cast<size_t>(q)]));
    worst = std::max(worst, std::abs(quad.b[static_cast<size_t>(q - 1)] -
                                     table.sin_coef[static_cast<size_t>(q)]));
  }
  if (worst > 1e-8)
    return {false, "quadrature vs term table deviation " + fmt(worst) + " (tol 1e-8)"};

  bool bitwise = true;
  const auto f = [](double x) { return std::exp(std::sin(x)) + 0.3 * std::cos(2.0 * x); };
  for (int n_points : {9, 15, 21}) {
    const UniformGrid grid = build_grid(n_points, 0);
    const DiscreteSpectrum bessel = bessel_coefficients(sample_function(grid, f));
    const oracle::QuadratureConfig rc{n_points, oracle::QuadratureConfig::Rule::rectangle};
    const DiscreteSpectrum rect = oracle::continuum_fourier(f, grid.harmonics(), rc);
    if (std::memcmp(&bessel.a0, &rect.a0, sizeof(double)) != 0) bitwise = false;
    for (int k = 0; k < grid.harmonics(); ++k) {
      if (std::memcmp(&bessel.a[static_cast<size_t>(k)], &rect.a[static_cast<size_t>(k)],
                      sizeof(double)) != 0)
        bitwise = false;
      if (std::memcmp(&bessel.b[static_cast<size_t>(k)], &rect.b[static_cast<size_t>(k)],
                      sizeof(double)) != 0)
        bitwise = false;
    }
  }
  return {bitwise, "term-table deviation " + fmt(worst) +
                       " (tol 1e-8); Bessel = rectangle rule bit-for-bit: " +
                       (bitwise ? "yes" : "no")};
}

// 8. Analytic first derivative matches central finite differences.
Outcome check_derivatives(const SeriesConfig& series) {
  std::mt19937_64 rng(20240808);
  const double h = 1e-5;
  double worst = 0.0;
  for (int r : {3, 4}) {
    const SampleSet s = random_samples(9, 0, rng);
    const TrigSpline spl = build_spline(s, default_params(9, r, series));
    for (int i = 0; i < 20; ++i) {
      const double x = kTwoPi * uniform01(rng);
      const double fd = (eval_spline(spl, x + h) - eval_spline(spl, x - h)) / (2.0 * h);
      worst = std::max(worst, std::abs(spline_derivative(spl, 1, x) - fd));
    }
    bool rejected = false;
    try {
      spline_derivative(spl, r, 1.0);
    } catch (const Error& e) {
      rejected = e.code() == errc::nonconvergent_derivative;
    }
    if (!rejected) return {false, "derivative order d = r was not rejected"};
  }
  return {worst <= 1e-4,
          "max |analytic - central difference| " + fmt(worst) + " (tol 1e-4); d >= r rejected"};
}

// 9. Periodicity, kernel parity, indicator symmetry.
Outcome check_structural(const SeriesConfig& series) {
  std::mt19937_64 rng(20240809);
  double worst_period = 0.0;
  for (int N : {5, 9}) {
    for (int r : {1, 2}) {
      const SampleSet s = random_samples(N, 0, rng);
      const TrigSpline spl = build_spline(s, default_params(N, r, series));
      for (int i = 0; i < 20; ++i) {
        const double x = kTwoPi * uniform01(rng);
        worst_period = std::max(worst_period, std::abs(eval_spline(spl, x + kTwoPi) - eval_spline(spl, x)));
      }
    }
  }
  if (worst_period > 1e-10) return {false, "periodicity deviation " + fmt(worst_period)};

  double worst_parity = 0.0;
  for (int I1 : {0, 1}) {
    SplineParams p = default_params(5, 2, series);
    p.gamma = {1.0, 1.5, 0.5};
    p.eta = {1.0, -0.5, 2.0};
    p.I1 = I1;
    for (int i = 0; i < 20; ++i) {
      const double x = kTwoPi * uniform01(rng);
      for (int k = 1; k <= p.n(); ++k) {
        worst_parity = std::max(worst_parity, std::abs(eval_cos_kernel(k, p, x, series) -
                                                       eval_cos_kernel(k, p, -x, series)));
        worst_parity = std::max(worst_parity, std::abs(eval_sin_kernel(k, p, x, series) +
                                                       eval_sin_kernel(k, p, -x, series)));
      }
    }
  }
  if (worst_parity > 1e-12) return {false, "parity deviation " + fmt(worst_parity)};

  bool symmetric = true;
  for (int N : {3, 5}) {
    for (int r : {1, 2}) {
      SplineParams a = default_params(N, r, series);
      a.I1 = 1;
      a.I2 = 0;
      SplineParams b = default_params(N, r, series);
      b.I1 = 0;
      b.I2 = 1;
      for (int k = 1; k <= a.n(); ++k) {
        if (interp_factor_cos(k, a, series) != interp_factor_cos(k, b, series)) symmetric = false;
        if (interp_factor_sin(k, a, series) != interp_factor_sin(k, b, series)) symmetric = false;
      }
    }
  }
  return {symmetric, "periodicity " + fmt(worst_period) + " (tol 1e-10); parity " +
                         fmt(worst_parity) + " (tol 1e-12); hc(1,0) = hc(0,1) exactly: " +
                         (symmetric ? "yes" : "no")};
}

// Small tolerance-sensitive oracle check: quadrature over the actual
// evaluations against the analytic term table.
Outcome check_quick_oracle(const SeriesConfig& series) {
  std::mt19937_64 rng(20240810);
  const int N = 5;
  const SampleSet s = random_samples(N, 0, rng);
  const TrigSpline spl = build_spline(s, default_params(N, 2, series));
  const TermTable table = spline_term_table(spl, 2 * N);
  const oracle::QuadratureConfig qc{4096, oracle::QuadratureConfig::Rule::trapezoid};
  const DiscreteSpectrum quad =
      oracle::continuum_fourier(cached_eval(spl), 2 * N, qc);
  double worst = std::abs(quad.a0 / 2.0 - table.cos_coef[0]);
  for (long q = 1; q <= 2 * N; ++q) {
    worst = std::max(worst, std::abs(quad.a[static_cast<size_t>(q - 1)] -
                                     table.cos_coef[static_cast<size_t>(q)]));
    worst = std::max(worst, std::abs(quad.b[static_cast<size_t>(q - 1)] -
                                     table.sin_coef[static_cast<size_t>(q)]));
  }
  if (worst > 1e-8)
    return {false, "quadrature vs term table deviation " + fmt(worst) + " (tol 1e-8)"};

  // and the certified evaluator against the naive partial-sum oracle,
  // which the series tolerance directly controls
  const SplineParams p = default_params(N, 2, series);
  double worst_ref = 0.0;
  for (double x : {0.6, 1.3, 3.8}) {
    worst_ref = std::max(worst_ref,
                         std::abs(eval_cos_kernel(2, p, x, series) -
                                  oracle::reference_kernel_sum(KernelKind::cosine, 2, p, x, 200000)));
    worst_ref = std::max(worst_ref,
                         std::abs(eval_sin_kernel(2, p, x, series) -
                                  oracle::reference_kernel_sum(KernelKind::sine, 2, p, x, 200000)));
  }
  return {worst_ref <= 1e-10, "quadrature vs term table deviation " + fmt(worst) +
                                  " (tol 1e-8); reference-sum deviation " + fmt(worst_ref) +
                                  " (tol 1e-10)"};
}

Outcome check_quick_points(const SeriesConfig&) {
  for (int p = 1; p <= 3; ++p)
    if (tau(10, RegParams{0.1, p}) != 0.5) return {false, "tau_10(0.1, p) != 0.5"};
  const double fejer = modified_fejer(100, 1.0, 100);
  if (std::abs(fejer - 1.0 / 101.0) > 1e-16) return {false, "Fejer endpoint off"};

  const auto f = [](double x) { return std::exp(std::sin(x)); };
  const UniformGrid grid = build_grid(9, 0);
  const DiscreteSpectrum bessel = bessel_coefficients(sample_function(grid, f));
  const oracle::QuadratureConfig rc{9, oracle::QuadratureConfig::Rule::rectangle};
  const DiscreteSpectrum rect = oracle::continuum_fourier(f, 4, rc);
  if (std::memcmp(&bessel.a0, &rect.a0, sizeof(double)) != 0)
    return {false, "rectangle rule does not reproduce Bessel's formulas"};
  return {true, "point values and Bessel-rectangle identity hold"};
}

}  // namespace

std::vector<CheckResult> run(Level level, const SeriesConfig& series,
                             const std::function<void(const CheckResult&)>& on_result) {
  Reporter rep;
  rep.cb = &on_result;
  if (level == Level::quick) {
    guarded(rep, "quick-node-identities", [&] { return check_node_identities(series, true); });
    guarded(rep, "quick-oracle-quadrature", [&] { return check_quick_oracle(series); });
    guarded(rep, "quick-point-values", [&] { return check_quick_points(series); });
    return std::move(rep.results);
  }
  guarded(rep, "1-interpolation-exactness", [&] { return check_interpolation(series); });
  guarded(rep, "2-kernel-node-identities", [&] { return check_node_identities(series, false); });
  guarded(rep, "3-discrete-lsq-optimality", [&] { return check_discrete_lsq(series); });
  guarded(rep, "4-regularization-algebra", [&] { return check_regularization(series); });
  guarded(rep, "5-regularized-decay-order", [&] { return check_regularized_decay(series); });
  guarded(rep, "6-smoothing", [&] { return check_smoothing(series); });
  guarded(rep, "7-oracle-equivalence", [&] { return check_oracle_equivalence(series); });
  guarded(rep, "8-derivative-checks", [&] { return check_derivatives(series); });
  guarded(rep, "9-structural-invariants", [&] { return check_structural(series); });
  return std::move(rep.results);
}

}  // namespace trigspline::verify
