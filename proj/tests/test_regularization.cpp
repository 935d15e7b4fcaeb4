#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle_helpers.hpp"
#include "trigspline/oracle.hpp"
#include "trigspline/regularization.hpp"
#include "trigspline/spline.hpp"

using namespace trigspline;
using testutil::random_samples;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("tau point values") {
  for (int p : {1, 2, 3}) CHECK(tau(10, RegParams{0.1, p}) == 0.5);  // lambda k = 1, exactly
  CHECK(tau(0, RegParams{0.7, 2}) == 1.0);
  CHECK(tau(17, RegParams{0.0, 3}) == 1.0);
  CHECK(tau(5, RegParams{0.1, 1}) == 0.8);  // 1/(1 + 0.25)
}

TEST_CASE("tau bounds and monotonicity") {
  double prev = 1.0;
  for (int k = 1; k <= 40; ++k) {
    const double t = tau(k, RegParams{0.2, 2});
    CHECK(t > 0.0);
    CHECK(t <= 1.0);
    CHECK(t < prev);
    prev = t;
  }
  // decreasing in lambda, and in p once lambda k > 1
  CHECK(tau(5, RegParams{0.3, 1}) > tau(5, RegParams{0.6, 1}));
  CHECK(tau(5, RegParams{0.5, 2}) < tau(5, RegParams{0.5, 1}));
  CHECK_THROWS_AS(tau(-1, RegParams{0.1, 1}), Error);
  CHECK_THROWS_AS(tau(1, RegParams{-0.1, 1}), Error);
  CHECK_THROWS_AS(tau(1, RegParams{0.1, 0}), Error);
}

TEST_CASE("regularize_spline") {
  std::mt19937_64 rng(4401);
  const SampleSet s = random_samples(5, 0, rng);
  SplineParams params;
  params.N = 5;
  params.r = 2;
  const TrigSpline spl = build_spline(s, params);

  SUBCASE("lambda = 0 changes nothing") {
    const TrigSpline reg = regularize_spline(spl, RegParams{0.0, 2});
    for (double x : {0.0, 0.9, 3.3}) CHECK(eval_spline(reg, x) == eval_spline(spl, x));
  }
  SUBCASE("interpolation is intentionally broken") {
    const SampleSet sc = sample_function(build_grid(5, 0), [](double x) { return std::cos(x); });
    const TrigSpline base = build_spline(sc, params);
    const TrigSpline reg = regularize_spline(base, RegParams{0.5, 1});
    double worst = 0.0;
    for (int j = 0; j < 5; ++j)
      worst = std::max(worst, std::abs(eval_spline(reg, sc.grid.node(j)) - sc.values[j]));
    CHECK(worst > 1e-3);
  }
  SUBCASE("every raw Fourier coefficient is scaled by tau_q") {
    const RegParams rp{0.1, 2};
    const TrigSpline reg = regularize_spline(spl, rp);
    const oracle::QuadratureConfig qc{4096, oracle::QuadratureConfig::Rule::trapezoid};
    const DiscreteSpectrum plain =
        oracle::continuum_fourier([&](double x) { return eval_spline(spl, x); }, 15, qc);
    const DiscreteSpectrum damped =
        oracle::continuum_fourier([&](double x) { return eval_spline(reg, x); }, 15, qc);
    for (int q = 1; q <= 15; ++q) {
      if (std::abs(plain.a[q - 1]) > 1e-6)
        CHECK(damped.a[q - 1] / plain.a[q - 1] == doctest::Approx(tau(q, rp)).epsilon(1e-6));
      if (std::abs(plain.b[q - 1]) > 1e-6)
        CHECK(damped.b[q - 1] / plain.b[q - 1] == doctest::Approx(tau(q, rp)).epsilon(1e-6));
    }
  }
  SUBCASE("double regularization is rejected") {
    const TrigSpline reg = regularize_spline(spl, RegParams{0.5, 1});
    CHECK_THROWS_AS(regularize_spline(reg, RegParams{0.1, 1}), Error);
  }
  SUBCASE("commutes with truncation") {
    const RegParams rp{0.2, 1};
    const TrigSpline a = approximate_spline(regularize_spline(spl, rp), 1);
    const TrigSpline b = regularize_spline(approximate_spline(spl, 1), rp);
    for (double x : {0.3, 1.8, 5.0}) CHECK(eval_spline(a, x) == eval_spline(b, x));
  }
}

TEST_CASE("Euler equation residual") {
  SUBCASE("tau-weighted single harmonic solves it exactly") {
    for (int k : {1, 3}) {
      for (double lambda : {0.1, 1.0}) {
        for (int p : {1, 2}) {
          const RegParams reg{lambda, p};
          DiscreteSpectrum f;
          f.a.assign(3, 0.0);
          f.b.assign(3, 0.0);
          f.a[k - 1] = 1.0;
          DiscreteSpectrum g = f;
          g.a[k - 1] *= tau(k, reg);
          for (double x : {0.0, 0.7, 2.9})
            CHECK(std::abs(euler_residual(f, g, reg, x)) <= 1e-12);
        }
      }
    }
  }
  SUBCASE("unregularized g fails by -lambda^2 at x = 0") {
    const RegParams reg{0.5, 1};
    DiscreteSpectrum f;
    f.a = {1.0};
    f.b = {0.0};
    CHECK(euler_residual(f, f, reg, 0.0) == doctest::Approx(-0.25).epsilon(1e-15));
  }
  SUBCASE("vanishes for bandlimited f and g = tau o f") {
    std::mt19937_64 rng(4402);
    DiscreteSpectrum f;
    f.a0 = testutil::uniform_pm1(rng);
    f.a.resize(8);
    f.b.resize(8);
    for (int k = 0; k < 8; ++k) {
      f.a[k] = testutil::uniform_pm1(rng);
      f.b[k] = testutil::uniform_pm1(rng);
    }
    for (double lambda : {0.01, 0.1, 1.0}) {
      for (int p : {1, 2, 3}) {
        const RegParams reg{lambda, p};
        DiscreteSpectrum g = f;
        for (int k = 1; k <= 8; ++k) {
          g.a[k - 1] *= tau(k, reg);
          g.b[k - 1] *= tau(k, reg);
        }
        for (int i = 0; i < 25; ++i) {
          const double x = 2 * kPi * testutil::uniform01(rng);
          CHECK(std::abs(euler_residual(f, g, reg, x)) <= 1e-10);
        }
      }
    }
  }
  SUBCASE("mismatched bandlimits are rejected") {
    DiscreteSpectrum f, g;
    f.a = {1.0};
    f.b = {0.0};
    g.a = {1.0, 0.0};
    g.b = {0.0, 0.0};
    CHECK_THROWS_AS(euler_residual(f, g, RegParams{0.1, 1}, 0.0), Error);
  }
}

TEST_CASE("smoothness functional") {
  SUBCASE("constants have zero roughness") {
    DiscreteSpectrum c;
    c.a0 = 7.0;
    CHECK(smoothness_functional(make_differentiable(c), 1, 256) <= 1e-24);
  }
  SUBCASE("cos x, p = 1 integrates sin^2 to pi") {
    DiscreteSpectrum f;
    f.a = {1.0};
    f.b = {0.0};
    CHECK(smoothness_functional(make_differentiable(f), 1, 4096) ==
          doctest::Approx(kPi).epsilon(1e-6));
  }
  SUBCASE("cos 2x, p = 2 gives 16 pi") {
    DiscreteSpectrum f;
    f.a = {0.0, 1.0};
    f.b = {0.0, 0.0};
    CHECK(smoothness_functional(make_differentiable(f), 2, 4096) ==
          doctest::Approx(16 * kPi).epsilon(1e-4));
  }
  SUBCASE("spline arguments respect the derivative cap") {
    std::mt19937_64 rng(4403);
    const SampleSet s = random_samples(5, 0, rng);
    SplineParams params;
    params.N = 5;
    params.r = 2;
    const TrigSpline spl = build_spline(s, params);
    CHECK(smoothness_functional(make_differentiable(spl), 1, 512) >= 0.0);
    CHECK_THROWS_AS(smoothness_functional(make_differentiable(spl), 2, 512), Error);
  }
}

TEST_CASE("regularization functional") {
  SUBCASE("f = g with lambda = 0 vanishes") {
    DiscreteSpectrum f;
    f.a = {0.5, -0.3};
    f.b = {0.2, 0.0};
    const auto fn = make_differentiable(f);
    const double phi =
        regularization_functional([&](double x) { return fn.value(x); }, fn, RegParams{0.0, 1}, 1024);
    CHECK(phi <= 1e-20);
  }
  SUBCASE("closed form for a single damped harmonic") {
    // f = cos x, g = t cos x: Phi = pi [(1-t)^2 + lambda^(2p) t^2]
    for (double lambda : {0.3, 1.0}) {
      for (int p : {1, 2}) {
        const RegParams reg{lambda, p};
        const double t = tau(1, reg);
        DiscreteSpectrum g;
        g.a = {t};
        g.b = {0.0};
        const double expected =
            kPi * ((1 - t) * (1 - t) + std::pow(lambda, 2.0 * p) * t * t);
        const double phi = regularization_functional([](double x) { return std::cos(x); },
                                                     make_differentiable(g), reg, 4096);
        CHECK(phi == doctest::Approx(expected).epsilon(1e-9));
      }
    }
  }
  SUBCASE("tau is the minimizer") {
    const RegParams reg{0.4, 1};
    const double t = tau(1, reg);
    for (double off : {-0.05, 0.05}) {
      DiscreteSpectrum g;
      g.a = {t + off};
      g.b = {0.0};
      DiscreteSpectrum gt;
      gt.a = {t};
      gt.b = {0.0};
      const auto f = [](double x) { return std::cos(x); };
      CHECK(regularization_functional(f, make_differentiable(g), reg, 2048) >
            regularization_functional(f, make_differentiable(gt), reg, 2048));
    }
  }
}

// Bandlimited variational optimality: the tau weights solve the discretized
// problem found by the normal-equations oracle (diagonal by orthogonality,
// assembled numerically here without using that fact).
TEST_CASE("variational optimality at desk scale") {
  std::mt19937_64 rng(4404);
  DiscreteSpectrum f;
  f.a0 = 0.6;
  f.a.resize(6);
  f.b.resize(6);
  for (int k = 0; k < 6; ++k) {
    f.a[k] = testutil::uniform_pm1(rng);
    f.b[k] = testutil::uniform_pm1(rng);
  }
  const RegParams reg{0.25, 1};
  // minimize sum_i [f(x_i) - g(x_i)]^2 + lambda^2 [g'(x_i)]^2 over the
  // coefficient vector of g, on a uniform periodic grid
  const int M = 512;
  const int dim = 13;
  auto basis = [&](int i, double x) -> double {
    if (i == 0) return 0.5;
    const int k = (i + 1) / 2;
    return (i % 2 == 1) ? std::cos(k * x) : std::sin(k * x);
  };
  auto basis_d = [&](int i, double x) -> double {
    if (i == 0) return 0.0;
    const int k = (i + 1) / 2;
    return (i % 2 == 1) ? -k * std::sin(k * x) : k * std::cos(k * x);
  };
  std::vector<std::vector<double>> A(dim, std::vector<double>(dim, 0.0));
  std::vector<double> rhs(dim, 0.0);
  const double lam2 = reg.lambda * reg.lambda;
  for (int i = 0; i < M; ++i) {
    const double x = 2 * kPi * i / M;
    const double fx = eval_trig_polynomial(f, 6, x);
    for (int p = 0; p < dim; ++p) {
      rhs[p] += basis(p, x) * fx;
      for (int q = 0; q < dim; ++q)
        A[p][q] += basis(p, x) * basis(q, x) + lam2 * basis_d(p, x) * basis_d(q, x);
    }
  }
  const std::vector<double> c = testutil::solve_dense(A, rhs);
  CHECK(c[0] == doctest::Approx(f.a0).epsilon(1e-8));
  for (int k = 1; k <= 6; ++k) {
    const double t = tau(k, reg);
    CHECK(c[2 * k - 1] == doctest::Approx(t * f.a[k - 1]).epsilon(1e-8));
    CHECK(c[2 * k] == doctest::Approx(t * f.b[k - 1]).epsilon(1e-8));
  }
}
