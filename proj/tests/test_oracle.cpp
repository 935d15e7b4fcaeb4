#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "oracle_helpers.hpp"
#include "trigspline/kernels.hpp"
#include "trigspline/oracle.hpp"

using namespace trigspline;
using oracle::QuadratureConfig;

namespace {
constexpr double kPi = std::numbers::pi;
const QuadratureConfig kTrap{4096, QuadratureConfig::Rule::trapezoid};
}  // namespace

TEST_CASE("continuum Fourier coefficients of pure harmonics") {
  const DiscreteSpectrum spec =
      oracle::continuum_fourier([](double x) { return std::cos(3 * x); }, 5, kTrap);
  CHECK(spec.a[2] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(spec.a0) < 1e-10);
  for (int k = 1; k <= 5; ++k) {
    if (k != 3) CHECK(std::abs(spec.a[k - 1]) < 1e-10);
    CHECK(std::abs(spec.b[k - 1]) < 1e-10);
  }
}

TEST_CASE("constant integrand gives a0 = 2c") {
  const DiscreteSpectrum spec = oracle::continuum_fourier([](double) { return -1.25; }, 2, kTrap);
  CHECK(spec.a0 == doctest::Approx(-2.5).epsilon(1e-14));
}

TEST_CASE("trapezoid quadrature is exact for low-degree trig products") {
  // int cos(5x) cos(5x) = pi, far below the Nyquist limit of 4096 panels
  const DiscreteSpectrum spec =
      oracle::continuum_fourier([](double x) { return std::cos(5 * x); }, 8, kTrap);
  CHECK(spec.a[4] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("continuum residual") {
  DiscreteSpectrum spec;
  spec.a = {1.0, 1.0};
  spec.b = {0.0, 0.0};

  SUBCASE("zero against its own polynomial") {
    const auto f = [&](double x) { return eval_trig_polynomial(spec, 2, x); };
    CHECK(oracle::continuum_residual(f, spec, 2, kTrap) <= 1e-12);
  }
  SUBCASE("discarding cos 2x leaves exactly its energy pi") {
    const auto f = [](double x) { return std::cos(x) + std::cos(2 * x); };
    CHECK(oracle::continuum_residual(f, spec, 1, kTrap) == doctest::Approx(kPi).epsilon(1e-10));
  }
  SUBCASE("the Fourier truncation beats perturbed polynomials") {
    const auto f = [](double x) { return std::cos(x) + std::cos(2 * x); };
    const double base = oracle::continuum_residual(f, spec, 1, kTrap);
    std::mt19937_64 rng(6601);
    for (int t = 0; t < 20; ++t) {
      DiscreteSpectrum pert = spec;
      pert.a[0] += 0.05 * testutil::uniform_pm1(rng);
      pert.b[0] += 0.05 * testutil::uniform_pm1(rng);
      pert.a0 += 0.05 * testutil::uniform_pm1(rng);
      CHECK(oracle::continuum_residual(f, pert, 1, kTrap) > base);
    }
  }
}

TEST_CASE("rectangle rule with N panels reproduces Bessel's formulas bit for bit") {
  const auto f = [](double x) { return std::exp(std::sin(x)) - 0.4 * std::cos(3 * x); };
  for (int N : {9, 15, 21}) {
    const UniformGrid grid = build_grid(N, 0);
    const DiscreteSpectrum bessel = bessel_coefficients(sample_function(grid, f));
    const DiscreteSpectrum rect =
        oracle::continuum_fourier(f, grid.harmonics(), {N, QuadratureConfig::Rule::rectangle});
    CHECK(std::memcmp(&bessel.a0, &rect.a0, sizeof(double)) == 0);
    for (int k = 1; k <= grid.harmonics(); ++k) {
      CHECK(std::memcmp(&bessel.a[k - 1], &rect.a[k - 1], sizeof(double)) == 0);
      CHECK(std::memcmp(&bessel.b[k - 1], &rect.b[k - 1], sizeof(double)) == 0);
    }
  }
}

TEST_CASE("reference kernel sum") {
  SplineParams p;
  p.N = 3;
  p.r = 1;

  SUBCASE("terms = 1 is the bare head term") {
    CHECK(oracle::reference_kernel_sum(KernelKind::cosine, 1, p, 0.7, 1) ==
          doctest::Approx(std::cos(0.7)).epsilon(1e-15));
    SplineParams q = p;
    q.gamma = {2.5, 1.0, 1.0};
    CHECK(oracle::reference_kernel_sum(KernelKind::cosine, 1, q, 0.0, 1) == 2.5);
  }
  SUBCASE("factor series approaches the zeta identity") {
    const double limit = 4 * kPi * kPi / 27;
    const double far = oracle::reference_kernel_sum(KernelKind::cosine, 1, p, 0.0, 2000000);
    CHECK(std::abs(far - limit) < 2e-7);   // naive tail ~ 2/(9M)
    CHECK(far < limit);                    // partial sums of a positive series
  }
  SUBCASE("agrees with the certified evaluator once the tail is negligible") {
    SplineParams q;
    q.N = 5;
    q.r = 2;
    SeriesConfig cfg;
    const double certified = eval_cos_kernel(2, q, 1.3, cfg);
    const double naive = oracle::reference_kernel_sum(KernelKind::cosine, 2, q, 1.3, 2000000);
    CHECK(certified == doctest::Approx(naive).epsilon(2e-12));
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS(oracle::reference_kernel_sum(KernelKind::cosine, 1, p, 0.0, 0), Error);
    CHECK_THROWS_AS(oracle::reference_kernel_sum(KernelKind::cosine, 9, p, 0.0, 10), Error);
  }
}

TEST_CASE("quadrature error paths") {
  CHECK_THROWS_AS(oracle::continuum_fourier([](double) { return 1.0; }, 2, {4, kTrap.rule}), Error);
  try {
    oracle::continuum_fourier([](double x) { return 1.0 / (x - kPi); }, 1,
                              {8, QuadratureConfig::Rule::rectangle});
    // 8 panels never hit pi exactly, so force it with trapezoid's endpoint
  } catch (const Error& e) {
    CHECK(e.code() == errc::quadrature_error);
  }
  try {
    oracle::continuum_fourier([](double x) { return std::log(x); }, 1, kTrap);
    FAIL("expected quadrature error at the x = 0 endpoint");
  } catch (const Error& e) {
    CHECK(e.code() == errc::quadrature_error);
  }
}
