#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle_helpers.hpp"
#include "trigspline/grid.hpp"
#include "trigspline/kernels.hpp"
#include "trigspline/oracle.hpp"

using namespace trigspline;

namespace {

constexpr double kPi = std::numbers::pi;
const SeriesConfig kCfg{};  // 1e-12, 1e6

SplineParams params(int N, int r, int I1 = 0, int I2 = 0) {
  SplineParams p;
  p.N = N;
  p.r = r;
  p.I1 = I1;
  p.I2 = I2;
  return p;
}

}  // namespace

TEST_CASE("convergence factor point values") {
  CHECK(convergence_factor(1, 1) == 1.0);
  CHECK(convergence_factor(2, 1) == 0.25);
  CHECK(convergence_factor(10, 3) == 1e-4);
  CHECK_THROWS_AS(convergence_factor(0, 1), Error);
  CHECK_THROWS_AS(convergence_factor(1, 0), Error);
}

TEST_CASE("hc_1 on N=3, r=1 hits the zeta identity 4 pi^2 / 27") {
  // sum over all q not divisible by 3 of q^-2 = (1 - 1/9) zeta(2)
  const double expected = 4.0 * kPi * kPi / 27.0;
  CHECK(interp_factor_cos(1, params(3, 1), kCfg) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(interp_factor_sin(1, params(3, 1), kCfg) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("alternating factor series is bracketed by its partial sums") {
  const SplineParams p = params(3, 1, 1, 0);
  const double value = interp_factor_cos(1, p, kCfg);
  // consecutive partial sums of an alternating series with monotone
  // brackets bracket the limit
  long double partial = 1.0L;  // head term, gamma1 v_1 = 1
  long double lo = -1e30L, hi = 1e30L;
  for (long m = 1; m <= 2000; ++m) {
    const long double bracket = std::pow(3.0L * m + 1.0L, -2.0L) + std::pow(3.0L * m - 1.0L, -2.0L);
    partial += (m % 2 ? -1.0L : 1.0L) * bracket;
    if (m % 2)
      lo = std::max(lo, partial);
    else
      hi = std::min(hi, partial);
  }
  CHECK(value >= static_cast<double>(lo) - 1e-12);
  CHECK(value <= static_cast<double>(hi) + 1e-12);
}

TEST_CASE("indicator symmetry: (I1,I2) = (1,0) and (0,1) coincide exactly") {
  for (int N : {3, 5, 9}) {
    for (int r : {1, 2}) {
      for (int k = 1; k <= (N - 1) / 2; ++k) {
        CHECK(interp_factor_cos(k, params(N, r, 1, 0), kCfg) ==
              interp_factor_cos(k, params(N, r, 0, 1), kCfg));
        CHECK(interp_factor_sin(k, params(N, r, 1, 0), kCfg) ==
              interp_factor_sin(k, params(N, r, 0, 1), kCfg));
      }
    }
  }
}

TEST_CASE("hs_2 on N=5, r=3 is the head plus a tail inside the integral bracket") {
  SplineParams p = params(5, 3);
  p.eta = {2.0, 1.0, 1.0};
  const double head = 2.0 * convergence_factor(2, 3);
  const double value = interp_factor_sin(2, p, kCfg);
  const double tail = value - head;
  CHECK(tail > 0.0);
  // tail < 2 sum_{m>=1} (5m-2)^-4 < 2 [3^-4 + integral_1^inf (5t-2)^-4 dt]
  const double bound = 2.0 * (std::pow(3.0, -4.0) + std::pow(3.0, -3.0) / 15.0);
  CHECK(tail < bound);
}

TEST_CASE("degenerate interpolation factors are rejected") {
  // tune gamma so the tail cancels the head: 1 - c (4 pi^2/27 - 1) = 0
  const double c = 1.0 / (4.0 * kPi * kPi / 27.0 - 1.0);
  SplineParams p = params(3, 1);
  p.gamma = {1.0, -c, -c};
  try {
    interp_factor_cos(1, p, kCfg);
    FAIL("expected degenerate-factor");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_factor);
  }
  // a clearly nonzero variant passes
  p.gamma = {1.0, -0.5 * c, -0.5 * c};
  CHECK(std::abs(interp_factor_cos(1, p, kCfg)) > 1e-3);
}

TEST_CASE("cos kernel equals its factor at x = 0") {
  // all cosines are 1 at x = 0, so C_k(0) = hc_k with I2 = I1... the sign
  // (-1)^(m I1) matches hc's (-1)^(m(I1-I2)) at I2 = 0.
  for (int I1 : {0, 1}) {
    const SplineParams p = params(5, 1, I1, 0);
    CHECK(eval_cos_kernel(1, p, 0.0, kCfg) ==
          doctest::Approx(interp_factor_cos(1, p, kCfg)).epsilon(1e-12));
  }
}

TEST_CASE("kernel node identities") {
  const UniformGrid g = build_grid(5, 0);
  const SplineParams p = params(5, 1);
  const double hc = interp_factor_cos(1, p, kCfg);
  const double hs = interp_factor_sin(1, p, kCfg);
  CHECK(eval_cos_kernel(1, p, g.node(1), kCfg) ==
        doctest::Approx(hc * std::cos(g.node(1))).epsilon(1e-11));
  CHECK(eval_sin_kernel(1, p, g.node(1), kCfg) ==
        doctest::Approx(hs * std::sin(g.node(1))).epsilon(1e-11));

  // the full sweep, including the variant-1 grid via I2 = 1
  for (int N : {3, 5, 9}) {
    for (int r : {1, 2, 3}) {
      for (int I2 : {0, 1}) {
        const SplineParams q = params(N, r, 0, I2);
        const UniformGrid grid = build_grid(N, I2);
        for (int k = 1; k <= q.n(); ++k) {
          const double fc = interp_factor_cos(k, q, kCfg);
          const double fs = interp_factor_sin(k, q, kCfg);
          for (int j = 0; j < N; ++j) {
            const double x = grid.node(j);
            CHECK(std::abs(eval_cos_kernel(k, q, x, kCfg) / fc - std::cos(k * x)) <=
                  10 * kCfg.tolerance);
            CHECK(std::abs(eval_sin_kernel(k, q, x, kCfg) / fs - std::sin(k * x)) <=
                  10 * kCfg.tolerance);
          }
        }
      }
    }
  }
}

TEST_CASE("kernels against the naive extended-precision oracle") {
  SUBCASE("alternating stitch, r=2, N=9") {
    SplineParams p = params(9, 2, 1, 0);
    p.gamma = {1.0, 2.0, 3.0};
    const double v = eval_cos_kernel(2, p, 1.0, kCfg);
    const double ref = oracle::reference_kernel_sum(KernelKind::cosine, 2, p, 1.0, 1000000);
    CHECK(v == doctest::Approx(ref).epsilon(1e-10));
  }
  SUBCASE("mixed-sign eta, r=1, N=7") {
    SplineParams p = params(7, 1);
    p.eta = {1.0, -1.0, 2.0};
    const double v = eval_sin_kernel(2, p, 0.7, kCfg);
    const double ref = oracle::reference_kernel_sum(KernelKind::sine, 2, p, 0.7, 2000000);
    // naive tail after 2e6 brackets is ~ (|eta2|+|eta3|)(MN-k)^-1/N ~ 3e-8
    CHECK(std::abs(v - ref) < 5e-8);
  }
}

TEST_CASE("sin kernel vanishes at x = 0") {
  for (int I1 : {0, 1}) {
    const SplineParams p = params(7, 2, I1, 0);
    CHECK(eval_sin_kernel(3, p, 0.0, kCfg) == 0.0);
  }
}

TEST_CASE("kernel parity and periodicity") {
  std::mt19937_64 rng(889);
  SplineParams p = params(5, 1);
  p.gamma = {1.0, 1.5, 0.5};
  p.eta = {1.0, -0.5, 2.0};
  for (int trial = 0; trial < 25; ++trial) {
    const double x = 2.0 * kPi * testutil::uniform01(rng);
    for (int k = 1; k <= 2; ++k) {
      CHECK(std::abs(eval_cos_kernel(k, p, x, kCfg) - eval_cos_kernel(k, p, -x, kCfg)) <= 1e-12);
      CHECK(std::abs(eval_sin_kernel(k, p, x, kCfg) + eval_sin_kernel(k, p, -x, kCfg)) <= 1e-12);
      CHECK(std::abs(eval_cos_kernel(k, p, x + 2 * kPi, kCfg) - eval_cos_kernel(k, p, x, kCfg)) <=
            10 * kCfg.tolerance);
    }
  }
}

TEST_CASE("regularized kernels") {
  const SplineParams p = params(5, 1);
  SUBCASE("lambda = 0 reproduces the plain kernel bit for bit") {
    for (double x : {0.0, 0.4, 2.2}) {
      CHECK(eval_regularized_cos_kernel(1, p, 0.0, 2, x, kCfg) == eval_cos_kernel(1, p, x, kCfg));
      CHECK(eval_regularized_sin_kernel(1, p, 0.0, 2, x, kCfg) == eval_sin_kernel(1, p, x, kCfg));
    }
  }
  SUBCASE("weighted sum matches the naive weighted oracle at x = 0") {
    const double v = eval_regularized_cos_kernel(1, p, 1.0, 1, 0.0, kCfg);
    const double ref = oracle::reference_kernel_sum(KernelKind::cosine, 1, p, 0.0, 2000000,
                                                    std::make_pair(1.0, 1));
    // tau boosts the tail decay to q^-4, so 2e6 naive terms are plenty
    CHECK(v == doctest::Approx(ref).epsilon(1e-10));
  }
  SUBCASE("x=1.1, lambda=0.5, p=2 against the oracle") {
    const double v = eval_regularized_sin_kernel(1, p, 0.5, 2, 1.1, kCfg);
    const double ref = oracle::reference_kernel_sum(KernelKind::sine, 1, p, 1.1, 500000,
                                                    std::make_pair(0.5, 2));
    CHECK(v == doctest::Approx(ref).epsilon(1e-10));
  }
  SUBCASE("large lambda sends the kernel to zero monotonically") {
    double prev = std::abs(eval_regularized_cos_kernel(1, p, 1.0, 1, 0.0, kCfg));
    for (double lambda : {10.0, 100.0, 1000.0}) {
      const double cur = std::abs(eval_regularized_cos_kernel(1, p, lambda, 1, 0.0, kCfg));
      CHECK(cur < prev);
      prev = cur;
    }
    CHECK(prev < 1e-5);
  }
  SUBCASE("sines still vanish at x = 0") {
    CHECK(eval_regularized_sin_kernel(2, p, 0.3, 1, 0.0, kCfg) == 0.0);
  }
}

TEST_CASE("kernel derivatives") {
  SUBCASE("d = 0 equals the kernel") {
    const SplineParams p = params(5, 2);
    CHECK(kernel_derivative(KernelKind::cosine, 1, p, 0, 0.9, kCfg) ==
          eval_cos_kernel(1, p, 0.9, kCfg));
    CHECK(kernel_derivative(KernelKind::sine, 2, p, 0, 0.9, kCfg) ==
          eval_sin_kernel(2, p, 0.9, kCfg));
  }
  SUBCASE("sine derivative at 0 sums q times the coefficients") {
    const SplineParams p = params(5, 3);
    const double v = kernel_derivative(KernelKind::sine, 1, p, 1, 0.0, kCfg);
    const double ref =
        oracle::reference_kernel_sum(KernelKind::sine, 1, p, 0.0, 1000000, std::nullopt, 1);
    CHECK(v == doctest::Approx(ref).epsilon(1e-10));
  }
  SUBCASE("d >= r is rejected") {
    const SplineParams p = params(5, 1);
    try {
      kernel_derivative(KernelKind::sine, 1, p, 1, 0.3, kCfg);
      FAIL("expected nonconvergent-derivative");
    } catch (const Error& e) {
      CHECK(e.code() == errc::nonconvergent_derivative);
    }
  }
}

// The direct-summation certificate is the integral-comparison formula; the
// reported bound must match it and dominate the true discarded tail.
TEST_CASE("tail bound certificate on the direct path") {
  SplineParams p = params(5, 3);
  SeriesConfig loose{1e-8, 1000000};
  const KernelEval ke = eval_kernel_ex(KernelKind::cosine, 1, p, 0.41, 0, std::nullopt, loose);
  const long M = ke.terms;
  const double formula =
      2.0 * std::pow(static_cast<double>(M) * 5.0 - 1.0, -3.0) / (3.0 * 5.0);
  CHECK(ke.tail_bound <= formula * (1 + 1e-12));
  CHECK(ke.tail_bound <= loose.tolerance);

  // true discarded tail: naive sums far past M
  const double partial = oracle::reference_kernel_sum(KernelKind::cosine, 1, p, 0.41, M + 1);
  const double full = oracle::reference_kernel_sum(KernelKind::cosine, 1, p, 0.41, 2000000);
  CHECK(std::abs(full - partial) <= formula);
  CHECK(ke.value == doctest::Approx(partial).epsilon(1e-12));
}

TEST_CASE("convergence failure reports the achieved bound") {
  const SplineParams p = params(3, 1);
  SeriesConfig tiny{1e-12, 4};  // far too few terms for any certificate
  try {
    eval_cos_kernel(1, p, 0.5, tiny);
    FAIL("expected convergence failure");
  } catch (const Error& e) {
    CHECK(e.code() == errc::convergence_failure);
    CHECK(std::string(e.what()).find("achieved bound") != std::string::npos);
  }
}

TEST_CASE("term coefficients locate the aliased frequencies") {
  SplineParams p = params(5, 2);
  p.gamma = {2.0, 3.0, 4.0};
  // q = k
  CHECK(kernel_term_coefficient(KernelKind::cosine, 1, p, 1) == 2.0 * std::pow(1.0, -3.0));
  // q = N - k (m = 1, minus branch)
  CHECK(kernel_term_coefficient(KernelKind::cosine, 1, p, 4) ==
        doctest::Approx(3.0 * std::pow(4.0, -3.0)).epsilon(1e-15));
  // q = N + k (m = 1, plus branch)
  CHECK(kernel_term_coefficient(KernelKind::cosine, 1, p, 6) ==
        doctest::Approx(4.0 * std::pow(6.0, -3.0)).epsilon(1e-15));
  // frequencies the kernel does not carry
  CHECK(kernel_term_coefficient(KernelKind::cosine, 1, p, 2) == 0.0);
  CHECK(kernel_term_coefficient(KernelKind::cosine, 1, p, 5) == 0.0);

  SUBCASE("alternating sign under I1 = 1") {
    SplineParams q = params(5, 2, 1, 0);
    CHECK(kernel_term_coefficient(KernelKind::cosine, 1, q, 4) < 0.0);
    CHECK(kernel_term_coefficient(KernelKind::cosine, 1, q, 9) > 0.0);  // m = 2
  }
  SUBCASE("sine kernel carries the minus on the mN-k branch") {
    SplineParams q = params(5, 2);
    q.eta = {1.0, 2.0, 3.0};
    CHECK(kernel_term_coefficient(KernelKind::sine, 1, q, 4) ==
          doctest::Approx(-2.0 * std::pow(4.0, -3.0)).epsilon(1e-15));
  }
  SUBCASE("regularization weights the coefficient by tau_q") {
    const double plain = kernel_term_coefficient(KernelKind::cosine, 1, p, 6);
    const double reg = kernel_term_coefficient(KernelKind::cosine, 1, p, 6, std::make_pair(0.5, 1));
    CHECK(reg == doctest::Approx(plain / (1.0 + 9.0)).epsilon(1e-14));
  }
}

TEST_CASE("regularized decay boost shows in the term ratios") {
  const SplineParams p = params(5, 1);
  const double lambda = 0.4;
  for (int preg : {1, 2}) {
    double lo = 1e300, hi = 0.0;
    for (long q = 5; q <= 500; ++q) {
      const double c =
          kernel_term_coefficient(KernelKind::cosine, 1, p, q, std::make_pair(lambda, preg));
      if (c == 0.0) continue;
      const double scaled = std::abs(c) * std::pow(static_cast<double>(q), 2.0 + 2.0 * preg);
      lo = std::min(lo, scaled);
      hi = std::max(hi, scaled);
    }
    CHECK(hi / lo <= 2.0);
  }
}

TEST_CASE("parameter validation") {
  SplineParams p = params(5, 1);
  p.gamma[1] = 0.0;
  CHECK_THROWS_AS(eval_cos_kernel(1, p, 0.0, kCfg), Error);
  CHECK_THROWS_AS(eval_cos_kernel(3, params(5, 1), 0.0, kCfg), Error);  // k > n
  CHECK_THROWS_AS(interp_factor_cos(0, params(5, 1), kCfg), Error);
}
