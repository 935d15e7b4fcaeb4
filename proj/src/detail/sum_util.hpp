#pragma once

#include <cmath>
#include <numbers>

namespace trigspline::detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kEps = 2.220446049250313e-16;

// Kahan-compensated accumulator.
struct Kahan {
  double sum = 0.0;
  double c = 0.0;

  void add(double v) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

// Integer power by repeated squaring; exact for base 1.
inline double powi(double base, int e) {
  double r = 1.0;
  double b = base;
  int n = e;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

// Rising factorial s (s+1) ... (s+i-1).
inline double rising(double s, int i) {
  double r = 1.0;
  for (int j = 0; j < i; ++j) r *= s + j;
  return r;
}

// Reduce to (-pi, pi].
inline double wrap_angle(double a) { return std::remainder(a, kTwoPi); }

// sum_{m > M} (mN + a)^-beta <= (MN + a)^(1-beta) / ((beta - 1) N),
// by integral comparison; requires beta > 1 and MN + a > 0.
inline double tail_integral(double beta, int N, double a, double M) {
  return std::pow(M * N + a, 1.0 - beta) / ((beta - 1.0) * N);
}

}  // namespace trigspline::detail
