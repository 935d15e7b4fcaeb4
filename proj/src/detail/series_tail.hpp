#pragma once

// Certified evaluation of the power-law tails
//
//   T = sum_{m > M} (mN + a)^-sigma z^m,   |z| = 1, z = e^(i delta),
//
// that remain after the leading brackets of a kernel series have been
// summed directly. Three routes, each with an explicit remainder bound:
//
//  * z = 1 (and z ~ 1): Euler-Maclaurin with exact derivatives of
//    g(t) = (tN+a)^-sigma; remainder |R_J| <= |B_2J|/(2J)! int |g^(2J)|.
//    For delta != 0 the phase is snapped to 1 and the perturbation
//    sum (mN+a)^-sigma |e^(im delta) - 1| is bounded via min(2, m|delta|).
//
//  * oscillatory z: d-fold summation by parts (Abel),
//      T = sum_{i<d} D^i A_(M+1+i) z^(M+1+i) / (1-z)^(i+1) + R_d,
//    with backward differences D^i computed exactly and
//      |R_d| <= (sigma)_d N^d |1-z|^-d (MN+a)^-(sigma+d-1) / ((sigma+d-1) N)
//    from the mean-value bound |D^d A_m| <= sup |A^(d)|. Rounding noise of
//    the difference triangle is added to the certificate.
//
// The caller compares the returned bound against its tolerance budget.

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "detail/sum_util.hpp"

namespace trigspline::detail {

// |B_2j| / (2j)! for j = 1..8; also equals 2 zeta(2j) / (2pi)^(2j), the
// constant in the Euler-Maclaurin remainder bound.
inline constexpr double kBernoulliOverFact[8] = {
    8.3333333333333333e-02, 1.3888888888888889e-03, 3.3068783068783069e-05,
    8.2671957671957672e-07, 2.0876756987868099e-08, 5.2841901386874932e-10,
    1.3382536530684679e-11, 3.3896802963225829e-13};
// Signs alternate: B_2 = +1/6, B_4 = -1/30, ...
inline constexpr double kBernoulliSign[8] = {1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0};

struct RealTail {
  double value = 0.0;
  double bound = std::numeric_limits<double>::infinity();
};

// sum_{m > M} (mN + a)^-sigma by Euler-Maclaurin at the left edge A = M+1.
inline RealTail tail_real_em(double sigma, int N, double a, long M) {
  const double A = static_cast<double>(M) + 1.0;
  const double base = A * N + a;
  const double dN = static_cast<double>(N);

  double value = std::pow(base, 1.0 - sigma) / ((sigma - 1.0) * dN)  // integral part
                 + 0.5 * std::pow(base, -sigma);
  RealTail best;
  for (int J = 1; J <= 8; ++J) {
    // correction term j = J uses g^(2J-1)(A) = -(sigma)_(2J-1) N^(2J-1) base^-(sigma+2J-1)
    value += kBernoulliSign[J - 1] * kBernoulliOverFact[J - 1] * rising(sigma, 2 * J - 1) *
             powi(dN, 2 * J - 1) * std::pow(base, -(sigma + 2.0 * J - 1.0));
    double remainder = kBernoulliOverFact[J - 1] * rising(sigma, 2 * J) * powi(dN, 2 * J - 1) *
                       std::pow(base, -(sigma + 2.0 * J - 1.0)) / (sigma + 2.0 * J - 1.0);
    if (remainder < best.bound) best = {value, remainder};
    if (remainder < 1e-300) break;
  }
  return best;
}

// Bound on |sum_{m > M} (mN + a)^-sigma (e^(im delta) - 1)|, the cost of
// treating a nearly resonant phase as exactly 1.
inline double snap_perturbation_bound(double sigma, int N, double a, long M, double absdelta) {
  if (absdelta == 0.0) return 0.0;
  const double dN = static_cast<double>(N);
  const double M1 = static_cast<double>(M) + 1.0;
  // m (mN+a)^-sigma <= (rho / N) (mN+a)^-(sigma-1), rho = max over the range
  const double rho = std::max(1.0, M1 * dN / (M1 * dN + a));
  const double mdag = std::ceil(2.0 / absdelta);

  double part1 = 0.0;
  if (mdag > static_cast<double>(M)) {
    double s1;
    if (sigma > 2.0) {
      s1 = tail_integral(sigma - 1.0, N, a, static_cast<double>(M));
    } else {  // sigma == 2: logarithmic window
      s1 = std::log((mdag * dN + a) / (static_cast<double>(M) * dN + a)) / dN;
    }
    part1 = absdelta * (rho / dN) * s1;
  }
  const double cut = std::max(static_cast<double>(M), mdag - 1.0);
  const double part2 = 2.0 * tail_integral(sigma, N, a, cut);
  return part1 + part2;
}

struct SbpPlan {
  int depth = 0;
  double bound = std::numeric_limits<double>::infinity();
};

// Best summation-by-parts depth (bound only; cheap closed forms).
inline SbpPlan sbp_probe(double sigma, int N, double a, long M, double one_minus_z_abs,
                         int max_depth) {
  SbpPlan best;
  const double dN = static_cast<double>(N);
  const double A1 = std::pow((static_cast<double>(M) + 1.0) * dN + a, -sigma);
  double noise = 0.0;
  double pow2 = 1.0;
  double inv = 1.0 / one_minus_z_abs;
  double inv_pow = inv;
  for (int d = 1; d <= max_depth; ++d) {
    noise += pow2 * inv_pow * kEps * A1;  // difference-triangle rounding
    double remainder = rising(sigma, d) * powi(dN, d) * powi(inv, d) *
                       tail_integral(sigma + d, N, a, static_cast<double>(M));
    double b = remainder + noise;
    if (b < best.bound) best = {d, b};
    pow2 *= 2.0;
    inv_pow *= inv;
    if (remainder < 1e-300) break;
  }
  return best;
}

inline std::complex<double> sbp_compute(double sigma, int N, double a, long M, double delta,
                                        int depth) {
  const double dN = static_cast<double>(N);
  std::vector<double> diff(static_cast<size_t>(depth));
  for (int j = 0; j < depth; ++j)
    diff[static_cast<size_t>(j)] = std::pow(static_cast<double>(M + 1 + j) * dN + a, -sigma);

  const double sh = std::sin(delta / 2.0), ch = std::cos(delta / 2.0);
  const std::complex<double> z{ch * ch - sh * sh, 2.0 * sh * ch};
  // 1 - e^(i delta) = 2 sin(delta/2) (sin(delta/2), -cos(delta/2)): no cancellation
  const std::complex<double> one_minus_z{2.0 * sh * sh, -2.0 * sh * ch};

  std::complex<double> zp = std::polar(1.0, wrap_angle(static_cast<double>(M + 1) * delta));
  std::complex<double> denom = one_minus_z;
  std::complex<double> acc{0.0, 0.0};
  for (int i = 0; i < depth; ++i) {
    if (i > 0) {
      for (int j = depth - 1; j >= i; --j)
        diff[static_cast<size_t>(j)] -= diff[static_cast<size_t>(j - 1)];
      zp *= z;
      denom *= one_minus_z;
    }
    acc += diff[static_cast<size_t>(i)] * zp / denom;
  }
  return acc;
}

struct TailValue {
  std::complex<double> value{0.0, 0.0};
  double bound = std::numeric_limits<double>::infinity();
};

// Best certified value of sum_{m > M} (mN + a)^-sigma e^(im delta).
inline TailValue tail_osc(double sigma, int N, double a, long M, double delta,
                          int max_depth = 24) {
  TailValue out;
  const double absd = std::abs(delta);

  RealTail em = tail_real_em(sigma, N, a, M);
  out.value = {em.value, 0.0};
  out.bound = em.bound + snap_perturbation_bound(sigma, N, a, M, absd);

  if (absd > 0.0) {
    const double s2 = 2.0 * std::abs(std::sin(absd / 2.0));
    if (s2 > 0.0) {
      SbpPlan plan = sbp_probe(sigma, N, a, M, s2, max_depth);
      if (plan.bound < out.bound) {
        out.value = sbp_compute(sigma, N, a, M, delta, plan.depth);
        out.bound = plan.bound;
      }
    }
  }
  return out;
}

}  // namespace trigspline::detail
