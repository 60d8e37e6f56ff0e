#pragma once

// Conjugate Bernoulli numbers and functions, the fractional periodic Bernoulli
// function and the zeta representations built from them.

#include <eiskern/types.hpp>

namespace eiskern::conj {

// B~_{2m+1}(1/2) = (-1)^{m+1} (2m+1)! 2^{-2m} pi^{-2m-1} eta(2m+1).
double conj_bernoulli_half(int m);
// Same value from zeta: (-1)^m (2m+1)! (2^{-4m} - 2^{-2m}) pi^{-2m-1} zeta(2m+1),
// with the m = 0 limit -log 2 / pi.
double conj_bernoulli_half_from_zeta(int m);

// B~_{2m+1}(1/2) rebuilt from quadrature moments Omega_{2k+1}, m = 0, 1, 2.
double moment_combination(int m);
// The m = 2 combination read literally as (11/8) Omega_1/2 + (5/3) Omega_3/2 - Omega_5.
double moment_combination_printed_m2();

// B~_{2n+1}(x) = -2 (2n+1)! sum_{k>=1} sin(2 pi k x - (2n+1) pi/2) / (2 pi k)^{2n+1}.
Evaluation conj_bernoulli_periodic(int n, double x, const SumControl& ctl = {});
// B~_1(x) = -(1/pi) log|2 sin(pi x)|.
double b1_conj_closed(double x);

// sum_k B~_k(1/2) z^k / k! in closed form. Real z: any; complex z: |z| < 2 pi.
Complex gen_function_closed(Complex z);
// Truncated coefficient series, k <= max_index.
Complex gen_function_series(Complex z, int max_index = 40);
// -(z / (2 sinh(z/2))) Omega(z).
Complex gen_function_b0(Complex z);

// B~_{2m+1}(1) = B~_{2m+1}(1/2) / (2^{-2m} - 1), m >= 1.
double conj_bernoulli_one(int m);
// zeta(2m+1) = (-1)^m 2^{2m} pi^{2m+1} B~_{2m+1}(1) / (2m+1)!.
double zeta_odd_via_conj(int m);
// Same with pi^{2m-1}, as the formula is often quoted; off by pi^2.
double zeta_odd_via_conj_printed(int m);
// zeta(2m+1) = csc(alpha pi/2) 2^{alpha-1} pi^alpha B~_alpha(0) / Gamma(alpha+1), alpha = 2m+1,
// with B~_alpha(0) from the Fourier series.
double zeta_odd_via_fourier(int m, const SumControl& ctl = {});

// zeta(2m) = (-1)^{m+1} 2^{2m-1} pi^{2m} B_{2m} / (2m)!.
double zeta_even_euler(int m);

// B_alpha(x) = -2 Gamma(alpha+1) sum_{k>=1} cos(pi(2kx - alpha/2)) / (2 pi k)^alpha.
Evaluation fractional_bernoulli(double alpha, double x, const SumControl& ctl = {});
// zeta(alpha) = -sec(alpha pi/2) 2^{alpha-1} pi^alpha B_alpha(0) / Gamma(alpha+1), alpha not odd.
double zeta_from_fractional(double alpha, const SumControl& ctl = {});
// B*_alpha = 2 Gamma(alpha+1) zeta(alpha) / (2 pi)^alpha.
double ramanujan_bstar(double alpha);

struct DoubleSumCheck {
  double double_sum = 0.0;
  double fourier = 0.0;
  double discrepancy = 0.0;
};
// Double finite sum candidate for B~_{2j+1}(z) against the Fourier value.
DoubleSumCheck double_sum_candidate(int j, double z);

}  // namespace eiskern::conj
