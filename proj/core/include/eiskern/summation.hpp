#pragma once

// Tail summation for series of the form sum_{k>=N} w^k g(k), |w| = 1, where g
// is smooth and has a convergent Taylor expansion around N. For w = 1 the
// Euler-Maclaurin formula is used; for w != 1 the Euler-Boole expansion with
// the coefficients of 1/(1 - w e^t). Both are asymptotic, so the expansion is
// truncated at its smallest term and that term is the error estimate.
//
// The unimodular ratio is passed as a phase theta (w = exp(2 pi i theta)) so that
// w^k can be formed without accumulated rounding.

#include <eiskern/types.hpp>

#include <functional>
#include <vector>

namespace eiskern::summation {

struct TailResult {
  Complex value{};
  double err_estimate = 0.0;
  int order_used = 0;
};

// Returns sum_{m>=0} w^m g(N+m) given taylor[j] = g^{(j)}(N)/j!. `integral` is
// int_N^inf g and is only read when w == 1.
TailResult tail(double theta, const std::vector<Complex>& taylor, Complex integral);

// exp(2 pi i k theta) with the phase reduced modulo one before the trig call.
Complex unit_power(double theta, long long k);

// One term c * (k + s)^(-p) of a sum of shifted powers.
struct PowerTerm {
  Complex coef;
  Complex shift;
  double power;
};

// Taylor coefficients of g(k) = sum_i c_i (k + s_i)^(-p_i) around k = N.
std::vector<Complex> power_taylor(const std::vector<PowerTerm>& terms, double N, int order);
// int_N^inf g. Power-one terms must have coefficients summing to zero.
Complex power_integral(const std::vector<PowerTerm>& terms, double N);
Complex power_eval(const std::vector<PowerTerm>& terms, double k);

struct SeriesResult {
  Complex value{};
  double err_estimate = 0.0;
  int terms_used = 0;
};

// Description of a summand g(k) for the generic driver.
struct Summand {
  std::function<Complex(long long)> eval;
  std::function<std::vector<Complex>(double N, int order)> taylor;
  std::function<Complex(double N)> integral;  // only needed when theta is an integer
  double singular_radius = 0.0;  // all singularities of g lie in |k| <= this
};

// sum_{k>=k0} w^k g(k): direct summation up to a start index chosen from the
// singularity radius and the distance of w from 1, then the asymptotic tail.
// With ctl.accelerate == false the sum is truncated at ctl.max_terms terms and
// NonConvergence is raised when the last term exceeds the requested tolerance.
SeriesResult series_sum(double theta, const Summand& g, long long k0, const SumControl& ctl);
SeriesResult power_series_sum(double theta, const std::vector<PowerTerm>& terms, long long k0,
                              const SumControl& ctl);

// Truncated power series helpers (coefficients in increasing order).
std::vector<Complex> series_mul(const std::vector<Complex>& a, const std::vector<Complex>& b);
// a^alpha for a[0] != 0 (J.C.P. Miller recurrence).
std::vector<Complex> series_pow(const std::vector<Complex>& a, double alpha);

// Euler transform of an alternating series sum_{n>=1} (-1)^{n-1} a_n by iterated
// averaging of partial sums, with Aitken's delta-squared as a fallback.
struct AlternatingResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int terms_used = 0;
};
template <class F>
AlternatingResult euler_alternating(F&& a, int direct_terms = 16, int stages = 48);

}  // namespace eiskern::summation

#include <eiskern/detail/euler_alternating.hpp>
