#pragma once

#include <eiskern/types.hpp>

#include <boost/multiprecision/cpp_int.hpp>

namespace eiskern::numkern {

using Rational = boost::multiprecision::cpp_rational;

Complex gamma(Complex z);
double gamma(double x);

// psi(z) = Gamma'(z)/Gamma(z).
Complex digamma(Complex z);
// psi_r(z) = d^r/dz^r psi(z); r = 0 is the digamma function.
Complex polygamma(int r, Complex z);

// Slow oracle: (-1)^{r+1} r! sum_{k<terms} (z+k)^{-(r+1)} plus an integral tail
// correction. Kept for cross-checks.
Complex polygamma_direct(int r, Complex z, int terms);

double riemann_zeta(double s);
// zeta(s) through eta(s)/(1 - 2^{1-s}) even at even integers.
double riemann_zeta_via_eta(double s);
double dirichlet_eta(double s);
double dirichlet_lambda(double r);

// B_n with B_1 = -1/2. Exact values are cached for n <= 64.
Rational bernoulli_exact(int n);
double bernoulli_number(int n);
double bernoulli_poly(int n, double x);

Complex pochhammer(Complex rho, int sigma);

enum class ZetaOddVariant { plain, alternating, real_part };

struct ZetaOddSeries {
  Complex value{};         // digamma side
  Complex series{};        // truncated zeta side
  double discrepancy = 0;  // |value - series|
  bool series_evaluated = false;
  int terms_used = 0;
};

// Digamma/zeta identities:
//   plain:       sum_{k>=1} zeta(2k+1) z^{2k} = -[psi(1+z)+psi(1-z)]/2 - gamma
//   alternating: sum_{k>=1} (-1)^{k-1} zeta(2k+1) z^{2k} = [psi(1+iz)+psi(1-iz)]/2 + gamma
//   real_part:   same series as alternating, = gamma + Re psi(1+ix) for real x
ZetaOddSeries zeta_odd_series(Complex z, ZetaOddVariant variant);

// -gamma + 2 int_0^inf e^{-u} sin^2(t u / 2pi) / sinh(u) du = Re psi(1 + i t/(2pi)).
Evaluation digamma_realpart_integral(double t, const QuadControl& ctl = {});

// Numerically careful elementary helpers shared by the other modules.
Complex cot(Complex w);
Complex csc2(Complex w);
Complex expm1(Complex w);
double sinpi(double x);
double cospi(double x);
double dist_to_integer(double x);

}  // namespace eiskern::numkern
