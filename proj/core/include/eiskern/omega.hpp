#pragma once

// Omega(z) = 2 int_0^{1/2} sinh(z u) cot(pi u) du, its moments, bounds and ODE.

#include <eiskern/types.hpp>

namespace eiskern::omega {

Evaluation omega_quadrature(Complex z, const QuadControl& ctl = {});

// (1/pi) sinh(z/2) {2 log 2 + psi(1+iz/4pi) + psi(1-iz/4pi) - psi(1+iz/2pi) - psi(1-iz/2pi)}.
// Any real z; complex z needs |z| < 2 pi.
Complex omega_digamma(Complex z);

// (1/pi)(e^{-pi w} - e^{pi w}) sum_{k>=1} (-1)^k k/(w^2+k^2), w = z/(2 pi).
Evaluation omega_partial_fraction(Complex z, const SumControl& ctl = {});

enum class TaylorVariant { moments, eta };
Evaluation omega_taylor(Complex z, TaylorVariant variant, const SumControl& ctl = {});

enum class MomentRoute { closed, quadrature, series };
// Omega_{2k+1} = 2 int_0^{1/2} u^{2k+1} cot(pi u) du.
double omega_moment(int k, MomentRoute route);

// Default dispatcher: digamma for real z and for |z| < 0.9 * 2 pi, quadrature otherwise.
Complex omega(Complex z);

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};
// Two-sided bounds; for x < 0 the pair is swapped so lower <= Omega(x) <= upper.
Bounds omega_bounds(double x);

struct Envelope {
  double lo_coef = 0.0;
  double hi_coef = 0.0;
  double ratio = 0.0;  // Omega(x) e^{-x/2}
};
Envelope omega_asymptotic_envelope(double x);

// sign * exp(log_abs); sign == 0 means the value is exactly zero.
struct LogValue {
  double log_abs = 0.0;
  int sign = 0;
};
LogValue omega_log(double x);
LogValue bound_lower_log(double x);  // the formula with zeta(3) in the numerator
LogValue bound_upper_log(double x);
LogValue approximant_log(double x);  // hi_coef * sinh(x/2)

// |Omega'(x) - coth(x/2) Omega(x)/2 + x/(2 pi^3) sinh(x/2) E(x/(2 pi))|, with
// Omega' a central difference of step h.
double omega_ode_residual(double x, double h);
// Same ODE with the forcing term (x/pi^3) sinh(x/2) E(x) as it is usually printed.
double omega_ode_residual_printed(double x, double h);

// PV int_{-1/2}^{1/2} e^{zu} cot(pi u) du, computed as int (e^{zu}-1) cot(pi u) du.
Evaluation omega_hilbert_pv(Complex z, const QuadControl& ctl = {});

}  // namespace eiskern::omega
