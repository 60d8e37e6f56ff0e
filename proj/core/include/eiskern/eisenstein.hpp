#pragma once

// Eisenstein series eps_r(z) = sum_{k in Z} (z+k)^{-r}, with symmetric
// summation for r = 1.

#include <eiskern/types.hpp>

namespace eiskern::eisenstein {

enum class IntegralForm { exponential, hyperbolic };

// Symmetric partial sums with an Euler-Maclaurin tail.
Evaluation eisenstein_direct(int r, Complex z, const SumControl& ctl = {});

// pi cot(pi z), pi^2 / sin^2(pi z), pi^3 cot(pi z) / sin^2(pi z). UnsupportedOrder for r > 3.
Complex eisenstein_closed(int r, Complex z);

// [psi_{r-1}(1-z) + (-1)^r psi_{r-1}(z)] / Gamma(r).
Complex eisenstein_polygamma(int r, Complex z);

// zeta^{-r} + (1/Gamma(r)) int_0^inf t^{r-1}/(e^t-1) (e^{-zeta t} + (-1)^r e^{zeta t}) dt,
// zeta = z - round(Re z).
Evaluation eisenstein_integral(int r, Complex z, const QuadControl& ctl = {},
                               IntegralForm form = IntegralForm::exponential);

// Best available route: closed for r <= 3, polygamma otherwise.
Complex eisenstein(int r, Complex z);

// eps_{r+2}(z) - eps_{r+1}(z) eps_r(z).
Complex product_identity_residual(int r, Complex z);

// z shifted by the nearest integer to Re z, so Re of the result lies in [-1/2, 1/2].
Complex strip_reduce(Complex z);

}  // namespace eiskern::eisenstein
