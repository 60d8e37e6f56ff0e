#pragma once

// Hilbert-Eisenstein series h_r(z) = sum_{k in Z} (-1)^k sgn(k) (z + i k)^{-r}
// and the alternating Mathieu series that accompany it.

#include <eiskern/types.hpp>

namespace eiskern::hilbert {

// Paired alternating sum with an Euler-Boole tail. h_1(0) = 2i log 2 exactly.
Evaluation he_direct(int r, Complex z, const SumControl& ctl = {});

// Digamma (r = 1) and polygamma (r >= 2) closed forms.
Complex he_closed(int r, Complex z);

// h_1(z) = 2i sum_{n>=0} (-1)^n eta(2n+1) z^{2n}, |z| < 1.
Evaluation he_taylor(Complex z, const SumControl& ctl = {});

// Real-axis form: purely imaginary by construction.
Complex he_real(int r, double x);

enum class ViaEisenstein {
  eisenstein_digamma,  // r = 1, eps_1 and psi at ix/2, ix
  hyperbolic,          // r = 1, eps_1(iy) written as -i pi coth(pi y)
  polygamma,           // r >= 2, eps_r and psi_{r-1} at +-ix/2, +-ix
};

Complex he_via_eisenstein(int r, double x, ViaEisenstein form);
Complex he_via_eisenstein(int r, double x);

// pi/sinh(pi z) minus the symmetric partial sum sum_{|k|<=N} (-1)^k/(z+ik).
Complex sinh_expansion_residual(Complex z, int N);

// S_r(x) = sum 2k/(k^2+x^2)^r (r > 1) or the alternating version with
// (-1)^{k-1} (r > 0).
Evaluation mathieu(double r, double x, bool alternating, const SumControl& ctl = {});

// E(x) = (1/x) int_0^inf u sin(xu)/(e^u+1) du, E(0) = 2 eta(3). Equals the
// alternating S_2(x).
Evaluation mathieu_E(double x, const QuadControl& ctl = {});

}  // namespace eiskern::hilbert
