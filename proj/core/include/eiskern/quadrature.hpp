#pragma once

// Adaptive Gauss-Legendre quadrature for complex-valued integrands. Each panel
// is integrated once whole and once as two halves; the difference is the
// panel error estimate. The panel with the largest estimate is split until the
// total meets the tolerance.

#include <eiskern/types.hpp>

#include <functional>

namespace eiskern::quadrature {

using Integrand = std::function<Complex(double)>;

struct Result {
  Complex value{};
  double err_estimate = 0.0;
  int evaluations = 0;
};

Result integrate(const Integrand& f, double a, double b, const QuadControl& ctl);

// int_a^inf over panels of doubling width, stopping once two consecutive
// panels contribute below tolerance.
Result integrate_to_inf(const Integrand& f, double a, const QuadControl& ctl,
                        double first_width = 1.0);

}  // namespace eiskern::quadrature
