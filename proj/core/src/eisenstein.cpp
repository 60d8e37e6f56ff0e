#include <eiskern/eisenstein.hpp>
#include <eiskern/numkern.hpp>
#include <eiskern/quadrature.hpp>
#include <eiskern/summation.hpp>

#include <cmath>
#include <string>

namespace eiskern::eisenstein {

using constants::pi;

namespace {

void check_args(int r, Complex z, const char* who) {
  if (r < 1) throw DomainError(std::string(who) + ": order r must be >= 1");
  require_finite(z, who);
  const double n = std::round(z.real());
  if (std::abs(z - Complex{n, 0.0}) < pole_guard)
    throw PoleError(std::string(who) + ": z is at an integer pole");
}

Complex ipow_inv(Complex z, int r) {
  Complex p{1.0, 0.0};
  for (int i = 0; i < r; ++i) p *= z;
  return 1.0 / p;
}

}  // namespace

Complex strip_reduce(Complex z) { return z - std::round(z.real()); }

Evaluation eisenstein_direct(int r, Complex z, const SumControl& ctl) {
  check_args(r, z, "eisenstein_direct");
  const double sgn = (r % 2 == 0) ? 1.0 : -1.0;
  // (z+k)^{-r} + (z-k)^{-r} = (k+z)^{-r} + (-1)^r (k-z)^{-r}
  const std::vector<summation::PowerTerm> terms{{1.0, z, static_cast<double>(r)},
                                                {sgn, -z, static_cast<double>(r)}};
  const auto s = summation::power_series_sum(0.0, terms, 1, ctl);
  return {ipow_inv(z, r) + s.value, s.err_estimate, s.terms_used + 1, Route::direct};
}

Complex eisenstein_closed(int r, Complex z) {
  check_args(r, z, "eisenstein_closed");
  const Complex w = pi * z;
  switch (r) {
    case 1: return pi * numkern::cot(w);
    case 2: return pi * pi * numkern::csc2(w);
    case 3:
      if (std::abs(w.imag()) <= 0.5) {
        const Complex s = std::sin(w);
        return pi * pi * pi * std::cos(w) / (s * s * s);
      }
      return pi * pi * pi * numkern::cot(w) * numkern::csc2(w);
    default:
      throw UnsupportedOrder("eisenstein_closed: closed forms exist only for r <= 3");
  }
}

Complex eisenstein_polygamma(int r, Complex z) {
  check_args(r, z, "eisenstein_polygamma");
  const double sgn = (r % 2 == 0) ? 1.0 : -1.0;
  return (numkern::polygamma(r - 1, 1.0 - z) + sgn * numkern::polygamma(r - 1, z)) /
         std::tgamma(static_cast<double>(r));
}

Evaluation eisenstein_integral(int r, Complex z, const QuadControl& ctl, IntegralForm form) {
  check_args(r, z, "eisenstein_integral");
  ctl.validate();
  const Complex zeta = strip_reduce(z);
  if (zeta.real() == 0.0 && z.imag() == 0.0)
    throw StripError("eisenstein_integral: strip reduction landed on zero");
  const bool even = (r % 2 == 0);
  const int rm1 = r - 1;
  auto bracket = [&](double t) -> Complex {
    // e^{-zeta t} + (-1)^r e^{zeta t}
    const Complex zt = zeta * t;
    if (form == IntegralForm::hyperbolic || t < 1e-3)
      return even ? 2.0 * std::cosh(zt) : -2.0 * std::sinh(zt);
    return std::exp(-zt) + (even ? 1.0 : -1.0) * std::exp(zt);
  };
  auto head = [&](double t) -> Complex {
    return std::pow(t, rm1) / std::expm1(t) * bracket(t);
  };
  // For t >= 1 fold 1/(e^t - 1) into the exponentials so nothing overflows.
  auto tail = [&](double t) -> Complex {
    const double damp = -std::expm1(-t);
    if (form == IntegralForm::hyperbolic) return std::pow(t, rm1) / std::expm1(t) * bracket(t);
    return std::pow(t, rm1) *
           (std::exp(-(1.0 + zeta) * t) + (even ? 1.0 : -1.0) * std::exp(-(1.0 - zeta) * t)) / damp;
  };
  const auto a = quadrature::integrate(head, 0.0, 1.0, ctl);
  const auto b = quadrature::integrate_to_inf(tail, 1.0, ctl, 1.0);
  const double g = std::tgamma(static_cast<double>(r));
  return {ipow_inv(zeta, r) + (a.value + b.value) / g, (a.err_estimate + b.err_estimate) / g,
          a.evaluations + b.evaluations, Route::integral};
}

Complex eisenstein(int r, Complex z) {
  if (r >= 1 && r <= 3) return eisenstein_closed(r, z);
  return eisenstein_polygamma(r, z);
}

Complex product_identity_residual(int r, Complex z) {
  check_args(r, z, "product_identity_residual");
  return eisenstein(r + 2, z) - eisenstein(r + 1, z) * eisenstein(r, z);
}

}  // namespace eiskern::eisenstein
