#include <eiskern/hilbert_eisenstein.hpp>
#include <eiskern/numkern.hpp>
#include <eiskern/omega.hpp>
#include <eiskern/quadrature.hpp>
#include <eiskern/summation.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace eiskern::omega {

using constants::ln2;
using constants::pi;

namespace {

const Complex I{0.0, 1.0};
constexpr double two_pi = 2.0 * constants::pi;

double factorial(int n) { return std::tgamma(n + 1.0); }

double cot_real(double u) { return std::cos(pi * u) / std::sin(pi * u); }

// Real bracket of the digamma form for real x.
double digamma_bracket(double x) {
  return 2.0 * ln2 + 2.0 * numkern::digamma(Complex{1.0, x / (4.0 * pi)}).real() -
         2.0 * numkern::digamma(Complex{1.0, x / (2.0 * pi)}).real();
}

double log_sinh(double t) {
  // t > 0
  if (t > 1.0) return t - ln2 + std::log1p(-std::exp(-2.0 * t));
  return std::log(std::sinh(t));
}

LogValue sinh_times(double x, double factor_over_pi, double extra) {
  // (factor_over_pi) * sinh(x/2) * extra in log form
  LogValue out;
  if (x == 0.0 || extra == 0.0 || factor_over_pi == 0.0) return out;
  out.log_abs = log_sinh(std::abs(0.5 * x)) + std::log(std::abs(factor_over_pi)) +
                std::log(std::abs(extra));
  const int s = (x > 0 ? 1 : -1) * (extra > 0 ? 1 : -1) * (factor_over_pi > 0 ? 1 : -1);
  out.sign = s;
  return out;
}

double zeta3() {
  static const double z3 = numkern::riemann_zeta(3.0);
  return z3;
}

// eta(2n+1) for n = 0..count-1.
const std::vector<double>& eta_odd_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(80);
    for (int n = 0; n < 80; ++n) t[static_cast<std::size_t>(n)] = numkern::dirichlet_eta(2.0 * n + 1.0);
    return t;
  }();
  return table;
}

// Coefficient of z^{2k+1} in both Taylor expansions, computed from the
// eta-sum: 2^{-2k} sum_{n<=k} (-1)^n eta(2n+1) / (pi^{2n+1} (2(k-n)+1)!).
double eta_coefficient(int k) {
  const auto& eta = eta_odd_table();
  double acc = 0.0;
  for (int n = 0; n <= k; ++n) {
    const double term = std::exp(-(2.0 * n + 1.0) * std::log(pi) - std::lgamma(2.0 * (k - n) + 2.0)) *
                        eta[static_cast<std::size_t>(n)];
    acc += (n % 2 == 0) ? term : -term;
  }
  return std::ldexp(acc, -2 * k);
}

double moment_series(int k) {
  // (1/(4^k pi)) {1/(2k+1) + sum_{n>=1} (-1)^n B_{2n} pi^{2n} / ((2n)! (2k+2n+1))}
  double acc = 0.0;
  for (int n = 32; n >= 1; --n) {
    const double c = ((n % 2 == 0) ? 1.0 : -1.0) * numkern::bernoulli_number(2 * n) *
                     std::exp(2.0 * n * std::log(pi) - std::lgamma(2.0 * n + 1.0));
    acc += c / (2.0 * k + 2.0 * n + 1.0);
  }
  acc += 1.0 / (2.0 * k + 1.0);
  return std::ldexp(acc, -2 * k) / pi;
}

}  // namespace

Evaluation omega_quadrature(Complex z, const QuadControl& ctl) {
  require_finite(z, "omega_quadrature");
  ctl.validate();
  if (z == Complex{0.0, 0.0}) return {Complex{0.0, 0.0}, 0.0, 0, Route::quadrature};
  const double az = std::abs(z);
  const double delta = std::min(1e-3, 0.05 / az);
  // Series of sinh(zu) cot(pi u) on [0, delta].
  const Complex z2 = z * z;
  const double p2 = pi * pi;
  const Complex c2 = z2 / 6.0 - p2 / 3.0;
  const Complex c4 = z2 * z2 / 120.0 - z2 * p2 / 18.0 - p2 * p2 / 45.0;
  const double d2 = delta * delta;
  const Complex head = z / pi * delta * (1.0 + c2 * d2 / 3.0 + c4 * d2 * d2 / 5.0);
  auto f = [z](double u) -> Complex { return std::sinh(z * u) * cot_real(u); };
  const auto res = quadrature::integrate(f, delta, 0.5, ctl);
  return {2.0 * (head + res.value), 2.0 * res.err_estimate, res.evaluations, Route::quadrature};
}

Complex omega_digamma(Complex z) {
  require_finite(z, "omega_digamma");
  if (z.imag() == 0.0) {
    const double x = z.real();
    return {std::sinh(0.5 * x) / pi * digamma_bracket(x), 0.0};
  }
  if (std::abs(z) >= two_pi) throw DomainError("omega_digamma: complex z requires |z| < 2 pi");
  const Complex a = I * z / (4.0 * pi);
  const Complex b = I * z / (2.0 * pi);
  const Complex br = 2.0 * ln2 + numkern::digamma(1.0 + a) + numkern::digamma(1.0 - a) -
                     numkern::digamma(1.0 + b) - numkern::digamma(1.0 - b);
  return std::sinh(0.5 * z) / pi * br;
}

Evaluation omega_partial_fraction(Complex z, const SumControl& ctl) {
  require_finite(z, "omega_partial_fraction");
  const Complex w = z / two_pi;
  const double n = std::round(w.imag());
  if (n != 0.0 && std::abs(w - Complex{0.0, n}) < 1e-10)
    throw PoleError("omega_partial_fraction: z/(2 pi) is in iZ \\ {0}");
  if (z == Complex{0.0, 0.0}) return {Complex{0.0, 0.0}, 0.0, 0, Route::partial_fraction};
  const std::vector<summation::PowerTerm> terms{{0.5, I * w, 1.0}, {0.5, -I * w, 1.0}};
  const auto s = summation::power_series_sum(0.5, terms, 1, ctl);
  const Complex pref = -2.0 / pi * std::sinh(pi * w);
  return {pref * s.value, std::abs(pref) * s.err_estimate, s.terms_used, Route::partial_fraction};
}

Evaluation omega_taylor(Complex z, TaylorVariant variant, const SumControl& ctl) {
  require_finite(z, "omega_taylor");
  ctl.validate();
  if (std::abs(z) >= two_pi) throw DomainError("omega_taylor: requires |z| < 2 pi");
  const Complex z2 = z * z;
  Complex p = z;
  Complex sum{0.0, 0.0};
  double last = 0.0;
  int k = 0;
  const int kmax = std::min(ctl.max_terms, 75);
  for (; k < kmax; ++k) {
    const double c = (variant == TaylorVariant::moments)
                         ? moment_series(k) / factorial(2 * k + 1)
                         : eta_coefficient(k);
    const Complex term = c * p;
    sum += term;
    last = std::abs(term);
    if (k > 0 && last <= 0.1 * ctl.rel_tol * std::abs(sum)) break;
    if (last == 0.0 && k > 0) break;
    p *= z2;
  }
  if (k == kmax) throw NonConvergence("omega_taylor: coefficient series did not converge");
  return {sum, last, k + 1, variant == TaylorVariant::moments ? Route::taylor_moments : Route::taylor_eta};
}

double omega_moment(int k, MomentRoute route) {
  if (k < 0) throw DomainError("omega_moment: k must be >= 0");
  switch (route) {
    case MomentRoute::closed: {
      const int m = 2 * k + 1;
      return factorial(m) * eta_coefficient(k);
    }
    case MomentRoute::series: return moment_series(k);
    case MomentRoute::quadrature: {
      QuadControl ctl;
      ctl.rel_tol = 1e-14;
      ctl.abs_tol = 1e-18;
      const int m = 2 * k + 1;
      auto f = [m](double u) -> Complex { return {std::pow(u, m) * cot_real(u), 0.0}; };
      return 2.0 * quadrature::integrate(f, 0.0, 0.5, ctl).value.real();
    }
  }
  return 0.0;
}

Complex omega(Complex z) {
  if (z.imag() == 0.0 || std::abs(z) < 0.9 * two_pi) return omega_digamma(z);
  return omega_quadrature(z).value;
}

Bounds omega_bounds(double x) {
  require_finite(x, "omega_bounds");
  const double x2 = x * x;
  const double z3 = zeta3();
  const double p2 = pi * pi;
  const double pref = std::sinh(0.5 * x) / pi;
  const double lo = pref * std::log((z3 * x2 + 8.0 * p2) / (3.0 * x2 + 2.0 * p2));
  const double hi = pref * std::log((3.0 * x2 + 8.0 * p2) / (z3 * x2 + 2.0 * p2));
  if (x < 0.0) return {hi, lo};
  return {lo, hi};
}

Envelope omega_asymptotic_envelope(double x) {
  require_finite(x, "omega_asymptotic_envelope");
  if (x < 10.0) throw DomainError("omega_asymptotic_envelope: requires x >= 10");
  Envelope e;
  e.lo_coef = std::log(zeta3() / 3.0) / two_pi;
  e.hi_coef = -e.lo_coef;
  const LogValue v = omega_log(x);
  e.ratio = v.sign * std::exp(v.log_abs - 0.5 * x);
  return e;
}

LogValue omega_log(double x) {
  require_finite(x, "omega_log");
  return sinh_times(x, 1.0 / pi, digamma_bracket(x));
}

LogValue bound_lower_log(double x) {
  require_finite(x, "bound_lower_log");
  const double x2 = x * x, p2 = pi * pi;
  return sinh_times(x, 1.0 / pi, std::log((zeta3() * x2 + 8.0 * p2) / (3.0 * x2 + 2.0 * p2)));
}

LogValue bound_upper_log(double x) {
  require_finite(x, "bound_upper_log");
  const double x2 = x * x, p2 = pi * pi;
  return sinh_times(x, 1.0 / pi, std::log((3.0 * x2 + 8.0 * p2) / (zeta3() * x2 + 2.0 * p2)));
}

LogValue approximant_log(double x) {
  require_finite(x, "approximant_log");
  return sinh_times(x, std::log(3.0 / zeta3()) / two_pi, 1.0);
}

namespace {

void check_step(double x, double h) {
  require_finite(x, "omega_ode_residual");
  if (!(h >= 1e-7 && h <= 1e-3)) throw StepError("omega_ode_residual: h must lie in [1e-7, 1e-3]");
}

double omega_prime(double x, double h) {
  return (omega_digamma(Complex{x + h, 0.0}).real() - omega_digamma(Complex{x - h, 0.0}).real()) /
         (2.0 * h);
}

double half_coth_omega(double x) {
  // coth(x/2) Omega(x) / 2, with the limit Omega_1 at the origin.
  if (std::abs(x) < 1e-8) return omega_moment(0, MomentRoute::series);
  return 0.5 / std::tanh(0.5 * x) * omega_digamma(Complex{x, 0.0}).real();
}

}  // namespace

double omega_ode_residual(double x, double h) {
  check_step(x, h);
  const double e = hilbert::mathieu_E(x / two_pi).value.real();
  const double forcing = x / (2.0 * pi * pi * pi) * std::sinh(0.5 * x) * e;
  return std::abs(omega_prime(x, h) - half_coth_omega(x) + forcing);
}

double omega_ode_residual_printed(double x, double h) {
  check_step(x, h);
  const double e = hilbert::mathieu_E(x).value.real();
  const double forcing = x / (pi * pi * pi) * std::sinh(0.5 * x) * e;
  return std::abs(omega_prime(x, h) - half_coth_omega(x) + forcing);
}

Evaluation omega_hilbert_pv(Complex z, const QuadControl& ctl) {
  require_finite(z, "omega_hilbert_pv");
  ctl.validate();
  auto f = [z](double u) -> Complex { return numkern::expm1(z * u) * cot_real(u); };
  const auto a = quadrature::integrate(f, -0.5, 0.0, ctl);
  const auto b = quadrature::integrate(f, 0.0, 0.5, ctl);
  return {a.value + b.value, a.err_estimate + b.err_estimate, a.evaluations + b.evaluations,
          Route::quadrature};
}

}  // namespace eiskern::omega
