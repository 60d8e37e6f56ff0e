#include <eiskern/conj_bernoulli.hpp>
#include <eiskern/numkern.hpp>
#include <eiskern/omega.hpp>
#include <eiskern/summation.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace eiskern::conj {

using constants::ln2;
using constants::pi;

namespace {

constexpr double two_pi = 2.0 * constants::pi;

double sign_pow(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

void require_index(int m, int lo, const char* what) {
  if (m < lo) throw DomainError(std::string(what) + ": index must be >= " + std::to_string(lo));
  if (m > 80) throw DomainError(std::string(what) + ": index too large for double range");
}

// sum_{k>=1} e^{2 pi i k x} k^{-p}
summation::SeriesResult polylog_on_circle(double p, double x, const SumControl& ctl) {
  const double theta = x - std::floor(x);
  const std::vector<summation::PowerTerm> terms{{1.0, 0.0, p}};
  return summation::power_series_sum(theta, terms, 1, ctl);
}

}  // namespace

double conj_bernoulli_half(int m) {
  require_index(m, 0, "conj_bernoulli_half");
  const int n = 2 * m + 1;
  return sign_pow(m + 1) * std::exp(std::lgamma(n + 1.0) - n * std::log(pi)) *
         std::ldexp(numkern::dirichlet_eta(n), -2 * m);
}

double conj_bernoulli_half_from_zeta(int m) {
  require_index(m, 0, "conj_bernoulli_half_from_zeta");
  if (m == 0) return -ln2 / pi;
  const int n = 2 * m + 1;
  return sign_pow(m) * std::exp(std::lgamma(n + 1.0) - n * std::log(pi)) *
         (std::ldexp(1.0, -4 * m) - std::ldexp(1.0, -2 * m)) * numkern::riemann_zeta(n);
}

double moment_combination(int m) {
  using omega::MomentRoute;
  auto mom = [](int k) { return omega::omega_moment(k, MomentRoute::quadrature); };
  switch (m) {
    case 0: return -mom(0);
    case 1: return ln2 / (4.0 * pi) - mom(1);
    case 2: return -mom(2) + 5.0 / 6.0 * mom(1) - 7.0 / 48.0 * mom(0);
    default: throw UnsupportedOrder("moment_combination: only m = 0, 1, 2");
  }
}

double moment_combination_printed_m2() {
  using omega::MomentRoute;
  auto mom = [](int k) { return omega::omega_moment(k, MomentRoute::quadrature); };
  return 11.0 / 8.0 * mom(0) / 2.0 + 5.0 / 3.0 * mom(1) / 2.0 - mom(2);
}

Evaluation conj_bernoulli_periodic(int n, double x, const SumControl& ctl) {
  require_finite(x, "conj_bernoulli_periodic");
  require_index(n, 0, "conj_bernoulli_periodic");
  if (n == 0 && x == std::floor(x))
    throw DomainError("conj_bernoulli_periodic: x must not be an integer when n = 0");
  const int p = 2 * n + 1;
  // sin(a - (2n+1) pi/2) = -(-1)^n cos(a)
  const auto s = polylog_on_circle(p, x, ctl);
  const double pref = 2.0 * sign_pow(n) * std::exp(std::lgamma(p + 1.0) - p * std::log(two_pi));
  return {Complex{pref * s.value.real(), 0.0}, std::abs(pref) * s.err_estimate, s.terms_used,
          Route::fourier};
}

double b1_conj_closed(double x) {
  require_finite(x, "b1_conj_closed");
  if (x == std::floor(x)) throw DomainError("b1_conj_closed: x must not be an integer");
  return -std::log(std::abs(2.0 * numkern::sinpi(x))) / pi;
}

Complex gen_function_closed(Complex z) {
  require_finite(z, "gen_function_closed");
  const Complex I{0.0, 1.0};
  if (z.imag() == 0.0) {
    const double x = z.real();
    const double br = ln2 + numkern::digamma(Complex{1.0, x / (4.0 * pi)}).real() -
                      numkern::digamma(Complex{1.0, x / two_pi}).real();
    return {-x / pi * br, 0.0};
  }
  if (std::abs(z) >= two_pi) throw DomainError("gen_function_closed: complex z requires |z| < 2 pi");
  const Complex a = I * z / (4.0 * pi);
  const Complex b = I * z / two_pi;
  const Complex br = 2.0 * ln2 + numkern::digamma(1.0 + a) + numkern::digamma(1.0 - a) -
                     numkern::digamma(1.0 + b) - numkern::digamma(1.0 - b);
  return -z / two_pi * br;
}

Complex gen_function_series(Complex z, int max_index) {
  require_finite(z, "gen_function_series");
  if (max_index < 1) throw DomainError("gen_function_series: max_index must be >= 1");
  // B~_{2m+1}(1/2) / (2m+1)! = (-1)^{m+1} 2^{-2m} pi^{-2m-1} eta(2m+1)
  Complex sum{0.0, 0.0};
  Complex p = z / pi;
  const Complex q = -z * z / (4.0 * pi * pi);
  for (int m = 0; 2 * m + 1 <= max_index; ++m) {
    sum -= numkern::dirichlet_eta(2.0 * m + 1.0) * p;
    p *= q;
  }
  return sum;
}

Complex gen_function_b0(Complex z) {
  require_finite(z, "gen_function_b0");
  if (z == Complex{0.0, 0.0}) return {0.0, 0.0};
  const Complex s = std::sinh(0.5 * z);
  if (std::abs(s) < pole_guard) throw PoleError("gen_function_b0: sinh(z/2) vanishes");
  return -z / (2.0 * s) * omega::omega(z);
}

double conj_bernoulli_one(int m) {
  require_index(m, 1, "conj_bernoulli_one");
  return conj_bernoulli_half(m) / (std::ldexp(1.0, -2 * m) - 1.0);
}

double zeta_odd_via_conj(int m) {
  const double b = conj_bernoulli_one(m);
  const int n = 2 * m + 1;
  return sign_pow(m) * std::ldexp(std::exp(n * std::log(pi) - std::lgamma(n + 1.0)), 2 * m) * b;
}

double zeta_odd_via_conj_printed(int m) {
  return zeta_odd_via_conj(m) / (pi * pi);
}

double zeta_odd_via_fourier(int m, const SumControl& ctl) {
  require_index(m, 1, "zeta_odd_via_fourier");
  const double alpha = 2.0 * m + 1.0;
  const double b = conj_bernoulli_periodic(m, 0.0, ctl).value.real();
  const double csc = 1.0 / numkern::sinpi(0.5 * alpha);
  return csc * std::exp((alpha - 1.0) * ln2 + alpha * std::log(pi) - std::lgamma(alpha + 1.0)) * b;
}

double zeta_even_euler(int m) {
  require_index(m, 1, "zeta_even_euler");
  const int n = 2 * m;
  return sign_pow(m + 1) * std::exp((n - 1.0) * ln2 + n * std::log(pi) - std::lgamma(n + 1.0)) *
         numkern::bernoulli_number(n);
}

Evaluation fractional_bernoulli(double alpha, double x, const SumControl& ctl) {
  require_finite(alpha, "fractional_bernoulli");
  require_finite(x, "fractional_bernoulli");
  if (!(alpha > 0.0)) throw DomainError("fractional_bernoulli: alpha must be > 0");
  if (x == std::floor(x) && !(alpha > 1.0))
    throw DomainError("fractional_bernoulli: alpha > 1 required at integer x");
  const auto s = polylog_on_circle(alpha, x, ctl);
  const Complex rot{numkern::cospi(0.5 * alpha), -numkern::sinpi(0.5 * alpha)};
  const double pref = -2.0 * std::exp(std::lgamma(alpha + 1.0) - alpha * std::log(two_pi));
  return {Complex{pref * (rot * s.value).real(), 0.0}, std::abs(pref) * s.err_estimate,
          s.terms_used, Route::fourier};
}

double zeta_from_fractional(double alpha, const SumControl& ctl) {
  require_finite(alpha, "zeta_from_fractional");
  if (!(alpha > 1.0)) throw DomainError("zeta_from_fractional: alpha must be > 1");
  const double c = numkern::cospi(0.5 * alpha);
  if (std::abs(c) < 1e-12) throw DomainError("zeta_from_fractional: alpha must not be an odd integer");
  const double b = fractional_bernoulli(alpha, 0.0, ctl).value.real();
  return -std::exp((alpha - 1.0) * ln2 + alpha * std::log(pi) - std::lgamma(alpha + 1.0)) * b / c;
}

double ramanujan_bstar(double alpha) {
  require_finite(alpha, "ramanujan_bstar");
  if (!(alpha > 1.0)) throw DomainError("ramanujan_bstar: alpha must be > 1");
  return 2.0 * std::exp(std::lgamma(alpha + 1.0) - alpha * std::log(two_pi)) *
         numkern::riemann_zeta(alpha);
}

DoubleSumCheck double_sum_candidate(int j, double z) {
  require_finite(z, "double_sum_candidate");
  require_index(j, 0, "double_sum_candidate");
  if (!(z > 0.0 && z < 1.0)) throw DomainError("double_sum_candidate: z must lie in (0, 1)");
  double outer = 0.0;
  for (int k = 0; k <= j; ++k) {
    double inner = 0.0;
    for (int n = 0; n <= k; ++n)
      inner += sign_pow(n) * numkern::dirichlet_eta(2.0 * n + 1.0) *
               std::exp(-2.0 * n * std::log(pi) - std::lgamma(2.0 * (k - n) + 2.0));
    const int e = 2 * j - 2 * k;
    outer += numkern::bernoulli_poly(e, z) * std::ldexp(1.0, -2 * k) /
             std::tgamma(e + 1.0) * inner;
  }
  DoubleSumCheck c;
  c.double_sum = -std::tgamma(2.0 * j + 2.0) / pi * outer;
  c.fourier = conj_bernoulli_periodic(j, z).value.real();
  c.discrepancy = std::abs(c.double_sum - c.fourier);
  return c;
}

}  // namespace eiskern::conj
