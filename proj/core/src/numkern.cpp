#include <eiskern/numkern.hpp>
#include <eiskern/quadrature.hpp>
#include <eiskern/summation.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace eiskern {

namespace {
constexpr double eps = std::numeric_limits<double>::epsilon();
}

void SumControl::validate() const {
  if (max_terms < 8) throw DomainError("SumControl: max_terms must be >= 8");
  if (!(rel_tol >= 16 * eps)) throw DomainError("SumControl: rel_tol must be >= 16 machine epsilon");
}

void QuadControl::validate() const {
  if (panel_nodes < 5) throw DomainError("QuadControl: panel_nodes must be >= 5");
  if (max_depth < 1) throw DomainError("QuadControl: max_depth must be >= 1");
  if (!(abs_tol > 0) || !(rel_tol > 0)) throw DomainError("QuadControl: tolerances must be > 0");
}

std::string_view route_name(Route r) {
  switch (r) {
    case Route::direct: return "direct";
    case Route::closed: return "closed";
    case Route::polygamma: return "polygamma";
    case Route::integral: return "integral";
    case Route::quadrature: return "quadrature";
    case Route::digamma: return "digamma";
    case Route::partial_fraction: return "partial_fraction";
    case Route::taylor_moments: return "taylor_moments";
    case Route::taylor_eta: return "taylor_eta";
    case Route::taylor: return "taylor";
    case Route::series: return "series";
    case Route::fourier: return "fourier";
    case Route::euler_transform: return "euler_transform";
    case Route::asymptotic: return "asymptotic";
  }
  return "unknown";
}

void require_finite(Complex z, std::string_view what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError(std::string(what) + ": argument must be finite");
}

void require_finite(double x, std::string_view what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be finite");
}

namespace numkern {

using constants::pi;
using constants::euler_gamma;

namespace {

Complex ipow(Complex z, int n) {
  Complex result{1.0, 0.0};
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

double factorial(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

void guard_nonpositive_integer(Complex z, const char* who) {
  if (z.real() > 0.5) return;
  const double n = std::round(z.real());
  if (n <= 0.0 && std::abs(z - Complex{n, 0.0}) < pole_guard)
    throw PoleError(std::string(who) + ": argument at a non-positive integer pole");
}

// log sin(w) that stays finite for large |Im w|; branch is irrelevant to callers
// that exponentiate.
Complex log_sin(Complex w) {
  const Complex I{0.0, 1.0};
  if (w.imag() > 20.0) {
    const Complex q = std::exp(2.0 * I * w);
    return -I * w + std::log(Complex{0.0, 0.5}) + std::log(1.0 - q);
  }
  if (w.imag() < -20.0) {
    const Complex q = std::exp(-2.0 * I * w);
    return I * w + std::log(Complex{0.0, -0.5}) + std::log(1.0 - q);
  }
  return std::log(std::sin(w));
}

Complex lgamma_stirling(Complex z) {
  // z has Re z >= 0.5; shift to |z| >= 15 before the asymptotic series.
  Complex prod{1.0, 0.0};
  double scale_log = 0.0;
  while (z.real() < 15.0) {
    prod *= z;
    if (std::abs(prod) > 1e200) {
      scale_log += std::log(std::abs(prod));
      prod /= std::abs(prod);
    }
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series{0.0, 0.0};
  Complex p = inv;
  for (int k = 1; k <= 10; ++k) {
    series += bernoulli_number(2 * k) / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  const Complex stirling = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series;
  return stirling - std::log(prod) - scale_log;
}

Complex lgamma_any(Complex z) {
  if (z.real() < 0.5) return std::log(pi) - log_sin(pi * z) - lgamma_stirling(1.0 - z);
  return lgamma_stirling(z);
}

}  // namespace

Complex gamma(Complex z) {
  require_finite(z, "gamma");
  guard_nonpositive_integer(z, "gamma");
  if (z.imag() == 0.0) return {std::tgamma(z.real()), 0.0};
  return std::exp(lgamma_any(z));
}

double gamma(double x) {
  require_finite(x, "gamma");
  guard_nonpositive_integer({x, 0.0}, "gamma");
  return std::tgamma(x);
}

Complex digamma(Complex z) {
  require_finite(z, "digamma");
  guard_nonpositive_integer(z, "digamma");
  if (z.real() < 0.5) return digamma(1.0 - z) - pi * cot(pi * z);
  Complex acc{0.0, 0.0};
  while (z.real() < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series{0.0, 0.0};
  Complex p = inv2;
  for (int k = 1; k <= 12; ++k) {
    series += bernoulli_number(2 * k) / (2.0 * k) * p;
    p *= inv2;
  }
  return acc + std::log(z) - 0.5 * inv - series;
}

Complex polygamma(int r, Complex z) {
  if (r < 0) throw DomainError("polygamma: order must be >= 0");
  if (r == 0) return digamma(z);
  require_finite(z, "polygamma");
  guard_nonpositive_integer(z, "polygamma");
  const double sign = (r % 2 == 1) ? 1.0 : -1.0;  // (-1)^{r+1}
  const double rfact = factorial(r);
  Complex shifted{0.0, 0.0};
  const double threshold = 15.0 + r;
  while (z.real() < threshold) {
    shifted += 1.0 / ipow(z, r + 1);
    z += 1.0;
  }
  // Asymptotic expansion around infinity.
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  const Complex zr = ipow(inv, r);
  Complex series = factorial(r - 1) * zr + 0.5 * rfact * zr * inv;
  Complex p = zr * inv2;
  double ratio = 1.0;  // (2k+r-1)!/(2k)!
  for (int k = 1; k <= 20; ++k) {
    ratio = std::exp(std::lgamma(2.0 * k + r) - std::lgamma(2.0 * k + 1.0));
    const Complex term = bernoulli_number(2 * k) * ratio * p;
    series += term;
    if (std::abs(term) < 1e-18 * std::abs(series)) break;
    p *= inv2;
  }
  return sign * (rfact * shifted + series);
}

Complex polygamma_direct(int r, Complex z, int terms) {
  if (r < 1) throw DomainError("polygamma_direct: order must be >= 1");
  require_finite(z, "polygamma_direct");
  guard_nonpositive_integer(z, "polygamma_direct");
  Complex sum{0.0, 0.0};
  for (int k = 0; k < terms; ++k) sum += 1.0 / ipow(z + static_cast<double>(k), r + 1);
  const Complex zk = z + static_cast<double>(terms);
  // Euler-Maclaurin tail: integral + half term + first derivative correction.
  sum += 1.0 / (static_cast<double>(r) * ipow(zk, r)) + 0.5 / ipow(zk, r + 1) +
         (r + 1.0) / (12.0 * ipow(zk, r + 2));
  const double sign = (r % 2 == 1) ? 1.0 : -1.0;
  return sign * factorial(r) * sum;
}

// ---------------------------------------------------------------- Bernoulli

namespace {

std::vector<Rational> build_bernoulli(int n_max) {
  std::vector<Rational> b(static_cast<std::size_t>(n_max) + 1);
  b[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1 && n % 2 == 1) {
      b[static_cast<std::size_t>(n)] = 0;
      continue;
    }
    Rational acc = 0;
    boost::multiprecision::cpp_int binom = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      acc += Rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(n)] = -acc / (n + 1);
  }
  return b;
}

constexpr int bernoulli_cache_max = 64;

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = build_bernoulli(bernoulli_cache_max);
  return table;
}

const std::vector<double>& bernoulli_table_double() {
  static const std::vector<double> table = [] {
    const auto& exact = bernoulli_table();
    std::vector<double> out;
    out.reserve(exact.size());
    for (const auto& q : exact) out.push_back(static_cast<double>(q));
    return out;
  }();
  return table;
}

}  // namespace

Rational bernoulli_exact(int n) {
  if (n < 0) throw DomainError("bernoulli_number: index must be >= 0");
  if (n <= bernoulli_cache_max) return bernoulli_table()[static_cast<std::size_t>(n)];
  if (n % 2 == 1) return 0;
  return build_bernoulli(n).back();
}

double bernoulli_number(int n) {
  if (n < 0) throw DomainError("bernoulli_number: index must be >= 0");
  if (n <= bernoulli_cache_max) return bernoulli_table_double()[static_cast<std::size_t>(n)];
  if (n % 2 == 1) return 0.0;
  // |B_{2m}| = 2 (2m)! zeta(2m) / (2 pi)^{2m}; sign (-1)^{m+1}.
  const int m = n / 2;
  const double mag = 2.0 * std::exp(std::lgamma(n + 1.0) - n * std::log(2.0 * pi)) * riemann_zeta(n);
  return (m % 2 == 1) ? mag : -mag;
}

double bernoulli_poly(int n, double x) {
  if (n < 0) throw DomainError("bernoulli_poly: degree must be >= 0");
  require_finite(x, "bernoulli_poly");
  // Horner in x over sum_k C(n,k) B_k x^{n-k}.
  double acc = 0.0;
  double binom = 1.0;  // C(n,k)
  std::vector<double> coef(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    coef[static_cast<std::size_t>(k)] = binom * bernoulli_number(k);
    binom = binom * (n - k) / (k + 1);
  }
  for (int k = 0; k <= n; ++k) acc = acc * x + coef[static_cast<std::size_t>(k)];
  return acc;
}

Complex pochhammer(Complex rho, int sigma) {
  if (sigma < 0) throw DomainError("pochhammer: sigma must be >= 0");
  require_finite(rho, "pochhammer");
  Complex out{1.0, 0.0};
  for (int j = 0; j < sigma; ++j) out *= rho + static_cast<double>(j);
  return out;
}

// ------------------------------------------------------------ zeta, eta, lambda

namespace {

double direct_power_sum(double s, bool alternating) {
  double acc = 1.0;
  for (int n = 2; n < 64; ++n) {
    const double t = std::pow(static_cast<double>(n), -s);
    acc += (alternating && n % 2 == 0) ? -t : t;
    if (t < 1e-20) break;
  }
  return acc;
}

double eta_core(double s) {
  if (s >= 40.0) return direct_power_sum(s, true);
  const auto res = summation::euler_alternating(
      [s](int n) { return std::pow(static_cast<double>(n), -s); });
  return res.value;
}

bool is_even_integer(double s) {
  return s == std::floor(s) && std::fmod(s, 2.0) == 0.0 && s <= 2.0 * 32;
}

}  // namespace

double dirichlet_eta(double s) {
  require_finite(s, "dirichlet_eta");
  if (s <= 0.0) throw DomainError("dirichlet_eta: requires s > 0");
  if (s == 1.0) return constants::ln2;
  return eta_core(s);
}

double riemann_zeta_via_eta(double s) {
  require_finite(s, "riemann_zeta");
  if (s <= 1.0) throw DomainError("riemann_zeta: requires s > 1");
  if (s >= 40.0) return direct_power_sum(s, false);
  return eta_core(s) / (-std::expm1((1.0 - s) * constants::ln2));
}

double riemann_zeta(double s) {
  require_finite(s, "riemann_zeta");
  if (s <= 1.0) throw DomainError("riemann_zeta: requires s > 1");
  if (is_even_integer(s)) {
    const int m = static_cast<int>(s) / 2;
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    return sign * std::pow(2.0, 2 * m - 1) * std::pow(pi, 2 * m) * bernoulli_number(2 * m) /
           factorial(2 * m);
  }
  return riemann_zeta_via_eta(s);
}

double dirichlet_lambda(double r) {
  require_finite(r, "dirichlet_lambda");
  if (r <= 1.0) throw DomainError("dirichlet_lambda: requires r > 1");
  return -std::expm1(-r * constants::ln2) * riemann_zeta(r);
}

ZetaOddSeries zeta_odd_series(Complex z, ZetaOddVariant variant) {
  require_finite(z, "zeta_odd_series");
  const Complex I{0.0, 1.0};
  ZetaOddSeries out;
  switch (variant) {
    case ZetaOddVariant::plain:
      if (std::abs(z) >= 1.0) throw DomainError("zeta_odd_series: plain variant requires |z| < 1");
      out.value = -0.5 * (digamma(1.0 + z) + digamma(1.0 - z)) - euler_gamma;
      break;
    case ZetaOddVariant::alternating:
      if (std::abs(z) >= 1.0)
        throw DomainError("zeta_odd_series: alternating variant requires |z| < 1");
      out.value = 0.5 * (digamma(1.0 + I * z) + digamma(1.0 - I * z)) + euler_gamma;
      break;
    case ZetaOddVariant::real_part:
      if (z.imag() != 0.0) throw DomainError("zeta_odd_series: real_part variant requires real z");
      out.value = {euler_gamma + digamma(Complex{1.0, z.real()}).real(), 0.0};
      break;
  }
  if (std::abs(z) < 1.0) {
    const Complex z2 = z * z;
    Complex p = z2;
    Complex sum{0.0, 0.0};
    int k = 1;
    for (; k < 20000; ++k) {
      const double sign = (variant == ZetaOddVariant::plain || k % 2 == 1) ? 1.0 : -1.0;
      const Complex term = sign * riemann_zeta(2.0 * k + 1.0) * p;
      sum += term;
      if (std::abs(term) <= 1e-18 * std::max(std::abs(sum), 1e-300)) break;
      p *= z2;
      if (std::abs(p) < 1e-300) break;
    }
    out.series = sum;
    out.series_evaluated = true;
    out.terms_used = k;
    out.discrepancy = std::abs(out.series - out.value);
  }
  return out;
}

Evaluation digamma_realpart_integral(double t, const QuadControl& ctl) {
  require_finite(t, "digamma_realpart_integral");
  ctl.validate();
  const double c = t / (2.0 * pi);
  if (c == 0.0) return {Complex{-euler_gamma, 0.0}, 0.0, 0, Route::quadrature};
  auto f = [c](double u) -> Complex {
    const double s = std::sin(c * u);
    return {2.0 * s * s / std::expm1(2.0 * u), 0.0};
  };
  const auto res = quadrature::integrate_to_inf(f, 0.0, ctl, std::min(1.0, 4.0 / std::abs(c)));
  return {Complex{-euler_gamma + 2.0 * res.value.real(), 0.0}, 2.0 * res.err_estimate,
          res.evaluations, Route::quadrature};
}

// -------------------------------------------------------------- helpers

Complex cot(Complex w) {
  const Complex I{0.0, 1.0};
  if (w.imag() > 0.5) {
    const Complex q = std::exp(2.0 * I * w);
    return I * (q + 1.0) / (q - 1.0);
  }
  if (w.imag() < -0.5) return -cot(-w);
  return std::cos(w) / std::sin(w);
}

Complex csc2(Complex w) {
  const Complex I{0.0, 1.0};
  if (std::abs(w.imag()) > 0.5) {
    const Complex q = (w.imag() > 0) ? std::exp(2.0 * I * w) : std::exp(-2.0 * I * w);
    const Complex d = 1.0 - q;
    return -4.0 * q / (d * d);
  }
  const Complex s = std::sin(w);
  return 1.0 / (s * s);
}

Complex expm1(Complex w) {
  const double a = w.real(), b = w.imag();
  const double sb2 = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * sb2 * sb2, std::exp(a) * std::sin(b)};
}

double sinpi(double x) {
  double r = std::remainder(x, 2.0);  // [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(pi * r);
}

double cospi(double x) {
  const double r = std::abs(std::remainder(x, 2.0));  // [0, 1]
  if (r == 0.5) return 0.0;
  if (r <= 0.25) return std::cos(pi * r);
  if (r <= 0.75) return std::sin(pi * (0.5 - r));
  return -std::cos(pi * (1.0 - r));
}

double dist_to_integer(double x) { return std::abs(x - std::round(x)); }

}  // namespace numkern
}  // namespace eiskern
