#include <eiskern/numkern.hpp>
#include <eiskern/summation.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace eiskern::summation {

namespace {

constexpr int tail_order = 60;

bool is_integer_phase(double theta) { return theta == std::floor(theta); }

// Distance from 1 of w = exp(2 pi i theta) measured as the radius of
// convergence of the Euler-Boole generating function 1/(1 - w e^t).
double boole_radius(double theta) {
  const double d = numkern::dist_to_integer(theta);
  return d == 0.0 ? 2.0 * constants::pi : 2.0 * constants::pi * d;
}

}  // namespace

Complex unit_power(double theta, long long k) {
  // Reduce k*theta modulo 1 in two steps so large k keeps the phase exact
  // when theta is a dyadic rational.
  const double t = std::remainder(theta, 1.0);
  const double ph = std::remainder(static_cast<double>(k % (1LL << 40)) * t, 1.0);
  return {numkern::cospi(2.0 * ph), numkern::sinpi(2.0 * ph)};
}

TailResult tail(double theta, const std::vector<Complex>& a, Complex integral) {
  TailResult out;
  const int order = static_cast<int>(a.size());
  if (order == 0) return out;
  double prev = -1.0;
  double prev2 = -1.0;
  if (is_integer_phase(theta)) {
    // Euler-Maclaurin.
    out.value = integral + 0.5 * a[0];
    out.err_estimate = 0.5 * std::abs(a[0]);
    for (int j = 1; 2 * j - 1 < order; ++j) {
      const Complex term = -numkern::bernoulli_number(2 * j) / (2.0 * j) * a[2 * j - 1];
      const double mag = std::abs(term);
      if (prev >= 0.0 && mag > prev) break;
      out.value += term;
      out.err_estimate = mag;
      out.order_used = 2 * j - 1;
      prev = mag;
      if (mag == 0.0) break;
    }
    return out;
  }
  const Complex w = unit_power(theta, 1);
  const Complex f = w / (1.0 - w);
  // d_j = j! c_j where sum c_j t^j = 1/(1 - w e^t):  d_j = f * sum_{m=1}^{j} C(j,m) d_{j-m}.
  std::vector<Complex> d(static_cast<std::size_t>(order));
  d[0] = 1.0 / (1.0 - w);
  for (int j = 0; j < order; ++j) {
    if (j > 0) {
      Complex acc{0.0, 0.0};
      double binom = 1.0;
      for (int m = 1; m <= j; ++m) {
        binom = binom * (j - m + 1) / m;
        acc += binom * d[static_cast<std::size_t>(j - m)];
      }
      d[static_cast<std::size_t>(j)] = f * acc;
    }
    const Complex term = d[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(j)];
    const double mag = std::abs(term);
    if (mag == 0.0) continue;
    // Compare with the two previous terms: for w = -1 every other coefficient
    // is zero up to rounding.
    if (j > 3 && mag > std::max(prev, prev2)) break;
    out.value += term;
    out.err_estimate = std::max(mag, std::min(prev, 1e300));
    out.order_used = j;
    prev2 = prev;
    prev = mag;
  }
  return out;
}

std::vector<Complex> power_taylor(const std::vector<PowerTerm>& terms, double N, int order) {
  std::vector<Complex> out(static_cast<std::size_t>(order), Complex{0.0, 0.0});
  for (const auto& t : terms) {
    const Complex b = N + t.shift;
    const Complex inv = 1.0 / b;
    Complex c = t.coef * std::pow(b, -t.power);
    for (int j = 0; j < order; ++j) {
      out[static_cast<std::size_t>(j)] += c;
      c *= (-t.power - j) / (j + 1.0) * inv;
    }
  }
  return out;
}

Complex power_integral(const std::vector<PowerTerm>& terms, double N) {
  Complex out{0.0, 0.0};
  for (const auto& t : terms) {
    const Complex b = N + t.shift;
    if (t.power == 1.0)
      out -= t.coef * std::log(b);
    else
      out += t.coef * std::pow(b, 1.0 - t.power) / (t.power - 1.0);
  }
  return out;
}

Complex power_eval(const std::vector<PowerTerm>& terms, double k) {
  Complex out{0.0, 0.0};
  for (const auto& t : terms) {
    const Complex b = k + t.shift;
    if (t.power == std::floor(t.power) && t.power > 0 && t.power < 64) {
      Complex p{1.0, 0.0};
      for (int i = 0; i < static_cast<int>(t.power); ++i) p *= b;
      out += t.coef / p;
    } else {
      out += t.coef * std::pow(b, -t.power);
    }
  }
  return out;
}

SeriesResult series_sum(double theta, const Summand& g, long long k0, const SumControl& ctl) {
  ctl.validate();
  SeriesResult out;
  if (!ctl.accelerate) {
    Complex sum{0.0, 0.0};
    Complex last{0.0, 0.0};
    for (long long k = k0; k < k0 + ctl.max_terms; ++k) {
      last = unit_power(theta, k) * g.eval(k);
      sum += last;
    }
    out = {sum, std::abs(last), ctl.max_terms};
    if (out.err_estimate > ctl.rel_tol * std::abs(sum))
      throw NonConvergence("series: max_terms exhausted before rel_tol (raw partial sums)");
    return out;
  }
  const double rho = boole_radius(theta);
  const double reach = std::max(10.0, 44.0 / rho);
  long long N = std::max<long long>(k0, static_cast<long long>(std::ceil(g.singular_radius + reach)));
  if (N - k0 > ctl.max_terms)
    throw NonConvergence("series: required direct terms exceed max_terms (" +
                         std::to_string(N - k0) + ")");
  Complex direct{0.0, 0.0};
  for (long long k = k0; k < N; ++k) direct += unit_power(theta, k) * g.eval(k);
  const double Nd = static_cast<double>(N);
  const Complex integral = is_integer_phase(theta) ? g.integral(Nd) : Complex{0.0, 0.0};
  const TailResult t = tail(theta, g.taylor(Nd, tail_order), integral);
  const Complex wN = unit_power(theta, N);
  out.value = direct + wN * t.value;
  out.err_estimate = t.err_estimate + 4.0 * std::numeric_limits<double>::epsilon() *
                                          (std::abs(direct) + std::abs(t.value));
  out.terms_used = static_cast<int>(N - k0) + t.order_used + 1;
  const double scale = std::abs(direct) + std::abs(t.value);
  if (t.err_estimate > std::max(ctl.rel_tol * std::abs(out.value),
                                16.0 * std::numeric_limits<double>::epsilon() * scale))
    throw NonConvergence("series: asymptotic tail did not reach tolerance");
  return out;
}

SeriesResult power_series_sum(double theta, const std::vector<PowerTerm>& terms, long long k0,
                              const SumControl& ctl) {
  double radius = 0.0;
  for (const auto& t : terms) radius = std::max(radius, std::abs(t.shift));
  Summand g;
  g.eval = [&terms](long long k) { return power_eval(terms, static_cast<double>(k)); };
  g.taylor = [&terms](double N, int order) { return power_taylor(terms, N, order); };
  g.integral = [&terms](double N) { return power_integral(terms, N); };
  g.singular_radius = radius;
  return series_sum(theta, g, k0, ctl);
}

std::vector<Complex> series_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<Complex> c(n, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<Complex> series_pow(const std::vector<Complex>& a, double alpha) {
  const std::size_t n = a.size();
  std::vector<Complex> b(n, Complex{0.0, 0.0});
  if (n == 0) return b;
  if (a[0] == Complex{0.0, 0.0}) throw DomainError("series_pow: leading coefficient is zero");
  b[0] = std::pow(a[0], alpha);
  for (std::size_t m = 1; m < n; ++m) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 1; k <= m; ++k)
      acc += ((alpha + 1.0) * static_cast<double>(k) - static_cast<double>(m)) * a[k] * b[m - k];
    b[m] = acc / (static_cast<double>(m) * a[0]);
  }
  return b;
}

}  // namespace eiskern::summation
