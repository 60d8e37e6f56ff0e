#include <eiskern/eisenstein.hpp>
#include <eiskern/hilbert_eisenstein.hpp>
#include <eiskern/numkern.hpp>
#include <eiskern/quadrature.hpp>
#include <eiskern/summation.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace eiskern::hilbert {

using constants::ln2;
using constants::pi;
using numkern::polygamma;

namespace {

const Complex I{0.0, 1.0};

void check_args(int r, Complex z, const char* who) {
  if (r < 1) throw DomainError(std::string(who) + ": order r must be >= 1");
  require_finite(z, who);
  const double n = std::round(z.imag());
  if (n != 0.0 && std::abs(z - Complex{0.0, n}) < 1e-10)
    throw PoleError(std::string(who) + ": z is at a pole in iZ \\ {0}");
}

// i^{-r}
Complex i_pow_neg(int r) {
  switch (((r % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

Complex i_pow(int r) { return i_pow_neg(-r); }

double sign_pow(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

Evaluation he_direct(int r, Complex z, const SumControl& ctl) {
  check_args(r, z, "he_direct");
  if (r == 1) {
    if (z == Complex{0.0, 0.0}) return {Complex{0.0, 2.0 * ln2}, 0.0, 0, Route::direct};
    // 2i sum (-1)^{k-1} k/(z^2+k^2), k/(z^2+k^2) = [1/(k+iz) + 1/(k-iz)]/2
    const std::vector<summation::PowerTerm> terms{{-0.5, I * z, 1.0}, {-0.5, -I * z, 1.0}};
    const auto s = summation::power_series_sum(0.5, terms, 1, ctl);
    return {2.0 * I * s.value, 2.0 * s.err_estimate, s.terms_used, Route::direct};
  }
  // (z+ik)^{-r} = i^{-r} (k - iz)^{-r};  (z-ik)^{-r} = (-i)^{-r} (k + iz)^{-r}
  const double p = static_cast<double>(r);
  const std::vector<summation::PowerTerm> terms{{i_pow_neg(r), -I * z, p},
                                                {-std::conj(i_pow_neg(r)), I * z, p}};
  const auto s = summation::power_series_sum(0.5, terms, 1, ctl);
  return {s.value, s.err_estimate, s.terms_used, Route::direct};
}

Complex he_closed(int r, Complex z) {
  check_args(r, z, "he_closed");
  if (r == 1) {
    return 2.0 * I * ln2 + I * (numkern::digamma(1.0 + 0.5 * I * z) +
                                numkern::digamma(1.0 - 0.5 * I * z) -
                                numkern::digamma(1.0 + I * z) - numkern::digamma(1.0 - I * z));
  }
  const int n = r - 1;
  const double two = std::pow(2.0, 1 - r);
  const Complex s = two * polygamma(n, 1.0 - 0.5 * I * z) +
                    sign_pow(1 - r) * two * polygamma(n, 1.0 + 0.5 * I * z) -
                    polygamma(n, 1.0 - I * z) - sign_pow(r - 1) * polygamma(n, 1.0 + I * z);
  return i_pow(r) / std::tgamma(static_cast<double>(r)) * s;
}

Evaluation he_taylor(Complex z, const SumControl& ctl) {
  require_finite(z, "he_taylor");
  ctl.validate();
  const double az = std::abs(z);
  if (az >= 1.0) throw DomainError("he_taylor: requires |z| < 1");
  const Complex z2 = z * z;
  Complex p{1.0, 0.0};
  Complex sum{0.0, 0.0};
  double last = 0.0;
  int n = 0;
  for (; n < ctl.max_terms; ++n) {
    const Complex term = sign_pow(n) * numkern::dirichlet_eta(2.0 * n + 1.0) * p;
    sum += term;
    last = std::abs(term);
    if (last <= 0.25 * ctl.rel_tol * std::abs(sum) * (1.0 - az * az) || last == 0.0) break;
    p *= z2;
  }
  const double err = last * az * az / (1.0 - az * az);
  if (n == ctl.max_terms) throw NonConvergence("he_taylor: max_terms exhausted");
  return {2.0 * I * sum, 2.0 * err, n + 1, Route::taylor};
}

Complex he_real(int r, double x) {
  check_args(r, Complex{x, 0.0}, "he_real");
  const int n = r - 1;
  const Complex A = polygamma(n, Complex{1.0, 0.5 * x});
  const Complex B = polygamma(n, Complex{1.0, x});
  const Complex D = std::pow(2.0, 1 - r) * A - B;
  const double g = std::tgamma(static_cast<double>(r));
  double v;
  if (r % 2 == 1) {
    v = 2.0 * sign_pow((r - 1) / 2) / g * D.real();
    if (r == 1) v += 2.0 * ln2;
  } else {
    v = 2.0 * sign_pow(r / 2 - 1) / g * D.imag();
  }
  return {0.0, v};
}

Complex he_via_eisenstein(int r, double x, ViaEisenstein form) {
  require_finite(x, "he_via_eisenstein");
  if (x == 0.0) throw DomainError("he_via_eisenstein: requires x != 0");
  check_args(r, Complex{x, 0.0}, "he_via_eisenstein");
  const Complex ix{0.0, x};
  const Complex ixh{0.0, 0.5 * x};
  switch (form) {
    case ViaEisenstein::eisenstein_digamma:
    case ViaEisenstein::hyperbolic: {
      if (r != 1) throw UnsupportedOrder("he_via_eisenstein: the digamma and hyperbolic forms are for r = 1");
      Complex e_half, e_one;
      if (form == ViaEisenstein::eisenstein_digamma) {
        e_half = eisenstein::eisenstein_direct(1, ixh).value;
        e_one = eisenstein::eisenstein_direct(1, ix).value;
      } else {
        e_half = -I * pi / std::tanh(0.5 * pi * x);
        e_one = -I * pi / std::tanh(pi * x);
      }
      const Complex inner = e_half - e_one + numkern::digamma(ixh) - numkern::digamma(ix);
      return {0.0, 2.0 * ln2 + 2.0 * inner.real()};
    }
    case ViaEisenstein::polygamma: {
      if (r < 2) throw UnsupportedOrder("he_via_eisenstein: the polygamma form is for r >= 2");
      const double two = std::pow(2.0, 1 - r);
      const double s = sign_pow(r - 1);
      auto eps = [r](Complex w) { return eisenstein::eisenstein_direct(r, w).value; };
      const Complex t1 = i_pow(r) * (two * (eps(ixh) + s * eps(-ixh)) - eps(ix) - s * eps(-ix));
      const int n = r - 1;
      const Complex t2 = s * i_pow(r) / std::tgamma(static_cast<double>(r)) *
                         (two * (polygamma(n, ixh) + s * polygamma(n, -ixh)) - polygamma(n, ix) -
                          s * polygamma(n, -ix));
      return t1 + t2;
    }
  }
  return {};
}

Complex he_via_eisenstein(int r, double x) {
  return he_via_eisenstein(r, x, r == 1 ? ViaEisenstein::eisenstein_digamma : ViaEisenstein::polygamma);
}

Complex sinh_expansion_residual(Complex z, int N) {
  require_finite(z, "sinh_expansion_residual");
  if (N < 1) throw DomainError("sinh_expansion_residual: N must be >= 1");
  check_args(1, z, "sinh_expansion_residual");
  if (z == Complex{0.0, 0.0}) throw PoleError("sinh_expansion_residual: pole at 0");
  // Sum from the far end so small terms accumulate first.
  Complex acc{0.0, 0.0};
  const Complex z2 = z * z;
  for (int k = N; k >= 1; --k) acc += sign_pow(k) * 2.0 * z / (z2 + static_cast<double>(k) * k);
  acc += 1.0 / z;
  return pi / std::sinh(pi * z) - acc;
}

Evaluation mathieu(double r, double x, bool alternating, const SumControl& ctl) {
  require_finite(r, "mathieu");
  require_finite(x, "mathieu");
  if (alternating ? !(r > 0.0) : !(r > 1.0))
    throw DomainError(alternating ? "mathieu: alternating series requires r > 0"
                                  : "mathieu: requires r > 1");
  const double x2 = x * x;
  summation::Summand g;
  g.eval = [r, x2](long long k) {
    const double kd = static_cast<double>(k);
    return Complex{2.0 * kd * std::pow(kd * kd + x2, -r), 0.0};
  };
  g.taylor = [r, x2](double N, int order) {
    std::vector<Complex> q(static_cast<std::size_t>(order), Complex{0.0, 0.0});
    q[0] = N * N + x2;
    if (order > 1) q[1] = 2.0 * N;
    if (order > 2) q[2] = 1.0;
    std::vector<Complex> lin(static_cast<std::size_t>(order), Complex{0.0, 0.0});
    lin[0] = 2.0 * N;
    if (order > 1) lin[1] = 2.0;
    return summation::series_mul(lin, summation::series_pow(q, -r));
  };
  g.integral = [r, x2](double N) { return Complex{std::pow(N * N + x2, 1.0 - r) / (r - 1.0), 0.0}; };
  g.singular_radius = std::abs(x);
  const auto s = summation::series_sum(alternating ? 0.5 : 0.0, g, 1, ctl);
  // The driver sums w^k g(k) = (-1)^k g(k); the alternating series carries (-1)^{k-1}.
  const double v = alternating ? -s.value.real() : s.value.real();
  return {Complex{v, 0.0}, s.err_estimate, s.terms_used, alternating ? Route::euler_transform : Route::direct};
}

Evaluation mathieu_E(double x, const QuadControl& ctl) {
  require_finite(x, "mathieu_E");
  ctl.validate();
  if (std::abs(x) < 1e-8)
    return {Complex{2.0 * numkern::dirichlet_eta(3.0), 0.0}, 0.0, 0, Route::closed};
  auto f = [x](double u) -> Complex {
    const double e = std::exp(-u);
    return {u * std::sin(x * u) * e / (1.0 + e), 0.0};
  };
  const double w = std::min(1.0, constants::pi / std::abs(x));
  const auto res = quadrature::integrate_to_inf(f, 0.0, ctl, w);
  return {res.value / x, res.err_estimate / std::abs(x), res.evaluations, Route::integral};
}

}  // namespace eiskern::hilbert
