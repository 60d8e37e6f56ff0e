#include "support.hpp"

#include <eiskern/hilbert_eisenstein.hpp>
#include <eiskern/numkern.hpp>
#include <eiskern/omega.hpp>

using eiskern::Complex;
using eiskern::DomainError;
using eiskern::PoleError;
using eiskern::StepError;
using eiskern::UnsupportedOrder;
namespace constants = eiskern::constants;
namespace numkern = eiskern::numkern;
using namespace eiskern::omega;

namespace {

struct Ref {
  Complex z;
  Complex value;
};

const Ref refs[] = {
    {1.0, 0.22257033121871546931},
    {{1.0, 1.0}, {0.2167453371093776756, 0.22444123314523043003}},
    {{3.0, -2.0}, {0.6381204006144697033, -0.53083117949744298413}},
    {{0.0, 2.5}, {0.0, 0.52253637909093041163}},
    {{-4.0, 1.0}, {-0.98675001379665889292, 0.32366389513143763876}},
    {0.1, 0.022065484237390278241},
};

const double moments[] = {0.2206356001526515934,     0.01154469798488149954,   0.0012694889510048243179,
                          0.00017932807784110616741, 2.8872294376780341365e-5, 5.0417826659746197579e-6,
                          9.3071801823427011814e-7};

}  // namespace

TEST_SUITE("omega") {

TEST_CASE("five routes match reference values") {
  for (const auto& ref : refs) {
    CAPTURE(ref.z);
    CHECK_CLOSE(omega_quadrature(ref.z).value, ref.value, 1e-12);
    CHECK_CLOSE(omega_digamma(ref.z), ref.value, 1e-12);
    CHECK_CLOSE(omega_partial_fraction(ref.z).value, ref.value, 1e-11);
    CHECK_CLOSE(omega_taylor(ref.z, TaylorVariant::moments).value, ref.value, 1e-10);
    CHECK_CLOSE(omega_taylor(ref.z, TaylorVariant::eta).value, ref.value, 1e-10);
    CHECK_CLOSE(omega(ref.z), ref.value, 1e-12);
  }
}

TEST_CASE("large real arguments") {
  CHECK_CLOSE(omega(20.0), Complex{184.22511480221910863}, 1e-12);
  CHECK_CLOSE(omega(30.0), Complex{11689.7716224014889}, 1e-12);
  CHECK_CLOSE(omega(2 * constants::pi), Complex{1.9822184268200098597}, 1e-13);
  CHECK_CLOSE(omega_quadrature(30.0).value, Complex{11689.7716224014889}, 1e-10);
}

TEST_CASE("moments") {
  CHECK(omega_moment(0, MomentRoute::closed) == doctest::Approx(constants::ln2 / constants::pi).epsilon(1e-15));
  for (int k = 0; k <= 6; ++k) {
    CAPTURE(k);
    for (auto route : {MomentRoute::closed, MomentRoute::quadrature, MomentRoute::series})
      CHECK(std::abs(omega_moment(k, route) - moments[k]) < 1e-14);
  }
  CHECK_THROWS_AS(omega_moment(-1, MomentRoute::closed), DomainError);
}

TEST_CASE("oddness and mirror symmetry (property)") {
  for (double re : {-2.0, -0.7, 0.0, 1.3, 4.0})
    for (double im : {-3.0, -1.0, 0.5, 2.0}) {
      const Complex z{re, im};
      const Complex v = omega(z);
      CHECK(std::abs(omega(-z) + v) <= 1e-12 * std::max(1.0, std::abs(v)));
      CHECK(std::abs(omega(std::conj(z)) - std::conj(v)) <= 1e-12 * std::max(1.0, std::abs(v)));
    }
}

TEST_CASE("digamma form domain") {
  CHECK_NOTHROW(omega_digamma(Complex{40.0, 0.0}));
  CHECK_THROWS_AS(omega_digamma(Complex{5.0, 5.0}), DomainError);
}

TEST_CASE("partial fraction poles") {
  CHECK_THROWS_AS(omega_partial_fraction(Complex{0.0, 2 * constants::pi}), PoleError);
}

TEST_CASE("two-sided bounds") {
  for (int i = 1; i <= 80; ++i) {
    const double x = 0.1 * i;
    const double v = omega(x).real();
    const auto b = omega_bounds(x);
    CHECK(b.lower < v);
    CHECK(v < b.upper);
    const auto nb = omega_bounds(-x);
    CHECK(nb.lower < -v);
    CHECK(-v < nb.upper);
  }
}

TEST_CASE("asymptotic envelope") {
  const double c = std::log(3.0 / numkern::riemann_zeta(3)) / (2 * constants::pi);
  CHECK(c == doctest::Approx(0.14555962757163318678).epsilon(1e-14));
  for (double x : {10.0, 20.0, 40.0}) {
    const auto e = omega_asymptotic_envelope(x);
    CHECK(e.hi_coef == doctest::Approx(c));
    CHECK(e.lo_coef == doctest::Approx(-c));
    CHECK(e.lo_coef <= e.ratio);
    CHECK(e.ratio <= e.hi_coef);
  }
  CHECK_THROWS_AS(omega_asymptotic_envelope(5.0), DomainError);
}

TEST_CASE("log-space evaluation far out") {
  const auto big = omega_log(600.0);
  CHECK(big.sign == 1);
  CHECK(std::isfinite(big.log_abs));
  const auto lo = bound_lower_log(600.0), hi = bound_upper_log(600.0);
  // The lower bound turns negative for large x.
  CHECK(lo.sign == -1);
  CHECK(hi.sign == 1);
  CHECK(big.log_abs < hi.log_abs);
  CHECK(bound_lower_log(2.0).sign == 1);
  CHECK(std::exp(bound_lower_log(2.0).log_abs) == doctest::Approx(omega_bounds(2.0).lower).epsilon(1e-13));
  CHECK(omega_log(0.0).sign == 0);
  CHECK(omega_log(20.0).log_abs == doctest::Approx(std::log(184.22511480221910863)).epsilon(1e-13));
  CHECK(approximant_log(20.0).log_abs ==
        doctest::Approx(std::log(0.14555962757163318678 * std::sinh(10.0))).epsilon(1e-13));
}

TEST_CASE("differential equation") {
  for (double x : {0.0, 0.5, 1.0, 2.0, 3.0, 5.0}) CHECK(omega_ode_residual(x, 1e-5) < 1e-6);
  CHECK(omega_ode_residual_printed(1.0, 1e-5) > 1e-4);
  CHECK_THROWS_AS(omega_ode_residual(1.0, 1e-2), StepError);
  CHECK_THROWS_AS(omega_ode_residual(1.0, 1e-9), StepError);
}

TEST_CASE("principal value integral over the symmetric interval equals Omega") {
  for (Complex z : {Complex{1.0, 0.0}, Complex{1.0, 1.0}, Complex{-4.0, 1.0}})
    CHECK_CLOSE(omega_hilbert_pv(z).value, omega(z), 1e-10);
}

}
