#include "support.hpp"

#include <eiskern/numkern.hpp>
#include <eiskern/quadrature.hpp>
#include <eiskern/summation.hpp>

using namespace eiskern;
using namespace eiskern::summation;

TEST_SUITE("summation") {

TEST_CASE("zeta(2) from the Euler-Maclaurin tail") {
  const std::vector<PowerTerm> t{{1.0, 0.0, 2.0}};
  const auto r = power_series_sum(0.0, t, 1, {});
  CHECK_CLOSE(r.value, Complex{constants::pi * constants::pi / 6}, 1e-14);
  CHECK(r.terms_used < 200);
}

TEST_CASE("alternating harmonic series from the Boole tail") {
  // sum_{k>=1} (-1)^k / k = -log 2
  const std::vector<PowerTerm> t{{1.0, 0.0, 1.0}};
  const auto r = power_series_sum(0.5, t, 1, {});
  CHECK_CLOSE(r.value, Complex{-constants::ln2}, 1e-14);
}

TEST_CASE("general unimodular ratio") {
  // sum_{k>=1} w^k / k = -log(1 - w), w = e^{2 pi i / 3}
  const double theta = 1.0 / 3.0;
  const Complex w = unit_power(theta, 1);
  const std::vector<PowerTerm> t{{1.0, 0.0, 1.0}};
  CHECK_CLOSE(power_series_sum(theta, t, 1, {}).value, -std::log(1.0 - w), 1e-13);
}

TEST_CASE("shifted complex powers") {
  // sum_{k>=0} 1/(k+z)^2 = psi_1(z)
  const Complex z{0.3, 1.7};
  const std::vector<PowerTerm> t{{1.0, z, 2.0}};
  CHECK_CLOSE(power_series_sum(0.0, t, 0, {}).value, numkern::polygamma(1, z), 1e-13);
}

TEST_CASE("raw partial sums report non-convergence") {
  SumControl ctl;
  ctl.accelerate = false;
  ctl.max_terms = 100;
  const std::vector<PowerTerm> t{{1.0, 0.0, 2.0}};
  CHECK_THROWS_AS(power_series_sum(0.0, t, 1, ctl), NonConvergence);
}

TEST_CASE("unit_power keeps dyadic phases exact") {
  CHECK(unit_power(0.5, 1000001) == Complex{-1.0, 0.0});
  CHECK(unit_power(0.25, 3) == Complex{0.0, -1.0});
}

TEST_CASE("series helpers") {
  const std::vector<Complex> a{1.0, 1.0, 0.0, 0.0};
  const auto sq = series_mul(a, a);
  CHECK(sq[1] == Complex{2.0});
  CHECK(sq[2] == Complex{1.0});
  const auto root = series_pow(sq, 0.5);
  CHECK_CLOSE(root[1], Complex{1.0}, 1e-15);
  CHECK(std::abs(root[2]) < 1e-15);
  CHECK_THROWS_AS(series_pow(std::vector<Complex>{0.0, 1.0}, 0.5), DomainError);
}

TEST_CASE("Euler transform of alternating series") {
  const auto r = euler_alternating([](int n) { return 1.0 / n; });
  CHECK(r.value == doctest::Approx(constants::ln2).epsilon(1e-13));
}

}

TEST_SUITE("quadrature") {

TEST_CASE("finite interval") {
  const auto r = quadrature::integrate([](double x) { return Complex{std::sin(x), std::exp(x)}; }, 0.0, 2.0, {});
  CHECK_CLOSE(r.value, (Complex{1.0 - std::cos(2.0), std::exp(2.0) - 1.0}), 1e-13);
  CHECK(r.err_estimate < 1e-12);
}

TEST_CASE("endpoint singularity converges adaptively") {
  const auto r = quadrature::integrate([](double x) { return Complex{std::sqrt(x)}; }, 0.0, 1.0, {});
  CHECK_CLOSE(r.value, Complex{2.0 / 3.0}, 1e-12);
}

TEST_CASE("semi-infinite interval") {
  const auto r = quadrature::integrate_to_inf([](double t) { return Complex{t / std::expm1(t)}; }, 0.0, {});
  CHECK_CLOSE(r.value, Complex{constants::pi * constants::pi / 6}, 1e-12);
}

TEST_CASE("depth limit raises") {
  QuadControl ctl;
  ctl.max_depth = 1;
  ctl.rel_tol = 1e-15;
  ctl.abs_tol = 1e-300;
  CHECK_THROWS_AS(quadrature::integrate([](double x) { return Complex{std::sin(50 * x)}; }, 0.0, 10.0, ctl),
                  QuadratureFailure);
}

}
