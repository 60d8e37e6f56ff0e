#include "support.hpp"

#include <eiskern/numkern.hpp>

using namespace eiskern;
using namespace eiskern::numkern;
using test_support::random_points;

TEST_SUITE("numkern") {

TEST_CASE("gamma at reference points") {
  CHECK_CLOSE(gamma(Complex{3, 4}), (Complex{0.0052255384713692141947, -0.17254707929430018772}), 1e-13);
  CHECK_CLOSE(gamma(Complex{-2.5, 0.5}), (Complex{-0.3338752035224323374, -0.20645730796360841492}), 1e-13);
  CHECK_CLOSE(gamma(Complex{0.2, -1.3}), (Complex{0.041525004924414724365, 0.29940289493100482324}), 1e-13);
  CHECK(numkern::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-15));
  CHECK_THROWS_AS(gamma(Complex{-3.0, 0.0}), PoleError);
}

TEST_CASE("digamma at reference points") {
  CHECK_CLOSE(digamma(Complex{1, 1}), (Complex{0.094650320622476977272, 1.0766740474685811741}), 1e-14);
  CHECK_CLOSE(digamma(Complex{-3.7, 2.1}), (Complex{1.5477828484556912116, 2.679438885092013814}), 1e-14);
  CHECK_CLOSE(digamma(Complex{0.3, -7}), (Complex{1.9454668402635380622, -1.5994088476567767548}), 1e-14);
  CHECK_CLOSE(digamma(Complex{25, 0.1}), (Complex{3.1987508391792764132, 0.0040810436785092353948}), 1e-14);
  CHECK_CLOSE(digamma(Complex{-0.5, 0}), Complex{0.036489973978576520559}, 1e-13);
  CHECK_CLOSE(digamma(Complex{1, 0}), Complex{-constants::euler_gamma}, 1e-15);
  CHECK_THROWS_AS(digamma(Complex{-2.0, 0.0}), PoleError);
  CHECK_THROWS_AS(digamma(Complex{0.0, 0.0}), PoleError);
}

TEST_CASE("polygamma at reference points and against the slow oracle") {
  CHECK_CLOSE(polygamma(3, Complex{0.4, 2}), (Complex{0.04677474744620096617, 0.28838241725239868512}), 1e-12);
  CHECK_CLOSE(polygamma(5, Complex{-2.3, 0.7}), (Complex{451.8641039266123841, 529.5709247606923508}), 1e-12);
  CHECK_CLOSE(polygamma(1, Complex{0.1, -0.2}), (Complex{-10.652539572039584524, 16.352436789583143925}), 1e-12);
  CHECK_CLOSE(polygamma(0, Complex{1, 1}), digamma(Complex{1, 1}), 1e-15);
  for (int r = 1; r <= 5; ++r) {
    const Complex z{0.7, -1.3};
    CHECK_CLOSE(polygamma_direct(r, z, 2000), polygamma(r, z), 1e-9);
  }
  CHECK_THROWS_AS(polygamma(-1, Complex{1, 0}), DomainError);
}

TEST_CASE("zeta, eta and lambda") {
  CHECK(riemann_zeta(1.5) == doctest::Approx(2.6123753486854883433).epsilon(1e-14));
  CHECK(riemann_zeta(1.01) == doctest::Approx(100.57794333849678367).epsilon(1e-13));
  CHECK(riemann_zeta(5.5) == doctest::Approx(1.0252045799546856946).epsilon(1e-14));
  CHECK(riemann_zeta(2.5) == doctest::Approx(1.3414872572509171798).epsilon(1e-14));
  CHECK(riemann_zeta(30) == doctest::Approx(1.0000000009313274324).epsilon(1e-15));
  CHECK(riemann_zeta(2) == doctest::Approx(constants::pi * constants::pi / 6).epsilon(1e-15));
  CHECK(riemann_zeta_via_eta(4) == doctest::Approx(std::pow(constants::pi, 4) / 90).epsilon(1e-13));
  CHECK(dirichlet_eta(0.5) == doctest::Approx(0.60489864342163037025).epsilon(1e-13));
  CHECK(dirichlet_eta(1.5) == doctest::Approx(0.76514702462540794537).epsilon(1e-14));
  CHECK(dirichlet_eta(0.1) == doctest::Approx(0.52227028246457050671).epsilon(1e-13));
  CHECK(dirichlet_eta(7) == doctest::Approx(0.99259381992283028267).epsilon(1e-15));
  CHECK(dirichlet_eta(1) == constants::ln2);
  CHECK(dirichlet_lambda(3) == doctest::Approx(1.0517997902646449997).epsilon(1e-14));
  CHECK_THROWS_AS(riemann_zeta(1.0), DomainError);
  CHECK_THROWS_AS(dirichlet_eta(0.0), DomainError);
  CHECK_THROWS_AS(dirichlet_lambda(1.0), DomainError);
}

TEST_CASE("eta, lambda and zeta are consistent") {
  for (double s : {1.5, 2.0, 3.0, 4.5, 7.25}) {
    CHECK(dirichlet_eta(s) == doctest::Approx((1 - std::pow(2.0, 1 - s)) * riemann_zeta(s)).epsilon(1e-13));
    CHECK(dirichlet_lambda(s) == doctest::Approx((1 - std::pow(2.0, -s)) * riemann_zeta(s)).epsilon(1e-13));
  }
}

TEST_CASE("Bernoulli numbers are exact") {
  CHECK(bernoulli_exact(0) == 1);
  CHECK(bernoulli_exact(1) == Rational(-1, 2));
  CHECK(bernoulli_exact(2) == Rational(1, 6));
  CHECK(bernoulli_exact(12) == Rational(-691, 2730));
  CHECK(bernoulli_exact(13) == 0);
  CHECK(bernoulli_exact(36) == Rational(boost::multiprecision::cpp_int("-26315271553053477373"), 1919190));
  CHECK(bernoulli_number(30) == doctest::Approx(8615841276005.0 / 14322.0).epsilon(1e-15));
  CHECK_THROWS_AS(bernoulli_exact(-1), DomainError);
}

TEST_CASE("Bernoulli recurrence closure (property)") {
  for (int n = 2; n <= 40; ++n) {
    Rational acc = 0, binom = 1;
    for (int k = 0; k < n; ++k) {
      acc += binom * bernoulli_exact(k);
      binom = binom * (n - k) / (k + 1);
    }
    CHECK(acc == 0);
  }
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_poly(3, 0.25) == doctest::Approx(0.046875).epsilon(1e-15));
  CHECK(bernoulli_poly(2, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(bernoulli_poly(4, 0.5) == doctest::Approx(7.0 / 240.0).epsilon(1e-14));
  // B_n(1 - x) = (-1)^n B_n(x)
  for (int n = 1; n <= 10; ++n)
    CHECK(bernoulli_poly(n, 0.7) == doctest::Approx((n % 2 ? -1 : 1) * bernoulli_poly(n, 0.3)).epsilon(1e-12));
}

TEST_CASE("pochhammer") {
  CHECK_CLOSE(pochhammer(Complex{2.5, 0}, 3), Complex{2.5 * 3.5 * 4.5}, 1e-15);
  CHECK_CLOSE(pochhammer(Complex{1, 1}, 0), Complex{1}, 0);
}

TEST_CASE("odd zeta generating functions") {
  CHECK_CLOSE(zeta_odd_series(0.5, ZetaOddVariant::plain).value, Complex{0.38629436111989061883}, 1e-14);
  CHECK_CLOSE(zeta_odd_series(0.5, ZetaOddVariant::alternating).value, Complex{0.24832930767207351026}, 1e-14);
  CHECK_CLOSE(zeta_odd_series(Complex{0.3, 0.4}, ZetaOddVariant::plain).value,
              (Complex{-0.12617621803607524954, 0.2467582763415429449}), 1e-13);
  CHECK_CLOSE(zeta_odd_series(Complex{0.3, 0.4}, ZetaOddVariant::alternating).value,
              (Complex{-0.020233632481186625808, 0.30980405754318255351}), 1e-13);
  const auto r = zeta_odd_series(0.5, ZetaOddVariant::real_part);
  CHECK(r.series_evaluated);
  CHECK(r.discrepancy < 1e-14);
  const auto far = zeta_odd_series(3.0, ZetaOddVariant::real_part);
  CHECK_FALSE(far.series_evaluated);
  CHECK_THROWS_AS(zeta_odd_series(1.5, ZetaOddVariant::plain), DomainError);
  CHECK_THROWS_AS(zeta_odd_series(Complex{0.1, 0.1}, ZetaOddVariant::real_part), DomainError);
}

TEST_CASE("integral form of Re psi(1 + it/2pi)") {
  CHECK(digamma_realpart_integral(constants::pi).value.real() ==
        doctest::Approx(-0.32888635722945935034).epsilon(1e-12));
  CHECK(digamma_realpart_integral(0.3).value.real() == doctest::Approx(-0.57448068091899731762).epsilon(1e-12));
  CHECK(digamma_realpart_integral(17).value.real() == doctest::Approx(1.0068876043121171201).epsilon(1e-12));
}

TEST_CASE("digamma recurrence, reflection and conjugation (property)") {
  const auto pts = random_points(7, 200, -5, 5, -5, 5, [](Complex z) {
    const double n = std::round(z.real());
    return std::abs(z - Complex{n, 0.0}) < 0.1;
  });
  for (Complex z : pts) {
    const Complex p = digamma(z);
    CHECK(std::abs(digamma(z + 1.0) - p - 1.0 / z) <= 1e-12 * std::max(1.0, std::abs(p)));
    CHECK(std::abs(digamma(1.0 - z) - p - constants::pi * cot(constants::pi * z)) <= 1e-11);
    CHECK(std::abs(digamma(std::conj(z)) - std::conj(p)) <= 1e-13 * std::max(1.0, std::abs(p)));
  }
}

TEST_CASE("polygamma is the derivative of the previous order (property)") {
  const auto pts = random_points(11, 20, 0.5, 5, -3, 3, [](Complex) { return false; });
  const double h = 1e-5;
  for (Complex z : pts)
    for (int r = 1; r <= 3; ++r) {
      const Complex fd = (polygamma(r - 1, z + h) - polygamma(r - 1, z - h)) / (2 * h);
      CHECK_CLOSE(fd, polygamma(r, z), 1e-5);
    }
}

TEST_CASE("elementary helpers") {
  CHECK(sinpi(1.0) == 0.0);
  CHECK(cospi(0.5) == 0.0);
  CHECK(dist_to_integer(2.3) == doctest::Approx(0.3));
  CHECK_CLOSE(expm1(Complex{1e-10, 2e-10}), (Complex{1e-10, 2e-10}), 1e-9);
  CHECK_CLOSE(cot(Complex{0.3, 5.0}), std::cos(Complex{0.3, 5.0}) / std::sin(Complex{0.3, 5.0}), 1e-14);
  CHECK_CLOSE(csc2(Complex{0.3, 2.0}), 1.0 / std::pow(std::sin(Complex{0.3, 2.0}), 2), 1e-13);
}

TEST_CASE("control validation") {
  SumControl s;
  s.max_terms = 2;
  CHECK_THROWS_AS(s.validate(), DomainError);
  QuadControl q;
  q.panel_nodes = 2;
  CHECK_THROWS_AS(q.validate(), DomainError);
  CHECK_THROWS_AS(require_finite(std::nan(""), "x"), DomainError);
  CHECK(route_name(Route::digamma) == "digamma");
}

}
