#include "support.hpp"

#include <eiskern/conj_bernoulli.hpp>
#include <eiskern/numkern.hpp>

using namespace eiskern;
using namespace eiskern::conj;

namespace {

const double half_values[] = {-0.2206356001526515934,   0.043614202053281398809, -0.023824932319198598738,
                              0.025880521334831010792,  -0.047461972968025986695, 0.13243336348126128181,
                              -0.5235031171482341868};

}  // namespace

TEST_SUITE("conj") {

TEST_CASE("values at one half, two formulas") {
  for (int m = 0; m <= 6; ++m) {
    CAPTURE(m);
    CHECK(conj_bernoulli_half(m) == doctest::Approx(half_values[m]).epsilon(1e-14));
    CHECK(conj_bernoulli_half_from_zeta(m) == doctest::Approx(half_values[m]).epsilon(1e-13));
  }
}

TEST_CASE("moment combinations") {
  for (int m = 0; m <= 2; ++m) CHECK(moment_combination(m) == doctest::Approx(half_values[m]).epsilon(1e-11));
  CHECK(std::abs(moment_combination_printed_m2() - half_values[2]) > 0.1);
  CHECK_THROWS_AS(moment_combination(3), UnsupportedOrder);
}

TEST_CASE("periodic functions from the Fourier series") {
  struct R {
    int n;
    double x, v;
  };
  const R rs[] = {{0, 0.25, -0.1103178000763257967},  {1, 0.3, 0.018429658262615707045},
                  {2, 0.1, 0.020003742233898333559},  {1, 0.0, -0.058152269404375198412},
                  {3, 0.75, 0.00020219157292836727181}, {0, 0.9, 0.1531744812650166294}};
  for (const auto& t : rs) {
    CAPTURE(t.n);
    CAPTURE(t.x);
    CHECK(conj_bernoulli_periodic(t.n, t.x).value.real() == doctest::Approx(t.v).epsilon(1e-12));
  }
  for (int m = 0; m <= 4; ++m)
    CHECK(conj_bernoulli_periodic(m, 0.5).value.real() == doctest::Approx(half_values[m]).epsilon(1e-12));
  CHECK(b1_conj_closed(0.3) == doctest::Approx(conj_bernoulli_periodic(0, 0.3).value.real()).epsilon(1e-13));
  CHECK_THROWS_AS(conj_bernoulli_periodic(0, 1.0), DomainError);
}

TEST_CASE("periodicity and oddness (property)") {
  for (int n = 0; n <= 3; ++n)
    for (double x : {0.1, 0.37, 0.8}) {
      const double v = conj_bernoulli_periodic(n, x).value.real();
      CHECK(conj_bernoulli_periodic(n, x + 1).value.real() == doctest::Approx(v).epsilon(1e-12));
      // B~_{2n+1}(1 - x) = B~_{2n+1}(x)
      CHECK(conj_bernoulli_periodic(n, 1 - x).value.real() == doctest::Approx(v).epsilon(1e-12));
    }
}

TEST_CASE("generating function, three ways") {
  struct R {
    Complex z, v;
  };
  const R rs[] = {{0.5, -0.10941533541280923867},
                  {1.0, -0.21356010011242185089},
                  {-2.0, 0.38887575946248965741},
                  {{0.5, 0.3}, {-0.11037847385086318007, -0.06475717493968016064}},
                  {{-1.0, 2.0}, {0.30840749609459172135, -0.4467551515693114584}}};
  for (const auto& t : rs) {
    CAPTURE(t.z);
    CHECK_CLOSE(gen_function_closed(t.z), t.v, 1e-12);
    CHECK_CLOSE(gen_function_series(t.z), t.v, 1e-10);
    CHECK_CLOSE(gen_function_b0(t.z), t.v, 1e-12);
  }
  CHECK_THROWS_AS(gen_function_closed(Complex{5.0, 5.0}), DomainError);
}

TEST_CASE("odd zeta values") {
  for (int m = 1; m <= 3; ++m) {
    const double z = numkern::riemann_zeta(2 * m + 1);
    CHECK(zeta_odd_via_conj(m) == doctest::Approx(z).epsilon(1e-13));
    CHECK(zeta_odd_via_fourier(m) == doctest::Approx(z).epsilon(1e-12));
    CHECK(zeta_odd_via_conj_printed(m) * constants::pi * constants::pi == doctest::Approx(z).epsilon(1e-13));
  }
  CHECK(conj_bernoulli_one(1) == doctest::Approx(-0.058152269404375198412).epsilon(1e-13));
}

TEST_CASE("even zeta values") {
  const double pi = constants::pi;
  CHECK(zeta_even_euler(1) == doctest::Approx(pi * pi / 6).epsilon(1e-15));
  CHECK(zeta_even_euler(2) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-15));
  for (int m = 1; m <= 6; ++m) CHECK(zeta_even_euler(m) == doctest::Approx(numkern::riemann_zeta(2 * m)).epsilon(1e-14));
}

TEST_CASE("fractional Bernoulli function") {
  CHECK(fractional_bernoulli(1.5, 0).value.real() == doctest::Approx(0.31182933746603184903).epsilon(1e-12));
  CHECK(fractional_bernoulli(2.5, 0.3).value.real() == doctest::Approx(0.020463901214589940143).epsilon(1e-12));
  CHECK(fractional_bernoulli(3.2, 0).value.real() == doctest::Approx(-0.015613479549771514607).epsilon(1e-12));
  CHECK(fractional_bernoulli(1.5, 0.6).value.real() == doctest::Approx(-0.037535016124391764307).epsilon(1e-12));
  CHECK(fractional_bernoulli(0.7, 0.4).value.real() == doctest::Approx(0.016668344798377774581).epsilon(1e-11));
  CHECK(fractional_bernoulli(2, 0.25).value.real() == doctest::Approx(-1.0 / 48).epsilon(1e-13));
  // Integer orders reduce to Bernoulli polynomials on [0, 1).
  for (int n = 2; n <= 5; ++n)
    CHECK(fractional_bernoulli(n, 0.25).value.real() == doctest::Approx(numkern::bernoulli_poly(n, 0.25)).epsilon(1e-12));
  CHECK_THROWS_AS(fractional_bernoulli(0.0, 0.3), DomainError);
  CHECK_THROWS_AS(fractional_bernoulli(0.5, 0.0), DomainError);
}

TEST_CASE("zeta round trip at fractional order") {
  for (double a : {1.5, 2.5, 3.2})
    CHECK(zeta_from_fractional(a) == doctest::Approx(numkern::riemann_zeta(a)).epsilon(1e-10));
  CHECK_THROWS_AS(zeta_from_fractional(3.0), DomainError);
}

TEST_CASE("Ramanujan B* values") {
  CHECK(ramanujan_bstar(2) == doctest::Approx(1.0 / 6).epsilon(1e-14));
  CHECK(ramanujan_bstar(3) == doctest::Approx(0.058152269404375198412).epsilon(1e-14));
  CHECK(ramanujan_bstar(4) == doctest::Approx(1.0 / 30).epsilon(1e-14));
  CHECK(ramanujan_bstar(5) == doctest::Approx(0.02541326114047850532).epsilon(1e-14));
  CHECK(ramanujan_bstar(2.5) == doctest::Approx(0.090103795381045779996).epsilon(1e-14));
  CHECK(std::abs(ramanujan_bstar(3) - 0.05815227) < 1e-7);
  CHECK(std::abs(ramanujan_bstar(5) - 0.025413275) < 1e-7);
}

TEST_CASE("double-sum candidate") {
  const auto c0 = double_sum_candidate(0, 0.5);
  CHECK(c0.double_sum == doctest::Approx(-constants::ln2 / constants::pi).epsilon(1e-13));
  CHECK(c0.discrepancy < 1e-12);
  const auto c1 = double_sum_candidate(1, 0.25);
  CHECK(c1.double_sum == doctest::Approx(0.0022450270246592250469).epsilon(1e-10));
  CHECK(c1.fourier == doctest::Approx(0.0054517752566601748511).epsilon(1e-12));
  const auto c2 = double_sum_candidate(2, 0.25);
  CHECK(c2.double_sum == doctest::Approx(-0.00087534510137920091594).epsilon(1e-10));
  CHECK_THROWS_AS(double_sum_candidate(0, 1.5), DomainError);
}

TEST_CASE("index limits") {
  CHECK_THROWS_AS(conj_bernoulli_half(-1), DomainError);
  CHECK_THROWS_AS(conj_bernoulli_half(81), DomainError);
}

}
