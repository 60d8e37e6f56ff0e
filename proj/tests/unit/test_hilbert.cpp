#include "support.hpp"

#include <eiskern/hilbert_eisenstein.hpp>
#include <eiskern/numkern.hpp>

using namespace eiskern;
using namespace eiskern::hilbert;
using test_support::random_points;

namespace {

bool near_pole(Complex z) {
  const double k = std::round(z.imag());
  return k != 0.0 && std::abs(z - Complex{0.0, k}) < 0.1;
}

struct Ref {
  int r;
  Complex z;
  Complex value;
};

const Ref refs[] = {
    {1, {0.4, 0.3}, {0.35392136041864717156, 1.1824632911703176548}},
    {2, {0.4, 0.3}, {-0.24195793689422406741, 1.4646742366173913795}},
    {3, {0.4, 0.3}, {-1.5259816800209154745, -0.11082795350477508451}},
    {4, {0.4, 0.3}, {-1.286822491297047714, -2.2463303752199673106}},
    {5, {0.4, 0.3}, {1.2672406082719045049, -2.5209808862508150625}},
    {1, {3.0, 0.5}, {0.020211385736494662507, 0.054054054054054054054}},
    {2, {3.0, 0.5}, {0.021508310666403223924, 0.035062089116143170197}},
    {3, {3.0, 0.5}, {0.015173068040324491214, 0.016899295204627564014}},
    {4, {3.0, 0.5}, {0.008611059438386748884, 0.007171208876932131231}},
    {5, {3.0, 0.5}, {0.0041177904740958788186, 0.0028246441142665106348}},
    {1, {0.7, 0.0}, {0.0, 0.81322355435939999802}},
    {2, {0.7, 0.0}, {0.0, 1.0492619967148096203}},
    {3, {0.7, 0.0}, {0.0, 0.3600525013467603323}},
    {4, {0.7, 0.0}, {0.0, -0.49681241459745530584}},
    {5, {0.7, 0.0}, {0.0, -0.72777653941444966793}},
    {1, {-1.2, 2.6}, {-0.087899445166258446174, 0.098052658222394764174}},
    {2, {-1.2, 2.6}, {0.12683511159203455948, -0.39518690057755144675}},
    {3, {-1.2, 2.6}, {-0.19845367676698254812, 0.67672504730516885375}},
    {4, {-1.2, 2.6}, {0.21887347907950112551, -0.71341664961106285747}},
    {5, {-1.2, 2.6}, {-0.16366140582743712142, 0.54692653547596429184}},
};

}  // namespace

TEST_SUITE("hilbert") {

TEST_CASE("closed form and direct sum match reference values") {
  for (const auto& ref : refs) {
    CAPTURE(ref.r);
    CAPTURE(ref.z);
    CHECK_CLOSE(he_direct(ref.r, ref.z).value, ref.value, 1e-11);
    CHECK_CLOSE(he_closed(ref.r, ref.z), ref.value, 1e-11);
  }
}

TEST_CASE("value at the origin") {
  CHECK_CLOSE(he_direct(1, 0.0).value, (Complex{0.0, 2 * constants::ln2}), 1e-14);
  CHECK_CLOSE(he_closed(1, 0.0), (Complex{0.0, 2 * constants::ln2}), 1e-14);
}

TEST_CASE("Taylor series inside the unit disc") {
  for (Complex z : {Complex{0.4, 0.3}, Complex{0.7, 0.0}, Complex{-0.2, 0.5}})
    CHECK_CLOSE(he_taylor(z).value, he_closed(1, z), 1e-12);
  CHECK_THROWS_AS(he_taylor(Complex{1.0, 0.0}), DomainError);
}

TEST_CASE("real-axis forms") {
  struct R {
    int r;
    double x, im;
  };
  const R rs[] = {{1, 0.8, 0.71232527700394771348}, {3, 0.8, 0.46885354560880921251},
                  {2, 1.2, 0.57254332024633604241}, {3, 1.2, 0.43524336591926078361},
                  {4, 1.2, 0.16138251673434549671}, {1, 1.0, 0.5392210054160179636},
                  {1, 0.5, 1.0322554358396621704}};
  for (const auto& t : rs) {
    CAPTURE(t.r);
    CAPTURE(t.x);
    const Complex want{0.0, t.im};
    CHECK_CLOSE(he_real(t.r, t.x), want, 1e-12);
    CHECK_CLOSE(he_via_eisenstein(t.r, t.x), want, 1e-11);
    if (t.r == 1) {
      CHECK_CLOSE(he_via_eisenstein(1, t.x, ViaEisenstein::eisenstein_digamma), want, 1e-11);
      CHECK_CLOSE(he_via_eisenstein(1, t.x, ViaEisenstein::hyperbolic), want, 1e-11);
    }
  }
  CHECK_THROWS_AS(he_via_eisenstein(1, 0.0), DomainError);
  CHECK_THROWS_AS(he_via_eisenstein(2, 1.0, ViaEisenstein::hyperbolic), UnsupportedOrder);
  CHECK_THROWS_AS(he_via_eisenstein(1, 1.0, ViaEisenstein::polygamma), UnsupportedOrder);
}

TEST_CASE("difference equation and symmetry (property)") {
  const auto pts = random_points(13, 40, -2, 2, -2, 2, near_pole);
  for (Complex z : pts) {
    if (near_pole(z + Complex{0.0, 1.0})) continue;
    for (int r = 1; r <= 5; ++r) {
      const Complex h = he_closed(r, z);
      const Complex rhs = std::pow(z, -r) - std::pow(z + Complex{0.0, 1.0}, -r);
      CHECK(std::abs(h + he_closed(r, z + Complex{0.0, 1.0}) - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
      CHECK_CLOSE(he_closed(r, -z), (r % 2 ? 1.0 : -1.0) * h, 1e-11);
    }
  }
}

TEST_CASE("derivative lowers the order (property)") {
  const double h = 1e-5;
  for (Complex z : {Complex{0.4, 0.3}, Complex{3.0, 0.5}, Complex{-1.2, 2.6}})
    for (int r = 1; r <= 4; ++r) {
      const Complex fd = (he_closed(r, z + h) - he_closed(r, z - h)) / (2 * h);
      CHECK_CLOSE(fd, -static_cast<double>(r) * he_closed(r + 1, z), 1e-6);
    }
}

TEST_CASE("partial fraction of pi / sinh") {
  CHECK(std::abs(sinh_expansion_residual(Complex{0.5, 0.2}, 2000)) < 1e-3);
  CHECK(std::abs(sinh_expansion_residual(Complex{0.5, 0.2}, 20000)) <
        std::abs(sinh_expansion_residual(Complex{0.5, 0.2}, 2000)));
}

TEST_CASE("Mathieu series") {
  CHECK(mathieu(2, 1, true).value.real() == doctest::Approx(0.38171255654242344132).epsilon(1e-13));
  CHECK(mathieu(1.5, 0.7, false).value.real() == doctest::Approx(2.2822586855289763444).epsilon(1e-12));
  CHECK(mathieu(2.5, 2, true).value.real() == doctest::Approx(0.020504446932387509853).epsilon(1e-12));
  CHECK(mathieu(3, 1.2, false).value.real() == doctest::Approx(0.17033112408369646334).epsilon(1e-12));
  CHECK(mathieu(2, 0, false).value.real() == doctest::Approx(2.4041138063191885708).epsilon(1e-13));
  CHECK(mathieu(0.5, 1, true).value.real() == doctest::Approx(0.55937570168196052669).epsilon(1e-12));
  CHECK(mathieu(2, 3.3, true).value.real() == doctest::Approx(0.0047777251608573132915).epsilon(1e-12));
  CHECK_THROWS_AS(mathieu(1.0, 1.0, false), DomainError);
  CHECK_THROWS_AS(mathieu(0.0, 1.0, true), DomainError);
}

TEST_CASE("Mathieu E matches the alternating series") {
  CHECK(mathieu_E(0.0).value.real() == doctest::Approx(2 * numkern::dirichlet_eta(3)).epsilon(1e-13));
  for (double x : {0.3, 1.0, 2.5})
    CHECK(mathieu_E(x).value.real() == doctest::Approx(mathieu(2, x, true).value.real()).epsilon(1e-11));
  // h_2(x) = 2i S~_2(x)
  CHECK(he_real(2, 1.0).imag() == doctest::Approx(2 * 0.38171255654242344132).epsilon(1e-12));
}

TEST_CASE("error contract") {
  CHECK_THROWS_AS(he_direct(1, Complex{0.0, 1.0}), PoleError);
  CHECK_THROWS_AS(he_closed(2, Complex{0.0, -3.0}), PoleError);
}

}
