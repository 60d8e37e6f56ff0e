#pragma once

#include <eiskern/types.hpp>

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace test_support {

using eiskern::Complex;

// |got - want| <= rel * |want| + abs
inline bool close(Complex got, Complex want, double rel, double abs = 0.0) {
  return std::abs(got - want) <= rel * std::abs(want) + abs;
}

struct Expect {
  Complex got, want;
  double tol;
};
inline Expect expect(Complex got, Complex want, double tol) { return {got, want, tol}; }

// Variadic so brace-initialized arguments containing commas pass through.
#define CHECK_CLOSE(...)                                                                    \
  do {                                                                                      \
    const auto e_ = ::test_support::expect(__VA_ARGS__);                                    \
    INFO("got " << e_.got << ", want " << e_.want);                                         \
    CHECK(::test_support::close(e_.got, e_.want, e_.tol));                                  \
  } while (0)

#define CHECK_ABS(...)                                                                      \
  do {                                                                                      \
    const auto e_ = ::test_support::expect(__VA_ARGS__);                                    \
    INFO("got " << e_.got << ", want " << e_.want);                                         \
    CHECK(std::abs(e_.got - e_.want) <= e_.tol);                                            \
  } while (0)

// Seeded random points in a rectangle, rejecting those within `guard` of a
// forbidden set described by `bad`.
template <class Bad>
std::vector<Complex> random_points(std::uint64_t seed, int n, double re0, double re1, double im0, double im1,
                                   Bad bad) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ur(re0, re1), ui(im0, im1);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < n) {
    const Complex z{ur(rng), ui(rng)};
    if (!bad(z)) out.push_back(z);
  }
  return out;
}

}  // namespace test_support
