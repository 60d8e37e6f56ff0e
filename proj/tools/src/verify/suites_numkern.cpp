#include <eiskern/numkern.hpp>
#include <eiskern_verify/suites.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace eiskern::verify {

namespace {

using namespace eiskern::numkern;
using constants::pi;

// Random points for the digamma invariants: Re in [-5, 5], |Im| <= 5, at
// least `guard` away from the forbidden set.
std::vector<Complex> digamma_points(std::uint64_t seed, bool all_integers) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto u = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Complex> out;
  while (out.size() < 200) {
    const Complex z{-5.0 + 10.0 * u(), -5.0 + 10.0 * u()};
    const double n = std::round(z.real());
    const bool forbidden_pole = all_integers || n <= 0.0;
    if (forbidden_pole && std::abs(z - Complex{n, 0.0}) < 0.1) continue;
    out.push_back(z);
  }
  return out;
}

Json zin(Complex z) { return Json{{"z", complex_json(z)}}; }

}  // namespace

std::vector<CheckRecord> numkern_suites(const std::string& name, const SuiteContext& ctx) {
  std::vector<CheckRecord> out;
  const std::uint64_t seed = ctx.config.seed;
  if (name == "numkern.digamma_recurrence") {
    for (Complex z : digamma_points(seed, false)) {
      const double scale = std::max(1.0, std::abs(digamma(z)));
      out.push_back(make_record(
          zin(z), [z] { return std::pair{digamma(z + 1.0) - digamma(z), 1.0 / z}; },
          ctx.tol * scale, Policy::abs, "digamma recurrence psi(z+1) = psi(z) + 1/z"));
    }
  } else if (name == "numkern.digamma_reflection") {
    for (Complex z : digamma_points(seed, true)) {
      out.push_back(make_record(
          zin(z), [z] { return std::pair{digamma(1.0 - z) - digamma(z), pi * cot(pi * z)}; },
          ctx.tol, Policy::abs, "digamma reflection psi(1-z) - psi(z) = pi cot(pi z)"));
    }
  } else if (name == "numkern.digamma_conjugate") {
    for (Complex z : digamma_points(seed, false)) {
      const double scale = std::max(1.0, std::abs(digamma(z)));
      out.push_back(make_record(
          zin(z), [z] { return std::pair{digamma(std::conj(z)), std::conj(digamma(z))}; },
          ctx.tol * scale, Policy::abs, "mirror symmetry of the digamma function"));
    }
  } else if (name == "numkern.polygamma_fd") {
    std::mt19937_64 rng(seed + 17);
    auto u = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const double h = 1e-5;
    for (int i = 0; i < 20; ++i) {
      const Complex z{0.5 + 4.5 * u(), -3.0 + 6.0 * u()};
      const int r = 1 + i % 3;
      out.push_back(make_record(
          Json{{"r", r}, {"z", complex_json(z)}},
          [=] {
            const Complex fd = (polygamma(r - 1, z + h) - polygamma(r - 1, z - h)) / (2.0 * h);
            return std::pair{fd, polygamma(r, z)};
          },
          ctx.tol, Policy::rel, "polygamma as derivative of the previous order"));
    }
  } else if (name == "numkern.eta_lambda") {
    for (double s : {1.5, 2.0, 3.0, 4.5}) {
      out.push_back(make_record(
          Json{{"fn", "eta"}, {"s", s}},
          [s] { return std::pair{Complex{dirichlet_eta(s)}, Complex{-std::expm1((1.0 - s) * std::log(2.0)) * riemann_zeta(s)}}; },
          ctx.tol, Policy::either, "eta(s) = (1 - 2^{1-s}) zeta(s)"));
      out.push_back(make_record(
          Json{{"fn", "lambda"}, {"s", s}},
          [s] { return std::pair{Complex{dirichlet_lambda(s)}, Complex{(1.0 - std::pow(2.0, -s)) * riemann_zeta(s)}}; },
          ctx.tol, Policy::either, "lambda(s) = (1 - 2^{-s}) zeta(s)"));
    }
  } else if (name == "numkern.bernoulli") {
    for (int n = 2; n <= 20; ++n) {
      out.push_back(make_record(
          Json{{"n", n}},
          [n] {
            Rational acc = 0;
            Rational binom = 1;
            for (int k = 0; k < n; ++k) {
              acc += binom * bernoulli_exact(k);
              binom = binom * (n - k) / (k + 1);
            }
            return std::pair{Complex{static_cast<double>(acc)}, Complex{0.0}};
          },
          ctx.tol, Policy::abs, "Bernoulli recurrence sum_{k<n} C(n,k) B_k = 0"));
    }
  } else if (name == "numkern.zeta_odd_series") {
    const std::vector<std::pair<ZetaOddVariant, Complex>> pts{
        {ZetaOddVariant::plain, {0.5, 0.0}},       {ZetaOddVariant::plain, {0.3, 0.4}},
        {ZetaOddVariant::plain, {-0.6, 0.2}},      {ZetaOddVariant::alternating, {0.5, 0.0}},
        {ZetaOddVariant::alternating, {0.3, 0.4}}, {ZetaOddVariant::alternating, {0.0, 0.7}},
        {ZetaOddVariant::real_part, {0.5, 0.0}},   {ZetaOddVariant::real_part, {-0.8, 0.0}}};
    const char* names[] = {"plain", "alternating", "real_part"};
    for (const auto& [v, z] : pts) {
      out.push_back(make_record(
          Json{{"variant", names[static_cast<int>(v)]}, {"z", complex_json(z)}},
          [v = v, z = z] {
            const auto r = zeta_odd_series(z, v);
            return std::pair{r.value, r.series};
          },
          ctx.tol, Policy::either, "odd zeta values as digamma generating functions"));
    }
    for (double t : {0.3, 3.0, 17.0}) {
      out.push_back(make_record(
          Json{{"variant", "integral"}, {"t", t}},
          [t] {
            return std::pair{digamma_realpart_integral(t).value,
                             Complex{digamma(Complex{1.0, t / (2.0 * pi)}).real()}};
          },
          ctx.tol * 10.0, Policy::either, "integral representation of Re psi(1 + it/2pi)"));
    }
  }
  return out;
}

}  // namespace eiskern::verify
