#include <eiskern/conj_bernoulli.hpp>
#include <eiskern/numkern.hpp>
#include <eiskern_verify/suites.hpp>

#include <cmath>

namespace eiskern::verify {

namespace {

using namespace eiskern::conj;

Complex c(double x) { return {x, 0.0}; }

}  // namespace

std::vector<CheckRecord> conj_suites(const std::string& name, const SuiteContext& ctx) {
  std::vector<CheckRecord> out;
  const auto& sc = ctx.config.sum_control;
  if (name == "conj.half_values") {
    for (int m = 0; m <= 6; ++m)
      out.push_back(make_record(
          Json{{"m", m}}, [m] { return std::pair{c(conj_bernoulli_half(m)), c(conj_bernoulli_half_from_zeta(m))}; },
          ctx.tol, Policy::rel, "B~_{2m+1}(1/2) from eta(2m+1) and from zeta(2m+1)"));
  } else if (name == "conj.moment_combination") {
    for (int m = 0; m <= 2; ++m)
      out.push_back(make_record(
          Json{{"m", m}}, [m] { return std::pair{c(moment_combination(m)), c(conj_bernoulli_half(m))}; },
          ctx.tol, Policy::abs, "B~_{2m+1}(1/2) from the moments of cot(pi u)"));
  } else if (name == "conj.moment_combination_printed") {
    out.push_back(make_record(
        Json{{"m", 2}}, [] { return std::pair{c(moment_combination_printed_m2()), c(conj_bernoulli_half(2))}; },
        ctx.tol, Policy::abs, "B~_5(1/2) from (11/8, 5/3, -2) moment weights"));
  } else if (name == "conj.genfun") {
    const char* anchor = "generating function of B~_k(1/2): digamma form, coefficient series, Omega form";
    std::vector<Complex> pts{c(0.5), c(-0.5), c(1.0), c(-1.0), c(2.0), c(-2.0),
                             {0.5, 0.3}, {-1.0, 2.0}, {1.5, -1.0}};
    for (Complex z : pts) {
      auto in = [&](const char* pair) { return Json{{"pair", pair}, {"z", complex_json(z)}}; };
      out.push_back(make_record(in("closed/series"), [z] { return std::pair{gen_function_closed(z), gen_function_series(z, 40)}; },
                                ctx.tol, Policy::either, anchor));
      out.push_back(make_record(in("closed/omega"), [z] { return std::pair{gen_function_closed(z), gen_function_b0(z)}; },
                                ctx.tol, Policy::either, anchor));
      out.push_back(make_record(in("series/omega"), [z] { return std::pair{gen_function_series(z, 40), gen_function_b0(z)}; },
                                ctx.tol, Policy::either, anchor));
    }
  } else if (name == "conj.interpolation") {
    for (int n = 2; n <= 4; ++n)
      for (double x : {0.0, 0.25, 0.5})
        out.push_back(make_record(
            Json{{"n", n}, {"x", x}},
            [&] { return std::pair{fractional_bernoulli(n, x, sc).value, c(numkern::bernoulli_poly(n, x))}; },
            ctx.tol, Policy::abs, "periodic Bernoulli function interpolates B_n(x)"));
  } else if (name == "conj.periodic") {
    for (double x : {0.1, 0.25, 0.5, 0.9, 1.3})
      out.push_back(make_record(
          Json{{"check", "b1_closed"}, {"n", 0}, {"x", x}},
          [&] { return std::pair{conj_bernoulli_periodic(0, x, sc).value, c(b1_conj_closed(x))}; },
          ctx.tol, Policy::either, "B~_1(x) = -(1/pi) log(2 sin(pi x))"));
    for (int m = 0; m <= 4; ++m)
      out.push_back(make_record(
          Json{{"check", "half_point"}, {"n", m}, {"x", 0.5}},
          [&] { return std::pair{conj_bernoulli_periodic(m, 0.5, sc).value, c(conj_bernoulli_half(m))}; },
          ctx.tol, Policy::either, "Fourier series of B~_{2m+1} at x = 1/2"));
  } else if (name == "conj.zeta") {
    for (int m = 1; m <= 6; ++m)
      out.push_back(make_record(
          Json{{"check", "zeta_even_euler"}, {"m", m}},
          [m] { return std::pair{c(zeta_even_euler(m)), c(numkern::riemann_zeta_via_eta(2.0 * m))}; },
          ctx.tol, Policy::abs, "Euler's closed form of zeta(2m)"));
    for (int m = 1; m <= 4; ++m)
      out.push_back(make_record(
          Json{{"check", "zeta_odd_via_conj"}, {"m", m}},
          [m] { return std::pair{c(zeta_odd_via_conj(m)), c(numkern::riemann_zeta(2.0 * m + 1.0))}; },
          ctx.tol, Policy::abs, "zeta(2m+1) from B~_{2m+1}(1)"));
    for (int m = 1; m <= 3; ++m)
      out.push_back(make_record(
          Json{{"check", "zeta_odd_via_fourier"}, {"m", m}},
          [&] { return std::pair{c(zeta_odd_via_fourier(m, sc)), c(numkern::riemann_zeta(2.0 * m + 1.0))}; },
          ctx.tol * 1e2, Policy::abs, "zeta(2m+1) from the conjugate Fourier series at 0"));
    for (double a : {1.5, 2.5, 3.2})
      out.push_back(make_record(
          Json{{"alpha", a}, {"check", "zeta_from_fractional"}},
          [&] { return std::pair{c(zeta_from_fractional(a, sc)), c(numkern::riemann_zeta(a))}; },
          ctx.tol * 1e4, Policy::rel, "zeta(alpha) from the periodic Bernoulli function at 0"));
  } else if (name == "conj.zeta_printed") {
    for (int m = 1; m <= 3; ++m)
      out.push_back(make_record(
          Json{{"m", m}}, [m] { return std::pair{c(zeta_odd_via_conj_printed(m)), c(numkern::riemann_zeta(2.0 * m + 1.0))}; },
          ctx.tol, Policy::abs, "zeta(2m+1) from B~_{2m+1}(1) with pi^{2m-1}"));
  } else if (name == "conj.bstar") {
    const std::pair<double, double> refs[] = {{2.0, 1.0 / 6.0}, {3.0, 0.05815227}, {4.0, 1.0 / 30.0}, {5.0, 0.025413275}};
    for (const auto& [a, ref] : refs)
      out.push_back(make_record(
          Json{{"alpha", a}}, [a = a, ref = ref] { return std::pair{c(ramanujan_bstar(a)), c(ref)}; },
          ctx.tol, Policy::abs, "sign-less Bernoulli numbers B*_alpha; Euler's p and q"));
  } else if (name == "conjecture.double_sum") {
    for (int j = 0; j <= 2; ++j)
      for (double z : {0.25, 0.5, 0.75})
        out.push_back(make_record(
            Json{{"j", j}, {"z", z}},
            [=] {
              const auto r = double_sum_candidate(j, z);
              return std::pair{c(r.double_sum), c(r.fourier)};
            },
            ctx.tol, Policy::abs, "conjectured double finite sum for B~_{2j+1}(z)"));
    out.push_back(make_record(
        Json{{"check", "minus_log2_over_pi"}, {"j", 0}, {"z", 0.5}},
        [] { return std::pair{c(double_sum_candidate(0, 0.5).double_sum), c(-constants::ln2 / constants::pi)}; },
        ctx.tol, Policy::abs, "conjectured double finite sum at j = 0"));
  }
  return out;
}

}  // namespace eiskern::verify
