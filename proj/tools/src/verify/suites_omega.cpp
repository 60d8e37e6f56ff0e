#include <eiskern/conj_bernoulli.hpp>
#include <eiskern/hilbert_eisenstein.hpp>
#include <eiskern/numkern.hpp>
#include <eiskern/omega.hpp>
#include <eiskern_verify/suites.hpp>

#include <cmath>

namespace eiskern::verify {

namespace {

using namespace eiskern::omega;

Json zin(Complex z) { return Json{{"z", complex_json(z)}}; }

Complex om(Complex z) { return eiskern::omega::omega(z); }

// 20 points with |z| <= 5.
std::vector<Complex> route_points() {
  std::vector<Complex> pts;
  for (double re : {-3.0, -1.5, 0.5, 2.0, 3.5})
    for (double im : {-3.0, -1.0, 1.0, 3.0}) pts.emplace_back(re, im);
  return pts;
}

const double sym_axis[] = {-2.4, -1.2, 0.3, 1.5, 2.7};

Complex by_route(int route, Complex z, const SuiteContext& ctx) {
  switch (route) {
    case 0: return omega_quadrature(z, ctx.config.quad_control).value;
    case 1: return omega_digamma(z);
    case 2: return omega_partial_fraction(z, ctx.config.sum_control).value;
    case 3: return omega_taylor(z, TaylorVariant::moments, ctx.config.sum_control).value;
    default: return omega_taylor(z, TaylorVariant::eta, ctx.config.sum_control).value;
  }
}

const char* route_label[] = {"quadrature", "digamma", "partial_fraction", "taylor_moments",
                             "taylor_eta"};

}  // namespace

std::vector<CheckRecord> omega_suites(const std::string& name, const SuiteContext& ctx) {
  std::vector<CheckRecord> out;
  if (name == "omega.routes") {
    for (Complex z : route_points())
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
          Json in = zin(z);
          in["pair"] = std::string(route_label[a]) + "/" + route_label[b];
          out.push_back(make_record(
              in, [&] { return std::pair{by_route(a, z, ctx), by_route(b, z, ctx)}; }, ctx.tol,
              Policy::either, "Omega: definition, digamma form, partial fractions, Taylor series"));
        }
  } else if (name == "omega.real_axis") {
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0})
      out.push_back(make_record(
          Json{{"x", x}},
          [&] { return std::pair{omega_quadrature(x, ctx.config.quad_control).value, omega_digamma(x)}; },
          ctx.tol, Policy::rel, "Omega digamma form valid on the whole real axis"));
  } else if (name == "omega.moments") {
    const char* labels[] = {"closed", "quadrature", "series"};
    const MomentRoute routes[] = {MomentRoute::closed, MomentRoute::quadrature, MomentRoute::series};
    for (int k = 0; k <= 5; ++k)
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          out.push_back(make_record(
              Json{{"k", k}, {"pair", std::string(labels[a]) + "/" + labels[b]}},
              [&] {
                return std::pair{Complex{omega_moment(k, routes[a])}, Complex{omega_moment(k, routes[b])}};
              },
              ctx.tol, Policy::abs, "odd moments of 2 cot(pi u) on (0, 1/2)"));
    for (int a = 0; a < 3; ++a)
      out.push_back(make_record(
          Json{{"k", 0}, {"pair", std::string(labels[a]) + "/log2_over_pi"}},
          [&] { return std::pair{Complex{omega_moment(0, routes[a])}, Complex{constants::ln2 / constants::pi}}; },
          ctx.tol * 1e-2, Policy::abs, "Omega_1 = eta(1) / pi"));
  } else if (name == "omega.bounds") {
    for (int i = 1; i <= 80; ++i)
      for (double sgn : {1.0, -1.0}) {
        const double x = sgn * i / 10.0;
        out.push_back(make_record(
            Json{{"side", "lower"}, {"x", x}},
            [x] { return std::pair{omega_digamma(x), Complex{omega_bounds(x).lower}}; }, ctx.tol,
            Policy::greater, "two-sided logarithmic bounds for Omega(x)"));
        out.push_back(make_record(
            Json{{"side", "upper"}, {"x", x}},
            [x] { return std::pair{omega_digamma(x), Complex{omega_bounds(x).upper}}; }, ctx.tol,
            Policy::less, "two-sided logarithmic bounds for Omega(x)"));
      }
  } else if (name == "omega.asymptotic") {
    const char* anchor = "Omega(x) e^{-x/2} stays within (1/2pi) log(zeta(3)/3), (1/2pi) log(3/zeta(3))";
    for (double x : {10.0, 20.0, 40.0, 500.0, 502.0, 504.0}) {
      out.push_back(make_record(
          Json{{"check", "ratio_above_lo"}, {"x", x}},
          [x] {
            const auto e = omega_asymptotic_envelope(x);
            return std::pair{Complex{e.ratio}, Complex{e.lo_coef}};
          },
          ctx.tol, Policy::greater, anchor));
      out.push_back(make_record(
          Json{{"check", "ratio_below_hi"}, {"x", x}},
          [x] {
            const auto e = omega_asymptotic_envelope(x);
            return std::pair{Complex{e.ratio}, Complex{e.hi_coef}};
          },
          ctx.tol, Policy::less, anchor));
    }
    for (double x : {500.0, 502.0, 504.0}) {
      out.push_back(make_record(
          Json{{"check", "log_omega_below_log_upper"}, {"x", x}},
          [x] {
            const auto o = omega_log(x);
            const auto u = bound_upper_log(x);
            if (o.sign != 1 || u.sign != 1) throw Error("unexpected sign in log-space values");
            return std::pair{Complex{o.log_abs}, Complex{u.log_abs}};
          },
          ctx.tol, Policy::less, "upper bound in log space"));
      out.push_back(make_record(
          Json{{"check", "lower_sign_below_omega_sign"}, {"x", x}},
          [x] {
            return std::pair{Complex{static_cast<double>(bound_lower_log(x).sign)},
                             Complex{static_cast<double>(omega_log(x).sign)}};
          },
          ctx.tol, Policy::less, "lower bound in log space"));
    }
    out.push_back(make_record(
        Json{{"check", "caption_constant"}},
        [] {
          const double hi = omega_asymptotic_envelope(10.0).hi_coef;
          return std::pair{Complex{std::round(hi * 1000.0) / 1000.0}, Complex{0.146}};
        },
        ctx.tol, Policy::abs, "(1/2pi) log(3/zeta(3)) = 0.146 to three decimals"));
  } else if (name == "omega.asymptotic_ratio") {
    for (double x : {10.0, 20.0, 40.0, 100.0, 500.0})
      out.push_back(make_record(
          Json{{"x", x}},
          [x] {
            const auto e = omega_asymptotic_envelope(x);
            return std::pair{Complex{e.ratio}, Complex{e.hi_coef}};
          },
          ctx.tol, Policy::abs, "Omega(x) ~ (1/2pi) log(3/zeta(3)) sinh(x/2)"));
  } else if (name == "omega.ode" || name == "omega.ode_printed") {
    const bool printed = name == "omega.ode_printed";
    for (double x : {0.0, 0.5, 1.0, 2.0, 3.0, 5.0})
      out.push_back(make_record(
          Json{{"h", 1e-5}, {"x", x}},
          [=] {
            const double r = printed ? omega_ode_residual_printed(x, 1e-5) : omega_ode_residual(x, 1e-5);
            return std::pair{Complex{r}, Complex{0.0}};
          },
          ctx.tol, Policy::abs,
          printed ? "first-order ODE for Omega with forcing (x/pi^3) sinh(x/2) E(x)"
                  : "first-order ODE for Omega with forcing (x/2pi^3) sinh(x/2) E(x/2pi)"));
    if (!printed)
      out.push_back(make_record(
          Json{{"check", "E_at_zero"}},
          [] {
            return std::pair{hilbert::mathieu_E(0.0).value, Complex{2.0 * numkern::dirichlet_eta(3.0)}};
          },
          ctx.tol * 1e-7, Policy::abs, "E(0) = 2 eta(3)"));
  } else if (name == "omega.symmetry") {
    const char* anchor_m = "mirror symmetry Omega(conj z) = conj Omega(z)";
    const char* anchor_r = "reflexivity of Omega";
    for (double x : sym_axis)
      for (double y : sym_axis) {
        const Complex z{x, y};
        auto in = [&](const char* c) {
          Json j = zin(z);
          j["check"] = c;
          return j;
        };
        out.push_back(make_record(in("mirror"), [z] { return std::pair{om(std::conj(z)), std::conj(om(z))}; },
                                  ctx.tol, Policy::abs, anchor_m));
        out.push_back(make_record(in("re_reflect"), [z] { return std::pair{Complex{om(z).real()}, Complex{om(std::conj(z)).real()}}; },
                                  ctx.tol, Policy::abs, anchor_r));
        out.push_back(make_record(in("im_reflect"), [z] { return std::pair{Complex{om(z).imag()}, Complex{-om(std::conj(z)).imag()}}; },
                                  ctx.tol, Policy::abs, anchor_r));
        out.push_back(make_record(in("odd"), [z] { return std::pair{om(-z), -om(z)}; },
                                  ctx.tol, Policy::abs, "Omega is odd"));
      }
    for (double t : sym_axis) {
      out.push_back(make_record(Json{{"check", "im_on_real_axis"}, {"z", complex_json({t, 0.0})}},
                                [t] { return std::pair{Complex{om(Complex{t, 0.0}).imag()}, Complex{0.0}}; },
                                ctx.tol, Policy::abs, anchor_r));
      out.push_back(make_record(Json{{"check", "re_on_imaginary_axis"}, {"z", complex_json({0.0, t})}},
                                [t] { return std::pair{Complex{om(Complex{0.0, t}).real()}, Complex{0.0}}; },
                                ctx.tol, Policy::abs, anchor_r));
    }
  } else if (name == "omega.hilbert_pv") {
    for (Complex z : {Complex{1.0, 0.0}, Complex{0.5, 2.0}, Complex{-3.0, 1.0}, Complex{0.0, 4.0}, Complex{7.0, -2.0}})
      out.push_back(make_record(
          zin(z),
          [&] {
            return std::pair{omega_hilbert_pv(z, ctx.config.quad_control).value,
                             omega_quadrature(z, ctx.config.quad_control).value};
          },
          ctx.tol, Policy::either, "Omega as the periodic Hilbert transform of e^{zu} at 0"));
  } else if (name == "omega.b0_series") {
    for (Complex z : {Complex{0.5, 0.0}, Complex{-1.0, 0.0}, Complex{0.6, 0.7}, Complex{0.0, 0.9}, Complex{-0.3, -0.4}})
      out.push_back(make_record(
          zin(z), [z] { return std::pair{conj::gen_function_b0(z), conj::gen_function_series(z, 40)}; },
          ctx.tol, Policy::either, "-(z / 2 sinh(z/2)) Omega(z) generates B~_k(1/2)"));
  }
  return out;
}

}  // namespace eiskern::verify
