#include <eiskern/eisenstein.hpp>
#include <eiskern_verify/suites.hpp>

#include <cmath>

namespace eiskern::verify {

namespace {

using namespace eiskern::eisenstein;

Json rz(int r, Complex z) { return Json{{"r", r}, {"z", complex_json(z)}}; }

Complex eps(int r, Complex z) { return eiskern::eisenstein::eisenstein(r, z); }

}  // namespace

std::vector<CheckRecord> eisenstein_suites(const std::string& name, const SuiteContext& ctx) {
  std::vector<CheckRecord> out;
  const auto& sc = ctx.config.sum_control;
  const auto& qc = ctx.config.quad_control;
  if (name == "eisenstein.routes") {
    const char* anchor = "Eisenstein series: partial sums, polygamma form, integral representation";
    for (Complex z : ctx.grid) {
      for (int r = 1; r <= 6; ++r) {
        auto in = [&](const char* pair) {
          Json j = rz(r, z);
          j["pair"] = pair;
          return j;
        };
        out.push_back(make_record(
            in("direct/polygamma"),
            [&] { return std::pair{eisenstein_direct(r, z, sc).value, eisenstein_polygamma(r, z)}; },
            ctx.tol, Policy::rel, anchor));
        out.push_back(make_record(
            in("direct/integral"),
            [&] {
              return std::pair{eisenstein_direct(r, z, sc).value, eisenstein_integral(r, z, qc).value};
            },
            ctx.tol, Policy::rel, anchor));
        out.push_back(make_record(
            in("polygamma/integral"),
            [&] { return std::pair{eisenstein_polygamma(r, z), eisenstein_integral(r, z, qc).value}; },
            ctx.tol, Policy::rel, anchor));
        if (r <= 3)
          out.push_back(make_record(
              in("direct/closed"),
              [&] { return std::pair{eisenstein_direct(r, z, sc).value, eisenstein_closed(r, z)}; },
              ctx.tol * 1e-2, Policy::rel, "Eisenstein series: trigonometric closed forms"));
      }
    }
  } else if (name == "eisenstein.periodicity") {
    for (Complex z : ctx.grid)
      for (int r = 1; r <= 6; ++r)
        out.push_back(make_record(
            rz(r, z), [&] { return std::pair{eps(r, z + 1.0), eps(r, z)}; }, ctx.tol,
            Policy::either, "eps_r(z+1) = eps_r(z)"));
  } else if (name == "eisenstein.parity") {
    for (Complex z : ctx.grid)
      for (int r = 1; r <= 6; ++r)
        out.push_back(make_record(
            rz(r, z),
            [&] { return std::pair{eps(r, -z), (r % 2 == 0 ? 1.0 : -1.0) * eps(r, z)}; },
            ctx.tol, Policy::either, "eps_r(-z) = (-1)^r eps_r(z)"));
  } else if (name == "eisenstein.derivative") {
    const double h = 1e-5;
    for (Complex z : ctx.grid)
      for (int r = 1; r <= 5; ++r)
        out.push_back(make_record(
            rz(r, z),
            [&] {
              const Complex fd = (eps(r, z + h) - eps(r, z - h)) / (2.0 * h);
              return std::pair{fd, -static_cast<double>(r) * eps(r + 1, z)};
            },
            ctx.tol, Policy::rel, "eps_r' = -r eps_{r+1}"));
  } else if (name == "eisenstein.product") {
    for (Complex z : ctx.grid)
      out.push_back(make_record(
          rz(1, z),
          [&] { return std::pair{eps(1, z) * eps(2, z), eps(3, z)}; }, ctx.tol,
          Policy::rel, "Eisenstein product identity eps_3 = eps_2 eps_1"));
    for (int r = 2; r <= 4; ++r) {
      Json in = rz(r, Complex{0.25, 0.0});
      in["check"] = "uniqueness_witness";
      out.push_back(make_record(
          in,
          [r] {
            const Complex z{0.25, 0.0};
            return std::pair{Complex{std::abs(product_identity_residual(r, z)) / std::abs(eps(r + 2, z))},
                             Complex{0.05}};
          },
          0.0, Policy::greater, "product identity fails for r >= 2"));
    }
    Json in = rz(2, Complex{0.5, 0.0});
    in["check"] = "exact_value";
    out.push_back(make_record(
        in,
        [] {
          const Complex z{0.5, 0.0};
          const double p = constants::pi;
          return std::pair{eps(4, z) - eps(3, z) * eps(2, z), Complex{p * p * p * p / 3.0}};
        },
        ctx.tol * 0.1, Policy::either, "eps_4(1/2) - eps_3(1/2) eps_2(1/2) = 32 lambda(4)"));
  }
  return out;
}

}  // namespace eiskern::verify
