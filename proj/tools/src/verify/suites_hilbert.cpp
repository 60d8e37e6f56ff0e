#include <eiskern/hilbert_eisenstein.hpp>
#include <eiskern/numkern.hpp>
#include <eiskern_verify/suites.hpp>

#include <cmath>

namespace eiskern::verify {

namespace {

using namespace eiskern::hilbert;

const Complex I{0.0, 1.0};
const double real_points[] = {-2.5, -1.2, 0.3, 0.7, 1.2, 2.5};

Json rz(int r, Complex z) { return Json{{"r", r}, {"z", complex_json(z)}}; }

Complex powm(Complex z, int r) { return std::pow(z, -r); }

// Distance from z to the nearest point of iZ \ {0}.
double pole_distance(Complex z) {
  double n = std::round(z.imag());
  if (n == 0.0) n = z.imag() >= 0.0 ? 1.0 : -1.0;
  return std::abs(z - Complex{0.0, n});
}

}  // namespace

std::vector<CheckRecord> hilbert_suites(const std::string& name, const SuiteContext& ctx) {
  std::vector<CheckRecord> out;
  const auto& sc = ctx.config.sum_control;
  if (name == "hilbert.closed_r1") {
    auto pts = ctx.grid;
    pts.push_back({3.0, 0.5});
    for (Complex z : pts)
      out.push_back(make_record(
          rz(1, z), [&] { return std::pair{he_closed(1, z), he_direct(1, z, sc).value}; }, ctx.tol,
          Policy::rel, "h_1 digamma closed form vs defining series"));
    const Complex ref = 2.0 * I * constants::ln2;
    Json in = rz(1, 0.0);
    in["route"] = "direct";
    out.push_back(make_record(in, [&] { return std::pair{he_direct(1, 0.0, sc).value, ref}; },
                              ctx.tol * 1e-4, Policy::abs, "h_1(0) = 2i log 2"));
    in["route"] = "closed";
    out.push_back(make_record(in, [&] { return std::pair{he_closed(1, 0.0), ref}; }, ctx.tol * 1e-4,
                              Policy::abs, "h_1(0) = 2i log 2"));
  } else if (name == "hilbert.closed") {
    for (Complex z : ctx.grid)
      for (int r = 2; r <= 5; ++r)
        out.push_back(make_record(
            rz(r, z), [&] { return std::pair{he_closed(r, z), he_direct(r, z, sc).value}; }, ctx.tol,
            Policy::rel, "h_r polygamma closed form vs defining series"));
  } else if (name == "hilbert.difference") {
    for (Complex z : ctx.grid)
      for (int r = 1; r <= 5; ++r)
        out.push_back(make_record(
            rz(r, z),
            [&] {
              return std::pair{he_direct(r, z, sc).value + he_direct(r, z + I, sc).value,
                               powm(z, r) - powm(z + I, r)};
            },
            ctx.tol, Policy::either, "h_r(z) + h_r(z+i) = z^{-r} - (z+i)^{-r}"));
  } else if (name == "hilbert.symmetry") {
    for (Complex z : ctx.grid)
      for (int r = 1; r <= 5; ++r)
        out.push_back(make_record(
            rz(r, z),
            [&] {
              return std::pair{he_direct(r, -z, sc).value,
                               (r % 2 == 1 ? 1.0 : -1.0) * he_direct(r, z, sc).value};
            },
            ctx.tol, Policy::either, "h_r(-z) = (-1)^{r+1} h_r(z)"));
  } else if (name == "hilbert.derivative") {
    const double h = 1e-5;
    for (Complex z : ctx.grid) {
      for (int r = 1; r <= 4; ++r)
        out.push_back(make_record(
            rz(r, z),
            [&] {
              const Complex fd = (he_closed(r, z + h) - he_closed(r, z - h)) / (2.0 * h);
              return std::pair{fd, -static_cast<double>(r) * he_closed(r + 1, z)};
            },
            ctx.tol, Policy::rel, "h_r' = -r h_{r+1}"));
      Json in = rz(4, z);
      in["order"] = 2;
      out.push_back(make_record(
          in,
          [&] {
            // Step proportional to the pole distance, one Richardson stage.
            const double h2 = 0.02 * pole_distance(z);
            auto d2 = [&](double h) {
              return (he_closed(2, z + h) - 2.0 * he_closed(2, z) + he_closed(2, z - h)) / (h * h);
            };
            const Complex d = (4.0 * d2(0.5 * h2) - d2(h2)) / 3.0;
            return std::pair{d / 6.0, he_closed(4, z)};
          },
          ctx.tol, Policy::rel, "h_r = ((-1)^r / Gamma(r)) h_2^{(r-2)}"));
    }
  } else if (name == "hilbert.sinh_expansion") {
    for (Complex z : ctx.grid) {
      if (std::abs(z) > 1.0) continue;
      out.push_back(make_record(
          Json{{"N", 10000}, {"z", complex_json(z)}},
          [&] { return std::pair{sinh_expansion_residual(z, 10000), Complex{0.0}}; }, ctx.tol,
          Policy::abs, "partial fractions of pi / sinh(pi z)"));
    }
  } else if (name == "hilbert.real_axis") {
    for (double x : real_points) {
      for (int r = 1; r <= 5; ++r) {
        auto in = [&](const char* route) {
          Json j{{"r", r}, {"route", route}, {"x", x}};
          return j;
        };
        const char* anchor = "h_r is purely imaginary on the real axis";
        out.push_back(make_record(in("direct"), [&] { return std::pair{Complex{he_direct(r, x, sc).value.real()}, Complex{0.0}}; },
                                  ctx.tol, Policy::abs, anchor));
        out.push_back(make_record(in("closed"), [&] { return std::pair{Complex{he_closed(r, x).real()}, Complex{0.0}}; },
                                  ctx.tol, Policy::abs, anchor));
        out.push_back(make_record(in("real"), [&] { return std::pair{Complex{he_real(r, x).real()}, Complex{0.0}}; },
                                  ctx.tol, Policy::abs, anchor));
        out.push_back(make_record(in("eisenstein"), [&] { return std::pair{Complex{he_via_eisenstein(r, x).real()}, Complex{0.0}}; },
                                  ctx.tol, Policy::abs, anchor));
      }
    }
  } else if (name == "hilbert.routes") {
    for (double x : real_points) {
      for (int r = 1; r <= 5; ++r) {
        auto in = [&](const char* pair) { return Json{{"pair", pair}, {"r", r}, {"x", x}}; };
        auto ref = [&] { return he_direct(r, x, sc).value; };
        out.push_back(make_record(in("direct/closed"), [&] { return std::pair{he_closed(r, x), ref()}; },
                                  ctx.tol, Policy::either, "h_r closed form on the real axis"));
        out.push_back(make_record(in("direct/real"), [&] { return std::pair{he_real(r, x), ref()}; },
                                  ctx.tol, Policy::either, "h_r real-axis digamma form"));
        if (r == 1) {
          out.push_back(make_record(
              in("direct/eisenstein_digamma"),
              [&] { return std::pair{he_via_eisenstein(1, x, ViaEisenstein::eisenstein_digamma), ref()}; },
              ctx.tol, Policy::either, "h_1 through eps_1 and digamma"));
          out.push_back(make_record(
              in("direct/hyperbolic"),
              [&] { return std::pair{he_via_eisenstein(1, x, ViaEisenstein::hyperbolic), ref()}; },
              ctx.tol, Policy::either, "h_1 through coth and digamma"));
          if (std::abs(x) < 1.0)
            out.push_back(make_record(
                in("direct/taylor"), [&] { return std::pair{he_taylor(x, sc).value, ref()}; },
                ctx.tol, Policy::either, "h_1 Taylor series in eta(2n+1)"));
        } else {
          out.push_back(make_record(
              in("direct/eisenstein_polygamma"),
              [&] { return std::pair{he_via_eisenstein(r, x, ViaEisenstein::polygamma), ref()}; },
              ctx.tol, Policy::either, "h_r through eps_r and polygamma"));
        }
      }
    }
    for (Complex z : ctx.grid) {
      if (std::abs(z) >= 0.9) continue;
      out.push_back(make_record(
          Json{{"pair", "direct/taylor"}, {"r", 1}, {"z", complex_json(z)}},
          [&] { return std::pair{he_taylor(z, sc).value, he_direct(1, z, sc).value}; }, ctx.tol,
          Policy::either, "h_1 Taylor series in eta(2n+1)"));
    }
  } else if (name == "hilbert.mathieu") {
    for (double x : {0.3, 1.0, 2.5, 4.0}) {
      out.push_back(make_record(
          Json{{"check", "E_vs_alternating"}, {"x", x}},
          [&] { return std::pair{mathieu_E(x).value, mathieu(2.0, x, true, sc).value}; }, ctx.tol,
          Policy::either, "E(x) equals the alternating Mathieu series of order 2"));
      out.push_back(make_record(
          Json{{"check", "h2_vs_alternating"}, {"x", x}},
          [&] { return std::pair{he_direct(2, x, sc).value, 2.0 * I * x * mathieu(2.0, x, true, sc).value}; },
          ctx.tol, Policy::either, "h_2(x) = 2ix times the alternating Mathieu series"));
    }
    out.push_back(make_record(
        Json{{"check", "E_at_zero"}, {"x", 0.0}},
        [] { return std::pair{mathieu_E(0.0).value, Complex{2.0 * numkern::dirichlet_eta(3.0)}}; },
        ctx.tol, Policy::either, "E(0) = 2 eta(3)"));
  }
  return out;
}

}  // namespace eiskern::verify
