#include <eiskern/conj_bernoulli.hpp>
#include <eiskern/eisenstein.hpp>
#include <eiskern/hilbert_eisenstein.hpp>
#include <eiskern/numkern.hpp>
#include <eiskern/omega.hpp>
#include <eiskern_verify/config.hpp>
#include <eiskern_verify/outputs.hpp>
#include <eiskern_verify/report.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace eiskern::verify {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

using constants::ln2;
using constants::pi;

std::string row(std::initializer_list<std::string> cells) {
  std::string s;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) s += ',';
    s += c;
    first = false;
  }
  return s + "\n";
}

std::string f(double x) { return format_real(x); }

double max_abs_diff(std::initializer_list<double> v) {
  double lo = *std::min_element(v.begin(), v.end());
  double hi = *std::max_element(v.begin(), v.end());
  return hi - lo;
}

std::string table_moments() {
  using namespace omega;
  std::string s = row({"k", "index", "closed", "quadrature", "series", "max_disc"});
  for (int k = 0; k <= 5; ++k) {
    const double a = omega_moment(k, MomentRoute::closed);
    const double b = omega_moment(k, MomentRoute::quadrature);
    const double c = omega_moment(k, MomentRoute::series);
    s += row({std::to_string(k), std::to_string(2 * k + 1), f(a), f(b), f(c), f(max_abs_diff({a, b, c}))});
  }
  return s;
}

std::string table_conj() {
  using namespace conj;
  std::string s = row({"m", "index", "eta_form", "zeta_form", "fourier_half", "moment_form", "max_disc"});
  for (int m = 0; m <= 6; ++m) {
    const double a = conj_bernoulli_half(m);
    const double b = conj_bernoulli_half_from_zeta(m);
    const double c = conj_bernoulli_periodic(m, 0.5).value.real();
    if (m <= 2) {
      const double d = moment_combination(m);
      s += row({std::to_string(m), std::to_string(2 * m + 1), f(a), f(b), f(c), f(d), f(max_abs_diff({a, b, c, d}))});
    } else {
      s += row({std::to_string(m), std::to_string(2 * m + 1), f(a), f(b), f(c), "", f(max_abs_diff({a, b, c}))});
    }
  }
  return s;
}

std::string table_zeta() {
  using namespace conj;
  std::string s = row({"m", "s", "via_conj_one", "via_fourier", "oracle", "disc_conj", "disc_fourier"});
  for (int m = 1; m <= 3; ++m) {
    const double a = zeta_odd_via_conj(m);
    const double b = zeta_odd_via_fourier(m);
    const double o = numkern::riemann_zeta(2.0 * m + 1.0);
    s += row({std::to_string(m), std::to_string(2 * m + 1), f(a), f(b), f(o), f(std::abs(a - o)), f(std::abs(b - o))});
  }
  return s;
}

std::string table_bstar() {
  std::string s = row({"alpha", "label", "bstar", "reference", "disc"});
  const struct {
    double a;
    const char* label;
    double ref;
  } rows[] = {{2.0, "|B_2|", 1.0 / 6.0}, {3.0, "p", 0.05815227}, {4.0, "|B_4|", 1.0 / 30.0}, {5.0, "q", 0.025413275}};
  for (const auto& r : rows) {
    const double b = conj::ramanujan_bstar(r.a);
    s += row({f(r.a), r.label, f(b), f(r.ref), f(std::abs(b - r.ref))});
  }
  return s;
}

std::string fig1() {
  std::string s = row({"x", "omega", "lower", "upper"});
  for (int i = 0; i <= 320; ++i) {
    const double x = (i - 160) / 20.0;
    const double o = omega::omega_digamma(x).real();
    const auto b = omega::omega_bounds(x);
    s += row({f(x), f(o), f(b.lower), f(b.upper)});
  }
  return s;
}

std::string fig2() {
  using namespace omega;
  std::string s = row({"x", "log_abs_omega", "omega_sign", "log_abs_lower", "lower_sign", "log_abs_upper",
                       "upper_sign", "log_approximant", "ratio"});
  for (int i = 0; i <= 400; ++i) {
    const double x = (50000 + i) / 100.0;
    const auto o = omega_log(x);
    const auto lo = bound_lower_log(x);
    const auto up = bound_upper_log(x);
    const auto ap = approximant_log(x);
    const double ratio = o.sign * std::exp(o.log_abs - 0.5 * x);
    s += row({f(x), f(o.log_abs), std::to_string(o.sign), f(lo.log_abs), std::to_string(lo.sign), f(up.log_abs),
              std::to_string(up.sign), f(ap.log_abs), f(ratio)});
  }
  return s;
}

}  // namespace

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> n{"moments", "conj_bernoulli", "zeta_roundtrip", "bstar"};
  return n;
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> n{"fig1", "fig2"};
  return n;
}

std::string table_csv(const std::string& name) {
  if (name == "moments") return table_moments();
  if (name == "conj_bernoulli") return table_conj();
  if (name == "zeta_roundtrip") return table_zeta();
  if (name == "bstar") return table_bstar();
  throw ConfigError("unknown table '" + name + "'");
}

std::string plotdata_csv(const std::string& figure) {
  if (figure == "fig1") return fig1();
  if (figure == "fig2") return fig2();
  throw ConfigError("unknown figure '" + figure + "'");
}

// ---------------------------------------------------------------- eval

namespace {

double parse_double(std::string_view s, const std::string& whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
    throw ConfigError("cannot parse number '" + whole + "'");
  return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t.push_back(ch);
  if (t.empty()) throw ConfigError("empty number");
  if (t.back() != 'i' && t.back() != 'j') return {parse_double(t, text), 0.0};
  t.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : t.substr(0, split);
  std::string im = split == std::string::npos ? t : t.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_double(re, text), parse_double(im, text)};
}

namespace {

struct EvalFn {
  int arity;
  std::string usage;
  std::vector<std::string> routes;
  std::function<EvalResult(const std::vector<std::string>&, const std::string&, const EvalRequest&)> run;
};

int parse_int(const std::string& s) {
  const Complex z = parse_complex(s);
  if (z.imag() != 0.0 || z.real() != std::floor(z.real()) || std::abs(z.real()) > 1e6)
    throw ConfigError("expected an integer, got '" + s + "'");
  return static_cast<int>(z.real());
}

double parse_realarg(const std::string& s) {
  const Complex z = parse_complex(s);
  if (z.imag() != 0.0) throw ConfigError("expected a real number, got '" + s + "'");
  return z.real();
}

EvalResult wrap(Evaluation e) { return {"", e, std::string(route_name(e.route))}; }
EvalResult wrap(Complex v, Route r) { return wrap(Evaluation{v, 0.0, 0, r}); }

const std::map<std::string, EvalFn>& eval_registry() {
  static const std::map<std::string, EvalFn> reg = [] {
    std::map<std::string, EvalFn> m;
    m["epsilon"] = {2, "epsilon R Z", {"direct", "closed", "polygamma", "integral"},
                    [](const auto& a, const std::string& route, const EvalRequest& q) {
                      using namespace eisenstein;
                      const int r = parse_int(a[0]);
                      const Complex z = parse_complex(a[1]);
                      if (route == "direct") return wrap(eisenstein_direct(r, z, q.sum_control));
                      if (route == "integral") return wrap(eisenstein_integral(r, z, q.quad_control));
                      if (route == "closed") return wrap(eisenstein_closed(r, z), Route::closed);
                      if (route == "polygamma" || r > 3) return wrap(eisenstein_polygamma(r, z), Route::polygamma);
                      return wrap(eisenstein_closed(r, z), Route::closed);
                    }};
    m["he"] = {2, "he R Z", {"direct", "closed", "taylor", "real", "eisenstein"},
               [](const auto& a, const std::string& route, const EvalRequest& q) {
                 using namespace hilbert;
                 const int r = parse_int(a[0]);
                 const Complex z = parse_complex(a[1]);
                 if (route == "direct") return wrap(he_direct(r, z, q.sum_control));
                 if (route == "taylor") {
                   if (r != 1) throw DomainError("he: taylor route requires r = 1");
                   return wrap(he_taylor(z, q.sum_control));
                 }
                 if (route == "real" || route == "eisenstein") {
                   if (z.imag() != 0.0) throw DomainError("he: " + route + " route requires real z");
                   return route == "real" ? wrap(he_real(r, z.real()), Route::digamma)
                                          : wrap(he_via_eisenstein(r, z.real()), Route::polygamma);
                 }
                 return wrap(he_closed(r, z), r == 1 ? Route::digamma : Route::polygamma);
               }};
    m["omega"] = {1, "omega Z", {"quadrature", "digamma", "partial_fraction", "taylor_moments", "taylor_eta"},
                  [](const auto& a, const std::string& route, const EvalRequest& q) {
                    using namespace omega;
                    const Complex z = parse_complex(a[0]);
                    if (route == "quadrature") return wrap(omega_quadrature(z, q.quad_control));
                    if (route == "partial_fraction") return wrap(omega_partial_fraction(z, q.sum_control));
                    if (route == "taylor_moments") return wrap(omega_taylor(z, TaylorVariant::moments, q.sum_control));
                    if (route == "taylor_eta") return wrap(omega_taylor(z, TaylorVariant::eta, q.sum_control));
                    if (route == "digamma" || z.imag() == 0.0 || std::abs(z) < 0.9 * 2.0 * pi)
                      return wrap(omega_digamma(z), Route::digamma);
                    return wrap(omega_quadrature(z, q.quad_control));
                  }};
    m["psi"] = {1, "psi Z", {}, [](const auto& a, const std::string&, const EvalRequest&) {
                  return wrap(numkern::digamma(parse_complex(a[0])), Route::asymptotic);
                }};
    m["polygamma"] = {2, "polygamma R Z", {}, [](const auto& a, const std::string&, const EvalRequest&) {
                        return wrap(numkern::polygamma(parse_int(a[0]), parse_complex(a[1])), Route::asymptotic);
                      }};
    m["gamma"] = {1, "gamma Z", {}, [](const auto& a, const std::string&, const EvalRequest&) {
                    return wrap(numkern::gamma(parse_complex(a[0])), Route::asymptotic);
                  }};
    m["zeta"] = {1, "zeta S", {}, [](const auto& a, const std::string&, const EvalRequest&) {
                   return wrap(Complex{numkern::riemann_zeta(parse_realarg(a[0]))}, Route::euler_transform);
                 }};
    m["eta"] = {1, "eta S", {}, [](const auto& a, const std::string&, const EvalRequest&) {
                  return wrap(Complex{numkern::dirichlet_eta(parse_realarg(a[0]))}, Route::euler_transform);
                }};
    m["lambda"] = {1, "lambda S", {}, [](const auto& a, const std::string&, const EvalRequest&) {
                     return wrap(Complex{numkern::dirichlet_lambda(parse_realarg(a[0]))}, Route::euler_transform);
                   }};
    m["bstar"] = {1, "bstar ALPHA", {}, [](const auto& a, const std::string&, const EvalRequest&) {
                    return wrap(Complex{conj::ramanujan_bstar(parse_realarg(a[0]))}, Route::closed);
                  }};
    m["moment"] = {1, "moment K", {"closed", "quadrature", "series"},
                   [](const auto& a, const std::string& route, const EvalRequest&) {
                     using omega::MomentRoute;
                     const int k = parse_int(a[0]);
                     if (route == "quadrature")
                       return wrap(Complex{omega::omega_moment(k, MomentRoute::quadrature)}, Route::quadrature);
                     if (route == "series")
                       return wrap(Complex{omega::omega_moment(k, MomentRoute::series)}, Route::series);
                     return wrap(Complex{omega::omega_moment(k, MomentRoute::closed)}, Route::closed);
                   }};
    m["mathieu"] = {2, "mathieu R X", {"plain", "alternating"},
                    [](const auto& a, const std::string& route, const EvalRequest& q) {
                      return wrap(hilbert::mathieu(parse_realarg(a[0]), parse_realarg(a[1]), route == "alternating",
                                                   q.sum_control));
                    }};
    m["conj"] = {2, "conj N X", {}, [](const auto& a, const std::string&, const EvalRequest& q) {
                   return wrap(conj::conj_bernoulli_periodic(parse_int(a[0]), parse_realarg(a[1]), q.sum_control));
                 }};
    m["conj_half"] = {1, "conj_half M", {}, [](const auto& a, const std::string&, const EvalRequest&) {
                        return wrap(Complex{conj::conj_bernoulli_half(parse_int(a[0]))}, Route::closed);
                      }};
    m["fbernoulli"] = {2, "fbernoulli ALPHA X", {}, [](const auto& a, const std::string&, const EvalRequest& q) {
                         return wrap(conj::fractional_bernoulli(parse_realarg(a[0]), parse_realarg(a[1]), q.sum_control));
                       }};
    m["genfun"] = {1, "genfun Z", {}, [](const auto& a, const std::string&, const EvalRequest&) {
                     return wrap(conj::gen_function_closed(parse_complex(a[0])), Route::digamma);
                   }};
    m["zeta_odd"] = {1, "zeta_odd M", {}, [](const auto& a, const std::string&, const EvalRequest&) {
                       return wrap(Complex{conj::zeta_odd_via_conj(parse_int(a[0]))}, Route::closed);
                     }};
    return m;
  }();
  return reg;
}

}  // namespace

const std::vector<std::string>& eval_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : eval_registry()) n.push_back(k);
    return n;
  }();
  return names;
}

EvalResult evaluate(const EvalRequest& req) {
  const auto& reg = eval_registry();
  const auto it = reg.find(req.fn);
  if (it == reg.end()) throw ConfigError("unknown function '" + req.fn + "'");
  const EvalFn& fn = it->second;
  if (static_cast<int>(req.args.size()) != fn.arity)
    throw ConfigError("usage: eval " + fn.usage);
  if (!req.route.empty() && std::find(fn.routes.begin(), fn.routes.end(), req.route) == fn.routes.end())
    throw ConfigError("unknown route '" + req.route + "' for " + req.fn);
  try {
    EvalResult r = fn.run(req.args, req.route, req);
    r.fn = req.fn;
    return r;
  } catch (const Error& e) {
    throw ConfigError(std::string("precondition violated: ") + e.what());
  }
}

namespace {

std::string complex_text(Complex z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  std::string s = format_real(re);
  s += (std::signbit(im) ? "-" : "+");
  s += format_real(std::abs(im)) + "i";
  return s;
}

}  // namespace

std::string format_eval_human(const EvalResult& r) {
  std::ostringstream o;
  o << "fn: " << r.fn << "\n"
    << "value: " << complex_text(r.eval.value) << "\n"
    << "err_estimate: " << format_real(r.eval.err_estimate) << "\n"
    << "route: " << r.route << "\n"
    << "terms_used: " << r.eval.terms_used << "\n";
  return o.str();
}

std::string format_eval_json(const EvalResult& r) {
  Json j;
  j["fn"] = r.fn;
  j["value"] = {{"re", r.eval.value.real()}, {"im", r.eval.value.imag()}};
  j["err_estimate"] = r.eval.err_estimate;
  j["route"] = r.route;
  j["terms_used"] = r.eval.terms_used;
  return j.dump(2) + "\n";
}

}  // namespace eiskern::verify
