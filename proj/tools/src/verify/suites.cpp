#include <eiskern_verify/grid.hpp>
#include <eiskern_verify/suites.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace eiskern::verify {

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

CheckRecord make_record(Json inputs, const std::function<std::pair<Complex, Complex>()>& f,
                        double tol, Policy policy, std::string anchor) {
  CheckRecord rec;
  rec.inputs = std::move(inputs);
  rec.tol = tol;
  rec.policy = policy;
  rec.anchor = std::move(anchor);
  try {
    const auto [lhs, rhs] = f();
    rec.lhs = lhs;
    rec.rhs = rhs;
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  finalize(rec);
  return rec;
}

namespace {

SuiteDef def(std::string name, double tol, bool report_only,
             std::vector<CheckRecord> (*family)(const std::string&, const SuiteContext&)) {
  auto n = name;
  return SuiteDef{std::move(name), tol, report_only,
                  [n, family](const SuiteContext& ctx) { return family(n, ctx); }};
}

}  // namespace

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> suites = [] {
    std::vector<SuiteDef> s;
    s.push_back(def("numkern.digamma_recurrence", 1e-12, false, numkern_suites));
    s.push_back(def("numkern.digamma_reflection", 1e-11, false, numkern_suites));
    s.push_back(def("numkern.digamma_conjugate", 1e-13, false, numkern_suites));
    s.push_back(def("numkern.polygamma_fd", 1e-5, false, numkern_suites));
    s.push_back(def("numkern.eta_lambda", 1e-12, false, numkern_suites));
    s.push_back(def("numkern.bernoulli", 1e-14, false, numkern_suites));
    s.push_back(def("numkern.zeta_odd_series", 1e-12, false, numkern_suites));
    s.push_back(def("eisenstein.routes", 1e-8, false, eisenstein_suites));
    s.push_back(def("eisenstein.periodicity", 1e-10, false, eisenstein_suites));
    s.push_back(def("eisenstein.parity", 1e-10, false, eisenstein_suites));
    s.push_back(def("eisenstein.derivative", 1e-5, false, eisenstein_suites));
    s.push_back(def("eisenstein.product", 1e-9, false, eisenstein_suites));
    s.push_back(def("hilbert.closed_r1", 1e-9, false, hilbert_suites));
    s.push_back(def("hilbert.closed", 1e-8, false, hilbert_suites));
    s.push_back(def("hilbert.difference", 1e-9, false, hilbert_suites));
    s.push_back(def("hilbert.symmetry", 1e-10, false, hilbert_suites));
    s.push_back(def("hilbert.derivative", 1e-5, false, hilbert_suites));
    s.push_back(def("hilbert.sinh_expansion", 1e-8, false, hilbert_suites));
    s.push_back(def("hilbert.real_axis", 1e-12, false, hilbert_suites));
    s.push_back(def("hilbert.routes", 1e-8, false, hilbert_suites));
    s.push_back(def("hilbert.mathieu", 1e-10, false, hilbert_suites));
    s.push_back(def("omega.routes", 1e-8, false, omega_suites));
    s.push_back(def("omega.real_axis", 1e-8, false, omega_suites));
    s.push_back(def("omega.moments", 1e-10, false, omega_suites));
    s.push_back(def("omega.bounds", 0.0, false, omega_suites));
    s.push_back(def("omega.asymptotic", 0.0, false, omega_suites));
    s.push_back(def("omega.asymptotic_ratio", 1e-3, true, omega_suites));
    s.push_back(def("omega.ode", 1e-6, false, omega_suites));
    s.push_back(def("omega.ode_printed", 1e-6, true, omega_suites));
    s.push_back(def("omega.symmetry", 1e-12, false, omega_suites));
    s.push_back(def("omega.hilbert_pv", 1e-9, false, omega_suites));
    s.push_back(def("omega.b0_series", 1e-8, false, omega_suites));
    s.push_back(def("conj.half_values", 1e-13, false, conj_suites));
    s.push_back(def("conj.moment_combination", 1e-9, false, conj_suites));
    s.push_back(def("conj.moment_combination_printed", 1e-9, true, conj_suites));
    s.push_back(def("conj.genfun", 1e-8, false, conj_suites));
    s.push_back(def("conj.interpolation", 1e-9, false, conj_suites));
    s.push_back(def("conj.periodic", 1e-12, false, conj_suites));
    s.push_back(def("conj.zeta", 1e-12, false, conj_suites));
    s.push_back(def("conj.zeta_printed", 1e-12, true, conj_suites));
    s.push_back(def("conj.bstar", 1e-7, false, conj_suites));
    s.push_back(def("conjecture.double_sum", 1e-12, true, conj_suites));
    return s;
  }();
  return suites;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw ConfigError("unknown suite '" + name + "'");
}

Report run_suites(const SuiteConfig& config, const std::vector<std::string>& names) {
  std::vector<const SuiteDef*> selected;
  if (names.empty()) {
    for (const auto& s : registry()) selected.push_back(&s);
  } else {
    for (const auto& n : names) {
      const SuiteDef* d = &find_suite(n);
      if (std::find(selected.begin(), selected.end(), d) == selected.end()) selected.push_back(d);
    }
  }
  for (const auto& [name, tol] : config.tolerance_overrides) {
    (void)tol;
    find_suite(name);
  }
  config.sum_control.validate();
  config.quad_control.validate();

  const auto grid = jittered_grid(config.grid, config.seed);

  Report report;
  report.seed = config.seed;
  report.suites.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      const SuiteDef& d = *selected[i];
      const auto it = config.tolerance_overrides.find(d.name);
      const SuiteContext ctx{config, it == config.tolerance_overrides.end() ? d.default_tol : it->second,
                             grid};
      const auto t0 = std::chrono::steady_clock::now();
      CheckSuite suite;
      suite.name = d.name;
      suite.report_only = d.report_only;
      try {
        suite.records = d.run(ctx);
      } catch (const std::exception& e) {
        CheckRecord r;
        r.anchor = "suite setup";
        r.error = e.what();
        finalize(r);
        suite.records = {r};
      }
      normalize(suite);
      if (config.timing)
        suite.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      report.suites[i] = std::move(suite);
    }
  };
  unsigned n = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                  : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(selected.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Json cfg;
  cfg["seed"] = config.seed;
  cfg["grid"] = {{"re_min", config.grid.re_min}, {"re_max", config.grid.re_max},
                 {"im_min", config.grid.im_min}, {"im_max", config.grid.im_max},
                 {"step", config.grid.step}};
  cfg["grid_points"] = grid.size();
  Json tol = Json::object();
  for (const auto& [k, v] : config.tolerance_overrides) tol[k] = v;
  cfg["tolerance_overrides"] = tol;
  report.config = cfg;
  return report;
}

}  // namespace eiskern::verify
