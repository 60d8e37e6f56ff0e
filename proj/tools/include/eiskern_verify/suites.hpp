#pragma once

#include <eiskern_verify/config.hpp>
#include <eiskern_verify/report.hpp>

#include <functional>
#include <string>
#include <vector>

namespace eiskern::verify {

struct SuiteContext {
  const SuiteConfig& config;
  double tol;                 // base tolerance after overrides
  std::vector<Complex> grid;  // jittered grid for the eps / h families
};

struct SuiteDef {
  std::string name;
  double default_tol;
  bool report_only;
  std::function<std::vector<CheckRecord>(const SuiteContext&)> run;
};

const std::vector<SuiteDef>& registry();
const SuiteDef& find_suite(const std::string& name);  // ConfigError if unknown

// Runs the named suites (all when empty). Suites execute on up to
// config.threads workers; output order follows the request order.
Report run_suites(const SuiteConfig& config, const std::vector<std::string>& names);

// Helper used by suite implementations: evaluates `f` and turns exceptions into
// failing records.
CheckRecord make_record(Json inputs, const std::function<std::pair<Complex, Complex>()>& f,
                        double tol, Policy policy, std::string anchor);

std::vector<CheckRecord> numkern_suites(const std::string& name, const SuiteContext& ctx);
std::vector<CheckRecord> eisenstein_suites(const std::string& name, const SuiteContext& ctx);
std::vector<CheckRecord> hilbert_suites(const std::string& name, const SuiteContext& ctx);
std::vector<CheckRecord> omega_suites(const std::string& name, const SuiteContext& ctx);
std::vector<CheckRecord> conj_suites(const std::string& name, const SuiteContext& ctx);

Json complex_json(Complex z);

}  // namespace eiskern::verify
