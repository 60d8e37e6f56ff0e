#include <eiskern_verify/report.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace eiskern::verify {

const char* policy_name(Policy p) {
  switch (p) {
    case Policy::abs: return "abs";
    case Policy::rel: return "rel";
    case Policy::either: return "abs_or_rel";
    case Policy::greater: return "lhs_gt_rhs";
    case Policy::less: return "lhs_lt_rhs";
  }
  return "?";
}

void finalize(CheckRecord& rec) {
  const double inf = std::numeric_limits<double>::infinity();
  rec.abs_disc = std::abs(rec.lhs - rec.rhs);
  const double scale = std::abs(rec.rhs);
  rec.rel_disc = scale > 0.0 ? rec.abs_disc / scale : (rec.abs_disc == 0.0 ? 0.0 : inf);
  if (!rec.error.empty() || !std::isfinite(rec.abs_disc)) {
    rec.pass = false;
    return;
  }
  switch (rec.policy) {
    case Policy::abs: rec.pass = rec.abs_disc <= rec.tol; break;
    case Policy::rel: rec.pass = rec.rel_disc <= rec.tol; break;
    case Policy::either: rec.pass = rec.abs_disc <= rec.tol || rec.rel_disc <= rec.tol; break;
    case Policy::greater: rec.pass = rec.lhs.real() - rec.rhs.real() > rec.tol; break;
    case Policy::less: rec.pass = rec.rhs.real() - rec.lhs.real() > rec.tol; break;
  }
}

void normalize(CheckSuite& suite) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(suite.records.size());
  for (std::size_t i = 0; i < suite.records.size(); ++i)
    keys.emplace_back(suite.records[i].inputs.dump(), i);
  std::stable_sort(keys.begin(), keys.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CheckRecord> sorted;
  sorted.reserve(keys.size());
  for (const auto& k : keys) sorted.push_back(std::move(suite.records[k.second]));
  suite.records = std::move(sorted);
  suite.pass_count = 0;
  suite.fail_count = 0;
  for (const auto& r : suite.records) (r.pass ? suite.pass_count : suite.fail_count)++;
}

namespace {

Json num(double x) {
  // JSON has no inf/nan; keep them visible as strings.
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

}  // namespace

Json to_json(const CheckRecord& rec) {
  Json j;
  j["inputs"] = rec.inputs;
  j["lhs"] = {{"re", num(rec.lhs.real())}, {"im", num(rec.lhs.imag())}};
  j["rhs"] = {{"re", num(rec.rhs.real())}, {"im", num(rec.rhs.imag())}};
  j["abs_disc"] = num(rec.abs_disc);
  j["rel_disc"] = num(rec.rel_disc);
  j["tol"] = num(rec.tol);
  j["policy"] = policy_name(rec.policy);
  j["pass"] = rec.pass;
  j["anchor"] = rec.anchor;
  j["error"] = rec.error;
  return j;
}

Json to_json(const CheckSuite& suite) {
  Json j;
  j["suite"] = suite.name;
  j["report_only"] = suite.report_only;
  Json recs = Json::array();
  for (const auto& r : suite.records) recs.push_back(to_json(r));
  j["records"] = std::move(recs);
  j["pass_count"] = suite.pass_count;
  j["fail_count"] = suite.fail_count;
  j["wall_time_ms"] = suite.wall_time_ms;
  return j;
}

bool Report::ok() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const CheckSuite& s) { return s.report_only || s.fail_count == 0; });
}

Json to_json(const Report& report) {
  Json j;
  j["config"] = report.config;
  Json arr = Json::array();
  int pass = 0, fail = 0, gating_fail = 0;
  for (const auto& s : report.suites) {
    arr.push_back(to_json(s));
    pass += s.pass_count;
    fail += s.fail_count;
    if (!s.report_only) gating_fail += s.fail_count;
  }
  j["suites"] = std::move(arr);
  j["pass_count"] = pass;
  j["fail_count"] = fail;
  j["gating_fail_count"] = gating_fail;
  j["ok"] = report.ok();
  return j;
}

std::string serialize(const Report& report) { return to_json(report).dump(2) + "\n"; }

}  // namespace eiskern::verify
