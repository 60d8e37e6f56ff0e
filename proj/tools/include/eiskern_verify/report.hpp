#pragma once

#include <eiskern/types.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace eiskern::verify {

using Json = nlohmann::ordered_json;

// How a record decides pass/fail.
enum class Policy {
  abs,     // abs_disc <= tol
  rel,     // rel_disc <= tol
  either,  // abs_disc <= tol or rel_disc <= tol
  greater, // Re lhs - Re rhs > tol  (strict inequality with margin)
  less,    // Re rhs - Re lhs > tol
};

const char* policy_name(Policy p);

struct CheckRecord {
  Json inputs = Json::object();
  Complex lhs{};
  Complex rhs{};
  double abs_disc = 0.0;
  double rel_disc = 0.0;
  double tol = 0.0;
  Policy policy = Policy::abs;
  bool pass = false;
  std::string anchor;
  std::string error;  // exception text when evaluation failed
};

// Fills abs_disc, rel_disc and pass from lhs, rhs, tol and policy.
void finalize(CheckRecord& rec);

struct CheckSuite {
  std::string name;
  bool report_only = false;
  std::vector<CheckRecord> records;
  int pass_count = 0;
  int fail_count = 0;
  double wall_time_ms = 0.0;
};

// Sorts records by their serialized inputs and recounts pass/fail.
void normalize(CheckSuite& suite);

Json to_json(const CheckRecord& rec);
Json to_json(const CheckSuite& suite);

struct Report {
  std::vector<CheckSuite> suites;
  std::uint64_t seed = 0;
  Json config = Json::object();

  // True iff every record of every non-report-only suite passes.
  bool ok() const;
};

Json to_json(const Report& report);
// Pretty-printed, newline-terminated.
std::string serialize(const Report& report);

}  // namespace eiskern::verify
