#pragma once

#include <eiskern/types.hpp>

#include <string>
#include <vector>

namespace eiskern::verify {

// 17 significant digits, '.' decimal point, independent of the C locale.
std::string format_real(double x);

// CSV documents (header row first, newline-terminated).
std::string table_csv(const std::string& name);  // moments | conj_bernoulli | zeta_roundtrip | bstar
std::string plotdata_csv(const std::string& figure);  // fig1 | fig2
const std::vector<std::string>& table_names();
const std::vector<std::string>& figure_names();

// Parses 1, -2.5, 3i, -i, 1+2i, 0.5-1e-3i.
Complex parse_complex(const std::string& text);

struct EvalRequest {
  std::string fn;
  std::vector<std::string> args;
  std::string route;  // empty = default
  SumControl sum_control;
  QuadControl quad_control;
};

struct EvalResult {
  std::string fn;
  Evaluation eval;
  std::string route;
};

// ConfigError on unknown names, wrong arity or domain violations.
EvalResult evaluate(const EvalRequest& req);
const std::vector<std::string>& eval_names();
std::string format_eval_human(const EvalResult& r);
std::string format_eval_json(const EvalResult& r);

}  // namespace eiskern::verify
