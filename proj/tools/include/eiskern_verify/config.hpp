#pragma once

#include <eiskern/types.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace eiskern::verify {

// Raised for bad flags, unknown names and malformed values. Maps to exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Grid {
  double re_min = 0.1;
  double re_max = 0.9;
  double im_min = -2.0;
  double im_max = 2.0;
  double step = 0.4;
};

struct SuiteConfig {
  std::map<std::string, double> tolerance_overrides;
  Grid grid;
  SumControl sum_control;
  QuadControl quad_control;
  std::uint64_t seed = 20240601;
  bool timing = false;
  int threads = 0;  // 0 = hardware concurrency
};

Grid parse_grid(const std::string& text);
// NAME=VAL
std::pair<std::string, double> parse_tolerance(const std::string& text);
std::vector<std::string> split_list(const std::string& text);
// Reads EISKERN_THREADS; unset or empty gives 0.
int threads_from_env();

}  // namespace eiskern::verify
