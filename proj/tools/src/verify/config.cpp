#include <eiskern_verify/config.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace eiskern::verify {

namespace {

double parse_real(const std::string& s, const std::string& what) {
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double v = 0.0;
  if (!(in >> v) || !in.eof() || !std::isfinite(v))
    throw ConfigError(what + ": '" + s + "' is not a finite real number");
  return v;
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Grid parse_grid(const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() != 5)
    throw ConfigError("--grid expects re_min,re_max,im_min,im_max,step");
  Grid g;
  g.re_min = parse_real(parts[0], "--grid re_min");
  g.re_max = parse_real(parts[1], "--grid re_max");
  g.im_min = parse_real(parts[2], "--grid im_min");
  g.im_max = parse_real(parts[3], "--grid im_max");
  g.step = parse_real(parts[4], "--grid step");
  if (!(g.step > 0.0)) throw ConfigError("--grid: step must be > 0");
  if (g.re_min > g.re_max || g.im_min > g.im_max)
    throw ConfigError("--grid: min must not exceed max");
  const double n = ((g.re_max - g.re_min) / g.step + 1.0) * ((g.im_max - g.im_min) / g.step + 1.0);
  if (n > 1e5) throw ConfigError("--grid: more than 100000 points");
  return g;
}

std::pair<std::string, double> parse_tolerance(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("--tol expects NAME=VAL, got '" + text + "'");
  const double v = parse_real(text.substr(eq + 1), "--tol " + text.substr(0, eq));
  if (v < 0.0) throw ConfigError("--tol: tolerance must be >= 0");
  return {text.substr(0, eq), v};
}

int threads_from_env() {
  const char* s = std::getenv("EISKERN_THREADS");
  if (s == nullptr || *s == '\0') return 0;
  const double v = parse_real(s, "EISKERN_THREADS");
  if (v < 0 || v != std::floor(v) || v > 1024)
    throw ConfigError("EISKERN_THREADS must be an integer in [0, 1024]");
  return static_cast<int>(v);
}

}  // namespace eiskern::verify
