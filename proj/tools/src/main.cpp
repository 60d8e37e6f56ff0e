#include <eiskern_verify/config.hpp>
#include <eiskern_verify/outputs.hpp>
#include <eiskern_verify/report.hpp>
#include <eiskern_verify/suites.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace ev = eiskern::verify;

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ev::ConfigError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw ev::ConfigError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eiskern: Eisenstein-type series, Omega function and conjugate Bernoulli verification"};
  app.require_subcommand(1);

  std::string out_path;
  bool as_json = false;

  auto* verify = app.add_subcommand("verify", "run identity, bound and conjecture suites");
  std::vector<std::string> tol_args;
  std::string grid_arg, suites_arg;
  std::uint64_t seed = ev::SuiteConfig{}.seed;
  bool timing = false, list = false;
  verify->add_option("--out", out_path, "write the JSON report here instead of stdout");
  verify->add_flag("--json", as_json, "accepted for symmetry; the report is always JSON");
  verify->add_option("--tol", tol_args, "NAME=VAL tolerance override (repeatable)");
  verify->add_option("--grid", grid_arg, "re_min,re_max,im_min,im_max,step");
  verify->add_option("--seed", seed, "seed for grid jitter and random points");
  verify->add_option("--suites", suites_arg, "comma-separated suite names (default: all)");
  verify->add_flag("--timing", timing, "record wall_time_ms (makes output run-dependent)");
  verify->add_flag("--list", list, "list suite names and default tolerances");

  auto* eval = app.add_subcommand("eval", "evaluate a function at a point");
  std::string fn, route;
  std::vector<std::string> fn_args;
  eval->add_option("fn", fn, "function name")->required();
  eval->add_option("args", fn_args, "arguments (reals or complex literals like 1-2i)");
  eval->add_option("--route", route, "evaluation route");
  eval->add_flag("--json", as_json, "JSON output");
  eval->allow_extras(false);

  auto* table = app.add_subcommand("table", "emit a CSV table");
  std::string table_name;
  table->add_option("name", table_name, "moments | conj_bernoulli | zeta_roundtrip | bstar")->required();
  table->add_option("--out", out_path, "output path");

  auto* plot = app.add_subcommand("plotdata", "emit figure data as CSV");
  std::string figure;
  plot->add_option("figure", figure, "fig1 | fig2")->required();
  plot->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (list) {
        for (const auto& s : ev::registry())
          std::cout << s.name << " tol=" << s.default_tol
                    << (s.report_only ? " report-only" : "") << "\n";
        return 0;
      }
      ev::SuiteConfig cfg;
      cfg.seed = seed;
      cfg.timing = timing;
      cfg.threads = ev::threads_from_env();
      if (!grid_arg.empty()) cfg.grid = ev::parse_grid(grid_arg);
      for (const auto& t : tol_args) {
        const auto [name, val] = ev::parse_tolerance(t);
        cfg.tolerance_overrides[name] = val;
      }
      std::vector<std::string> names;
      if (!suites_arg.empty()) names = ev::split_list(suites_arg);
      for (const auto& n : names) ev::find_suite(n);
      const ev::Report report = ev::run_suites(cfg, names);
      emit(ev::serialize(report), out_path);
      if (!out_path.empty()) {
        for (const auto& s : report.suites)
          std::cout << (s.fail_count == 0 ? "PASS " : (s.report_only ? "NOTE " : "FAIL ")) << s.name << " "
                    << s.pass_count << "/" << s.records.size() << (s.report_only ? " (report-only)" : "")
                    << "\n";
      }
      return report.ok() ? 0 : 1;
    }
    if (eval->parsed()) {
      ev::EvalRequest req;
      req.fn = fn;
      req.args = fn_args;
      req.route = route;
      const auto r = ev::evaluate(req);
      std::cout << (as_json ? ev::format_eval_json(r) : ev::format_eval_human(r));
      return 0;
    }
    if (table->parsed()) {
      emit(ev::table_csv(table_name), out_path);
      return 0;
    }
    if (plot->parsed()) {
      emit(ev::plotdata_csv(figure), out_path);
      return 0;
    }
  } catch (const ev::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
