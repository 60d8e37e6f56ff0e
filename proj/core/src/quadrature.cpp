#include <eiskern/quadrature.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace eiskern::quadrature {

namespace {

constexpr int max_nodes = 64;

struct Rule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

Rule make_rule(int n) {
  Rule r;
  r.x.resize(static_cast<std::size_t>(n));
  r.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.x[static_cast<std::size_t>(i)] = x;
    r.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

const Rule& rule(int n) {
  static const std::array<Rule, max_nodes + 1> rules = [] {
    std::array<Rule, max_nodes + 1> out{};
    for (int k = 5; k <= max_nodes; ++k) out[static_cast<std::size_t>(k)] = make_rule(k);
    return out;
  }();
  return rules[static_cast<std::size_t>(n)];
}

struct PanelSum {
  Complex value;
  double l1;
};

PanelSum gauss(const Integrand& f, double a, double b, const Rule& r) {
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  Complex acc{0.0, 0.0};
  double l1 = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    const Complex v = f(c + h * r.x[i]);
    acc += r.w[i] * v;
    l1 += r.w[i] * std::abs(v);
  }
  return {h * acc, std::abs(h) * l1};
}

struct Panel {
  double a, b;
  Complex value;
  double err;
  double l1;
  int depth;
  Complex left, right;  // half-panel values, reused when this panel is split
  bool operator<(const Panel& o) const { return err < o.err; }
};

}  // namespace

Result integrate(const Integrand& f, double a, double b, const QuadControl& ctl) {
  ctl.validate();
  if (ctl.panel_nodes > max_nodes) throw DomainError("QuadControl: panel_nodes must be <= 64");
  const Rule& r = rule(ctl.panel_nodes);
  Result out;
  std::priority_queue<Panel> heap;
  auto push = [&](double lo, double hi, int depth, const Complex* whole_known) {
    const double mid = 0.5 * (lo + hi);
    Complex whole;
    if (whole_known) {
      whole = *whole_known;
    } else {
      whole = gauss(f, lo, hi, r).value;
      out.evaluations += ctl.panel_nodes;
    }
    const PanelSum left = gauss(f, lo, mid, r);
    const PanelSum right = gauss(f, mid, hi, r);
    out.evaluations += 2 * ctl.panel_nodes;
    const Complex halves = left.value + right.value;
    heap.push(Panel{lo, hi, halves, std::abs(halves - whole), left.l1 + right.l1, depth,
                    left.value, right.value});
  };
  push(a, b, 0, nullptr);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0;; ++iter) {
    Complex total{0.0, 0.0};
    double err = 0.0, l1 = 0.0;
    {
      auto copy = heap;
      while (!copy.empty()) {
        total += copy.top().value;
        err += copy.top().err;
        l1 += copy.top().l1;
        copy.pop();
      }
    }
    const double tol = std::max({ctl.abs_tol, ctl.rel_tol * std::abs(total), 64.0 * eps * l1});
    if (err <= tol) {
      out.value = total;
      out.err_estimate = err;
      return out;
    }
    Panel worst = heap.top();
    if (worst.depth >= ctl.max_depth || iter > 20000) {
      throw QuadratureFailure("quadrature: tolerance not met within max_depth (err " +
                              std::to_string(err) + ", tol " + std::to_string(tol) + ")");
    }
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    push(worst.a, mid, worst.depth + 1, &worst.left);
    push(mid, worst.b, worst.depth + 1, &worst.right);
  }
}

Result integrate_to_inf(const Integrand& f, double a, const QuadControl& ctl, double first_width) {
  Result out;
  double lo = a;
  double width = first_width > 0 ? first_width : 1.0;
  int quiet = 0;
  for (int panel = 0; panel < 200; ++panel) {
    const double hi = lo + width;
    const Result part = integrate(f, lo, hi, ctl);
    out.value += part.value;
    out.err_estimate += part.err_estimate;
    out.evaluations += part.evaluations;
    const double contrib = std::abs(part.value) + part.err_estimate;
    const double tol = std::max(ctl.abs_tol, ctl.rel_tol * std::abs(out.value));
    quiet = (contrib <= 0.01 * tol) ? quiet + 1 : 0;
    if (quiet >= 2) return out;
    lo = hi;
    if (panel >= 1) width *= 2.0;
  }
  throw QuadratureFailure("quadrature: semi-infinite tail did not decay");
}

}  // namespace eiskern::quadrature
