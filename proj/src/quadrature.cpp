#include "rscp/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace rscp::quad {
namespace {

Rule build_rule(int n) {
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 0 ? 1.0 : (n == 1 ? x : p1);
      const double pnm1 = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pnm1) / (x * x - 1);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1, p1 = x;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    const double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0;
  return rule;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Rule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Rule>(build_rule(n));
  return *slot;
}

namespace {

double panel(const std::function<double(double)>& f, const Rule& rule, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 int nodes_per_panel, int panels) {
  const Rule& rule = gauss_legendre(nodes_per_panel);
  const double h = (b - a) / panels;
  double sum = 0;
  for (int p = 0; p < panels; ++p) sum += panel(f, rule, a + p * h, p + 1 == panels ? b : a + (p + 1) * h);
  return sum;
}

double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        int nodes_per_panel, int depth, bool grade_left, bool grade_right) {
  const Rule& rule = gauss_legendre(nodes_per_panel);
  // Breakpoints of [a, b]: geometric toward each graded end, one plain panel otherwise.
  std::vector<double> cuts;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  cuts.push_back(a);
  if (grade_left)
    for (int j = depth; j >= 1; --j) cuts.push_back(a + half * std::ldexp(1.0, -j));
  cuts.push_back(mid);
  if (grade_right)
    for (int j = 1; j <= depth; ++j) cuts.push_back(b - half * std::ldexp(1.0, -j));
  cuts.push_back(b);
  double sum = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) sum += panel(f, rule, cuts[i], cuts[i + 1]);
  return sum;
}

Result integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          bool grade_left, bool grade_right, double tol, int node_cap) {
  constexpr int depth = 40;
  Result res;
  int n = 64;
  double prev = integrate_graded(f, a, b, n, depth, grade_left, grade_right);
  while (2 * n <= node_cap) {
    n *= 2;
    const double cur = integrate_graded(f, a, b, n, depth, grade_left, grade_right);
    res.value = cur;
    res.change = std::abs(cur - prev);
    res.nodes = n;
    if (res.change < tol * std::max(1.0, std::abs(cur))) {
      res.converged = true;
      return res;
    }
    prev = cur;
  }
  return res;
}

}  // namespace rscp::quad
