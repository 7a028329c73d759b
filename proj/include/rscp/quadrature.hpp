#pragma once

#include <functional>
#include <span>
#include <vector>

namespace rscp::quad {

struct Rule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule. Cached per n; safe to call concurrently.
const Rule& gauss_legendre(int n);

/// Fixed-rule integral of f over [a, b] with `panels` equal panels.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int nodes_per_panel, int panels = 1);

/// Integral over [a, b] on panels that shrink geometrically toward the ends
/// flagged in `grade_left` / `grade_right` (depth levels each), which keeps
/// Gauss-Legendre exponentially convergent for x^alpha-type end behaviour.
double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        int nodes_per_panel, int depth, bool grade_left, bool grade_right);

struct Result {
  double value = 0;
  double change = 0;      // |last - previous|
  int nodes = 0;          // nodes per panel at the accepted level
  bool converged = false;
};

/// Graded integration with nodes per panel doubling from 64 until two
/// successive results differ by less than `tol` (absolute, scaled by
/// max(1, |value|)) or the node cap is hit.
Result integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          bool grade_left, bool grade_right, double tol = 1e-12,
                          int node_cap = 1 << 14);

}  // namespace rscp::quad
