#include <algorithm>
#include <cmath>

#include "prabhakar/distributions.hpp"

namespace prabhakar {

CmReport cm_check(const RealFunction& f, const std::vector<double>& grid, int max_order) {
  if (max_order < 0 || max_order > 6) throw ParameterError("max_order must lie in [0, 6]");
  if (grid.size() < static_cast<std::size_t>(max_order) + 1 || grid.size() < 2) {
    throw ParameterError("lambda grid needs more points than max_order");
  }
  const double h = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
  if (!(h > 0.0)) throw ParameterError("lambda grid must be ascending");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::fabs(grid[i] - grid[i - 1] - h) > 1e-9 * h) throw ParameterError("lambda grid must be uniform");
  }

  std::vector<double> diff(grid.size());
  std::transform(grid.begin(), grid.end(), diff.begin(), [&](double x) { return f(x); });
  double max_abs = 0.0;
  for (double v : diff) max_abs = std::max(max_abs, std::fabs(v));

  CmReport report;
  report.worst_ratio.assign(max_order + 1, 0.0);
  for (int k = 0; k <= max_order; ++k) {
    if (k > 0) {
      // in place: diff[i] <- (diff[i+1] - diff[i]) / h, shortening by one
      for (std::size_t i = 0; i + k < grid.size(); ++i) diff[i] = (diff[i + 1] - diff[i]) / h;
    }
    const double tol = 1e-8 * std::pow(2.0 / h, k) * max_abs;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i + k < grid.size(); ++i) {
      const double v = sign * diff[i];
      if (tol > 0.0) report.worst_ratio[k] = std::min(report.worst_ratio[k], v / tol);
      if (v < -tol && !report.first_violation) {
        report.passed = false;
        report.first_violation = CmViolation{k, i, grid[i], v, tol};
      }
    }
    report.orders_checked = k;
    if (!report.passed) break;
  }
  return report;
}

}  // namespace prabhakar
