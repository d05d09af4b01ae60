#include "mackey/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mackey {

std::vector<double> dyadic_t_list(int kmax) {
  std::vector<double> ts;
  for (int k = 0; k <= kmax; ++k) ts.push_back(std::ldexp(1.0, -k));
  return ts;
}

double fit_order(const std::vector<ConvergenceRow>& rows) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (rows.size() < 2) return nan;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    if (!(r.error > 0.0) || !(r.t > 0.0)) return nan;
    const double x = std::log(r.t);
    const double y = std::log(r.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(rows.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return nan;
  return (n * sxy - sx * sy) / denom;
}

bool strictly_decreasing(const std::vector<ConvergenceRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].error < rows[i - 1].error)) return false;
  }
  return true;
}

ConvergenceReport make_report(std::string label, std::vector<ConvergenceRow> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ConvergenceRow& a, const ConvergenceRow& b) { return a.t > b.t; });
  ConvergenceReport r;
  r.label = std::move(label);
  r.fitted_order = fit_order(rows);
  r.rows = std::move(rows);
  return r;
}

}  // namespace mackey
