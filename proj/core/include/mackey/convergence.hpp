#pragma once

#include <string>
#include <vector>

namespace mackey {

struct ConvergenceRow {
  double t = 0.0;
  double error = 0.0;
};

/// Errors of a family indexed by t, sorted by decreasing t, with the
/// least-squares slope of log(error) against log(t).
struct ConvergenceReport {
  std::string label;
  std::vector<ConvergenceRow> rows;
  double fitted_order = 0.0;  // NaN when some error is exactly zero
  double tolerance = 0.0;
  bool pass = false;
};

/// The t-grid {2^{-k} : k = 0..kmax}.
std::vector<double> dyadic_t_list(int kmax = 6);

/// Slope of the least-squares line through (log t, log error). NaN if fewer
/// than two rows or some error is not positive.
double fit_order(const std::vector<ConvergenceRow>& rows);

bool strictly_decreasing(const std::vector<ConvergenceRow>& rows);

/// Sorts rows by decreasing t and fills in fitted_order.
ConvergenceReport make_report(std::string label, std::vector<ConvergenceRow> rows);

}  // namespace mackey
