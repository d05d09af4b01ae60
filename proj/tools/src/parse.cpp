#include <charconv>
#include <cmath>
#include <sstream>

#include "lab.hpp"

namespace mackey::lab {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_plain(const std::string& s) {
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) throw UsageError("not a number: '" + s + "'");
  return v;
}

}  // namespace

double parse_number(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw UsageError("empty number");
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_plain(s);
  const double den = parse_plain(trim(s.substr(slash + 1)));
  if (den == 0.0) throw UsageError("zero denominator in '" + s + "'");
  return parse_plain(trim(s.substr(0, slash))) / den;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

Matrix parse_square_matrix(const std::string& s) {
  const std::vector<double> v = parse_list(s);
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n * n != static_cast<Eigen::Index>(v.size())) {
    throw UsageError("matrix entry count " + std::to_string(v.size()) + " is not a square");
  }
  if (n < kMinDim || n > kMaxDim) throw UsageError("matrix dimension must lie in [2, 8]");
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = v[static_cast<std::size_t>(i * n + j)];
  return m;
}

}  // namespace mackey::lab
