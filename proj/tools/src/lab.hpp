#pragma once
// Front-end commands of mackey-lab. Each command returns a process exit code:
// 0 success, 1 failed verification, 2 usage error, 3 invalid input.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mackey/convergence.hpp"
#include "mackey/lie_core.hpp"

namespace mackey::lab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalid = 3;

/// Malformed command-line values.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// parse.cpp
/// A decimal number or a fraction a/b.
double parse_number(const std::string& s);
std::vector<double> parse_list(const std::string& s);
/// Row-major comma-separated entries of a square matrix.
Matrix parse_square_matrix(const std::string& s);

// output.cpp
/// 17 significant digits, the shortest form that round-trips.
std::string format_double(double x);
void write_text(const std::filesystem::path& path, const std::string& text);
/// Heatmap of a field on a square grid, values given x-major.
std::string heatmap_svg(const std::vector<double>& values, int side, double lo, double hi);
/// File-name friendly rendering of a parameter: 0.5 -> "0.5", 1/8 -> "0.125".
std::string tag(double x);

// registry.cpp
const std::vector<std::string>& statement_registry();
bool in_registry(const std::string& id);
/// Statement identifier for a check key such as "group-law".
const std::string& statement_for(const std::string& key);

struct CheckResult {
  std::string statement_id;
  std::string check;       // short description of what was measured
  std::vector<ConvergenceRow> rows;
  std::optional<double> fitted_order;
  double tolerance = 0.0;
  std::string policy;      // "residual", "order in [a, b]", ...
  bool pass = false;
};

// checks.cpp
/// Checks of one suite: deformation, principal, discrete or findim.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);
const std::vector<std::string>& suite_names();

// verify.cpp
std::string report_json(const std::string& suite, std::uint64_t seed, const std::vector<CheckResult>& results);

struct DecomposeOptions {
  std::string matrix;
  bool json = false;
};
int cmd_decompose(const DecomposeOptions& opt, std::ostream& out, std::ostream& err);

struct WavesOptions {
  double lambda = 30.0;
  std::vector<double> t_list{1.0};
  double box_min = -1.5;
  double box_max = 1.5;
  double step = 1.0 / 32.0;
  double b = 0.0;
  bool svg = false;
  std::filesystem::path out = ".";
};
int cmd_waves(const WavesOptions& opt, std::ostream& out, std::ostream& err);

struct OrbitsOptions {
  std::vector<double> t_list{1.0, 0.5, 0.25};
  int samples = 24;  // per direction
  std::filesystem::path out = ".";
};
int cmd_orbits(const OrbitsOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::filesystem::path out = ".";
};
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace mackey::lab
