#include <cmath>
#include <ostream>

#include <json.hpp>

#include "lab.hpp"

namespace mackey::lab {
namespace {

nlohmann::ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

}  // namespace

std::string report_json(const std::string& suite, std::uint64_t seed, const std::vector<CheckResult>& results) {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["seed"] = seed;
  bool all_pass = true;
  auto& reports = doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["statement_id"] = r.statement_id;
    j["check"] = r.check;
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) rows.push_back({{"t", number(row.t)}, {"error", number(row.error)}});
    j["fitted_order"] = r.fitted_order ? number(*r.fitted_order) : nullptr;
    j["tolerance"] = number(r.tolerance);
    j["policy"] = r.policy;
    j["pass"] = r.pass;
    reports.push_back(std::move(j));
    all_pass = all_pass && r.pass;
  }
  doc["pass"] = all_pass;
  return doc.dump(2) + "\n";
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> results;
  try {
    results = run_suite(opt.suite, opt.seed);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  bool all_pass = true;
  for (const auto& r : results) {
    if (!in_registry(r.statement_id)) {
      err << "internal error: unregistered statement id " << r.statement_id << "\n";
      return kExitFailed;
    }
    out << (r.pass ? "PASS " : "FAIL ") << r.statement_id << ": " << r.check;
    if (r.fitted_order) out << " (order " << tag(*r.fitted_order) << ")";
    out << "\n";
    all_pass = all_pass && r.pass;
  }
  const auto path = opt.out / ("report_" + opt.suite + ".json");
  write_text(path, report_json(opt.suite, opt.seed, results));
  out << "report: " << path.string() << "\n";
  return all_pass ? kExitOk : kExitFailed;
}

}  // namespace mackey::lab
