#include <ostream>

#include <json.hpp>

#include "lab.hpp"
#include "mackey/errors.hpp"

namespace mackey::lab {
namespace {

nlohmann::ordered_json rows_of(const Matrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

void print_matrix(std::ostream& out, const std::string& name, const Matrix& m) {
  out << name << ":\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << " ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << " " << format_double(m(i, j));
    out << "\n";
  }
}

}  // namespace

int cmd_decompose(const DecomposeOptions& opt, std::ostream& out, std::ostream& err) {
  Matrix g;
  try {
    g = parse_square_matrix(opt.matrix);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    check_unimodular(g);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  const IwasawaFactors iw = iwasawa_decompose(g);
  const CartanFactors ca = cartan_decompose(g);
  const double iw_res = (iw.k * mat_exp(iw.h) * iw.n_up - g).norm();
  const double ca_res = (mat_exp(ca.v) * ca.k - g).norm();

  if (opt.json) {
    nlohmann::ordered_json j;
    j["input"] = rows_of(g);
    j["iwasawa"] = {{"k", rows_of(iw.k)}, {"H", rows_of(iw.h.matrix())}, {"n", rows_of(iw.n_up)}, {"residual", iw_res}};
    j["cartan"] = {{"v", rows_of(ca.v.matrix())}, {"k", rows_of(ca.k)}, {"residual", ca_res}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "Iwasawa g = k exp(H) n\n";
  print_matrix(out, "k", iw.k);
  print_matrix(out, "H", iw.h.matrix());
  print_matrix(out, "n", iw.n_up);
  out << "residual: " << format_double(iw_res) << "\n\n";
  out << "Cartan g = exp(v) k\n";
  print_matrix(out, "v", ca.v.matrix());
  print_matrix(out, "k", ca.k);
  out << "residual: " << format_double(ca_res) << "\n";
  return kExitOk;
}

}  // namespace mackey::lab
