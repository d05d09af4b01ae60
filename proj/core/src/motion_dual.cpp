#include "mackey/motion_dual.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "mackey/errors.hpp"
#include "mackey/sl2.hpp"

namespace mackey {
namespace {

constexpr double kCoincidenceTol = 1e-12;

std::vector<double> chi_entries(const AlgebraElement& chi) {
  if (!chi.in_a(1e-12 * std::max(1.0, chi.matrix().norm()))) {
    throw NotDiagonal("chi must be a diagonal matrix");
  }
  const Vector d = chi.matrix().diagonal();
  return {d.data(), d.data() + d.size()};
}

bool is_zero_chi(const std::vector<double>& e) {
  return std::all_of(e.begin(), e.end(), [](double x) { return std::abs(x) <= kCoincidenceTol; });
}

int grid_shift(const Matrix& k, int n_grid) {
  const double pos = sl2::angle_of(k) * n_grid / (2.0 * std::numbers::pi);
  const double rounded = std::round(pos);
  if (std::abs(pos - rounded) > 1e-9) {
    throw OffGridRotation("rotation angle is not a multiple of 2 pi / N");
  }
  const int m = static_cast<int>(rounded) % n_grid;
  return m < 0 ? m + n_grid : m;
}

Parity datum_parity(const MackeyDatum& d) {
  if (const auto* p = std::get_if<Parity>(&d.mu)) return *p;
  throw InvalidArgument("the motion group operator needs a regular chi with a parity label");
}

// Phases exp(i B(chi, Ad(u_j^{-1}) v)) on the grid.
std::vector<Complex> phases(const DeformedElement& g0, const MackeyDatum& d, int n_grid) {
  std::vector<Complex> out(static_cast<std::size_t>(n_grid));
  for (int j = 0; j < n_grid; ++j) {
    const Matrix u = sl2::rotation(2.0 * std::numbers::pi * j / n_grid);
    const double arg = killing_form(d.chi.matrix(), adjoint(u.transpose(), g0.v.matrix()));
    out[static_cast<std::size_t>(j)] = std::polar(1.0, arg);
  }
  return out;
}

void check_pi0_inputs(const DeformedElement& g0, const MackeyDatum& d) {
  if (g0.k.rows() != 2 || d.chi.dim() != 2) throw DimensionUnsupported("pi0 is realized for SL(2)");
  if (g0.t != 0.0) throw InvalidArgument("pi0 takes an element of G_0");
  validate_datum(d);
  if (is_zero_chi(chi_entries(d.chi))) throw InvalidArgument("pi0 needs a regular chi");
}

const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

}  // namespace

void validate_datum(const MackeyDatum& d) {
  const std::vector<double> e = chi_entries(d.chi);
  const bool zero = is_zero_chi(e);
  if (d.chi.dim() == 2) {
    if (!zero && !std::holds_alternative<Parity>(d.mu)) {
      throw InvalidArgument("regular chi needs a parity label");
    }
    if (zero && !std::holds_alternative<int>(d.mu)) {
      throw InvalidArgument("chi = 0 needs an integer K-character label");
    }
  } else if (!std::holds_alternative<std::string>(d.mu)) {
    throw InvalidArgument("labels for n > 2 are strings");
  }
}

MackeyDatum normalize_datum(const MackeyDatum& d) {
  validate_datum(d);
  std::vector<double> e = chi_entries(d.chi);
  std::sort(e.begin(), e.end(), std::greater<>());
  Matrix m = Matrix::Zero(d.chi.dim(), d.chi.dim());
  for (std::size_t i = 0; i < e.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = e[i];
  return {AlgebraElement(std::move(m)), d.mu};
}

BlockStructure stabilizer_structure(const AlgebraElement& chi) {
  std::vector<double> e = chi_entries(chi);
  std::sort(e.begin(), e.end(), std::greater<>());
  BlockStructure b;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0 && e[i - 1] - e[i] <= kCoincidenceTol) {
      ++b.partition.back();
    } else {
      b.partition.push_back(1);
    }
  }
  const int n = chi.dim();
  b.dim_a = static_cast<int>(b.partition.size()) - 1;
  for (std::size_t i = 0; i < b.partition.size(); ++i) {
    for (std::size_t j = i + 1; j < b.partition.size(); ++j) b.dim_n += b.partition[i] * b.partition[j];
  }
  b.dim_m = n * n - 1 - b.dim_a - 2 * b.dim_n;
  return b;
}

void validate_circle_function(const SampledCircleFunction& f) {
  const std::size_t n = f.size();
  if (n == 0 || n % 2 != 0) throw InvalidArgument("circle grids need an even number of points");
  if (!f.parity) return;
  const double sign = *f.parity == Parity::even ? 1.0 : -1.0;
  for (std::size_t j = 0; j < n / 2; ++j) {
    const Complex a = f.values[j];
    const Complex b = f.values[j + n / 2];
    if (std::abs(b - sign * a) > 1e-10 * std::max(1.0, std::abs(a))) {
      throw InvalidArgument(std::string("samples do not have ") + parity_name(*f.parity) + " parity");
    }
  }
}

SampledCircleFunction pi0_operator(const DeformedElement& g0, const MackeyDatum& d,
                                   const SampledCircleFunction& f) {
  check_pi0_inputs(g0, d);
  const Parity parity = datum_parity(d);
  SampledCircleFunction in = f;
  if (!in.parity) in.parity = parity;
  if (*in.parity != parity) throw InvalidArgument("function parity does not match the datum");
  validate_circle_function(in);

  const int n = static_cast<int>(f.size());
  const int m = grid_shift(g0.k, n);
  const std::vector<Complex> ph = phases(g0, d, n);
  SampledCircleFunction out{std::vector<Complex>(f.size()), parity};
  for (int j = 0; j < n; ++j) {
    const int src = ((j - m) % n + n) % n;
    out.values[static_cast<std::size_t>(j)] = ph[static_cast<std::size_t>(j)] * f.values[static_cast<std::size_t>(src)];
  }
  return out;
}

CMatrix pi0_reduced_matrix(const DeformedElement& g0, const MackeyDatum& d, int n_grid) {
  check_pi0_inputs(g0, d);
  if (n_grid <= 0 || n_grid % 2 != 0) throw InvalidArgument("grid size must be even");
  const double sign = datum_parity(d) == Parity::even ? 1.0 : -1.0;
  const int half = n_grid / 2;
  const int m = grid_shift(g0.k, n_grid);
  const std::vector<Complex> ph = phases(g0, d, n_grid);
  CMatrix x = CMatrix::Zero(half, half);
  for (int j = 0; j < half; ++j) {
    int src = ((j - m) % n_grid + n_grid) % n_grid;
    double s = 1.0;
    if (src >= half) {
      src -= half;
      s = sign;
    }
    x(j, src) += s * ph[static_cast<std::size_t>(j)];
  }
  return x;
}

CommutantReport commutant_test(const MackeyDatum& d, const std::vector<DeformedElement>& elements,
                               int n_grid, double tol) {
  const int half = n_grid / 2;
  const Eigen::Index dim = static_cast<Eigen::Index>(half) * half;
  CMatrix gram = CMatrix::Zero(dim, dim);
  auto idx = [half](int row, int col) { return static_cast<Eigen::Index>(col) * half + row; };

  // Row (i, j) of the linear map A -> X A - A X has few nonzeros when X is a
  // weighted permutation; accumulate its normal equations directly.
  std::vector<std::pair<Eigen::Index, Complex>> row;
  for (const DeformedElement& g : elements) {
    const CMatrix x = pi0_reduced_matrix(g, d, n_grid);
    for (int i = 0; i < half; ++i) {
      for (int j = 0; j < half; ++j) {
        row.clear();
        for (int l = 0; l < half; ++l) {
          if (x(i, l) != Complex(0.0)) row.emplace_back(idx(l, j), x(i, l));
          if (x(l, j) != Complex(0.0)) row.emplace_back(idx(i, l), -x(l, j));
        }
        for (const auto& [a, ca] : row) {
          for (const auto& [b, cb] : row) gram(a, b) += std::conj(ca) * cb;
        }
      }
    }
  }
  gram /= static_cast<double>(std::max<std::size_t>(1, elements.size()));

  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
  const Vector& ev = es.eigenvalues();
  CommutantReport r;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= tol) ++r.null_dimension;
  }
  r.smallest = ev(0);
  r.second_smallest = ev.size() > 1 ? ev(1) : 0.0;
  const CMatrix a = Eigen::Map<const CMatrix>(es.eigenvectors().col(0).data(), half, half);
  const Complex mean = a.trace() / static_cast<double>(half);
  r.scalar_deviation = (a - mean * CMatrix::Identity(half, half)).norm() / a.norm();
  return r;
}

std::string MackeyRecord::to_json() const {
  nlohmann::ordered_json j;
  std::vector<double> chi;
  for (Eigen::Index i = 0; i < datum.chi.dim(); ++i) chi.push_back(datum.chi.matrix()(i, i));
  nlohmann::ordered_json mu;
  if (const auto* p = std::get_if<Parity>(&datum.mu)) {
    mu = parity_name(*p);
  } else if (const auto* m = std::get_if<int>(&datum.mu)) {
    mu = *m;
  } else {
    mu = std::get<std::string>(datum.mu);
  }
  j["datum"] = {{"chi", chi}, {"mu", mu}};
  j["partition"] = blocks.partition;
  j["dims"] = {{"m", blocks.dim_m}, {"a", blocks.dim_a}, {"n", blocks.dim_n}};
  j["series_label"] = series_label;
  j["induction"] = induction_label;
  j["label_transported_verbatim"] = label_transported_verbatim;
  return j.dump();
}

MackeyRecord mackey_bijection_record(const MackeyDatum& d) {
  MackeyRecord r;
  r.datum = normalize_datum(d);
  r.blocks = stabilizer_structure(r.datum.chi);
  r.induction_label = "Ind from M_chi A_chi N_chi of V(mu) (x) e^{i chi}";
  const int n = r.datum.chi.dim();
  if (n == 2) {
    const double value = sl2::functional_value(r.datum.chi);
    if (const auto* p = std::get_if<Parity>(&r.datum.mu)) {
      std::ostringstream os;
      os << (*p == Parity::even ? "spherical" : "nonspherical")
         << " unitary principal series, chi(h) = " << value;
      r.series_label = os.str();
    } else {
      const int m = std::get<int>(r.datum.mu);
      std::ostringstream os;
      if (std::abs(m) >= 2) {
        os << "discrete series";
      } else if (std::abs(m) == 1) {
        os << "limit of discrete series";
      } else {
        os << "spherical principal series at chi = 0";
      }
      os << " with real infinitesimal character and minimal K-type " << m;
      r.series_label = os.str();
    }
  } else {
    r.series_label = "representation induced from the cuspidal parabolic of the block structure";
    r.label_transported_verbatim = true;
  }
  return r;
}

}  // namespace mackey
