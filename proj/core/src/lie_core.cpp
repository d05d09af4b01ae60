#include "mackey/lie_core.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <string>

#include <Eigen/Eigenvalues>

#include "mackey/errors.hpp"

namespace mackey {

void check_square(const Matrix& g) {
  if (g.rows() != g.cols()) throw InvalidArgument("matrix is not square");
  if (g.rows() < kMinDim || g.rows() > kMaxDim) {
    throw InvalidArgument("matrix dimension " + std::to_string(g.rows()) + " outside [2, 8]");
  }
  if (!g.allFinite()) throw InvalidArgument("matrix has non-finite entries");
}

void check_unimodular(const Matrix& g) {
  check_square(g);
  const double det = g.determinant();
  if (std::abs(det - 1.0) > kUnimodularTol) {
    throw InvalidArgument("matrix is not unimodular (det = " + std::to_string(det) + ")");
  }
}

AlgebraElement::AlgebraElement(Matrix mat) : mat_(std::move(mat)) {
  check_square(mat_);
  const double tr = mat_.trace();
  const double scale = std::max(1.0, mat_.norm());
  if (std::abs(tr) > 1e-9 * scale) {
    throw InvalidArgument("algebra element has nonzero trace " + std::to_string(tr));
  }
  mat_.diagonal().array() -= tr / static_cast<double>(mat_.rows());
  k_ = 0.5 * (mat_ - mat_.transpose());
  p_ = mat_ - k_;
}

AlgebraElement AlgebraElement::zero(int n) { return AlgebraElement(Matrix::Zero(n, n)); }

bool AlgebraElement::in_k(double tol) const { return p_.norm() <= tol; }
bool AlgebraElement::in_p(double tol) const { return k_.norm() <= tol; }
bool AlgebraElement::in_a(double tol) const {
  Matrix off = mat_;
  off.diagonal().setZero();
  return off.norm() <= tol;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("algebra elements of different size");
  return AlgebraElement(mat_ + other.mat_);
}
AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("algebra elements of different size");
  return AlgebraElement(mat_ - other.mat_);
}
AlgebraElement AlgebraElement::operator-() const { return AlgebraElement(-mat_); }
AlgebraElement operator*(double s, const AlgebraElement& x) { return AlgebraElement(s * x.mat_); }

Matrix mat_exp(const AlgebraElement& x) { return expm(x.matrix()); }

AlgebraElement mat_log(const Matrix& g) {
  check_square(g);
  return AlgebraElement(logm(g));
}

CartanFactors cartan_decompose(const Matrix& g) {
  check_unimodular(g);
  // g = U S V^T gives exp(v) = U S U^T and k = U V^T without squaring the
  // condition number.
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix& u = svd.matrixU();
  const Vector log_sigma = svd.singularValues().array().log().matrix();
  Matrix v = u * log_sigma.asDiagonal() * u.transpose();
  v = 0.5 * (v + v.transpose());
  Matrix k = u * svd.matrixV().transpose();
  return {AlgebraElement(std::move(v)), k};
}

IwasawaFactors iwasawa_decompose(const Matrix& g) {
  check_unimodular(g);
  const Eigen::Index n = g.rows();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (r(i, i) < 0.0) {
      r.row(i) *= -1.0;
      q.col(i) *= -1.0;
    }
  }
  const Vector diag = r.diagonal();
  Matrix h = Matrix::Zero(n, n);
  h.diagonal() = diag.array().log().matrix();
  Matrix n_up = diag.cwiseInverse().asDiagonal() * r;
  n_up.diagonal().setOnes();
  return {q, AlgebraElement(std::move(h)), n_up};
}

double killing_form(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionMismatch("Killing form of matrices of different size");
  }
  return 2.0 * static_cast<double>(x.rows()) * (x.cwiseProduct(y.transpose())).sum();
}

double killing_form(const AlgebraElement& x, const AlgebraElement& y) {
  return killing_form(x.matrix(), y.matrix());
}

double b_norm(const Matrix& x) { return std::sqrt(std::abs(killing_form(x, x))); }

AlgebraElement bch_residual(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("BCH residual of different sizes");
  const AlgebraElement z = mat_log(mat_exp(x) * mat_exp(y));
  return AlgebraElement(z.matrix() - x.matrix() - y.matrix());
}

Matrix adjoint(const Matrix& g, const Matrix& x) { return g * x * g.inverse(); }

Matrix bracket(const Matrix& x, const Matrix& y) { return x * y - y * x; }

AlgebraElement project_to_a(const AlgebraElement& v) {
  Matrix d = Matrix::Zero(v.dim(), v.dim());
  d.diagonal() = v.matrix().diagonal();
  return AlgebraElement(std::move(d));
}

namespace {

std::vector<Matrix> build_p_basis(int n) {
  std::vector<Matrix> basis;
  for (int i = 0; i + 1 < n; ++i) {
    Matrix d = Matrix::Zero(n, n);
    d(i, i) = 1.0;
    d(i + 1, i + 1) = -1.0;
    for (const Matrix& e : basis) d -= killing_form(d, e) * e;
    d /= std::sqrt(killing_form(d, d));
    basis.push_back(d);
  }
  const double scale = 1.0 / std::sqrt(4.0 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = e(j, i) = scale;
      basis.push_back(e);
    }
  }
  return basis;
}

}  // namespace

const std::vector<Matrix>& p_basis(int n) {
  if (n < kMinDim || n > kMaxDim) throw InvalidArgument("dimension outside [2, 8]");
  static std::array<std::vector<Matrix>, kMaxDim + 1> cache;
  static std::once_flag flags[kMaxDim + 1];
  std::call_once(flags[n], [n] { cache[n] = build_p_basis(n); });
  return cache[n];
}

Vector p_coordinates(const Matrix& v) {
  const auto& basis = p_basis(static_cast<int>(v.rows()));
  Vector c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) c(static_cast<Eigen::Index>(i)) = killing_form(v, basis[i]);
  return c;
}

AlgebraElement from_p_coordinates(const Vector& c) {
  // dim p = n(n+1)/2 - 1
  int n = kMinDim;
  while (n <= kMaxDim && n * (n + 1) / 2 - 1 != c.size()) ++n;
  if (n > kMaxDim) throw DimensionMismatch("coordinate vector does not match any dim p");
  const auto& basis = p_basis(n);
  Matrix v = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i) v += c(static_cast<Eigen::Index>(i)) * basis[i];
  return AlgebraElement(std::move(v));
}

}  // namespace mackey
