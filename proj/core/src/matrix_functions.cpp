#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "mackey/errors.hpp"
#include "mackey/lie_core.hpp"

namespace mackey {
namespace {

// Pade(13) coefficients and the backward-error bound theta_13 (Higham 2005).
constexpr double kPade13[] = {64764752532480000.0,
                              32382376266240000.0,
                              7771770303897600.0,
                              1187353796428800.0,
                              129060195264000.0,
                              10559470521600.0,
                              670442572800.0,
                              33522128640.0,
                              1323241920.0,
                              40840800.0,
                              960960.0,
                              16380.0,
                              182.0,
                              1.0};
constexpr double kTheta13 = 5.371920351148152;

template <typename M>
M expm_impl(const M& a) {
  using Scalar = typename M::Scalar;
  const Eigen::Index n = a.rows();
  const M ident = M::Identity(n, n);
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  }
  const M as = a * Scalar(std::ldexp(1.0, -squarings));
  const M a2 = as * as;
  const M a4 = a2 * a2;
  const M a6 = a4 * a2;
  const auto& b = kPade13;
  const M u_inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  const M u = as * (a6 * u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  const M v_inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
  const M v = a6 * v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
  M r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

double norm1(const Matrix& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

void check_principal(const Matrix& a) {
  Eigen::EigenSolver<Matrix> es(a, false);
  const double scale = std::max(1.0, norm1(a));
  for (const auto& lambda : es.eigenvalues()) {
    if (std::abs(lambda.imag()) <= 1e-12 * scale && lambda.real() <= 1e-14 * scale) {
      throw NonPrincipalLog("matrix has an eigenvalue on the closed negative real axis");
    }
  }
}

}  // namespace

Matrix expm(const Matrix& a) { return expm_impl(a); }
CMatrix expm(const CMatrix& a) { return expm_impl(a); }

Matrix sqrtm(const Matrix& a) {
  check_principal(a);
  const Eigen::Index n = a.rows();
  Matrix y = a;
  Matrix z = Matrix::Identity(n, n);
  for (int iter = 0; iter < 100; ++iter) {
    const Matrix y_inv = y.inverse();
    const Matrix z_inv = z.inverse();
    const Matrix y_next = 0.5 * (y + z_inv);
    z = 0.5 * (z + y_inv);
    const double delta = norm1(y_next - y);
    y = y_next;
    if (delta <= 1e-15 * norm1(y)) break;
  }
  return y;
}

Matrix logm(const Matrix& a) {
  check_principal(a);
  const Eigen::Index n = a.rows();
  const Matrix ident = Matrix::Identity(n, n);
  Matrix x = a;
  int roots = 0;
  while (norm1(x - ident) > 0.25) {
    x = sqrtm(x);
    if (++roots > 60) throw NonPrincipalLog("square root iteration did not approach identity");
  }
  // log X = 2 atanh(Z), Z = (X - I)(X + I)^{-1}; ||Z|| <= ~0.14 here.
  const Matrix z = (x + ident).transpose().partialPivLu().solve((x - ident).transpose()).transpose();
  const Matrix z2 = z * z;
  Matrix term = z;
  Matrix sum = z;
  for (int k = 3; k < 80; k += 2) {
    term = term * z2;
    const Matrix contrib = term / static_cast<double>(k);
    sum += contrib;
    if (norm1(contrib) <= 1e-18 * std::max(1.0, norm1(sum))) break;
  }
  return std::ldexp(2.0, roots) * sum;
}

}  // namespace mackey
