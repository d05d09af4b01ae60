#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mackey/errors.hpp"
#include "mackey/lie_core.hpp"
#include "mackey/sl2.hpp"
#include "support/generators.hpp"

using namespace mackey;
using mackey::testing::Gen;

namespace {

// Taylor series of exp, summed until terms stop contributing.
Matrix series_exp(const Matrix& a) {
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix acc = term;
  for (int k = 1; k < 60; ++k) {
    term = term * a / k;
    acc += term;
  }
  return acc;
}

// Trace of ad(X) ad(Y) over the basis E_ij (i != j), E_ii - E_{i+1,i+1} of sl(n).
double brute_killing(const Matrix& x, const Matrix& y) {
  const int n = static_cast<int>(x.rows());
  std::vector<Matrix> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        Matrix e = Matrix::Zero(n, n);
        e(i, j) = 1;
        basis.push_back(e);
      }
  for (int i = 0; i + 1 < n; ++i) {
    Matrix e = Matrix::Zero(n, n);
    e(i, i) = 1;
    e(i + 1, i + 1) = -1;
    basis.push_back(e);
  }
  // Coordinates by least squares against the flattened basis.
  const int m = static_cast<int>(basis.size());
  Matrix b(n * n, m);
  for (int k = 0; k < m; ++k) b.col(k) = Eigen::Map<const Vector>(basis[k].data(), n * n);
  const auto qr = b.colPivHouseholderQr();
  double tr = 0.0;
  for (int k = 0; k < m; ++k) {
    const Matrix img = bracket(x, bracket(y, basis[k]));
    const Vector c = qr.solve(Eigen::Map<const Vector>(img.data(), n * n));
    tr += c(k);
  }
  return tr;
}

}  // namespace

TEST(MatExp, ZeroGivesIdentity) {
  EXPECT_TRUE(mat_exp(AlgebraElement::zero(3)).isApprox(Matrix::Identity(3, 3)));
}

TEST(MatExp, DiagonalCase) {
  const double s = 0.7;
  const Matrix e = mat_exp(sl2::p_element(s, 0.0));
  EXPECT_NEAR(e(0, 0), std::exp(s), 1e-14);
  EXPECT_NEAR(e(1, 1), std::exp(-s), 1e-14);
  EXPECT_NEAR(e(0, 1), 0.0, 1e-15);
}

TEST(MatExp, OffDiagonalMatchesSeries) {
  const double s = 0.3;
  const AlgebraElement x = sl2::p_element(0.0, s);
  const Matrix e = mat_exp(x);
  EXPECT_LE((e - series_exp(x.matrix())).norm(), 1e-14);
  EXPECT_NEAR(e(0, 0), std::cosh(s), 1e-14);
  EXPECT_NEAR(e(0, 1), std::sinh(s), 1e-14);
}

TEST(MatExp, LargeNormAgainstSeries) {
  Gen g(11);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraElement x = g.algebra(4, 2.0);
    const Matrix e = mat_exp(x);
    EXPECT_LE((e - series_exp(x.matrix())).norm() / e.norm(), 1e-12);
    EXPECT_NEAR(e.determinant(), 1.0, 1e-9);
  }
}

TEST(MatLog, IdentityAndDiagonal) {
  EXPECT_LE(mat_log(Matrix::Identity(2, 2)).matrix().norm(), 1e-15);
  Matrix d(2, 2);
  d << std::numbers::e, 0, 0, 1.0 / std::numbers::e;
  const Matrix l = mat_log(d).matrix();
  EXPECT_NEAR(l(0, 0), 1.0, 1e-13);
  EXPECT_NEAR(l(1, 1), -1.0, 1e-13);
}

TEST(MatLog, RoundTripOnSymmetric) {
  Gen g(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = g.integer(2, 5);
    AlgebraElement x = g.p_element(n, 1.0);
    const double norm = x.matrix().norm();
    if (norm > 1.0) x = (1.0 / norm) * x;
    EXPECT_LE((mat_log(mat_exp(x)).matrix() - x.matrix()).norm(), 1e-12);
  }
}

TEST(MatLog, RejectsNegativeEigenvalue) {
  Matrix g(2, 2);
  g << -1, 0, 0, -1;
  EXPECT_THROW(mat_log(g), NonPrincipalLog);
  Matrix r = sl2::rotation(std::numbers::pi);
  EXPECT_THROW(mat_log(r), NonPrincipalLog);
}

TEST(Cartan, OrthogonalInput) {
  const Matrix k = sl2::rotation(0.4);
  const CartanFactors c = cartan_decompose(k);
  EXPECT_LE(c.v.matrix().norm(), 1e-14);
  EXPECT_LE((c.k - k).norm(), 1e-14);
}

TEST(Cartan, PositiveSymmetricInput) {
  const AlgebraElement v = sl2::p_element(0.3, -0.8);
  const CartanFactors c = cartan_decompose(mat_exp(v));
  EXPECT_LE((c.v.matrix() - v.matrix()).norm(), 1e-13);
  EXPECT_LE((c.k - Matrix::Identity(2, 2)).norm(), 1e-13);
}

TEST(Cartan, ShearReconstructs) {
  Matrix g(2, 2);
  g << 1, 0, 1, 1;
  const CartanFactors c = cartan_decompose(g);
  EXPECT_LE((mat_exp(c.v) * c.k - g).norm(), 1e-12);
  EXPECT_TRUE(c.v.in_p(1e-14));
  EXPECT_NEAR(c.k.determinant(), 1.0, 1e-12);
}

TEST(Iwasawa, TrivialCases) {
  IwasawaFactors f = iwasawa_decompose(Matrix::Identity(3, 3));
  EXPECT_LE((f.k - Matrix::Identity(3, 3)).norm(), 1e-15);
  EXPECT_LE(f.h.matrix().norm(), 1e-15);
  Matrix d(2, 2);
  d << 2, 0, 0, 0.5;
  f = iwasawa_decompose(d);
  EXPECT_NEAR(f.h.matrix()(0, 0), std::log(2.0), 1e-15);
  EXPECT_LE((f.n_up - Matrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(Iwasawa, ShearFactors) {
  Matrix g(2, 2);
  g << 1, 0, 1, 1;
  const IwasawaFactors f = iwasawa_decompose(g);
  EXPECT_LE((f.k - sl2::rotation(std::numbers::pi / 4)).norm(), 1e-12);
  EXPECT_NEAR(std::exp(f.h.matrix()(0, 0)), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(f.n_up(0, 1), 0.5, 1e-12);
  EXPECT_LE((f.k * mat_exp(f.h) * f.n_up - g).norm(), 1e-12);
}

TEST(Decompositions, RoundTripSL3) {
  Gen g(13);
  for (int trial = 0; trial < 500; ++trial) {
    const Matrix m = g.sl_element(3);
    const IwasawaFactors f = iwasawa_decompose(m);
    EXPECT_LE((f.k * mat_exp(f.h) * f.n_up - m).norm(), 1e-10);
    EXPECT_LE((f.k.transpose() * f.k - Matrix::Identity(3, 3)).norm(), 1e-10);
    EXPECT_TRUE(f.h.in_a(1e-14));
    for (int i = 0; i < 3; ++i) {
      EXPECT_DOUBLE_EQ(f.n_up(i, i), 1.0);
      for (int j = 0; j < i; ++j) EXPECT_EQ(f.n_up(i, j), 0.0);
    }
    const CartanFactors c = cartan_decompose(m);
    EXPECT_LE((mat_exp(c.v) * c.k - m).norm(), 1e-12 * m.norm());
    // Uniqueness: v = log(g g^T) / 2.
    EXPECT_LE((c.v.matrix() - 0.5 * mat_log(m * m.transpose()).matrix()).norm(), 1e-9);
  }
}

TEST(Decompositions, RejectNonUnimodular) {
  Matrix m = 2.0 * Matrix::Identity(2, 2);
  EXPECT_THROW(cartan_decompose(m), InvalidArgument);
  EXPECT_THROW(iwasawa_decompose(m), InvalidArgument);
  EXPECT_THROW(check_square(Matrix::Identity(9, 9)), InvalidArgument);
}

TEST(Killing, ValuesAndSigns) {
  const AlgebraElement h(sl2::h_mat());
  EXPECT_EQ(killing_form(h, AlgebraElement::zero(2)), 0.0);
  EXPECT_NEAR(killing_form(h, h), 8.0, 1e-14);
  EXPECT_NEAR(brute_killing(h.matrix(), h.matrix()), 8.0, 1e-12);
  EXPECT_THROW(killing_form(h, AlgebraElement::zero(3)), DimensionMismatch);
}

TEST(Killing, AgreesWithTraceOfAdjoints) {
  Gen g(14);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = g.integer(2, 4);
    const AlgebraElement x = g.algebra(n), y = g.algebra(n);
    EXPECT_NEAR(killing_form(x, y), brute_killing(x.matrix(), y.matrix()), 1e-10);
  }
}

TEST(Killing, SplitIsOrthogonalAndDefinite) {
  Gen g(15);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = g.integer(2, 6);
    const AlgebraElement x = g.algebra(n);
    EXPECT_NEAR(killing_form(x.k_part(), x.p_part()), 0.0, 1e-12);
    EXPECT_LE(killing_form(x.k_part(), x.k_part()), 0.0);
    EXPECT_GE(killing_form(x.p_part(), x.p_part()), 0.0);
    EXPECT_LE((x.k_part() + x.p_part() - x.matrix()).norm(), 1e-15);
  }
}

TEST(Bch, TrivialCases) {
  const AlgebraElement a = sl2::p_element(0.4, 0.0), b = sl2::p_element(-0.9, 0.0);
  EXPECT_LE(bch_residual(a, b).matrix().norm(), 1e-14);
  EXPECT_LE(bch_residual(sl2::p_element(0.2, 0.7), AlgebraElement::zero(2)).matrix().norm(), 1e-14);
}

TEST(Bch, LeadingCoefficientIsHalfBracket) {
  Matrix e = Matrix::Zero(2, 2), f = Matrix::Zero(2, 2);
  e(0, 1) = 1;
  f(1, 0) = 1;
  auto coefficient = [&](double eps) -> Matrix {
    return bch_residual(AlgebraElement(eps * e), AlgebraElement(eps * f)).matrix() / (eps * eps);
  };
  const double eps = 1e-3;
  const Matrix extrapolated = 2.0 * coefficient(eps / 2) - coefficient(eps);
  EXPECT_LE((extrapolated - 0.5 * sl2::h_mat()).norm(), 1e-6);
}

TEST(Bch, QuadraticScaling) {
  Gen g(16);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraElement x = g.algebra(3), y = g.algebra(3);
    const double r2 = bch_residual(1e-2 * x, 1e-2 * y).matrix().norm() / 1e-4;
    const double r3 = bch_residual(1e-3 * x, 1e-3 * y).matrix().norm() / 1e-6;
    EXPECT_NEAR(r2 / r3, 1.0, 5e-2);
    // The limit is |[X, Y]| / 2.
    EXPECT_NEAR(r3, 0.5 * bracket(x.matrix(), y.matrix()).norm(), 1e-2 * r3);
  }
}

TEST(AlgebraElement, TraceResidueHandling) {
  Matrix m = sl2::h_mat();
  m(0, 0) += 1e-13;
  EXPECT_LE(std::abs(AlgebraElement(m).matrix().trace()), 1e-15);
  m(0, 0) += 1e-3;
  EXPECT_THROW(AlgebraElement{m}, InvalidArgument);
}

TEST(PBasis, OrthonormalForKilling) {
  for (int n = 2; n <= 5; ++n) {
    const auto& basis = p_basis(n);
    ASSERT_EQ(static_cast<int>(basis.size()), n * (n + 1) / 2 - 1);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        EXPECT_NEAR(killing_form(basis[i], basis[j]), i == j ? 1.0 : 0.0, 1e-14);
  }
  Gen g(17);
  const AlgebraElement v = g.p_element(4);
  EXPECT_LE((from_p_coordinates(p_coordinates(v.matrix())).matrix() - v.matrix()).norm(), 1e-14);
}
