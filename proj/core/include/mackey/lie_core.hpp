#pragma once

// Dense small-matrix Lie primitives for SL(n, R), 2 <= n <= 8.
//
// Conventions used everywhere in the library:
//  * k = so(n) (antisymmetric matrices), p = symmetric traceless matrices,
//    a = diagonal traceless matrices.
//  * The Killing form is B(X, Y) = 2n tr(XY). Every inner product on p, a
//    and a* is derived from it.

#include <Eigen/Dense>

#include <vector>

namespace mackey {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

// Tolerance on |det g - 1| for a matrix to be accepted as an element of SL(n).
inline constexpr double kUnimodularTol = 1e-9;

/// An element X of sl(n, R) together with its Cartan split X = X_k + X_p.
///
/// Construction removes a trace residue of rounding size (relative 1e-9) and
/// rejects anything larger, so the stored matrix is traceless to machine
/// precision.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(Matrix mat);

  static AlgebraElement zero(int n);

  const Matrix& matrix() const { return mat_; }
  const Matrix& k_part() const { return k_; }
  const Matrix& p_part() const { return p_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  bool in_k(double tol = 1e-12) const;
  bool in_p(double tol = 1e-12) const;
  bool in_a(double tol = 1e-12) const;

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement operator-() const;
  friend AlgebraElement operator*(double s, const AlgebraElement& x);

 private:
  Matrix mat_;
  Matrix k_;
  Matrix p_;
};

/// g = k exp(H) n_up with k in SO(n), H in a, n_up upper unitriangular.
struct IwasawaFactors {
  Matrix k;
  AlgebraElement h;
  Matrix n_up;
};

/// g = exp(v) k with v in p and k in SO(n).
struct CartanFactors {
  AlgebraElement v;
  Matrix k;
};

// Matrix exponential by scaling and squaring with the degree 13 Pade
// approximant. Works for any square matrix.
Matrix expm(const Matrix& a);
CMatrix expm(const CMatrix& a);

// Principal logarithm by inverse scaling and squaring. Throws NonPrincipalLog
// when an eigenvalue lies on (-inf, 0].
Matrix logm(const Matrix& a);

// Principal square root (Denman-Beavers iteration).
Matrix sqrtm(const Matrix& a);

Matrix mat_exp(const AlgebraElement& x);

/// Principal logarithm of a unimodular matrix, as an element of sl(n).
AlgebraElement mat_log(const Matrix& g);

/// Polar factorization g = exp(v) k, computed from the symmetric
/// eigendecomposition of g g^T.
CartanFactors cartan_decompose(const Matrix& g);

/// QR factorization with a positive diagonal in the triangular factor.
IwasawaFactors iwasawa_decompose(const Matrix& g);

/// B(X, Y) = 2n tr(XY). Throws DimensionMismatch.
double killing_form(const AlgebraElement& x, const AlgebraElement& y);
double killing_form(const Matrix& x, const Matrix& y);

/// sqrt(|B(X, X)|); the B-norm on p and the negative B-norm on k.
double b_norm(const Matrix& x);

/// Z(X, Y) = log(exp X exp Y) - X - Y.
AlgebraElement bch_residual(const AlgebraElement& x, const AlgebraElement& y);

/// g X g^{-1}.
Matrix adjoint(const Matrix& g, const Matrix& x);
/// [X, Y].
Matrix bracket(const Matrix& x, const Matrix& y);

// Orthogonal projection of a p-element onto a (its diagonal).
AlgebraElement project_to_a(const AlgebraElement& v);

/// Fixed B-orthonormal basis of p: first the Gram-Schmidt orthonormalized
/// diagonal matrices e_i - e_{i+1}, then (E_ij + E_ji) / sqrt(4n) for i < j in
/// lexicographic order.
const std::vector<Matrix>& p_basis(int n);

Vector p_coordinates(const Matrix& v);
AlgebraElement from_p_coordinates(const Vector& c);

/// Checks n in [2, 8], squareness and finiteness; throws otherwise.
void check_square(const Matrix& g);
void check_unimodular(const Matrix& g);

}  // namespace mackey
