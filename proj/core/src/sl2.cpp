#include "mackey/sl2.hpp"

#include <cmath>

#include "mackey/errors.hpp"

namespace mackey::sl2 {

Matrix h_mat() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix s_mat() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix w_mat() {
  Matrix m(2, 2);
  m << 0.0, 1.0, -1.0, 0.0;
  return m;
}

Matrix rotation(double theta) {
  Matrix m(2, 2);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  m << c, -s, s, c;
  return m;
}

AlgebraElement p_element(P2 v) { return p_element(v.x, v.y); }

AlgebraElement p_element(double x, double y) {
  Matrix m(2, 2);
  m << x, y, y, -x;
  return AlgebraElement(std::move(m));
}

P2 coords(const Matrix& v) {
  if (v.rows() != 2 || v.cols() != 2) throw DimensionUnsupported("expected a 2x2 matrix");
  return {0.5 * (v(0, 0) - v(1, 1)), 0.5 * (v(0, 1) + v(1, 0))};
}

P2 rotate(P2 v, double theta) {
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

P2 scale(P2 v, double t) { return {t * v.x, t * v.y}; }

double radius(P2 v) { return std::hypot(v.x, v.y); }

double b_norm(P2 v) { return 2.0 * std::sqrt(2.0) * radius(v); }

Matrix exp_p(P2 v) {
  const double r = radius(v);
  const double c = std::cosh(r);
  const double sr = r > 1e-8 ? std::sinh(r) / r : 1.0 + r * r / 6.0;
  Matrix m(2, 2);
  m << c + sr * v.x, sr * v.y, sr * v.y, c - sr * v.x;
  return m;
}

double iwasawa_a(P2 v) {
  // First column of exp(v) has norm e^c.
  const double r = radius(v);
  const double sr = r > 1e-8 ? std::sinh(r) / r : 1.0 + r * r / 6.0;
  const double a = std::cosh(r) + sr * v.x;
  const double b = sr * v.y;
  return 0.5 * std::log(a * a + b * b);
}

AlgebraElement functional(double ell) { return AlgebraElement(h_mat() * (ell / 8.0)); }

double functional_value(const AlgebraElement& lambda) {
  if (lambda.dim() != 2) throw DimensionUnsupported("expected an element of sl(2)");
  return killing_form(lambda.matrix(), h_mat());
}

double angle_of(const Matrix& k) { return std::atan2(k(1, 0), k(0, 0)); }

}  // namespace mackey::sl2
