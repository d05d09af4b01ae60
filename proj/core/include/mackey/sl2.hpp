#pragma once

// Coordinates and closed forms specific to SL(2, R).
//
// A point of p is written v = x h + y s with h = diag(1, -1) and
// s = [[0, 1], [1, 0]]; W = [[0, 1], [-1, 0]] spans k. The B-norm of v is
// 2 sqrt(2) r with r = sqrt(x^2 + y^2), and Ad(k_theta) rotates (x, y) by
// 2 theta counterclockwise, k_theta being the rotation matrix of angle theta.

#include <complex>

#include "mackey/lie_core.hpp"

namespace mackey::sl2 {

using Complex = std::complex<double>;

struct P2 {
  double x = 0.0;
  double y = 0.0;
};

Matrix h_mat();
Matrix s_mat();
Matrix w_mat();

Matrix rotation(double theta);

AlgebraElement p_element(P2 v);
AlgebraElement p_element(double x, double y);
/// Coordinates of the p-part of a 2x2 matrix.
P2 coords(const Matrix& v);

/// Ad(k_theta) v.
P2 rotate(P2 v, double theta);
P2 scale(P2 v, double t);

double radius(P2 v);
double b_norm(P2 v);

/// exp(x h + y s) without scaling and squaring.
Matrix exp_p(P2 v);

/// J(v) = c h, the a-component of exp(v); returns c.
double iwasawa_a(P2 v);

/// The functional lambda in a* with lambda(h) = ell, as its B-dual vector.
AlgebraElement functional(double ell);
/// lambda(h) for a B-dual vector lambda in a.
double functional_value(const AlgebraElement& lambda);

/// Angle of an element of SO(2) in (-pi, pi].
double angle_of(const Matrix& k);

}  // namespace mackey::sl2
