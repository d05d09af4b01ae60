#pragma once

// The family G_t of groups living on the set K x p.
//
// For t > 0 the group law is transported from G through
// phi_t(k, v) = exp(t v) k; at t = 0 it is the semidirect product law of the
// Cartan motion group, computed in closed form. Points of p are cosets of K,
// so G_t acts on p by left multiplication of the coset (I, x).

#include <vector>

#include "mackey/lie_core.hpp"

namespace mackey {

struct DeformedElement {
  Matrix k;
  AlgebraElement v;
  double t = 1.0;
};

/// Validates k in SO(n), v in p and t >= 0.
DeformedElement make_deformed(const Matrix& k, const AlgebraElement& v, double t);
DeformedElement deformed_identity(int n, double t);

/// phi_t(k, v) = exp(t v) k.
Matrix phi_t(const DeformedElement& a);
/// Inverse of phi_t for t > 0.
DeformedElement phi_t_inverse(const Matrix& g, double t);

DeformedElement mul_t(const DeformedElement& a, const DeformedElement& b);
DeformedElement inverse_t(const DeformedElement& a);

/// Point action of G on p: the Cartan p-component of g exp(x).
AlgebraElement act(const Matrix& g, const AlgebraElement& x);
/// Point action of G_t on p; affine motion at t = 0.
AlgebraElement act_t(const DeformedElement& g, const AlgebraElement& x);

struct IwasawaComponents {
  Matrix k_part;
  AlgebraElement a_part;
};

/// K_t(v) = kappa(exp(t v)) and J_t(v) = a(exp(t v)) / t.
IwasawaComponents iwasawa_components_t(const AlgebraElement& v, double t);

/// X_k + X_p  ->  X_k + t X_p, the differential of phi_t at the identity.
AlgebraElement phi_t_differential(const AlgebraElement& x, double t);
/// Inverse of phi_t_differential for t > 0.
AlgebraElement phi_t_differential_inverse(const AlgebraElement& x, double t);

/// Ad_{G_t}(g) X.
AlgebraElement adjoint_t(const DeformedElement& g, const AlgebraElement& x);
/// Lie bracket of g_t: phi_t^{-1}[phi_t X, phi_t Y].
AlgebraElement bracket_t(const AlgebraElement& x, const AlgebraElement& y, double t);

/// Differential at x of y -> g .t y, as a matrix in p_basis coordinates.
/// Central differences with one Richardson refinement.
Matrix point_action_differential(const DeformedElement& g, const AlgebraElement& x,
                                 double step = 1e-5);

/// eta_t(x)(xi, eta). At t = 0 this is B.
double metric_eval(const AlgebraElement& x, const AlgebraElement& xi, const AlgebraElement& eta,
                   double t);
/// Gram matrix of eta_t(x) in p_basis coordinates.
Matrix metric_gram(const AlgebraElement& x, double t);

/// Gaussian curvature of eta_t at an SL(2) point (x, y), by the Brioschi
/// formula with finite differences of the Gram matrix.
double metric_curvature_sl2(double x, double y, double t, double step = 1e-2);

struct OrbitSample {
  AlgebraElement orbit_point;  // Ad_{G_t}(g)[phi_t^{-1} lambda0]
  AlgebraElement image;        // its image under phi_t_differential
  double trace_residual;       // |tr(image^2) - tr(lambda0^2)|
};

/// Transport of the adjoint orbit of lambda0 to g_t. Throws MixedParameters if
/// a sample is not at parameter t.
std::vector<OrbitSample> adjoint_orbit_map(const AlgebraElement& lambda0, double t,
                                           const std::vector<DeformedElement>& samples);

/// Dilation-rotation of p for SL(2): sinh(|x|)/|x| times the quarter turn
/// h -> s, with |x| = |x|_B / sqrt(2). Throws DimensionUnsupported for n != 2.
AlgebraElement tau_map(const AlgebraElement& x);

/// p-component of Ad(exp x) lambda0 for lambda0 = W / 2 (SL(2) only).
AlgebraElement vertical_projection(const AlgebraElement& x);

}  // namespace mackey
