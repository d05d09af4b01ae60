#pragma once

// Spherical principal series of SL(2, R) in the compact picture (functions on
// a grid of K) and in the Helgason picture (superpositions of waves on p),
// together with their deformations along G_t.
//
// lambda in a* is identified with the number lambda(h); rho becomes 1.

#include <complex>
#include <vector>

#include "mackey/convergence.hpp"
#include "mackey/deformation.hpp"
#include "mackey/motion_dual.hpp"
#include "mackey/sl2.hpp"

namespace mackey {

struct WaveSpec {
  AlgebraElement lambda;  // B-dual vector, diagonal
  double b = 0.0;         // angle of b in K/M, in [0, pi)
  double t = 1.0;
};

/// Rectangular lattice on a square box of p (SL(2) coordinates x, y).
struct PGrid {
  double box_min = -1.5;
  double box_max = 1.5;
  double step = 1.0 / 32.0;

  int side() const;
  std::vector<sl2::P2> points() const;  // x index major, y index minor
};

struct PGridFunction {
  PGrid grid;
  std::vector<Complex> values;
};

/// Samples F(b_j) at b_j = pi j / N_b.
struct BoundaryFunction {
  std::vector<Complex> values;
};

/// exp(B(i lambda + t rho, J_t(Ad(b) v))); the plane wave exp(i B(lambda, Ad(b) v))
/// at t = 0. Closed-form SL(2) evaluation.
Complex contracted_wave(const WaveSpec& spec, sl2::P2 v);
/// Same value computed from the matrix Iwasawa decomposition.
Complex contracted_wave_generic(const WaveSpec& spec, const AlgebraElement& v);

/// Trapezoid rule over the B-grid of contracted_wave times F.
std::vector<Complex> synthesize(const BoundaryFunction& f, const AlgebraElement& lambda, double t,
                                const std::vector<sl2::P2>& points);
PGridFunction synthesize(const BoundaryFunction& f, const AlgebraElement& lambda, double t,
                         const PGrid& grid);

/// Image under C^lambda_t of synthesize(F, lambda / t, 1): that function read
/// at t v.
PGridFunction helgason_contraction_image(const BoundaryFunction& f, const AlgebraElement& lambda,
                                         double t, const PGrid& grid);

/// Periodic cubic spline through samples on the uniform grid of [0, 2 pi).
class PeriodicSpline {
 public:
  explicit PeriodicSpline(const std::vector<Complex>& samples);
  Complex operator()(double theta) const;

 private:
  std::vector<Complex> f_;
  std::vector<Complex> m_;  // second derivatives
  double h_;
};

/// rho_t(h) for g_t, from the eigenvalues of ad_t(h) on g_t.
double rho_t_sl2(double t);

/// (pi^comp_lambda(g) f)(u) = exp(<-i lambda - rho, a(g^{-1} u)>) f(kappa(g^{-1} u)).
SampledCircleFunction compact_operator_direct(const Matrix& g, const AlgebraElement& lambda,
                                              const SampledCircleFunction& f);

struct CompactPair {
  SampledCircleFunction via_deformed;  // G_t Iwasawa data of phi_t^{-1} g
  SampledCircleFunction via_rescaled;  // pi^comp_{lambda / t}(g)
};

CompactPair compact_operator(const Matrix& g, const AlgebraElement& lambda, Parity parity,
                             const SampledCircleFunction& f, double t);

/// Sup-grid distance between pi^comp_{lambda/t}(phi_t(g0)) f and pi0(g0) f.
ConvergenceReport motion_limit_check(const DeformedElement& g0, const AlgebraElement& lambda,
                                     Parity parity, const SampledCircleFunction& f,
                                     const std::vector<double>& t_list);

struct QuasiRegularReport {
  double limit_residual = 0.0;   // sup |pi_t f - f(k^{-1} .)| at the small t
  double scalar_distance = 0.0;  // min_c |R f - c f|_2 / |R f|_2
};

/// lambda = 0: the deformed compact operators tend to the rotation f(k^{-1} u).
QuasiRegularReport quasi_regular_check(const DeformedElement& g0, const SampledCircleFunction& f,
                                       double t_small);

struct HelgasonReport {
  ConvergenceReport convergence;
  double constant_residual = 0.0;     // lambda = 0 only: sup |limit - mean F|
  double equivariance_residual = 0.0;  // rotating F versus rotating the grid, at t = 0
};

HelgasonReport helgason_contraction_check(const BoundaryFunction& f, const AlgebraElement& lambda,
                                          const std::vector<double>& t_list, const PGrid& grid);

/// max_j |a_j - b_j|.
double sup_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace mackey
