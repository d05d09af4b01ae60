#pragma once

// Holomorphic discrete series of SL(2, R) in the unit disk, carried over to
// functions on p through z(v) = c(exp(v) . i), c(w) = (w - i) / (w + i).
//
// A series F of weight n gives the section f(v) = F(z(v)) (1 - |z(v)|^2)^{n/2}.
// In this trivialization K acts by (T(k_theta) f)(v) = e^{i n theta} f(Ad(k_theta)^{-1} v)
// and z^j spans the K-type of index n + 2j, so the minimal K-type has index n.

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "mackey/deformation.hpp"
#include "mackey/sl2.hpp"

namespace mackey {

using Complex = std::complex<double>;
using Section = std::function<Complex(sl2::P2)>;

/// |z(v)| = tanh(kDiskRadiusScale * |v|_B).
inline constexpr double kDiskRadiusScale = 0.35355339059327373;  // 1 / (2 sqrt 2)

inline constexpr int kDefaultTruncation = 64;
inline constexpr int kDefaultKQuadrature = 512;

struct HoloSeries {
  int weight = 2;
  std::vector<Complex> coeffs;  // c_0 .. c_M

  Complex operator()(Complex z) const;
};

/// The Cayley conjugate C g C^{-1} in SU(1, 1).
Eigen::Matrix2cd disk_model(const Matrix& g);
Complex mobius(const Eigen::Matrix2cd& m, Complex z);

/// Closed-form SL(2) evaluation.
Complex disk_point(sl2::P2 v);
/// Through the matrix exponential and the Cayley transform.
Complex disk_point(const AlgebraElement& v);

/// pi m! (n-2)! / (m+n-1)!, the squared norm of z^m.
double bergman_beta(int m, int weight);
/// Throws WeightUnsupported for weight < 2.
double bergman_norm(const HoloSeries& f);

Section section(const HoloSeries& f);

/// v -> f(t v).
Section zoom(Section f, double t);

/// (1 / 2 pi) int e^{-i m theta} (T(k_theta) f)(v) d theta, trapezoid on n_k nodes.
Section ktype_project(Section f, int weight, int m, int n_k = kDefaultKQuadrature);

/// (|j| / j)^n with j = j(g^{-1}, z(v)) in the disk model.
Complex cocycle(const Matrix& g, sl2::P2 v, int weight);

/// (T(g) h)(v) = cocycle(g, v) h(g^{-1} . v).
Section group_action(const Matrix& g, Section h, int weight);

/// x -> J h(gamma^{-1} .t x) for gamma = alpha_t(g0), i.e. Z_t T(phi_t gamma) Z_t^{-1} h.
Section contracted_operator(const DeformedElement& g0, Section h, int weight, double t);

/// contracted_operator applied to Z_t f.
Section contracted_action(const DeformedElement& g0, Section f, int weight, double t);

/// Sup norm of P_m f over the reference points, for each m in [m_lo, m_hi].
std::map<int, double> ktype_spectrum(const Section& f, int weight, int m_lo, int m_hi,
                                     const std::vector<sl2::P2>& reference,
                                     int n_k = kDefaultKQuadrature);

/// Points of the square lattice with spacing step inside the disk |v| <= radius
/// (SL(2) coordinates).
std::vector<sl2::P2> ball_points(double radius, double step);

struct LipschitzReport {
  double d_input = 0.0;     // d(h, h') with levels 1 .. L + 1
  double d_output = 0.0;    // d(T h, T h') with levels 1 .. L
  double worst_level_gap = 0.0;  // max_n (|Th - Th'|_{A_n} - |h - h'|_{A_{n+1}})
};

/// Nested point sets A_1 in A_2 in ... with gamma^{-1} .t A_n in A_{n+1}, and
/// the distance sum_n 2^{-n} s_n / (1 + s_n). The proof gives
/// d(T h, T h') <= 2 d(h, h').
LipschitzReport lipschitz_check(const DeformedElement& g0, const Section& h, const Section& h2,
                                int weight, double t, int levels = 4);

/// Volume of the eta_t ball of B-radius R (radial Gauss-Legendre quadrature),
/// i.e. the squared norm of the constant section 1 restricted to the ball.
double constant_section_norm_squared(double t, double radius);

}  // namespace mackey
