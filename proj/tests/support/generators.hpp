#pragma once

// Seeded generators shared by the unit and acceptance tests.

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "mackey/deformation.hpp"
#include "mackey/discrete_series.hpp"
#include "mackey/lie_core.hpp"
#include "mackey/motion_dual.hpp"
#include "mackey/principal_series.hpp"
#include "mackey/sl2.hpp"

namespace mackey::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>()(rng_); }

  Matrix matrix(int n, double lo, double hi) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  /// Entries U[-2, 2], then the first column rescaled so that det = 1
  /// (with a sign flip of that column if needed).
  Matrix sl_element(int n) {
    for (;;) {
      Matrix m = matrix(n, -2.0, 2.0);
      double det = m.determinant();
      if (std::abs(det) < 0.05) continue;
      if (det < 0) {
        m.col(0) *= -1.0;
        det = -det;
      }
      m /= std::pow(det, 1.0 / n);
      return m;
    }
  }

  AlgebraElement algebra(int n, double scale = 1.0) {
    Matrix m = matrix(n, -scale, scale);
    m.diagonal().array() -= m.trace() / n;
    return AlgebraElement(m);
  }

  AlgebraElement p_element(int n, double scale = 1.0) {
    return AlgebraElement(algebra(n, scale).p_part());
  }

  /// Uniform point of the ball of B-norm <= radius in p.
  AlgebraElement p_ball(int n, double radius) {
    AlgebraElement v = p_element(n, 1.0);
    const double norm = b_norm(v.matrix());
    const double target = radius * std::pow(uniform(0.0, 1.0), 1.0 / 2.0);
    return (norm > 0 ? target / norm : 0.0) * v;
  }

  Matrix so_element(int n) {
    const AlgebraElement x = algebra(n, 2.0);
    return mat_exp(AlgebraElement(x.k_part()));
  }

  DeformedElement deformed(int n, double t, double v_scale = 1.0) {
    return make_deformed(so_element(n), p_element(n, v_scale), t);
  }

  std::complex<double> complex_normal() { return {normal(), normal()}; }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Low-pass parity-constrained function on the N-point grid of K:
/// sum of e^{i k theta} over |k| <= kmax with k of the given parity.
inline SampledCircleFunction low_pass_circle(Gen& g, int n, Parity parity, int kmax = 6) {
  std::vector<std::complex<double>> coef;
  std::vector<int> modes;
  for (int k = -kmax; k <= kmax; ++k) {
    if ((parity == Parity::even) == (k % 2 == 0)) {
      modes.push_back(k);
      coef.push_back(g.complex_normal() / (1.0 + k * k));
    }
  }
  SampledCircleFunction f{std::vector<std::complex<double>>(static_cast<std::size_t>(n)), parity};
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n;
    std::complex<double> acc = 0.0;
    for (std::size_t q = 0; q < modes.size(); ++q) acc += coef[q] * std::polar(1.0, modes[q] * theta);
    f.values[static_cast<std::size_t>(j)] = acc;
  }
  return f;
}

/// Low-pass function on the B-grid b_j = pi j / nb: sum over |k| <= kmax of
/// c_k e^{2 i k b}.
inline BoundaryFunction low_pass_boundary(Gen& g, int nb, int kmax = 4) {
  std::vector<std::complex<double>> coef;
  for (int k = -kmax; k <= kmax; ++k) coef.push_back(g.complex_normal() / (1.0 + k * k));
  BoundaryFunction f{std::vector<std::complex<double>>(static_cast<std::size_t>(nb))};
  for (int j = 0; j < nb; ++j) {
    const double b = std::numbers::pi * j / nb;
    std::complex<double> acc = 0.0;
    for (int k = -kmax; k <= kmax; ++k) acc += coef[static_cast<std::size_t>(k + kmax)] * std::polar(1.0, 2.0 * k * b);
    f.values[static_cast<std::size_t>(j)] = acc;
  }
  return f;
}

inline HoloSeries random_series(Gen& g, int weight, int truncation, double decay = 0.6) {
  HoloSeries f{weight, {}};
  double s = 1.0;
  for (int m = 0; m <= truncation; ++m) {
    f.coeffs.push_back(s * g.complex_normal());
    s *= decay;
  }
  return f;
}

/// A rotation by a multiple of 2 pi / n.
inline Matrix grid_rotation(Gen& g, int n) {
  return sl2::rotation(2.0 * std::numbers::pi * g.integer(0, n - 1) / n);
}

}  // namespace mackey::testing
