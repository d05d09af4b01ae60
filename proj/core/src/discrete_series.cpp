#include "mackey/discrete_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "mackey/errors.hpp"

namespace mackey {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Eigen::Matrix2cd cayley() {
  Eigen::Matrix2cd c;
  c << 1.0, -kI, 1.0, kI;
  return c;
}

void check_weight(int weight) {
  if (weight < 2) throw WeightUnsupported("weight must be at least 2");
}

sl2::P2 coords_of(const AlgebraElement& v) { return sl2::coords(v.p_part()); }

}  // namespace

Complex HoloSeries::operator()(Complex z) const {
  Complex acc = 0.0;
  for (std::size_t m = coeffs.size(); m-- > 0;) acc = acc * z + coeffs[m];
  return acc;
}

Eigen::Matrix2cd disk_model(const Matrix& g) {
  if (g.rows() != 2 || g.cols() != 2) throw DimensionUnsupported("disk model is for SL(2)");
  const Eigen::Matrix2cd c = cayley();
  return c * g.cast<Complex>() * c.inverse();
}

Complex mobius(const Eigen::Matrix2cd& m, Complex z) {
  return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

Complex disk_point(sl2::P2 v) {
  const Matrix e = sl2::exp_p(v);
  const Complex w = (e(0, 0) * kI + e(0, 1)) / (e(1, 0) * kI + e(1, 1));
  return (w - kI) / (w + kI);
}

Complex disk_point(const AlgebraElement& v) {
  if (v.dim() != 2) throw DimensionUnsupported("disk model is for SL(2)");
  return mobius(disk_model(mat_exp(AlgebraElement(v.p_part()))), 0.0);
}

double bergman_beta(int m, int weight) {
  check_weight(weight);
  // pi m! (n-2)! / (m+n-1)! = pi / ((m+n-1) binom(m+n-2, m))
  return kPi * std::exp(std::lgamma(m + 1.0) + std::lgamma(weight - 1.0) - std::lgamma(m + weight + 0.0));
}

double bergman_norm(const HoloSeries& f) {
  check_weight(f.weight);
  double acc = 0.0;
  for (std::size_t m = 0; m < f.coeffs.size(); ++m) {
    acc += std::norm(f.coeffs[m]) * bergman_beta(static_cast<int>(m), f.weight);
  }
  return std::sqrt(acc);
}

Section section(const HoloSeries& f) {
  check_weight(f.weight);
  return [f](sl2::P2 v) {
    const Complex z = disk_point(v);
    return f(z) * std::pow(1.0 - std::norm(z), 0.5 * f.weight);
  };
}

Section zoom(Section f, double t) {
  if (!(t > 0.0)) throw InvalidArgument("zoom factor must be > 0");
  return [f = std::move(f), t](sl2::P2 v) { return f(sl2::scale(v, t)); };
}

Section ktype_project(Section f, int weight, int m, int n_k) {
  if (n_k <= 0) throw InvalidArgument("quadrature size must be positive");
  std::vector<Complex> kernel(static_cast<std::size_t>(n_k));
  for (int q = 0; q < n_k; ++q) {
    const double theta = 2.0 * kPi * q / n_k;
    kernel[static_cast<std::size_t>(q)] = std::polar(1.0, (weight - m) * theta) / static_cast<double>(n_k);
  }
  return [f = std::move(f), kernel, n_k](sl2::P2 v) {
    Complex acc = 0.0;
    for (int q = 0; q < n_k; ++q) {
      const double theta = 2.0 * kPi * q / n_k;
      acc += kernel[static_cast<std::size_t>(q)] * f(sl2::rotate(v, -theta));
    }
    return acc;
  };
}

Complex cocycle(const Matrix& g, sl2::P2 v, int weight) {
  const Eigen::Matrix2cd ginv = disk_model(g).inverse();
  const Complex j = ginv(1, 0) * disk_point(v) + ginv(1, 1);
  return std::pow(std::abs(j) / j, weight);
}

Section group_action(const Matrix& g, Section h, int weight) {
  check_weight(weight);
  const Matrix ginv = g.inverse();
  return [g, ginv, h = std::move(h), weight](sl2::P2 v) {
    const sl2::P2 moved = coords_of(act(ginv, sl2::p_element(v)));
    return cocycle(g, v, weight) * h(moved);
  };
}

Section contracted_operator(const DeformedElement& g0, Section h, int weight, double t) {
  check_weight(weight);
  if (g0.t != 0.0) throw InvalidArgument("expected an element of G_0");
  if (!(t > 0.0)) throw InvalidArgument("contraction parameter must be > 0");
  const DeformedElement gamma{g0.k, g0.v, t};
  const DeformedElement gamma_inv = inverse_t(gamma);
  const Matrix g = phi_t(gamma);
  return [g, gamma_inv, h = std::move(h), weight, t](sl2::P2 x) {
    const sl2::P2 moved = coords_of(act_t(gamma_inv, sl2::p_element(x)));
    return cocycle(g, sl2::scale(x, t), weight) * h(moved);
  };
}

Section contracted_action(const DeformedElement& g0, Section f, int weight, double t) {
  return contracted_operator(g0, zoom(std::move(f), t), weight, t);
}

std::map<int, double> ktype_spectrum(const Section& f, int weight, int m_lo, int m_hi,
                                     const std::vector<sl2::P2>& reference, int n_k) {
  std::map<int, double> out;
  for (int m = m_lo; m <= m_hi; ++m) {
    const Section p = ktype_project(f, weight, m, n_k);
    double sup = 0.0;
    for (const auto& v : reference) sup = std::max(sup, std::abs(p(v)));
    out[m] = sup;
  }
  return out;
}

std::vector<sl2::P2> ball_points(double radius, double step) {
  std::vector<sl2::P2> pts;
  const int n = static_cast<int>(std::floor(radius / step));
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      const sl2::P2 p{i * step, j * step};
      if (sl2::radius(p) <= radius + 1e-12) pts.push_back(p);
    }
  }
  return pts;
}

LipschitzReport lipschitz_check(const DeformedElement& g0, const Section& h, const Section& h2,
                                int weight, double t, int levels) {
  if (levels < 1) throw InvalidArgument("need at least one level");
  const DeformedElement gamma_inv = inverse_t(DeformedElement{g0.k, g0.v, t});
  const double r0 = 0.5;
  const double step = 0.125;

  std::vector<std::vector<sl2::P2>> sets;
  sets.push_back(ball_points(r0, step));
  for (int n = 1; n <= levels; ++n) {
    std::vector<sl2::P2> next = sets.back();
    for (const auto& p : sets.back()) next.push_back(coords_of(act_t(gamma_inv, sl2::p_element(p))));
    const auto ball = ball_points(r0 * (n + 1), step);
    next.insert(next.end(), ball.begin(), ball.end());
    sets.push_back(std::move(next));
  }

  const Section th = contracted_operator(g0, h, weight, t);
  const Section th2 = contracted_operator(g0, h2, weight, t);
  auto sup_diff = [](const Section& a, const Section& b, const std::vector<sl2::P2>& pts) {
    double s = 0.0;
    for (const auto& p : pts) s = std::max(s, std::abs(a(p) - b(p)));
    return s;
  };

  LipschitzReport r;
  r.worst_level_gap = -std::numeric_limits<double>::infinity();
  std::vector<double> s_in;
  for (const auto& pts : sets) s_in.push_back(sup_diff(h, h2, pts));
  for (int n = 1; n <= levels + 1; ++n) {
    const double s = s_in[static_cast<std::size_t>(n - 1)];
    r.d_input += std::ldexp(s / (1.0 + s), -n);
  }
  for (int n = 1; n <= levels; ++n) {
    const double s = sup_diff(th, th2, sets[static_cast<std::size_t>(n - 1)]);
    r.d_output += std::ldexp(s / (1.0 + s), -n);
    r.worst_level_gap = std::max(r.worst_level_gap, s - s_in[static_cast<std::size_t>(n)]);
  }
  return r;
}

double constant_section_norm_squared(double t, double radius) {
  // The density of eta_t is rotation invariant; sample it on the h axis.
  const double to_coord = 1.0 / std::sqrt(8.0);
  auto integrand = [t, to_coord](double r) {
    if (t == 0.0) return r;
    const Matrix g = metric_gram(sl2::p_element(r * to_coord, 0.0), t);
    return std::sqrt(g.determinant()) * r;
  };
  return 2.0 * kPi * boost::math::quadrature::gauss<double, 20>::integrate(integrand, 0.0, radius);
}

}  // namespace mackey
