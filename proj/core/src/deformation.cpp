#include "mackey/deformation.hpp"

#include <cmath>

#include "mackey/errors.hpp"
#include "mackey/sl2.hpp"

namespace mackey {
namespace {

void check_t(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("deformation parameter must be >= 0");
}

void check_positive_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("deformation parameter must be > 0");
}

void check_same_t(const DeformedElement& a, const DeformedElement& b) {
  if (a.t != b.t) throw MixedParameters("elements of G_t with different t");
}

}  // namespace

DeformedElement make_deformed(const Matrix& k, const AlgebraElement& v, double t) {
  check_t(t);
  check_square(k);
  const Eigen::Index n = k.rows();
  if ((k.transpose() * k - Matrix::Identity(n, n)).norm() > 1e-10 || k.determinant() < 0.0) {
    throw InvalidArgument("k is not in SO(n)");
  }
  if (v.dim() != n) throw DimensionMismatch("k and v have different sizes");
  if (!v.in_p(1e-10 * std::max(1.0, v.matrix().norm()))) {
    throw InvalidArgument("v is not symmetric");
  }
  return {k, AlgebraElement(v.p_part()), t};
}

DeformedElement deformed_identity(int n, double t) {
  return make_deformed(Matrix::Identity(n, n), AlgebraElement::zero(n), t);
}

Matrix phi_t(const DeformedElement& a) { return mat_exp(a.t * a.v) * a.k; }

DeformedElement phi_t_inverse(const Matrix& g, double t) {
  check_positive_t(t);
  CartanFactors c = cartan_decompose(g);
  return {std::move(c.k), (1.0 / t) * c.v, t};
}

DeformedElement mul_t(const DeformedElement& a, const DeformedElement& b) {
  check_same_t(a, b);
  if (a.t == 0.0) {
    return {a.k * b.k, a.v + AlgebraElement(adjoint(a.k, b.v.matrix())), 0.0};
  }
  return phi_t_inverse(phi_t(a) * phi_t(b), a.t);
}

DeformedElement inverse_t(const DeformedElement& a) {
  const Matrix kt = a.k.transpose();
  if (a.t == 0.0) return {kt, -AlgebraElement(kt * a.v.matrix() * a.k), 0.0};
  return phi_t_inverse(kt * mat_exp(-a.t * a.v), a.t);
}

AlgebraElement act(const Matrix& g, const AlgebraElement& x) {
  return cartan_decompose(g * mat_exp(x)).v;
}

AlgebraElement act_t(const DeformedElement& g, const AlgebraElement& x) {
  if (g.t == 0.0) return g.v + AlgebraElement(adjoint(g.k, x.matrix()));
  const DeformedElement coset{Matrix::Identity(x.dim(), x.dim()), x, g.t};
  return mul_t(g, coset).v;
}

IwasawaComponents iwasawa_components_t(const AlgebraElement& v, double t) {
  check_positive_t(t);
  IwasawaFactors f = iwasawa_decompose(mat_exp(t * v));
  return {std::move(f.k), (1.0 / t) * f.h};
}

AlgebraElement phi_t_differential(const AlgebraElement& x, double t) {
  return AlgebraElement(x.k_part() + t * x.p_part());
}

AlgebraElement phi_t_differential_inverse(const AlgebraElement& x, double t) {
  check_positive_t(t);
  return AlgebraElement(x.k_part() + x.p_part() / t);
}

AlgebraElement adjoint_t(const DeformedElement& g, const AlgebraElement& x) {
  if (g.t == 0.0) {
    const Matrix yk = adjoint(g.k, x.k_part());
    const Matrix yp = adjoint(g.k, x.p_part());
    return AlgebraElement(yk + yp - bracket(yk, g.v.matrix()));
  }
  const Matrix moved = adjoint(phi_t(g), phi_t_differential(x, g.t).matrix());
  return phi_t_differential_inverse(AlgebraElement(moved), g.t);
}

AlgebraElement bracket_t(const AlgebraElement& x, const AlgebraElement& y, double t) {
  check_t(t);
  if (t == 0.0) {
    return AlgebraElement(bracket(x.k_part(), y.k_part()) + bracket(x.k_part(), y.p_part()) +
                          bracket(x.p_part(), y.k_part()));
  }
  const Matrix b = bracket(phi_t_differential(x, t).matrix(), phi_t_differential(y, t).matrix());
  return phi_t_differential_inverse(AlgebraElement(b), t);
}

Matrix point_action_differential(const DeformedElement& g, const AlgebraElement& x,
                                 double step) {
  const int n = x.dim();
  const auto& basis = p_basis(n);
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  auto central = [&](double h) {
    Matrix d(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      const AlgebraElement e(basis[static_cast<std::size_t>(j)] * h);
      const Vector fp = p_coordinates(act_t(g, x + e).matrix());
      const Vector fm = p_coordinates(act_t(g, x - e).matrix());
      d.col(j) = (fp - fm) / (2.0 * h);
    }
    return d;
  };
  return (4.0 * central(0.5 * step) - central(step)) / 3.0;
}

Matrix metric_gram(const AlgebraElement& x, double t) {
  check_t(t);
  const int n = x.dim();
  const Eigen::Index m = static_cast<Eigen::Index>(p_basis(n).size());
  if (t == 0.0) return Matrix::Identity(m, m);
  // Pull back B at the origin by y -> exp_{G_t}(x)^{-1} .t y.
  const DeformedElement back{Matrix::Identity(n, n), -AlgebraElement(x.p_part()), t};
  const Matrix d = point_action_differential(back, x);
  Matrix gram = d.transpose() * d;
  return 0.5 * (gram + gram.transpose());
}

double metric_eval(const AlgebraElement& x, const AlgebraElement& xi, const AlgebraElement& eta,
                   double t) {
  if (xi.dim() != x.dim() || eta.dim() != x.dim()) {
    throw DimensionMismatch("tangent vectors and base point differ in size");
  }
  if (t == 0.0) return killing_form(xi.p_part(), eta.p_part());
  const Vector a = p_coordinates(xi.p_part());
  const Vector b = p_coordinates(eta.p_part());
  return a.dot(metric_gram(x, t) * b);
}

double metric_curvature_sl2(double x, double y, double t, double step) {
  // Work in B-orthonormal coordinates (u, w) = sqrt(8) (x, y).
  const double c = std::sqrt(8.0);
  const double u0 = c * x;
  const double w0 = c * y;
  auto gram = [&](double u, double w) {
    return metric_gram(sl2::p_element(u / c, w / c), t);
  };
  const double h = step;
  const Matrix g00 = gram(u0, w0);
  const Matrix gu_p = gram(u0 + h, w0), gu_m = gram(u0 - h, w0);
  const Matrix gw_p = gram(u0, w0 + h), gw_m = gram(u0, w0 - h);
  const Matrix gpp = gram(u0 + h, w0 + h), gpm = gram(u0 + h, w0 - h);
  const Matrix gmp = gram(u0 - h, w0 + h), gmm = gram(u0 - h, w0 - h);

  const double e = g00(0, 0), f = g00(0, 1), g = g00(1, 1);
  auto d_u = [&](int i, int j) { return (gu_p(i, j) - gu_m(i, j)) / (2 * h); };
  auto d_w = [&](int i, int j) { return (gw_p(i, j) - gw_m(i, j)) / (2 * h); };
  auto d_uu = [&](int i, int j) { return (gu_p(i, j) - 2 * g00(i, j) + gu_m(i, j)) / (h * h); };
  auto d_ww = [&](int i, int j) { return (gw_p(i, j) - 2 * g00(i, j) + gw_m(i, j)) / (h * h); };
  auto d_uw = [&](int i, int j) {
    return (gpp(i, j) - gpm(i, j) - gmp(i, j) + gmm(i, j)) / (4 * h * h);
  };

  const double eu = d_u(0, 0), ew = d_w(0, 0);
  const double fu = d_u(0, 1), fw = d_w(0, 1);
  const double gu = d_u(1, 1), gw = d_w(1, 1);
  const double eww = d_ww(0, 0), fuw = d_uw(0, 1), guu = d_uu(1, 1);

  Eigen::Matrix3d m1;
  m1 << -0.5 * eww + fuw - 0.5 * guu, 0.5 * eu, fu - 0.5 * ew,
      fw - 0.5 * gu, e, f,
      0.5 * gw, f, g;
  Eigen::Matrix3d m2;
  m2 << 0.0, 0.5 * ew, 0.5 * gu,
      0.5 * ew, e, f,
      0.5 * gu, f, g;
  const double det = e * g - f * f;
  return (m1.determinant() - m2.determinant()) / (det * det);
}

std::vector<OrbitSample> adjoint_orbit_map(const AlgebraElement& lambda0, double t,
                                           const std::vector<DeformedElement>& samples) {
  check_positive_t(t);
  const AlgebraElement start = phi_t_differential_inverse(lambda0, t);
  const double ref = (lambda0.matrix() * lambda0.matrix()).trace();
  std::vector<OrbitSample> out;
  out.reserve(samples.size());
  for (const DeformedElement& g : samples) {
    if (g.t != t) throw MixedParameters("orbit sample not at the requested parameter");
    AlgebraElement point = adjoint_t(g, start);
    AlgebraElement image = phi_t_differential(point, t);
    const double residual = std::abs((image.matrix() * image.matrix()).trace() - ref);
    out.push_back({std::move(point), std::move(image), residual});
  }
  return out;
}

AlgebraElement tau_map(const AlgebraElement& x) {
  if (x.dim() != 2) throw DimensionUnsupported("tau is defined for SL(2) only");
  const sl2::P2 p = sl2::coords(x.p_part());
  const double r = b_norm(x.p_part()) / std::sqrt(2.0);
  const double f = r > 1e-8 ? std::sinh(r) / r : 1.0 + r * r / 6.0;
  return sl2::p_element(-f * p.y, f * p.x);
}

AlgebraElement vertical_projection(const AlgebraElement& x) {
  if (x.dim() != 2) throw DimensionUnsupported("vertical projection is defined for SL(2) only");
  const Matrix moved = adjoint(mat_exp(x), 0.5 * sl2::w_mat());
  return AlgebraElement(AlgebraElement(moved).p_part());
}

}  // namespace mackey
