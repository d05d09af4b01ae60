#include "mackey/principal_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "mackey/errors.hpp"

namespace mackey {
namespace {

constexpr double kPi = std::numbers::pi;

double ell_of(const AlgebraElement& lambda) {
  if (lambda.dim() != 2) throw DimensionUnsupported("waves are realized for SL(2)");
  if (!lambda.in_a(1e-12 * std::max(1.0, lambda.matrix().norm()))) {
    throw NotDiagonal("lambda must lie in a");
  }
  return sl2::functional_value(lambda);
}

// Thomas algorithm for the tridiagonal system with unit off-diagonals.
std::vector<Complex> solve_unit_tridiagonal(const std::vector<double>& diag,
                                            const std::vector<Complex>& rhs) {
  const std::size_t n = diag.size();
  std::vector<double> c(n);
  std::vector<Complex> d(n);
  c[0] = 1.0 / diag[0];
  d[0] = rhs[0] / diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double m = diag[i] - c[i - 1];
    c[i] = 1.0 / m;
    d[i] = (rhs[i] - d[i - 1]) / m;
  }
  std::vector<Complex> x(n);
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

// Iwasawa data of g^{-1} u_j for every grid angle: (angle of kappa, a-coordinate).
struct IwasawaSample {
  double angle;
  double a;
};

IwasawaSample iwasawa_sample(const Matrix& m) {
  const IwasawaFactors f = iwasawa_decompose(m);
  return {sl2::angle_of(f.k), f.h.matrix()(0, 0)};
}

double grid_angle(std::size_t j, std::size_t n) { return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n); }

void check_compact_input(const Matrix& g, const SampledCircleFunction& f) {
  if (g.rows() != 2) throw DimensionUnsupported("compact picture is realized for SL(2)");
  validate_circle_function(f);
}

}  // namespace

int PGrid::side() const {
  if (!(step > 0.0) || !(box_max > box_min)) throw InvalidArgument("invalid grid box or step");
  return static_cast<int>(std::lround((box_max - box_min) / step)) + 1;
}

std::vector<sl2::P2> PGrid::points() const {
  const int n = side();
  std::vector<sl2::P2> pts;
  pts.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) pts.push_back({box_min + i * step, box_min + j * step});
  }
  return pts;
}

Complex contracted_wave(const WaveSpec& spec, sl2::P2 v) {
  const double ell = ell_of(spec.lambda);
  const sl2::P2 w = sl2::rotate(v, spec.b);
  if (spec.t == 0.0) return std::polar(1.0, ell * w.x);
  if (!(spec.t > 0.0)) throw InvalidArgument("deformation parameter must be >= 0");
  const double j = sl2::iwasawa_a(sl2::scale(w, spec.t)) / spec.t;
  return std::exp(Complex(spec.t, ell) * j);
}

Complex contracted_wave_generic(const WaveSpec& spec, const AlgebraElement& v) {
  const Matrix b = sl2::rotation(spec.b);
  const Matrix rho = sl2::functional(1.0).matrix();
  const AlgebraElement w(adjoint(b, v.matrix()));
  if (spec.t == 0.0) return std::polar(1.0, killing_form(spec.lambda, w));
  const AlgebraElement j = iwasawa_components_t(w, spec.t).a_part;
  return std::exp(Complex(spec.t * killing_form(rho, j.matrix()), killing_form(spec.lambda, j)));
}

std::vector<Complex> synthesize(const BoundaryFunction& f, const AlgebraElement& lambda, double t,
                                const std::vector<sl2::P2>& points) {
  const std::size_t nb = f.values.size();
  if (nb == 0) throw InvalidArgument("empty boundary function");
  std::vector<Complex> out(points.size());
  WaveSpec spec{lambda, 0.0, t};
  for (std::size_t p = 0; p < points.size(); ++p) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < nb; ++j) {
      if (f.values[j] == Complex(0.0)) continue;
      spec.b = kPi * static_cast<double>(j) / static_cast<double>(nb);
      acc += contracted_wave(spec, points[p]) * f.values[j];
    }
    out[p] = acc / static_cast<double>(nb);
  }
  return out;
}

PGridFunction synthesize(const BoundaryFunction& f, const AlgebraElement& lambda, double t,
                         const PGrid& grid) {
  return {grid, synthesize(f, lambda, t, grid.points())};
}

PGridFunction helgason_contraction_image(const BoundaryFunction& f, const AlgebraElement& lambda,
                                         double t, const PGrid& grid) {
  if (!(t > 0.0)) throw InvalidArgument("contraction parameter must be > 0");
  std::vector<sl2::P2> pts = grid.points();
  for (auto& p : pts) p = sl2::scale(p, t);
  return {grid, synthesize(f, (1.0 / t) * lambda, 1.0, pts)};
}

PeriodicSpline::PeriodicSpline(const std::vector<Complex>& samples) : f_(samples) {
  const std::size_t n = f_.size();
  if (n < 3) throw InvalidArgument("spline needs at least three samples");
  h_ = 2.0 * kPi / static_cast<double>(n);
  std::vector<Complex> rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    rhs[j] = 6.0 * (f_[(j + 1) % n] - 2.0 * f_[j] + f_[(j + n - 1) % n]) / (h_ * h_);
  }
  // Cyclic system tridiag(1, 4, 1) with unit corners via Sherman-Morrison.
  const double gamma = -4.0;
  std::vector<double> diag(n, 4.0);
  diag[0] = 4.0 - gamma;
  diag[n - 1] = 4.0 - 1.0 / gamma;
  const std::vector<Complex> x = solve_unit_tridiagonal(diag, rhs);
  std::vector<Complex> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = 1.0;
  const std::vector<Complex> z = solve_unit_tridiagonal(diag, u);
  const Complex fact = (x[0] + x[n - 1] / gamma) / (1.0 + z[0] + z[n - 1] / gamma);
  m_.resize(n);
  for (std::size_t j = 0; j < n; ++j) m_[j] = x[j] - fact * z[j];
}

Complex PeriodicSpline::operator()(double theta) const {
  const double n = static_cast<double>(f_.size());
  double s = theta / h_;
  s -= n * std::floor(s / n);
  double base = std::floor(s);
  double u = s - base;
  std::size_t j = static_cast<std::size_t>(base);
  if (j >= f_.size()) {
    j = 0;
    u = 0.0;
  }
  const std::size_t k = (j + 1) % f_.size();
  const double v = 1.0 - u;
  return v * f_[j] + u * f_[k] + (h_ * h_ / 6.0) * ((v * v * v - v) * m_[j] + (u * u * u - u) * m_[k]);
}

double rho_t_sl2(double t) {
  const std::vector<Matrix> basis = {sl2::h_mat(), sl2::s_mat(), sl2::w_mat()};
  const AlgebraElement h(sl2::h_mat());
  Eigen::Matrix3d ad;
  for (int c = 0; c < 3; ++c) {
    const Matrix b = bracket_t(h, AlgebraElement(basis[static_cast<std::size_t>(c)]), t).matrix();
    ad(0, c) = b(0, 0);
    ad(1, c) = 0.5 * (b(0, 1) + b(1, 0));
    ad(2, c) = 0.5 * (b(0, 1) - b(1, 0));
  }
  const Eigen::Vector3cd ev = Eigen::EigenSolver<Eigen::Matrix3d>(ad).eigenvalues();
  double top = 0.0;
  for (int i = 0; i < 3; ++i) top = std::max(top, ev(i).real());
  // One positive restricted root of multiplicity one.
  return 0.5 * top;
}

SampledCircleFunction compact_operator_direct(const Matrix& g, const AlgebraElement& lambda,
                                              const SampledCircleFunction& f) {
  check_compact_input(g, f);
  const double ell = ell_of(lambda);
  const PeriodicSpline spline(f.values);
  const Matrix ginv = g.inverse();
  const std::size_t n = f.size();
  SampledCircleFunction out{std::vector<Complex>(n), f.parity};
  for (std::size_t j = 0; j < n; ++j) {
    const IwasawaSample s = iwasawa_sample(ginv * sl2::rotation(grid_angle(j, n)));
    out.values[j] = std::exp(Complex(-1.0, -ell) * s.a) * spline(s.angle);
  }
  return out;
}

CompactPair compact_operator(const Matrix& g, const AlgebraElement& lambda, Parity parity,
                             const SampledCircleFunction& f, double t) {
  if (!(t > 0.0)) throw InvalidArgument("compact operator needs t > 0");
  SampledCircleFunction in = f;
  if (in.parity && *in.parity != parity) throw InvalidArgument("function parity does not match");
  in.parity = parity;
  check_compact_input(g, in);
  const double ell = ell_of(lambda);

  // (a) inside G_t: gamma^{-1} .t u, then kappa_t = kappa o phi_t and a_t = a o phi_t / t.
  const DeformedElement gamma = phi_t_inverse(g, t);
  const DeformedElement gamma_inv = inverse_t(gamma);
  const double rho_t = rho_t_sl2(t);
  const PeriodicSpline spline(in.values);
  const std::size_t n = in.size();
  SampledCircleFunction a{std::vector<Complex>(n), parity};
  for (std::size_t j = 0; j < n; ++j) {
    const DeformedElement u{sl2::rotation(grid_angle(j, n)), AlgebraElement::zero(2), t};
    const IwasawaSample s = iwasawa_sample(phi_t(mul_t(gamma_inv, u)));
    const double a_t = s.a / t;
    a.values[j] = std::exp(Complex(-rho_t, -ell) * a_t) * spline(s.angle);
  }

  // (b) the undeformed operator with lambda / t.
  SampledCircleFunction b = compact_operator_direct(g, (1.0 / t) * lambda, in);
  return {std::move(a), std::move(b)};
}

double sup_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("sample vectors differ in length");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

ConvergenceReport motion_limit_check(const DeformedElement& g0, const AlgebraElement& lambda,
                                     Parity parity, const SampledCircleFunction& f,
                                     const std::vector<double>& t_list) {
  if (g0.t != 0.0) throw InvalidArgument("expected an element of G_0");
  SampledCircleFunction in = f;
  in.parity = parity;
  const SampledCircleFunction target = pi0_operator(g0, MackeyDatum{lambda, parity}, in);
  std::vector<ConvergenceRow> rows;
  for (double t : t_list) {
    const DeformedElement gt{g0.k, g0.v, t};
    const SampledCircleFunction approx = compact_operator_direct(phi_t(gt), (1.0 / t) * lambda, in);
    rows.push_back({t, sup_distance(approx.values, target.values)});
  }
  return make_report("motion group limit of compact operators", std::move(rows));
}

QuasiRegularReport quasi_regular_check(const DeformedElement& g0, const SampledCircleFunction& f,
                                       double t_small) {
  validate_circle_function(f);
  const std::size_t n = f.size();
  const double pos = sl2::angle_of(g0.k) * static_cast<double>(n) / (2.0 * kPi);
  if (std::abs(pos - std::round(pos)) > 1e-9) throw OffGridRotation("k is not a grid rotation");
  const long m = std::lround(pos);
  std::vector<Complex> rotated(n);
  for (std::size_t j = 0; j < n; ++j) {
    const long src = ((static_cast<long>(j) - m) % static_cast<long>(n) + static_cast<long>(n)) % static_cast<long>(n);
    rotated[j] = f.values[static_cast<std::size_t>(src)];
  }
  const DeformedElement gt{g0.k, g0.v, t_small};
  const AlgebraElement zero = AlgebraElement::zero(2);
  const SampledCircleFunction approx = compact_operator_direct(phi_t(gt), zero, f);

  QuasiRegularReport r;
  r.limit_residual = sup_distance(approx.values, rotated);
  Complex num = 0.0;
  double den = 0.0, norm_r = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    num += std::conj(f.values[j]) * rotated[j];
    den += std::norm(f.values[j]);
    norm_r += std::norm(rotated[j]);
  }
  const Complex c = num / den;
  double res = 0.0;
  for (std::size_t j = 0; j < n; ++j) res += std::norm(rotated[j] - c * f.values[j]);
  r.scalar_distance = std::sqrt(res / norm_r);
  return r;
}

HelgasonReport helgason_contraction_check(const BoundaryFunction& f, const AlgebraElement& lambda,
                                          const std::vector<double>& t_list, const PGrid& grid) {
  const std::vector<sl2::P2> pts = grid.points();
  const std::vector<Complex> limit = synthesize(f, lambda, 0.0, pts);
  std::vector<ConvergenceRow> rows;
  for (double t : t_list) rows.push_back({t, sup_distance(synthesize(f, lambda, t, pts), limit)});

  HelgasonReport r;
  r.convergence = make_report("Helgason synthesis contraction", std::move(rows));

  if (ell_of(lambda) == 0.0) {
    Complex mean = 0.0;
    for (const Complex& v : f.values) mean += v;
    mean /= static_cast<double>(f.values.size());
    for (const Complex& v : limit) r.constant_residual = std::max(r.constant_residual, std::abs(v - mean));
  }

  // Shifting F by m grid steps equals reading the synthesis at Ad(b_m) v.
  const std::size_t nb = f.values.size();
  const std::size_t m = std::max<std::size_t>(1, nb / 8);
  BoundaryFunction shifted{std::vector<Complex>(nb)};
  for (std::size_t j = 0; j < nb; ++j) shifted.values[j] = f.values[(j + nb - m) % nb];
  const double bm = kPi * static_cast<double>(m) / static_cast<double>(nb);
  std::vector<sl2::P2> turned = pts;
  for (auto& p : turned) p = sl2::rotate(p, bm);
  r.equivariance_residual =
      sup_distance(synthesize(shifted, lambda, 0.0, pts), synthesize(f, lambda, 0.0, turned));
  return r;
}

}  // namespace mackey
