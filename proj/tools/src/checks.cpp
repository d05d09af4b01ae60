#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lab.hpp"
#include "mackey/discrete_series.hpp"
#include "mackey/errors.hpp"
#include "mackey/graded.hpp"
#include "mackey/principal_series.hpp"
#include "mackey/verma.hpp"

namespace mackey::lab {
namespace {

constexpr double kPi = std::numbers::pi;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex() {
    std::normal_distribution<double> n;
    const double re = n(rng_);
    return {re, n(rng_)};
  }

  Matrix sl(int n) {
    for (;;) {
      Matrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = uniform(-2, 2);
      double det = m.determinant();
      if (std::abs(det) < 0.05) continue;
      if (det < 0) {
        m.col(0) *= -1.0;
        det = -det;
      }
      return m / std::pow(det, 1.0 / n);
    }
  }
  AlgebraElement p(int n, double scale) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = uniform(-scale, scale);
    m = 0.5 * (m + m.transpose()).eval();
    m.diagonal().array() -= m.trace() / n;
    return AlgebraElement(m);
  }
  Matrix so(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = uniform(-2, 2);
    return mat_exp(AlgebraElement(0.5 * (m - m.transpose())));
  }
  /// Uniform point of the B-ball of the given radius in p of sl(2).
  sl2::P2 ball2(double b_radius) {
    const double r = b_radius / (2.0 * std::sqrt(2.0)) * std::sqrt(uniform(0, 1));
    const double a = uniform(0, 2 * kPi);
    return {r * std::cos(a), r * std::sin(a)};
  }
  SampledCircleFunction circle(int n, Parity parity) {
    std::vector<Complex> coef;
    std::vector<int> modes;
    for (int k = -6; k <= 6; ++k) {
      if ((parity == Parity::even) == (k % 2 == 0)) {
        modes.push_back(k);
        coef.push_back(complex() / (1.0 + k * k));
      }
    }
    SampledCircleFunction f{std::vector<Complex>(static_cast<std::size_t>(n)), parity};
    for (int j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t q = 0; q < modes.size(); ++q) acc += coef[q] * std::polar(1.0, modes[q] * 2 * kPi * j / n);
      f.values[static_cast<std::size_t>(j)] = acc;
    }
    // Absolute tolerances assume unit sup norm.
    double sup = 0.0;
    for (const auto& v : f.values) sup = std::max(sup, std::abs(v));
    for (auto& v : f.values) v /= sup;
    return f;
  }
  BoundaryFunction boundary(int nb) {
    std::vector<Complex> coef;
    for (int k = -4; k <= 4; ++k) coef.push_back(complex() / (1.0 + k * k));
    BoundaryFunction f{std::vector<Complex>(static_cast<std::size_t>(nb))};
    for (int j = 0; j < nb; ++j) {
      Complex acc = 0.0;
      for (int k = -4; k <= 4; ++k) acc += coef[static_cast<std::size_t>(k + 4)] * std::polar(1.0, 2.0 * k * kPi * j / nb);
      f.values[static_cast<std::size_t>(j)] = acc;
    }
    return f;
  }
  HoloSeries series(int weight, int truncation) {
    HoloSeries f{weight, {}};
    double s = 1.0;
    for (int m = 0; m <= truncation; ++m) {
      f.coeffs.push_back(s * complex());
      s *= 0.6;
    }
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

CheckResult residual_check(std::string id, std::string what, std::vector<ConvergenceRow> rows, double tol) {
  CheckResult r;
  r.statement_id = std::move(id);
  r.check = std::move(what);
  r.rows = std::move(rows);
  r.tolerance = tol;
  r.policy = "max error <= tolerance";
  r.pass = true;
  for (const auto& row : r.rows) r.pass = r.pass && row.error <= tol;
  return r;
}

CheckResult order_check(std::string id, std::string what, std::vector<ConvergenceRow> rows, double lo, double hi) {
  const ConvergenceReport rep = make_report(what, std::move(rows));
  CheckResult r;
  r.statement_id = std::move(id);
  r.check = std::move(what);
  r.rows = rep.rows;
  if (std::isfinite(rep.fitted_order)) r.fitted_order = rep.fitted_order;
  r.tolerance = lo;
  r.policy = "strictly decreasing, fitted order in [" + tag(lo) + ", " + tag(hi) + "]";
  r.pass = strictly_decreasing(rep.rows) && r.fitted_order && *r.fitted_order >= lo && *r.fitted_order <= hi;
  return r;
}

CheckResult flag_check(std::string id, std::string what, int failures) {
  CheckResult r;
  r.statement_id = std::move(id);
  r.check = std::move(what);
  r.rows.push_back({0.0, static_cast<double>(failures)});
  r.tolerance = 0.0;
  r.policy = "exact: number of failing instances == 0";
  r.pass = failures == 0;
  return r;
}

std::vector<double> dyadic(int k_lo, int k_hi) {
  std::vector<double> ts;
  for (int k = k_lo; k <= k_hi; ++k) ts.push_back(std::ldexp(1.0, -k));
  return ts;
}

std::vector<sl2::P2> b_ball_points(double b_radius, int per_axis) {
  const double r = b_radius / (2.0 * std::sqrt(2.0));
  std::vector<sl2::P2> pts;
  for (int i = 0; i < per_axis; ++i)
    for (int j = 0; j < per_axis; ++j) {
      const sl2::P2 p{-r + 2 * r * i / (per_axis - 1), -r + 2 * r * j / (per_axis - 1)};
      if (sl2::radius(p) <= r) pts.push_back(p);
    }
  return pts;
}

// ---------------------------------------------------------------- deformation

std::vector<CheckResult> deformation_suite(Sampler& s) {
  std::vector<CheckResult> out;

  {
    std::vector<ConvergenceRow> rows;
    for (double t : {1.0, 0.5, 0.1}) {
      double worst = 0.0;
      for (int i = 0; i < 50; ++i) {
        const Matrix g = s.sl(3);
        const AlgebraElement x = s.p(3, 1.0);
        const AlgebraElement lhs = (1.0 / t) * act(g, x);
        const AlgebraElement rhs = act_t(phi_t_inverse(g, t), (1.0 / t) * x);
        worst = std::max(worst, (lhs.matrix() - rhs.matrix()).norm());
      }
      rows.push_back({t, worst});
    }
    out.push_back(residual_check(statement_for("equivariance"), "rescaled point action is G_t equivariant", rows, 1e-8));
  }

  {
    const auto pts = b_ball_points(2.0, 9);
    std::vector<DeformedElement> g0s;
    for (int i = 0; i < 3; ++i) g0s.push_back(make_deformed(s.so(2), s.p(2, 1.0), 0.0));
    std::vector<ConvergenceRow> rows;
    for (double t : dyadic(0, 6)) {
      double worst = 0.0;
      for (const auto& g0 : g0s) {
        const DeformedElement gt{g0.k, g0.v, t};
        for (const auto& p : pts) {
          const AlgebraElement x = sl2::p_element(p);
          worst = std::max(worst, (act_t(gt, x).matrix() - act_t(g0, x).matrix()).norm());
        }
      }
      rows.push_back({t, worst});
    }
    // The leading deviation is quadratic in t.
    out.push_back(order_check(statement_for("group-law"), "point action of G_t tends to the motion group action", rows, 0.9, 2.5));
  }

  {
    const AlgebraElement lambda0(sl2::w_mat());
    std::vector<ConvergenceRow> rows;
    for (double t : {1.0, 0.5, 0.25}) {
      std::vector<DeformedElement> samples;
      for (int i = 0; i < 100; ++i) samples.push_back(make_deformed(s.so(2), s.p(2, 1.5), t));
      double worst = 0.0;
      for (const auto& o : adjoint_orbit_map(lambda0, t, samples)) worst = std::max(worst, o.trace_residual);
      rows.push_back({t, worst});
    }
    out.push_back(residual_check(statement_for("orbits"), "transported orbit points keep tr(X^2)", rows, 1e-8));
  }

  {
    const auto pts = b_ball_points(2.0, 9);
    std::vector<ConvergenceRow> a_rows, k_rows;
    for (double t : dyadic(0, 6)) {
      double wa = 0.0, wk = 0.0;
      for (const auto& p : pts) {
        const AlgebraElement v = sl2::p_element(p);
        const IwasawaComponents c = iwasawa_components_t(v, t);
        wa = std::max(wa, b_norm(c.a_part.matrix() - project_to_a(v).matrix()));
        wk = std::max(wk, std::abs(sl2::angle_of(c.k_part)));
      }
      a_rows.push_back({t, wa});
      k_rows.push_back({t, wk});
    }
    out.push_back(order_check(statement_for("iwasawa-limit"), "rescaled Iwasawa a-part tends to the projection onto a", a_rows, 0.9, 1e9));
    out.push_back(order_check(statement_for("iwasawa-limit"), "rescaled Iwasawa K-part tends to the identity", k_rows, 0.9, 1e9));
  }
  return out;
}

// ----------------------------------------------------------------- principal

std::vector<CheckResult> principal_suite(Sampler& s) {
  std::vector<CheckResult> out;

  {
    std::vector<ConvergenceRow> rows;
    for (double t : {1.0, 0.5, 0.25}) {
      double worst = 0.0;
      for (int i = 0; i < 10; ++i) {
        const Parity p = i % 2 == 0 ? Parity::even : Parity::odd;
        const CompactPair pair = compact_operator(s.sl(2), sl2::functional(s.uniform(-8, 8)), p, s.circle(128, p), t);
        worst = std::max(worst, sup_distance(pair.via_deformed.values, pair.via_rescaled.values));
      }
      rows.push_back({t, worst});
    }
    out.push_back(residual_check(statement_for("compact-identity"), "deformed compact operator equals the rescaled one", rows, 1e-9));
  }

  {
    const AlgebraElement lambda = sl2::functional(30.0);
    const auto pts = PGrid{-1.5, 1.5, 1.0 / 16}.points();
    std::vector<ConvergenceRow> rows;
    for (double t : dyadic(0, 3)) {
      double worst = 0.0;
      for (const auto& p : pts)
        worst = std::max(worst, std::abs(contracted_wave({lambda, 0.0, t}, p) - contracted_wave({lambda, 0.0, 0.0}, p)));
      rows.push_back({t, worst});
    }
    CheckResult r = order_check(statement_for("wave-limit"), "contracted wave tends to the plane wave", rows, -1e9, 1e9);
    r.policy = "strictly decreasing";
    out.push_back(std::move(r));
  }

  {
    std::vector<ConvergenceRow> rows;
    std::vector<DeformedElement> g0s;
    std::vector<SampledCircleFunction> fs;
    // v is drawn from the B-ball of radius 1/2; the error constant grows with |v| and |f'|.
    for (int i = 0; i < 10; ++i)
      g0s.push_back(make_deformed(sl2::rotation(2 * kPi * s.integer(0, 127) / 128), sl2::p_element(s.ball2(0.5)), 0.0));
    for (int i = 0; i < 5; ++i) fs.push_back(s.circle(128, Parity::even));
    const auto ts = dyadic(0, 6);
    std::vector<double> worst(ts.size(), 0.0);
    for (const auto& g0 : g0s)
      for (const auto& f : fs) {
        const ConvergenceReport rep = motion_limit_check(g0, sl2::functional(2.0), Parity::even, f, ts);
        for (std::size_t k = 0; k < ts.size(); ++k) worst[k] = std::max(worst[k], rep.rows[k].error);
      }
    for (std::size_t k = 0; k < ts.size(); ++k) rows.push_back({ts[k], worst[k]});
    CheckResult r = order_check(statement_for("motion-limit"), "compact operators tend to the motion group operator", rows, 0.9, 1e9);
    r.pass = r.pass && rows.back().error <= 1e-2;
    r.policy += ", error at smallest t <= 1e-2";
    out.push_back(std::move(r));
  }

  const PGrid grid{-1.5, 1.5, 0.25};
  {
    const BoundaryFunction f = s.boundary(256);
    const HelgasonReport rep = helgason_contraction_check(f, sl2::functional(30.0), dyadic(0, 6), grid);
    out.push_back(order_check(statement_for("synthesis-limit"), "Helgason synthesis contracts to the Fourier synthesis",
                              rep.convergence.rows, 0.9, 1.5));
  }
  {
    const BoundaryFunction f = s.boundary(256);
    const HelgasonReport rep = helgason_contraction_check(f, sl2::functional(0.0), dyadic(0, 4), grid);
    out.push_back(residual_check(statement_for("zero-frequency"), "zero-frequency limit is the mean of the boundary function",
                                 {{0.0, rep.constant_residual}}, 1e-8));
    out.push_back(residual_check(statement_for("zero-frequency"), "limit of the synthesis is K-equivariant",
                                 {{0.0, rep.equivariance_residual}}, 1e-8));
  }
  {
    const SampledCircleFunction f = s.circle(128, Parity::even);
    const DeformedElement g0 = make_deformed(sl2::rotation(2 * kPi * 5 / 128), sl2::p_element(0.5, 0.25), 0.0);
    const double t_small = 1e-8;
    const QuasiRegularReport rep = quasi_regular_check(g0, f, t_small);
    CheckResult r = residual_check(statement_for("quasi-regular"), "compact-picture limit is the quasi-regular action",
                                   {{t_small, rep.limit_residual}}, 1e-6);
    r.rows.push_back({0.0, rep.scalar_distance});
    r.pass = rep.limit_residual <= 1e-6 && rep.scalar_distance > 0.1;
    r.policy = "limit residual <= 1e-6 and distance to scalar action > 0.1 (second row)";
    out.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------------------------ discrete

double sup_over(const Section& a, const Section& b, const std::vector<sl2::P2>& pts) {
  double m = 0.0;
  for (const auto& p : pts) m = std::max(m, std::abs(a(p) - b(p)));
  return m;
}

std::vector<CheckResult> discrete_suite(Sampler& s) {
  std::vector<CheckResult> out;
  const auto pts = ball_points(1.0, 0.25);
  std::vector<HoloSeries> fs;
  for (int weight = 2; weight <= 5; ++weight) fs.push_back(s.series(weight, 16));

  {
    std::vector<ConvergenceRow> rows;
    for (double t : dyadic(0, 6)) {
      double worst = 0.0;
      for (const auto& f : fs) {
        const Section sec = section(f);
        const Complex f0 = sec({0, 0});
        worst = std::max(worst, sup_over(zoom(sec, t), [f0](sl2::P2) { return f0; }, pts));
      }
      rows.push_back({t, worst});
    }
    out.push_back(order_check(statement_for("zoom-limit"), "zoomed sections tend to their value at the origin", rows, 0.9, 1e9));
  }

  {
    std::vector<ConvergenceRow> rows;
    for (double t : {0.5, 0.125}) {
      double worst = 0.0;
      for (const auto& f : fs) {
        const Section sec = section(f);
        for (int m = f.weight; m <= f.weight + 4; m += 2)
          worst = std::max(worst, sup_over(ktype_project(zoom(sec, t), f.weight, m, 128),
                                           zoom(ktype_project(sec, f.weight, m, 128), t), pts));
      }
      rows.push_back({t, worst});
    }
    out.push_back(residual_check(statement_for("ktype-zoom"), "K-type projection commutes with zooming", rows, 1e-9));
  }

  {
    double worst = 0.0;
    for (const auto& f : fs) {
      HoloSeries g = f;
      g.coeffs[0] = 0.0;
      for (int m = f.weight - 4; m <= f.weight + 12; ++m)
        worst = std::max(worst, std::abs(ktype_project(section(g), f.weight, m)({0, 0})));
      for (int m = f.weight - 4; m <= f.weight + 12; ++m)
        if (m != f.weight) worst = std::max(worst, std::abs(ktype_project(section(f), f.weight, m)({0, 0})));
    }
    out.push_back(residual_check(statement_for("ktype-origin"), "non-minimal K-types vanish at the origin", {{0.0, worst}}, 1e-10));
  }

  {
    const double theta = s.uniform(-kPi, kPi);
    const DeformedElement rot = make_deformed(sl2::rotation(theta), AlgebraElement::zero(2), 0.0);
    const DeformedElement trans = make_deformed(Matrix::Identity(2, 2), s.p(2, 0.4), 0.0);
    std::vector<ConvergenceRow> rot_rows, trans_rows;
    // Below t = 1/8 the error is in its linear regime.
    for (double t : dyadic(3, 9)) {
      double wr = 0.0, wt = 0.0;
      for (const auto& f : fs) {
        const Section sec = section(f);
        const Complex f0 = sec({0, 0});
        const Complex chi = std::polar(1.0, f.weight * theta) * f0;
        wr = std::max(wr, sup_over(contracted_action(rot, sec, f.weight, t), [chi](sl2::P2) { return chi; }, pts));
        wt = std::max(wt, sup_over(contracted_action(trans, sec, f.weight, t), [f0](sl2::P2) { return f0; }, pts));
      }
      rot_rows.push_back({t, wr});
      trans_rows.push_back({t, wt});
    }
    out.push_back(order_check(statement_for("contracted-action"), "rotations act on the limit by the minimal K-character", rot_rows, 0.9, 1e9));
    out.push_back(order_check(statement_for("contracted-action"), "translations act trivially on the limit", trans_rows, 0.9, 1e9));

    double gap = -1e300;
    double ratio = 0.0;
    for (int i = 0; i < 4; ++i) {
      const auto& f = fs[static_cast<std::size_t>(i)];
      const DeformedElement g0 = make_deformed(s.so(2), s.p(2, 0.3), 0.0);
      const LipschitzReport rep =
          lipschitz_check(g0, section(f), section(s.series(f.weight, 16)), f.weight, s.uniform(0.1, 1.0));
      gap = std::max(gap, rep.worst_level_gap);
      ratio = std::max(ratio, rep.d_output / rep.d_input);
    }
    CheckResult r = residual_check(statement_for("contracted-action"), "contracted operators are Lipschitz level by level",
                                   {{0.0, std::max(gap, 0.0)}, {0.0, ratio}}, 1e-12);
    r.pass = gap <= 1e-12 && ratio <= 2.0;
    r.policy = "per-level gap <= 1e-12 (first row), distance ratio <= 2 (second row)";
    out.push_back(std::move(r));
  }
  return out;
}

// -------------------------------------------------------------------- findim

std::vector<CheckResult> findim_suite(Sampler& s) {
  std::vector<CheckResult> out;
  {
    int failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
      GradedSpace v;
      int total = 0;
      const int target = s.integer(2, 12);
      while (total < target) {
        const int d = std::min(s.integer(1, 3), target - total);
        v.dims.push_back(d);
        total += d;
      }
      const int codim = s.integer(1, std::min(6, total));
      std::vector<RVector> basis;
      while (static_cast<int>(basis.size()) < total - codim) {
        RVector x(static_cast<std::size_t>(total), Rational(0));
        for (auto& c : x)
          if (s.integer(0, 1) == 1) c = Rational(s.integer(-4, 4), s.integer(1, 3));
        std::vector<RVector> next = basis;
        next.push_back(x);
        if (rank(next) == static_cast<int>(next.size())) basis = std::move(next);
      }
      const auto comp = homogeneous_complement(v, basis);
      bool ok = static_cast<int>(comp.size()) == codim;
      for (const auto& e : comp) ok = ok && is_homogeneous(v, e);
      std::vector<RVector> all = basis;
      all.insert(all.end(), comp.begin(), comp.end());
      ok = ok && rank(all) == total;
      failures += ok ? 0 : 1;
    }
    out.push_back(flag_check(statement_for("complements"), "homogeneous complements of random graded subspaces", failures));
  }
  {
    int limit_failures = 0, module_failures = 0;
    for (int mu = 0; mu <= 6; ++mu) {
      const FdLimitReport r = fd_contraction_limit(mu);
      if (!(r.limits_agree && r.x_limits_vanish && r.limit_is_degree0_block)) ++limit_failures;
      if (!(r.dim_f == mu + 1 && r.dim_f0 == 1 && r.limit_weight == Rational(mu))) ++module_failures;
    }
    out.push_back(flag_check(statement_for("fd-limits"), "contraction limits of the finite-dimensional quotients exist", limit_failures));
    out.push_back(flag_check(statement_for("fd-module"), "limit space is one K-type of weight mu", module_failures));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"deformation", "principal", "discrete", "findim", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  // One stream per suite so that "all" reproduces the individual suites.
  auto stream = [seed](std::uint64_t salt) { return Sampler(seed * 0x9E3779B97F4A7C15ULL + salt); };
  std::vector<CheckResult> out;
  auto append = [&out](std::vector<CheckResult> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  const bool all = suite == "all";
  if (all || suite == "deformation") {
    Sampler s = stream(1);
    append(deformation_suite(s));
  }
  if (all || suite == "principal") {
    Sampler s = stream(2);
    append(principal_suite(s));
  }
  if (all || suite == "discrete") {
    Sampler s = stream(3);
    append(discrete_suite(s));
  }
  if (all || suite == "findim") {
    Sampler s = stream(4);
    append(findim_suite(s));
  }
  if (out.empty()) throw UsageError("unknown suite '" + suite + "'");
  return out;
}

}  // namespace mackey::lab
