#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "mackey/errors.hpp"
#include "mackey/principal_series.hpp"
#include "support/generators.hpp"

using namespace mackey;
using mackey::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

double l2_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s / static_cast<double>(v.size()));
}

BoundaryFunction golden_boundary(int nb) {
  BoundaryFunction f{std::vector<Complex>(static_cast<std::size_t>(nb))};
  for (int j = 0; j < nb; ++j) {
    const double b = kPi * j / nb;
    f.values[static_cast<std::size_t>(j)] = std::cos(2 * b) + Complex(0, 0.5) * std::sin(4 * b) + 0.25;
  }
  return f;
}

}  // namespace

TEST(Wave, LimitIsPlaneWave) {
  const WaveSpec spec{sl2::functional(3.0), 0.0, 0.0};
  EXPECT_LE(std::abs(contracted_wave(spec, {0.4, 0.9}) - std::polar(1.0, 1.2)), 1e-15);
  EXPECT_LE(std::abs(contracted_wave({sl2::functional(3.0), 0.0, 1.0}, {0.0, 0.0}) - 1.0), 1e-15);
}

TEST(Wave, RescalingIdentity) {
  Gen g(51);
  for (int trial = 0; trial < 100; ++trial) {
    const double ell = g.uniform(-20, 20), t = g.uniform(0.01, 1.0), b = g.uniform(0, kPi);
    const sl2::P2 v{g.uniform(-1.5, 1.5), g.uniform(-1.5, 1.5)};
    const Complex lhs = contracted_wave({sl2::functional(ell), b, t}, v);
    const Complex rhs = contracted_wave({sl2::functional(ell / t), b, 1.0}, sl2::scale(v, t));
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(Wave, ClosedFormMatchesMatrixRoute) {
  Gen g(52);
  for (double t : {0.0, 0.125, 1.0}) {
    for (int trial = 0; trial < 50; ++trial) {
      const WaveSpec spec{sl2::functional(g.uniform(-10, 10)), g.uniform(0, kPi), t};
      const sl2::P2 v{g.uniform(-1.5, 1.5), g.uniform(-1.5, 1.5)};
      const Complex a = contracted_wave(spec, v);
      const Complex b = contracted_wave_generic(spec, sl2::p_element(v));
      EXPECT_LE(std::abs(a - b), 1e-10 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST(Wave, KEquivariance) {
  Gen g(53);
  for (int trial = 0; trial < 50; ++trial) {
    const double theta = g.uniform(0, kPi), b = g.uniform(0, kPi), t = g.uniform(0, 1);
    const sl2::P2 v{g.uniform(-1, 1), g.uniform(-1, 1)};
    const AlgebraElement lambda = sl2::functional(7.0);
    const Complex lhs = contracted_wave({lambda, b, t}, sl2::rotate(v, theta));
    const Complex rhs = contracted_wave({lambda, b + theta, t}, v);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(Wave, ConvergesToPlaneWave) {
  const AlgebraElement lambda = sl2::functional(5.0);
  // Asymptotic below t ~ 1/16 for this box and frequency.
  std::vector<ConvergenceRow> rows;
  for (int k = 5; k <= 11; ++k) {
    const double t = std::ldexp(1.0, -k);
    double sup = 0.0;
    for (const sl2::P2& p : PGrid{-1.5, 1.5, 0.25}.points())
      sup = std::max(sup, std::abs(contracted_wave({lambda, 0.3, t}, p) - contracted_wave({lambda, 0.3, 0.0}, p)));
    rows.push_back({t, sup});
  }
  const ConvergenceReport r = make_report("wave", rows);
  EXPECT_TRUE(strictly_decreasing(r.rows));
  EXPECT_NEAR(r.fitted_order, 1.0, 0.05);
}

TEST(Wave, RejectsBadInput) {
  EXPECT_THROW(contracted_wave({sl2::functional(1.0), 0.0, -0.5}, {0, 0}), InvalidArgument);
  EXPECT_THROW(contracted_wave({AlgebraElement(sl2::s_mat()), 0.0, 0.5}, {0, 0}), NotDiagonal);
}

TEST(Grid, Layout) {
  const PGrid grid;
  EXPECT_EQ(grid.side(), 97);
  const auto pts = grid.points();
  ASSERT_EQ(pts.size(), 97u * 97u);
  EXPECT_EQ(pts[0].x, -1.5);
  EXPECT_EQ(pts[1].y, -1.5 + 1.0 / 32.0);
  EXPECT_EQ(pts[97].x, -1.5 + 1.0 / 32.0);
  EXPECT_THROW((PGrid{1.0, -1.0, 0.1}.side()), InvalidArgument);
}

TEST(Synthesis, BoundaryQuadratureIsResolved) {
  // At t = 0 the integrand is band limited in b, so doubling the grid twice
  // changes nothing beyond rounding.
  Gen g(54);
  const std::vector<sl2::P2> pts = PGrid{-1.5, 1.5, 0.25}.points();
  const BoundaryFunction one_coarse{std::vector<Complex>(256, 1.0)};
  const BoundaryFunction one_fine{std::vector<Complex>(1024, 1.0)};
  const auto a = synthesize(one_coarse, sl2::functional(30.0), 0.0, pts);
  const auto b = synthesize(one_fine, sl2::functional(30.0), 0.0, pts);
  EXPECT_LE(sup_distance(a, b), 1e-9);
  EXPECT_LE(std::abs(synthesize(one_coarse, sl2::functional(30.0), 0.0, {{0.0, 0.0}})[0] - 1.0), 1e-15);
  // Rotational symmetry of the constant boundary function.
  const auto turned = synthesize(one_coarse, sl2::functional(30.0), 0.0, {{0.6, 0.8}, {1.0, 0.0}, {0.0, -1.0}});
  EXPECT_LE(std::abs(turned[0] - turned[1]), 1e-9);
  EXPECT_LE(std::abs(turned[0] - turned[2]), 1e-9);

  BoundaryFunction coarse = mackey::testing::low_pass_boundary(g, 256);
  Gen g2(54);
  BoundaryFunction fine = mackey::testing::low_pass_boundary(g2, 1024);
  EXPECT_LE(sup_distance(synthesize(coarse, sl2::functional(30.0), 0.0, pts),
                         synthesize(fine, sl2::functional(30.0), 0.0, pts)),
            1e-9);
}

TEST(Synthesis, ContractionImageMatches) {
  Gen g(55);
  const BoundaryFunction f = mackey::testing::low_pass_boundary(g, 128);
  const PGrid grid{-1.5, 1.5, 0.125};
  for (double t : {1.0, 0.5, 0.125}) {
    const PGridFunction direct = synthesize(f, sl2::functional(30.0), t, grid);
    const PGridFunction image = helgason_contraction_image(f, sl2::functional(30.0), t, grid);
    EXPECT_LE(sup_distance(direct.values, image.values), 1e-12);
  }
  EXPECT_THROW(helgason_contraction_image(f, sl2::functional(1.0), 0.0, grid), InvalidArgument);
}

TEST(Synthesis, GoldenValues) {
  std::ifstream in(std::string(MACKEY_GOLDEN_DIR) + "/synthesis_lambda30_t1.csv");
  ASSERT_TRUE(in.good());
  std::string line;
  std::getline(in, line);
  std::vector<sl2::P2> pts;
  std::vector<Complex> expected;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    double x, y, re, im;
    char c;
    row >> x >> c >> y >> c >> re >> c >> im;
    pts.push_back({x, y});
    expected.emplace_back(re, im);
  }
  ASSERT_EQ(pts.size(), 169u);
  const auto got = synthesize(golden_boundary(256), sl2::functional(30.0), 1.0, pts);
  EXPECT_LE(sup_distance(got, expected), 1e-10);
}

TEST(Spline, InterpolatesAndConverges) {
  auto f = [](double th) { return Complex(std::cos(3 * th), std::sin(2 * th) + 0.5 * std::cos(th)); };
  double prev = 0.0;
  for (int n : {32, 64, 128}) {
    std::vector<Complex> s(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = f(2 * kPi * j / n);
    const PeriodicSpline sp(s);
    for (int j = 0; j < n; ++j) EXPECT_LE(std::abs(sp(2 * kPi * j / n) - s[static_cast<std::size_t>(j)]), 1e-14);
    double err = 0.0;
    for (int q = 0; q < 1000; ++q) {
      const double th = -7.0 + 14.0 * q / 1000.0;
      err = std::max(err, std::abs(sp(th) - f(th)));
    }
    if (prev > 0.0) EXPECT_NEAR(std::log2(prev / err), 4.0, 0.3);
    prev = err;
  }
  EXPECT_THROW(PeriodicSpline(std::vector<Complex>(2)), InvalidArgument);
}

TEST(Compact, RhoScalesWithT) {
  for (double t : {1.0, 0.25, 1e-3}) EXPECT_NEAR(rho_t_sl2(t), t, 1e-12);
}

TEST(Compact, DeformedAndRescaledAgree) {
  Gen g(56);
  for (Parity p : {Parity::even, Parity::odd}) {
    const SampledCircleFunction f = mackey::testing::low_pass_circle(g, 128, p);
    for (double t : {1.0, 0.5, 0.125}) {
      const CompactPair pair = compact_operator(g.sl_element(2), sl2::functional(4.0), p, f, t);
      EXPECT_LE(sup_distance(pair.via_deformed.values, pair.via_rescaled.values), 1e-9);
    }
  }
}

TEST(Compact, UnitaryUpToInterpolation) {
  Gen g(57);
  for (Parity p : {Parity::even, Parity::odd}) {
    const SampledCircleFunction f = mackey::testing::low_pass_circle(g, 256, p);
    for (int trial = 0; trial < 5; ++trial) {
      const auto out = compact_operator_direct(mat_exp(g.p_element(2, 0.5)) * g.so_element(2),
                                               sl2::functional(g.uniform(-5, 5)), f);
      EXPECT_NEAR(l2_norm(out.values) / l2_norm(f.values), 1.0, 2e-3);
    }
  }
}

TEST(Compact, UnitarityDefectShrinksWithGrid) {
  const Matrix g = mat_exp(sl2::p_element(0.6, 0.2)) * sl2::rotation(0.3);
  const AlgebraElement lambda = sl2::functional(3.0);
  auto defect = [&](int n) {
    SampledCircleFunction f{std::vector<Complex>(static_cast<std::size_t>(n)), Parity::even};
    for (int j = 0; j < n; ++j) f.values[static_cast<std::size_t>(j)] = std::polar(1.0, 4.0 * kPi * j / n) + 0.3;
    return std::abs(l2_norm(compact_operator_direct(g, lambda, f).values) / l2_norm(f.values) - 1.0);
  };
  const double d256 = defect(256), d1024 = defect(1024);
  EXPECT_LE(d256, 2e-3);
  EXPECT_LT(d1024, d256);
}

TEST(Compact, MultiplicativeUpToInterpolation) {
  Gen g(58);
  const SampledCircleFunction f = mackey::testing::low_pass_circle(g, 256, Parity::even);
  const Matrix a = g.sl_element(2), b = g.sl_element(2);
  const AlgebraElement lambda = sl2::functional(2.0);
  const auto lhs = compact_operator_direct(a * b, lambda, f);
  const auto rhs = compact_operator_direct(a, lambda, compact_operator_direct(b, lambda, f));
  EXPECT_LE(sup_distance(lhs.values, rhs.values), 1e-3 * l2_norm(f.values));
}

TEST(MotionLimit, ConvergesToMotionGroupOperator) {
  Gen g(59);
  for (Parity p : {Parity::even, Parity::odd}) {
    const SampledCircleFunction f = mackey::testing::low_pass_circle(g, 128, p);
    const DeformedElement g0 = make_deformed(sl2::rotation(2 * kPi * 3 / 128), sl2::p_element(0.4, -0.3), 0.0);
    const ConvergenceReport r = motion_limit_check(g0, sl2::functional(2.0), p, f, dyadic_t_list(6));
    EXPECT_TRUE(strictly_decreasing(r.rows));
    EXPECT_GE(r.fitted_order, 0.9);
    EXPECT_LE(r.rows.back().error, 0.05);
  }
}

TEST(QuasiRegular, LimitIsTranslationAndNotScalar) {
  Gen g(60);
  const SampledCircleFunction f = mackey::testing::low_pass_circle(g, 128, Parity::even);
  const DeformedElement g0 = make_deformed(sl2::rotation(2 * kPi * 7 / 128), sl2::p_element(0.5, 0.5), 0.0);
  const QuasiRegularReport r = quasi_regular_check(g0, f, 1e-4);
  EXPECT_LE(r.limit_residual, 1e-3);
  EXPECT_GE(r.scalar_distance, 0.1);
}

TEST(Helgason, ZeroFrequencyLimitIsConstant) {
  Gen g(61);
  const BoundaryFunction f = mackey::testing::low_pass_boundary(g, 64);
  const HelgasonReport r = helgason_contraction_check(f, sl2::functional(0.0), dyadic_t_list(4), PGrid{-1.5, 1.5, 0.25});
  EXPECT_LE(r.constant_residual, 1e-12);
  EXPECT_LE(r.equivariance_residual, 1e-12);
  EXPECT_TRUE(strictly_decreasing(r.convergence.rows));
}

TEST(Helgason, ConvergenceAtLambda30) {
  const HelgasonReport r =
      helgason_contraction_check(golden_boundary(256), sl2::functional(30.0), dyadic_t_list(6), PGrid{-1.5, 1.5, 0.25});
  EXPECT_TRUE(strictly_decreasing(r.convergence.rows));
  EXPECT_GE(r.convergence.fitted_order, 0.9);
  EXPECT_LE(r.equivariance_residual, 1e-10);
  RecordProperty("fitted_order", std::to_string(r.convergence.fitted_order));
}
