#include <gtest/gtest.h>

#include <json.hpp>

#include "mackey/enveloping.hpp"
#include "mackey/errors.hpp"
#include "mackey/graded.hpp"
#include "mackey/verma.hpp"
#include "support/generators.hpp"

using namespace mackey;
using mackey::testing::Gen;

namespace {

RVector vec(std::initializer_list<int> xs) {
  RVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

RVector random_vector(Gen& g, int n, int density) {
  RVector v(static_cast<std::size_t>(n), Rational(0));
  for (auto& x : v)
    if (g.integer(0, 9) < density) x = Rational(g.integer(-4, 4), g.integer(1, 3));
  return v;
}

void expect_homogeneous_complement(const GradedSpace& v, const std::vector<RVector>& s,
                                   const std::vector<RVector>& out) {
  for (const auto& e : out) EXPECT_TRUE(is_homogeneous(v, e));
  EXPECT_EQ(static_cast<int>(out.size()), v.total() - static_cast<int>(s.size()));
  std::vector<RVector> all = s;
  all.insert(all.end(), out.begin(), out.end());
  EXPECT_EQ(rank(all), v.total());
}

// X+^c X-^c evaluated on v0 in U(g): drop monomials with an X+, replace W by i mu.
GaussRational pbw_pairing(const PbwAlgebra& alg, int mu, int c) {
  UElement u = alg.one();
  for (int k = 0; k < c; ++k) u = alg.multiply(alg.generator(2), u);
  UElement x = alg.one();
  for (int k = 0; k < c; ++k) x = alg.multiply(x, alg.generator(0));
  u = alg.multiply(u, x);
  GaussRational acc(0);
  const GaussRational i_mu(Rational(0), Rational(mu));
  for (const auto& [m, coef] : u)
    if (m[0] == 0 && m[2] == 0) acc += coef * pow(i_mu, m[1]);
  return acc;
}

}  // namespace

TEST(Graded, Bookkeeping) {
  const GradedSpace v{{2, 2, 1}};
  EXPECT_EQ(v.total(), 5);
  EXPECT_EQ(v.degree_of(0), 0);
  EXPECT_EQ(v.degree_of(3), 1);
  EXPECT_EQ(v.degree_of(4), 2);
  EXPECT_THROW(v.degree_of(5), InvalidArgument);
  EXPECT_EQ(max_degree(v, vec({1, 0, 2, 0, 0})), 1);
  EXPECT_EQ(max_degree(v, vec({0, 0, 0, 0, 0})), -1);
  EXPECT_EQ(max_component(v, vec({1, 0, 2, 3, 0})), vec({0, 0, 2, 3, 0}));
  EXPECT_TRUE(is_homogeneous(v, vec({0, 0, 2, 3, 0})));
  EXPECT_FALSE(is_homogeneous(v, vec({1, 0, 0, 0, 1})));
  EXPECT_THROW(max_degree(v, vec({1, 2})), DimensionMismatch);
}

TEST(Graded, RankAndSpan) {
  const std::vector<RVector> s = {vec({1, 1, 0}), vec({0, 1, 1})};
  EXPECT_EQ(rank(s), 2);
  EXPECT_TRUE(in_span(s, vec({1, 2, 1})));
  EXPECT_FALSE(in_span(s, vec({1, 0, 0})));
  EXPECT_EQ(rank({vec({1, 2}), vec({2, 4})}), 1);
}

TEST(Complement, HomogeneousSubspace) {
  const GradedSpace v{{1, 2, 1}};
  const std::vector<RVector> s = {vec({0, 1, 0, 0}), vec({0, 0, 0, 1})};
  const auto out = homogeneous_complement(v, s);
  expect_homogeneous_complement(v, s, out);
  for (const auto& e : out) {
    int nonzero = 0;
    for (const auto& x : e) nonzero += x != 0;
    EXPECT_EQ(nonzero, 1);
  }
}

TEST(Complement, MixedDegreeExample) {
  // Coordinates e00, e01 | e10, e11 | e20.
  const GradedSpace v{{2, 2, 1}};
  const std::vector<RVector> s = {vec({0, 1, 1, 0, 0}), vec({0, 0, 0, 1, 1})};
  ComplementStats stats;
  const auto out = homogeneous_complement(v, s, &stats);
  ASSERT_EQ(out.size(), 3u);
  expect_homogeneous_complement(v, s, out);
  EXPECT_EQ(stats.emitted, 3);
}

TEST(Complement, RejectsDependentInput) {
  const GradedSpace v{{2, 1}};
  EXPECT_THROW(homogeneous_complement(v, {vec({1, 0, 1}), vec({2, 0, 2})}), NotAComplementableInput);
  EXPECT_THROW(homogeneous_complement(v, {vec({1, 0, 1})}, {vec({1, 0, 1}), vec({0, 1, 0})}), InvalidArgument);
}

TEST(Complement, RandomInstances) {
  Gen g(101);
  int reductions = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GradedSpace v;
    int total = 0;
    const int target = g.integer(2, 12);
    while (total < target) {
      const int d = std::min(g.integer(1, 3), target - total);
      v.dims.push_back(d);
      total += d;
    }
    const int codim = g.integer(1, std::min(6, total));
    std::vector<RVector> s;
    while (static_cast<int>(s.size()) < total - codim) {
      RVector x = random_vector(g, total, 5);
      std::vector<RVector> trial_set = s;
      trial_set.push_back(x);
      if (rank(trial_set) == static_cast<int>(trial_set.size())) s.push_back(std::move(x));
    }
    ComplementStats stats;
    const auto out = homogeneous_complement(v, s, &stats);
    expect_homogeneous_complement(v, s, out);
    reductions += stats.reductions;

    // Dropping one output vector leaves a one-dimensional homogeneous gap.
    if (out.size() >= 2) {
      std::vector<RVector> bigger = s;
      bigger.insert(bigger.end(), out.begin() + 1, out.end());
      const auto again = homogeneous_complement(v, bigger);
      ASSERT_EQ(again.size(), 1u);
      EXPECT_TRUE(is_homogeneous(v, again[0]));
      bigger.push_back(again[0]);
      EXPECT_EQ(rank(bigger), total);
    }
  }
  // The second case of the algorithm was exercised.
  EXPECT_GT(reductions, 0);
}

TEST(Verma, HighestWeightAndRelations) {
  for (int mu = 0; mu <= 6; ++mu) {
    const VermaData d = verma_data(mu, mu + 4);
    const std::size_t n = static_cast<std::size_t>(d.truncation) + 1;
    for (std::size_t r = 0; r < n; ++r) EXPECT_TRUE(d.x_plus_action[r][0].is_zero());
    EXPECT_EQ(d.w_action[0][0], GaussRational(Rational(0), Rational(mu)));
    // [X+, X-] = -4i W on columns below the cut.
    for (std::size_t c = 0; c + 1 < n; ++c) {
      for (std::size_t r = 0; r < n; ++r) {
        GaussRational comm(0);
        for (std::size_t k = 0; k < n; ++k) {
          comm += d.x_plus_action[r][k] * d.x_minus_action[k][c];
          comm -= d.x_minus_action[r][k] * d.x_plus_action[k][c];
        }
        EXPECT_EQ(comm, GaussRational(Rational(0), Rational(-4)) * d.w_action[r][c]);
      }
    }
  }
  EXPECT_THROW(verma_data(3, 4), TruncationTooSmall);
}

TEST(Verma, SubmoduleFromPbwPairing) {
  const auto alg = sl2_algebra(1, {Sl2Generator::XMinus, Sl2Generator::W, Sl2Generator::XPlus});
  for (int mu = 0; mu <= 6; ++mu) {
    const VermaData d = verma_data(mu, mu + 3);
    for (int c = 0; c <= d.truncation; ++c) EXPECT_EQ(d.pairing[static_cast<std::size_t>(c)], pbw_pairing(*alg, mu, c));
    int first_zero = -1;
    for (int c = 0; c <= d.truncation && first_zero < 0; ++c)
      if (pbw_pairing(*alg, mu, c).is_zero()) first_zero = c;
    EXPECT_EQ(d.n_mu, first_zero);
    EXPECT_EQ(d.n_mu, mu + 1);  // dim A(mu) = mu + 1
    EXPECT_EQ(d.submodule_degrees.front(), d.n_mu);
    EXPECT_EQ(static_cast<int>(d.submodule_degrees.size()), d.truncation - d.n_mu + 1);
  }
  // mu = 0: everything of positive degree lies in S.
  EXPECT_EQ(verma_data(0, 2).submodule_degrees, (std::vector<int>{1, 2}));
}

TEST(FdLimit, SmallWeights) {
  for (int mu = 0; mu <= 6; ++mu) {
    const FdLimitReport r = fd_contraction_limit(mu);
    EXPECT_EQ(r.dim_f, mu + 1);
    EXPECT_EQ(r.dim_f0, 1);
    EXPECT_TRUE(r.x_limits_vanish);
    EXPECT_TRUE(r.limits_agree);
    EXPECT_TRUE(r.limit_is_degree0_block);
    EXPECT_EQ(r.limit_weight, Rational(mu));
    EXPECT_EQ(r.n_mu, mu + 1);
    RecordProperty("s_invariance_defect_mu" + std::to_string(mu), r.s_invariance_defect);
  }
  const auto j = nlohmann::json::parse(fd_contraction_limit(2).to_json());
  EXPECT_EQ(j["mu"], 2);
  EXPECT_EQ(j["dim_F"], 3);
  EXPECT_EQ(j["dim_F0"], 1);
  EXPECT_EQ(j["limit_weight"], 2);
  EXPECT_EQ(j["N_mu"], 3);
  EXPECT_THROW(fd_contraction_limit(13), InvalidArgument);
}
