#include "mackey/enveloping.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Dense>

#include "mackey/errors.hpp"

namespace mackey {
namespace {

void add_into(UElement& acc, const Monomial& m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void add_into(UElement& acc, const UElement& u, const GaussRational& c) {
  for (const auto& [m, coef] : u) add_into(acc, m, coef * c);
}

Rational rational_integer(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-12) throw Error("structure constant is not an integer");
  return Rational(static_cast<long long>(r));
}

}  // namespace

PbwAlgebra::PbwAlgebra(std::vector<std::string> names, std::vector<int> p_degree,
                       std::vector<std::vector<GeneratorCombination>> brackets)
    : names_(std::move(names)), p_degree_(std::move(p_degree)), brackets_(std::move(brackets)) {
  const std::size_t n = names_.size();
  if (p_degree_.size() != n || brackets_.size() != n) throw InvalidArgument("inconsistent algebra data");
  for (const auto& row : brackets_) {
    if (row.size() != n) throw InvalidArgument("bracket table is not square");
    for (const auto& comb : row) {
      if (comb.size() != n) throw InvalidArgument("bracket value has the wrong length");
    }
  }
}

const GeneratorCombination& PbwAlgebra::bracket(int i, int j) const {
  return brackets_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

UElement PbwAlgebra::one() const { return {{Monomial(names_.size(), 0), GaussRational(1)}}; }

UElement PbwAlgebra::generator(int i) const {
  Monomial m(names_.size(), 0);
  m[static_cast<std::size_t>(i)] = 1;
  return {{m, GaussRational(1)}};
}

UElement PbwAlgebra::monomial(const Monomial& m) const {
  if (m.size() != names_.size()) throw InvalidArgument("monomial has the wrong length");
  return {{m, GaussRational(1)}};
}

int PbwAlgebra::p_degree_of(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * p_degree_[i];
  return d;
}

UElement PbwAlgebra::left_multiply(int gen, const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find({gen, m});
    if (it != cache_.end()) return it->second;
  }
  std::size_t j = 0;
  while (j < m.size() && m[j] == 0) ++j;
  UElement result;
  const auto g = static_cast<std::size_t>(gen);
  if (j == m.size() || g <= j) {
    Monomial out = m;
    ++out[g];
    result.emplace(std::move(out), GaussRational(1));
  } else {
    // g_i g_j^e R = g_j (g_i g_j^{e-1} R) + [g_i, g_j] g_j^{e-1} R
    Monomial rest = m;
    --rest[j];
    for (const auto& [mono, c] : left_multiply(gen, rest)) {
      add_into(result, left_multiply(static_cast<int>(j), mono), c);
    }
    const GeneratorCombination& br = bracket(gen, static_cast<int>(j));
    for (std::size_t k = 0; k < br.size(); ++k) {
      if (!br[k].is_zero()) add_into(result, left_multiply(static_cast<int>(k), rest), br[k]);
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(std::make_pair(gen, m), result);
  return result;
}

UElement PbwAlgebra::multiply(const UElement& u, const UElement& v) const {
  UElement out;
  for (const auto& [mono, coef] : u) {
    UElement cur = v;
    // Apply the letters of mono from the right.
    for (std::size_t g = mono.size(); g-- > 0;) {
      for (int e = 0; e < mono[g]; ++e) {
        UElement next;
        for (const auto& [m, c] : cur) add_into(next, left_multiply(static_cast<int>(g), m), c);
        cur = std::move(next);
      }
    }
    add_into(out, cur, coef);
  }
  return out;
}

std::vector<std::vector<GeneratorCombination>> sl2_brackets_from_matrices() {
  using CM = Eigen::Matrix2cd;
  const std::complex<double> i(0.0, 1.0);
  CM h, s, w;
  h << 1.0, 0.0, 0.0, -1.0;
  s << 0.0, 1.0, 1.0, 0.0;
  w << 0.0, 1.0, -1.0, 0.0;
  const CM gens[3] = {w, h + i * s, h - i * s};
  Eigen::Matrix3cd basis;
  for (int k = 0; k < 3; ++k) basis.col(k) << gens[k](0, 0), gens[k](0, 1), gens[k](1, 0);
  const Eigen::PartialPivLU<Eigen::Matrix3cd> lu(basis);

  std::vector<std::vector<GeneratorCombination>> table(3, std::vector<GeneratorCombination>(3));
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const CM br = gens[a] * gens[b] - gens[b] * gens[a];
      Eigen::Vector3cd rhs;
      rhs << br(0, 0), br(0, 1), br(1, 0);
      const Eigen::Vector3cd c = lu.solve(rhs);
      GeneratorCombination comb(3);
      for (int k = 0; k < 3; ++k) comb[static_cast<std::size_t>(k)] = {rational_integer(c(k).real()), rational_integer(c(k).imag())};
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(comb);
    }
  }
  return table;
}

std::unique_ptr<PbwAlgebra> sl2_algebra(const Rational& t, std::vector<Sl2Generator> order) {
  if (order.size() != 3) throw InvalidArgument("order must list W, X+ and X-");
  static const char* kNames[3] = {"W", "X+", "X-"};
  static const int kPDegree[3] = {0, 1, 1};
  const auto base = sl2_brackets_from_matrices();
  std::vector<int> pos(3, -1);
  for (std::size_t k = 0; k < 3; ++k) {
    const int g = static_cast<int>(order[k]);
    if (pos[static_cast<std::size_t>(g)] != -1) throw InvalidArgument("repeated generator in order");
    pos[static_cast<std::size_t>(g)] = static_cast<int>(k);
  }
  std::vector<std::string> names(3);
  std::vector<int> pdeg(3);
  std::vector<std::vector<GeneratorCombination>> table(3, std::vector<GeneratorCombination>(3, GeneratorCombination(3)));
  const Rational t2 = t * t;
  for (int a = 0; a < 3; ++a) {
    const auto pa = static_cast<std::size_t>(pos[static_cast<std::size_t>(a)]);
    names[pa] = kNames[a];
    pdeg[pa] = kPDegree[a];
    for (int b = 0; b < 3; ++b) {
      const auto pb = static_cast<std::size_t>(pos[static_cast<std::size_t>(b)]);
      const bool both_p = kPDegree[a] == 1 && kPDegree[b] == 1;
      for (int k = 0; k < 3; ++k) {
        GaussRational c = base[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
        if (both_p) c *= GaussRational(t2);
        table[pa][pb][static_cast<std::size_t>(pos[static_cast<std::size_t>(k)])] = c;
      }
    }
  }
  return std::make_unique<PbwAlgebra>(std::move(names), std::move(pdeg), std::move(table));
}

UElement add(const UElement& a, const UElement& b) {
  UElement out = a;
  add_into(out, b, GaussRational(1));
  return out;
}

UElement scale(const UElement& a, const GaussRational& c) {
  UElement out;
  add_into(out, a, c);
  return out;
}

UElement phi_tilde_scale(const PbwAlgebra& alg, const UElement& u, const Rational& t) {
  if (t < 0) throw InvalidArgument("scaling parameter must be >= 0");
  UElement out;
  for (const auto& [m, c] : u) {
    const int d = alg.p_degree_of(m);
    Rational f = 1;
    for (int k = 0; k < d; ++k) f *= t;
    add_into(out, m, c * GaussRational(f));
  }
  return out;
}

std::string to_string(const PbwAlgebra& alg, const UElement& u) {
  if (u.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : u) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t g = 0; g < m.size(); ++g) {
      if (m[g] == 0) continue;
      os << " " << alg.names()[g];
      if (m[g] > 1) os << "^" << m[g];
    }
  }
  return os.str();
}

}  // namespace mackey
