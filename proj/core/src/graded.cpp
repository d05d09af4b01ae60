#include "mackey/graded.hpp"

#include <algorithm>
#include <numeric>

#include "mackey/errors.hpp"

namespace mackey {
namespace {

void check_vector(const GradedSpace& v, const RVector& x) {
  if (static_cast<int>(x.size()) != v.total()) throw DimensionMismatch("vector does not match the graded space");
}

// Row echelon reduction in place; returns the rank.
int eliminate(std::vector<RVector>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int GradedSpace::total() const { return std::accumulate(dims.begin(), dims.end(), 0); }

int GradedSpace::degree_of(int coordinate) const {
  int acc = 0;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    acc += dims[d];
    if (coordinate < acc) return static_cast<int>(d);
  }
  throw InvalidArgument("coordinate outside the graded space");
}

int max_degree(const GradedSpace& v, const RVector& x) {
  check_vector(v, x);
  for (int i = static_cast<int>(x.size()); i-- > 0;) {
    if (x[static_cast<std::size_t>(i)] != 0) return v.degree_of(i);
  }
  return -1;
}

RVector max_component(const GradedSpace& v, const RVector& x) {
  const int d = max_degree(v, x);
  RVector out(x.size(), Rational(0));
  if (d < 0) return out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (v.degree_of(static_cast<int>(i)) == d) out[i] = x[i];
  }
  return out;
}

bool is_homogeneous(const GradedSpace& v, const RVector& x) {
  check_vector(v, x);
  int deg = -1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const int d = v.degree_of(static_cast<int>(i));
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

int rank(const std::vector<RVector>& vectors) {
  std::vector<RVector> rows = vectors;
  return eliminate(rows);
}

bool in_span(const std::vector<RVector>& vectors, const RVector& x) {
  std::vector<RVector> rows = vectors;
  const int r = eliminate(rows);
  rows.resize(static_cast<std::size_t>(r));
  rows.push_back(x);
  return eliminate(rows) == r;
}

std::vector<RVector> homogeneous_complement(const GradedSpace& v, const std::vector<RVector>& s_basis,
                                            ComplementStats* stats) {
  for (const auto& s : s_basis) check_vector(v, s);
  if (rank(s_basis) != static_cast<int>(s_basis.size())) {
    throw NotAComplementableInput("spanning set of S is linearly dependent");
  }
  // Greedy coordinate completion, each candidate shifted by an element of S so
  // that the reduction loop has work to do.
  const int n = v.total();
  std::vector<RVector> basis = s_basis;
  std::vector<RVector> initial;
  for (int i = 0; i < n; ++i) {
    RVector e(static_cast<std::size_t>(n), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    if (in_span(basis, e)) continue;
    basis.push_back(e);
    if (!s_basis.empty()) {
      const RVector& s = s_basis[initial.size() % s_basis.size()];
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += s[k];
    }
    initial.push_back(std::move(e));
  }
  return homogeneous_complement(v, s_basis, std::move(initial), stats);
}

std::vector<RVector> homogeneous_complement(const GradedSpace& v, const std::vector<RVector>& s_basis,
                                            std::vector<RVector> initial, ComplementStats* stats) {
  const int n = v.total();
  for (const auto& s : s_basis) check_vector(v, s);
  for (const auto& e : initial) check_vector(v, e);
  if (rank(s_basis) != static_cast<int>(s_basis.size())) {
    throw NotAComplementableInput("spanning set of S is linearly dependent");
  }
  {
    std::vector<RVector> all = s_basis;
    all.insert(all.end(), initial.begin(), initial.end());
    if (static_cast<int>(all.size()) != n || rank(all) != n) {
      throw InvalidArgument("initial vectors do not form a complement of S");
    }
  }

  ComplementStats local;
  std::vector<RVector> s_plus = s_basis;
  std::vector<RVector> pending = std::move(initial);
  std::vector<RVector> out;
  while (!pending.empty()) {
    std::stable_sort(pending.begin(), pending.end(), [&v](const RVector& a, const RVector& b) {
      return max_degree(v, a) > max_degree(v, b);
    });
    RVector e = std::move(pending.front());
    pending.erase(pending.begin());
    RVector top = max_component(v, e);
    std::vector<RVector> others = s_plus;
    others.insert(others.end(), pending.begin(), pending.end());
    if (!in_span(others, top)) {
      ++local.emitted;
      s_plus.push_back(top);
      out.push_back(std::move(top));
    } else {
      ++local.reductions;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] -= top[k];
      pending.push_back(std::move(e));
    }
  }
  if (stats) *stats = local;
  return out;
}

}  // namespace mackey
