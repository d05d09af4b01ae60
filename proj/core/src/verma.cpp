#include "mackey/verma.hpp"

#include <algorithm>

#include <json.hpp>

#include "mackey/errors.hpp"

namespace mackey {
namespace {

using GVector = std::vector<GaussRational>;

GMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return GMatrix(rows, GVector(cols, GaussRational(0)));
}

GVector mat_vec(const GMatrix& m, const GVector& x) {
  GVector y(m.size(), GaussRational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!m[i][j].is_zero() && !x[j].is_zero()) y[i] += m[i][j] * x[j];
    }
  }
  return y;
}

// Inverse of a square rational matrix by Gauss-Jordan elimination.
std::vector<RVector> inverse(std::vector<RVector> a) {
  const std::size_t n = a.size();
  std::vector<RVector> inv(n, RVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("singular basis matrix");
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    const Rational p = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= p;
      inv[c][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

Rational power(const Rational& t, int e) {
  Rational acc = 1;
  for (int k = 0; k < e; ++k) acc *= t;
  return acc;
}

}  // namespace

VermaData verma_data(int mu, int truncation) {
  if (mu < 0) throw InvalidArgument("highest weight must be >= 0");
  if (truncation < mu + 2) throw TruncationTooSmall("truncation must be at least mu + 2");
  const auto alg = sl2_algebra(1, {Sl2Generator::XMinus, Sl2Generator::W, Sl2Generator::XPlus});
  const int xm = 0, w = 1, xp = 2;
  const GaussRational chi_w(Rational(0), Rational(mu));

  const std::size_t n = static_cast<std::size_t>(truncation) + 1;
  VermaData d;
  d.mu = mu;
  d.truncation = truncation;
  d.w_action = zero_matrix(n, n);
  d.x_plus_action = zero_matrix(n, n);
  d.x_minus_action = zero_matrix(n, n);

  // Normal order X-^a W^b X+^e, then X+ v0 = 0 and W v0 = i mu v0.
  auto act_column = [&](int gen, int c, GMatrix& table) {
    const UElement prod = alg->multiply(alg->generator(gen), alg->monomial({c, 0, 0}));
    for (const auto& [m, coef] : prod) {
      if (m[static_cast<std::size_t>(xp)] > 0) continue;
      const auto row = static_cast<std::size_t>(m[static_cast<std::size_t>(xm)]);
      if (row >= n) continue;
      table[row][static_cast<std::size_t>(c)] += coef * pow(chi_w, m[static_cast<std::size_t>(w)]);
    }
  };
  for (int c = 0; c <= truncation; ++c) {
    act_column(w, c, d.w_action);
    act_column(xp, c, d.x_plus_action);
    act_column(xm, c, d.x_minus_action);
  }

  // X-^c v0 lies in a proper submodule iff X+^c X-^c v0 = 0.
  d.pairing.resize(n);
  d.n_mu = -1;
  for (std::size_t c = 0; c < n; ++c) {
    GVector x(n, GaussRational(0));
    x[c] = 1;
    for (std::size_t k = 0; k < c; ++k) x = mat_vec(d.x_plus_action, x);
    d.pairing[c] = x[0];
    if (x[0].is_zero()) {
      if (d.n_mu < 0) d.n_mu = static_cast<int>(c);
      d.submodule_degrees.push_back(static_cast<int>(c));
    }
  }
  if (d.n_mu < 0) throw TruncationTooSmall("no submodule vector below the truncation");
  return d;
}

FdLimitReport fd_contraction_limit(int mu) {
  if (mu < 0 || mu > 12) throw InvalidArgument("mu must lie in [0, 12]");
  const int truncation = mu + 2;
  const VermaData vd = verma_data(mu, truncation);
  const std::size_t n = static_cast<std::size_t>(truncation) + 1;

  GradedSpace space{std::vector<int>(n, 1)};
  std::vector<RVector> s_basis;
  for (int c : vd.submodule_degrees) {
    RVector e(n, Rational(0));
    e[static_cast<std::size_t>(c)] = 1;
    s_basis.push_back(std::move(e));
  }
  std::vector<RVector> f_basis = homogeneous_complement(space, s_basis);
  std::stable_sort(f_basis.begin(), f_basis.end(), [&](const RVector& a, const RVector& b) {
    return max_degree(space, a) < max_degree(space, b);
  });
  const std::size_t nf = f_basis.size();

  FdLimitReport r;
  r.mu = mu;
  r.n_mu = vd.n_mu;
  r.dim_f = static_cast<int>(nf);
  for (const auto& f : f_basis) r.f_degrees.push_back(max_degree(space, f));

  // Coordinates in the basis F + S of V, keeping the F part: the action on B/S.
  std::vector<RVector> columns = f_basis;
  columns.insert(columns.end(), s_basis.begin(), s_basis.end());
  std::vector<RVector> basis_matrix(n, RVector(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) basis_matrix[i][j] = columns[j][i];
  }
  const std::vector<RVector> inv = inverse(basis_matrix);
  auto quotient_action = [&](const GMatrix& table) {
    GMatrix out = zero_matrix(nf, nf);
    for (std::size_t j = 0; j < nf; ++j) {
      GVector x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = GaussRational(f_basis[j][i]);
      const GVector y = mat_vec(table, x);
      for (std::size_t i = 0; i < nf; ++i) {
        GaussRational acc(0);
        for (std::size_t k = 0; k < n; ++k) {
          if (inv[i][k] != 0) acc += GaussRational(inv[i][k]) * y[k];
        }
        out[i][j] = acc;
      }
    }
    return out;
  };
  const std::vector<GMatrix> rho = {quotient_action(vd.w_action), quotient_action(vd.x_plus_action),
                                    quotient_action(vd.x_minus_action)};
  const int p_degree[3] = {0, 1, 1};

  // L_t(X) = C_t rho(phi_t X), C_t = diag(t^deg), phi_t X = t^{p-degree} X.
  auto scaled = [&](int g, const Rational& t) {
    GMatrix m = rho[static_cast<std::size_t>(g)];
    for (std::size_t i = 0; i < nf; ++i) {
      const Rational f = power(t, r.f_degrees[i] + p_degree[g]);
      for (auto& entry : m[i]) entry *= GaussRational(f);
    }
    return m;
  };

  constexpr int kSteps = 6;
  std::vector<GMatrix> numeric(3), symbolic(3);
  bool agree = true;
  bool block = true;
  for (int g = 0; g < 3; ++g) {
    std::vector<GMatrix> seq;
    for (int k = 1; k <= kSteps + 1; ++k) seq.push_back(scaled(g, Rational(1, 1 << k)));
    GMatrix lim = zero_matrix(nf, nf);
    GMatrix sym = zero_matrix(nf, nf);
    for (std::size_t i = 0; i < nf; ++i) {
      for (std::size_t j = 0; j < nf; ++j) {
        // Each entry is c t^e; read e off the ratio of consecutive terms.
        if (!seq[0][i][j].is_zero()) {
          const GaussRational ratio = seq[0][i][j] / seq[1][i][j];
          for (int k = 1; k < kSteps; ++k) {
            if (seq[static_cast<std::size_t>(k)][i][j] / seq[static_cast<std::size_t>(k) + 1][i][j] != ratio) {
              throw Error("entry is not a monomial in t");
            }
          }
          if (ratio.im != 0 || ratio.re < 1) throw Error("entry does not converge as t -> 0");
          if (ratio.re == 1) lim[i][j] = seq[0][i][j];
        }
        if (r.f_degrees[i] + p_degree[g] == 0) sym[i][j] = rho[static_cast<std::size_t>(g)][i][j];
        const bool in_block = r.f_degrees[i] == 0 && r.f_degrees[j] == 0;
        const GaussRational blk = in_block ? rho[static_cast<std::size_t>(g)][i][j] : GaussRational(0);
        // W is diagonal, so its degree-0 rows and its degree-0 block coincide.
        if (lim[i][j] != blk) block = false;
      }
    }
    agree = agree && lim == sym;
    numeric[static_cast<std::size_t>(g)] = std::move(lim);
    symbolic[static_cast<std::size_t>(g)] = std::move(sym);
  }
  r.limits_agree = agree;
  r.limit_is_degree0_block = block;

  std::vector<std::size_t> zero_deg;
  for (std::size_t i = 0; i < nf; ++i) {
    if (r.f_degrees[i] == 0) zero_deg.push_back(i);
  }
  r.dim_f0 = static_cast<int>(zero_deg.size());
  r.x_limits_vanish = true;
  for (int g = 1; g < 3; ++g) {
    for (std::size_t i = 0; i < nf; ++i) {
      for (std::size_t j : zero_deg) {
        if (!numeric[static_cast<std::size_t>(g)][i][j].is_zero()) r.x_limits_vanish = false;
      }
    }
  }
  if (r.dim_f0 == 1) {
    r.limit_w = numeric[0][zero_deg[0]][zero_deg[0]];
    if (r.limit_w.re != 0) throw Error("limit W eigenvalue is not imaginary");
    r.limit_weight = r.limit_w.im;
  }

  const Rational half(1, 2);
  std::vector<RVector> moved = s_basis;
  for (const auto& s : s_basis) {
    RVector m = s;
    for (std::size_t c = 0; c < n; ++c) m[c] *= power(half, static_cast<int>(c));
    moved.push_back(std::move(m));
  }
  r.s_invariance_defect = rank(moved) - static_cast<int>(s_basis.size());
  return r;
}

std::string FdLimitReport::to_json() const {
  nlohmann::ordered_json j;
  j["mu"] = mu;
  j["dim_F"] = dim_f;
  j["dim_F0"] = dim_f0;
  if (denominator(limit_weight) == 1) {
    j["limit_weight"] = static_cast<long long>(numerator(limit_weight));
  } else {
    j["limit_weight"] = limit_weight.str();
  }
  j["N_mu"] = n_mu;
  return j.dump();
}

}  // namespace mackey
