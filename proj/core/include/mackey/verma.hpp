#pragma once

// Verma modules of sl(2, C) and the contraction of their finite-dimensional
// quotients along g_t.
//
// B(mu) is generated by v0 with W v0 = i mu v0 and X+ v0 = 0, so H = -i W has
// weight mu. It is realized on the basis X-^c v0, graded by c.

#include <string>
#include <vector>

#include "mackey/enveloping.hpp"
#include "mackey/graded.hpp"

namespace mackey {

using GMatrix = std::vector<std::vector<GaussRational>>;

struct VermaData {
  int mu = 0;
  int truncation = 0;        // basis X-^c v0, 0 <= c <= truncation
  GMatrix w_action;          // (truncation + 1) square tables
  GMatrix x_plus_action;
  GMatrix x_minus_action;    // the image of the top vector is cut off
  std::vector<GaussRational> pairing;  // X+^c X-^c v0 = pairing[c] v0
  int n_mu = 0;              // first c with X-^c v0 in the maximal submodule
  std::vector<int> submodule_degrees;  // c in [n_mu, truncation]
};

/// Throws TruncationTooSmall if truncation < mu + 2 or no submodule vector is
/// found below the truncation.
VermaData verma_data(int mu, int truncation);

struct FdLimitReport {
  int mu = 0;
  int dim_f = 0;
  int dim_f0 = 0;
  GaussRational limit_w;       // W on the limit space
  Rational limit_weight;       // H = -i W eigenvalue there
  int n_mu = 0;
  bool x_limits_vanish = false;     // X+ and X- limits vanish on F^0
  bool limits_agree = false;        // sequence limit == degree bookkeeping
  bool limit_is_degree0_block = false;
  int s_invariance_defect = 0;      // dim(S + phi_t S) - dim S at t = 1/2
  std::vector<int> f_degrees;

  /// {mu, dim_F, dim_F0, limit_weight, N_mu}
  std::string to_json() const;
};

FdLimitReport fd_contraction_limit(int mu);

}  // namespace mackey
