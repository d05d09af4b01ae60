#pragma once

// Exact PBW arithmetic in universal enveloping algebras of small Lie algebras
// given by structure constants, specialized to sl(2, C) with the basis
//   W in k_C,  X+ = h + i s,  X- = h - i s  in p_C.
// A monomial lists exponents in the algebra's generator order; the default
// sl(2) order is (W, X+, X-), so (a, b, c) stands for W^a X+^b X-^c.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mackey/gauss_rational.hpp"

namespace mackey {

using Monomial = std::vector<int>;
using UElement = std::map<Monomial, GaussRational>;

/// Linear combination of generators, indexed by generator.
using GeneratorCombination = std::vector<GaussRational>;

class PbwAlgebra {
 public:
  /// brackets[i][j] = [g_i, g_j]; p_degree[i] is 1 for generators in p_C.
  PbwAlgebra(std::vector<std::string> names, std::vector<int> p_degree,
             std::vector<std::vector<GeneratorCombination>> brackets);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int p_degree(int gen) const { return p_degree_[static_cast<std::size_t>(gen)]; }
  const GeneratorCombination& bracket(int i, int j) const;

  UElement one() const;
  UElement generator(int i) const;
  UElement monomial(const Monomial& m) const;

  UElement multiply(const UElement& u, const UElement& v) const;

  /// Sum of p-degrees of the letters of m.
  int p_degree_of(const Monomial& m) const;

 private:
  UElement left_multiply(int gen, const Monomial& m) const;

  std::vector<std::string> names_;
  std::vector<int> p_degree_;
  std::vector<std::vector<GeneratorCombination>> brackets_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, Monomial>, UElement> cache_;
};

enum class Sl2Generator { W = 0, XPlus = 1, XMinus = 2 };

/// sl(2, C) with brackets read off the 2x2 matrix model and [p, p] scaled by
/// t^2 (the Lie algebra g_t). order lists the generators left to right.
std::unique_ptr<PbwAlgebra> sl2_algebra(const Rational& t = 1,
                                        std::vector<Sl2Generator> order = {Sl2Generator::W,
                                                                           Sl2Generator::XPlus,
                                                                           Sl2Generator::XMinus});

/// Structure constants [g_i, g_j] in the basis (W, X+, X-), computed from
/// complex 2x2 matrices and checked to be Gaussian integers.
std::vector<std::vector<GeneratorCombination>> sl2_brackets_from_matrices();

UElement add(const UElement& a, const UElement& b);
UElement scale(const UElement& a, const GaussRational& c);

/// Each monomial times t^{p-degree}. At t = 0 only the p-degree 0 part remains.
UElement phi_tilde_scale(const PbwAlgebra& alg, const UElement& u, const Rational& t);

std::string to_string(const PbwAlgebra& alg, const UElement& u);

}  // namespace mackey
