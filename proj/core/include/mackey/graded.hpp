#pragma once

// Finite-dimensional graded vector spaces over Q and homogeneous complements
// of subspaces.

#include <vector>

#include "mackey/gauss_rational.hpp"

namespace mackey {

using RVector = std::vector<Rational>;

/// V = V^0 + V^1 + ... with dims[d] = dim V^d. Coordinates are ordered by
/// degree.
struct GradedSpace {
  std::vector<int> dims;

  int total() const;
  int degree_of(int coordinate) const;
};

/// Highest degree with a nonzero coordinate, -1 for the zero vector.
int max_degree(const GradedSpace& v, const RVector& x);
/// The homogeneous component of x of degree max_degree(x).
RVector max_component(const GradedSpace& v, const RVector& x);
bool is_homogeneous(const GradedSpace& v, const RVector& x);

int rank(const std::vector<RVector>& vectors);
bool in_span(const std::vector<RVector>& vectors, const RVector& x);

struct ComplementStats {
  int emitted = 0;     // vectors accepted through the first case
  int reductions = 0;  // replacements e -> e - e^max
};

/// Homogeneous vectors spanning a complement of span(s_basis). Starts from a
/// coordinate completion of s_basis perturbed by elements of S, then strips
/// top components: if e^max is independent of the other candidates and S it
/// is emitted and joins S, otherwise e is replaced by e - e^max.
/// Throws NotAComplementableInput if s_basis is linearly dependent.
std::vector<RVector> homogeneous_complement(const GradedSpace& v, const std::vector<RVector>& s_basis,
                                            ComplementStats* stats = nullptr);

/// Same with a caller-supplied initial complement.
std::vector<RVector> homogeneous_complement(const GradedSpace& v, const std::vector<RVector>& s_basis,
                                            std::vector<RVector> initial, ComplementStats* stats = nullptr);

}  // namespace mackey
