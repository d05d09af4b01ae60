#pragma once

// Mackey parameters (chi, mu) for SL(n, R) with chi diagonal, the block
// structure of the associated parabolic, and the motion group operators on
// functions sampled on a uniform grid of K = SO(2).

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mackey/deformation.hpp"
#include "mackey/lie_core.hpp"

namespace mackey {

using Complex = std::complex<double>;

enum class Parity { even, odd };

/// chi is stored as its B-dual vector in a. For SL(2) the label is a parity
/// when chi != 0 and a K-character index when chi = 0; for n > 2 it is an
/// opaque string.
struct MackeyDatum {
  AlgebraElement chi;
  std::variant<Parity, int, std::string> mu;
};

struct BlockStructure {
  std::vector<int> partition;  // block sizes, in order of decreasing chi entry
  int dim_m = 0;
  int dim_a = 0;
  int dim_n = 0;
};

struct SampledCircleFunction {
  std::vector<Complex> values;  // at theta_j = 2 pi j / N
  std::optional<Parity> parity;

  std::size_t size() const { return values.size(); }
};

/// Throws NotDiagonal or InvalidArgument.
void validate_datum(const MackeyDatum& d);

/// Sorts the diagonal of chi in decreasing order. Labels are kept as they are.
MackeyDatum normalize_datum(const MackeyDatum& d);

BlockStructure stabilizer_structure(const AlgebraElement& chi);

/// Checks N even and the declared parity. Throws InvalidArgument.
void validate_circle_function(const SampledCircleFunction& f);

/// (pi0(k, v) f)(u_j) = exp(i B(chi, Ad(u_j^{-1}) v)) f(k^{-1} u_j), for SL(2)
/// with k a multiple of 2 pi / N (OffGridRotation otherwise).
SampledCircleFunction pi0_operator(const DeformedElement& g0, const MackeyDatum& d,
                                   const SampledCircleFunction& f);

/// Matrix of pi0(g0) on the N/2-dimensional space of grid functions with the
/// parity of d, in the coordinates f(theta_0), ..., f(theta_{N/2-1}).
CMatrix pi0_reduced_matrix(const DeformedElement& g0, const MackeyDatum& d, int n_grid);

struct CommutantReport {
  int null_dimension = 0;        // eigenvalues of the normal equations below tol
  double smallest = 0.0;         // two smallest eigenvalues (scaled)
  double second_smallest = 0.0;
  double scalar_deviation = 0.0;  // |A - (tr A / d) I| / |A| for the null vector A
};

/// Least-squares commutant of the reduced operators of the given elements.
CommutantReport commutant_test(const MackeyDatum& d, const std::vector<DeformedElement>& elements,
                               int n_grid, double tol = 1e-10);

struct MackeyRecord {
  MackeyDatum datum;  // canonical representative
  BlockStructure blocks;
  std::string series_label;
  std::string induction_label;
  bool label_transported_verbatim = false;

  /// One-line JSON object {datum, partition, dims, series_label, ...}.
  std::string to_json() const;
};

MackeyRecord mackey_bijection_record(const MackeyDatum& d);

}  // namespace mackey
