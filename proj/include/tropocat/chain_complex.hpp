#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropocat/linalg.hpp"
#include "tropocat/parallel.hpp"

namespace tropocat {

struct HomologyRow {
  int degree = 0;
  std::size_t dim = 0;
  /// Rank of the boundary leaving this degree.
  std::size_t rank = 0;
  std::int64_t betti = 0;
};

/// Finite chain complex of ℚ-vector spaces in degrees
/// min_degree .. min_degree + dims.size() - 1.
struct ChainComplex {
  int min_degree = 0;
  std::vector<std::size_t> dims;
  /// boundaries[k] : C_{min_degree+k} -> C_{min_degree+k-1}; boundaries[0]
  /// has zero rows.
  std::vector<SparseRationalMatrix> boundaries;

  int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int degree) const;
  const SparseRationalMatrix& boundary(int degree) const;

  /// Throws InconsistentDims when matrix shapes disagree with dims.
  void validate() const;
  /// ∂∘∂ = 0 exactly in every degree.
  bool boundary_squares_to_zero() const;
  /// Ranks of all boundaries, computed in parallel across degrees.
  std::vector<std::size_t> ranks(const Budget& budget = Budget::unlimited()) const;
  std::vector<HomologyRow> homology(const Budget& budget = Budget::unlimited()) const;
  /// Σ (-1)^p dim C_p.
  std::int64_t euler_characteristic() const;
};

/// Σ (-1)^degree betti.
std::int64_t euler_characteristic(const std::vector<HomologyRow>& rows);

}  // namespace tropocat
