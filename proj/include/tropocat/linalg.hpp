#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropocat/rational.hpp"

namespace tropocat {

/// Exact sparse matrix over ℚ. Entries are kept sorted by (row, col) with no
/// duplicates and no stored zeros.
class SparseRationalMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Rational value;
  };

  SparseRationalMatrix() = default;
  /// Duplicate positions are summed; zeros dropped. Out-of-range positions
  /// throw InvalidArgument.
  SparseRationalMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational at(std::size_t row, std::size_t col) const;
  SparseRationalMatrix transpose() const;

  bool operator==(const SparseRationalMatrix& o) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

/// Product a·b (InconsistentDims when a.cols() != b.rows()).
SparseRationalMatrix multiply(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

/// Exact rank over ℚ. Rows are cleared of denominators and eliminated
/// fraction-free over ℤ, dividing each updated row by its content. The pivot
/// is the shortest remaining row, at its least-populated column; ties break
/// on the smaller index, so the elimination order is deterministic.
std::size_t rank(const SparseRationalMatrix& m);

/// Betti_p = dims_p - ranks_p - ranks_{p+1}, where ranks_p is the rank of the
/// boundary leaving degree p and ranks beyond the end count as 0. Throws
/// InconsistentDims on length mismatch or a negative result.
std::vector<std::int64_t> betti(const std::vector<std::size_t>& dims,
                                const std::vector<std::size_t>& ranks);

}  // namespace tropocat
