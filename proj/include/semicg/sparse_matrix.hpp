/// \file sparse_matrix.hpp
/// \brief Compressed sparse-row matrix with owned storage.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "semicg/vector_ops.hpp"

namespace semicg {

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;
};

/// Immutable-after-construction CSR matrix.
///
/// Invariants enforced at construction:
///  - row_offsets is non-decreasing, row_offsets[0] == 0, row_offsets[nrows] == nnz;
///  - column indices strictly increasing within each row and < ncols;
///  - no duplicate entries (from_triplets sums duplicates).
class SparseMatrix {
 public:
  SparseMatrix() = default;

  /// Takes ownership of pre-built CSR arrays; validates the invariants above.
  SparseMatrix(std::size_t nrows, std::size_t ncols,
               std::vector<std::size_t> row_offsets,
               std::vector<std::size_t> col_indices,
               std::vector<double> values);

  /// Builds CSR from an arbitrary-order triplet list. Duplicates are summed
  /// in their order of appearance.
  static SparseMatrix from_triplets(std::size_t nrows, std::size_t ncols,
                                    std::span<const Triplet> entries);

  static SparseMatrix identity(std::size_t n);

  std::size_t nrows() const { return nrows_; }
  std::size_t ncols() const { return ncols_; }
  std::size_t nnz() const { return values_.size(); }

  const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
  const std::vector<std::size_t>& col_indices() const { return col_indices_; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const SparseMatrix&) const = default;

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::vector<std::size_t> row_offsets_{0};
  std::vector<std::size_t> col_indices_;
  std::vector<double> values_;
};

/// y = A*x with ascending-column accumulation per row.
void spmv(const SparseMatrix& a, const Vector& x, Vector& y);
Vector spmv(const SparseMatrix& a, const Vector& x);

}  // namespace semicg
