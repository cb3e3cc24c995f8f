#include "semicg/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace semicg {

SparseMatrix::SparseMatrix(std::size_t nrows, std::size_t ncols,
                           std::vector<std::size_t> row_offsets,
                           std::vector<std::size_t> col_indices,
                           std::vector<double> values)
    : nrows_(nrows),
      ncols_(ncols),
      row_offsets_(std::move(row_offsets)),
      col_indices_(std::move(col_indices)),
      values_(std::move(values)) {
  if (row_offsets_.size() != nrows_ + 1)
    throw std::invalid_argument("SparseMatrix: row_offsets must have nrows+1 entries");
  if (row_offsets_.front() != 0)
    throw std::invalid_argument("SparseMatrix: row_offsets[0] must be 0");
  if (col_indices_.size() != values_.size())
    throw std::invalid_argument("SparseMatrix: col_indices/values length mismatch");
  if (row_offsets_.back() != values_.size())
    throw std::invalid_argument("SparseMatrix: row_offsets[nrows] must equal nnz");
  for (std::size_t i = 0; i < nrows_; ++i) {
    if (row_offsets_[i] > row_offsets_[i + 1])
      throw std::invalid_argument("SparseMatrix: row_offsets must be non-decreasing");
    for (std::size_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      if (col_indices_[k] >= ncols_)
        throw std::invalid_argument("SparseMatrix: column index out of range");
      if (k > row_offsets_[i] && col_indices_[k - 1] >= col_indices_[k])
        throw std::invalid_argument("SparseMatrix: columns must be strictly increasing per row");
    }
  }
}

SparseMatrix SparseMatrix::from_triplets(std::size_t nrows, std::size_t ncols,
                                         std::span<const Triplet> entries) {
  for (const Triplet& t : entries) {
    if (t.row >= nrows || t.col >= ncols)
      throw std::invalid_argument("from_triplets: entry out of range");
  }
  std::vector<Triplet> sorted(entries.begin(), entries.end());
  // stable: duplicates keep appearance order, so their sum is deterministic
  std::stable_sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  std::vector<std::size_t> offsets(nrows + 1, 0);
  std::vector<std::size_t> cols;
  std::vector<double> vals;
  cols.reserve(sorted.size());
  vals.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    const std::size_t r = sorted[i].row;
    const std::size_t c = sorted[i].col;
    double sum = 0.0;
    for (; i < sorted.size() && sorted[i].row == r && sorted[i].col == c; ++i) sum += sorted[i].value;
    cols.push_back(c);
    vals.push_back(sum);
    offsets[r + 1] += 1;
  }
  for (std::size_t r = 0; r < nrows; ++r) offsets[r + 1] += offsets[r];
  return SparseMatrix(nrows, ncols, std::move(offsets), std::move(cols), std::move(vals));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<std::size_t> offsets(n + 1);
  std::vector<std::size_t> cols(n);
  std::vector<double> vals(n, 1.0);
  for (std::size_t i = 0; i <= n; ++i) offsets[i] = i;
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return SparseMatrix(n, n, std::move(offsets), std::move(cols), std::move(vals));
}

void spmv(const SparseMatrix& a, const Vector& x, Vector& y) {
  if (a.ncols() != x.size()) throw std::invalid_argument("spmv: dimension mismatch");
  y.resize(a.nrows());
  const auto& offsets = a.row_offsets();
  const auto& cols = a.col_indices();
  const auto& vals = a.values();
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    double sum = 0.0;
    for (std::size_t k = offsets[i]; k < offsets[i + 1]; ++k) sum += vals[k] * x[cols[k]];
    y[i] = sum;
  }
}

Vector spmv(const SparseMatrix& a, const Vector& x) {
  Vector y;
  spmv(a, x, y);
  return y;
}

}  // namespace semicg
