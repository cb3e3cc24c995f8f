/// \file dense.hpp
/// \brief Small dense kernels: pivoted LU solve, symmetric eigenvalues,
///        symmetric/skew part spectra, and forward substitution.
///
/// These back the desk-scale diagnostics and the test oracles. They are
/// plain O(n^3) routines meant for orders up to a couple of thousand.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "semicg/sparse_matrix.hpp"
#include "semicg/vector_ops.hpp"

namespace semicg {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  DenseMatrix transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix to_dense(const SparseMatrix& a);
SparseMatrix to_sparse(const DenseMatrix& a);
Vector dense_matvec(const DenseMatrix& a, const Vector& x);
double frobenius_norm(const SparseMatrix& a);
double frobenius_norm(const DenseMatrix& a);

struct SingularMatrixError : std::runtime_error {
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// A is singular to working precision -> SingularMatrixError. One step of
/// iterative refinement keeps the residual near machine level.
Vector dense_solve(const DenseMatrix& a, const Vector& b);
DenseMatrix dense_inverse(const DenseMatrix& a);

/// Eigenvalues of a symmetric matrix (ascending) by cyclic Jacobi rotations.
std::vector<double> symmetric_eigenvalues(DenseMatrix s);

struct SpectrumSummary {
  double lambda_min_sym = 0.0;  ///< smallest eigenvalue of (A+A^T)/2
  double lambda_max_sym = 0.0;  ///< largest eigenvalue of (A+A^T)/2
  double rho_skew = 0.0;        ///< spectral radius of (A-A^T)/2
};

/// Spectra of the symmetric and skew-symmetric parts of a square matrix.
/// rho_skew is computed from the singular values of the skew part.
SpectrumSummary symmetric_part_spectrum(const DenseMatrix& a);

/// Lower-triangular system; strictly-upper entries must be zero.
struct TriangularSystem {
  DenseMatrix lower;
  Vector rhs;
};

struct TriangularBreakdownError : std::runtime_error {
  TriangularBreakdownError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index(index) {}
  std::size_t index;
};

/// Solves lower * x = rhs. A diagonal entry with |d| <= guard * (row inf-norm)
/// raises TriangularBreakdownError carrying the offending index.
Vector forward_substitute(const TriangularSystem& sys, double guard = kDefaultBreakdownGuard);

}  // namespace semicg
