#include "semicg/dense.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace semicg {

DenseMatrix to_dense(const SparseMatrix& a) {
  DenseMatrix d(a.nrows(), a.ncols());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t k = a.row_offsets()[i]; k < a.row_offsets()[i + 1]; ++k)
      d(i, a.col_indices()[k]) = a.values()[k];
  return d;
}

SparseMatrix to_sparse(const DenseMatrix& a) {
  std::vector<Triplet> entries;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0.0) entries.push_back({i, j, a(i, j)});
  return SparseMatrix::from_triplets(a.rows(), a.cols(), entries);
}

Vector dense_matvec(const DenseMatrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("dense_matvec: dimension mismatch");
  Vector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double frobenius_norm(const SparseMatrix& a) {
  double s = 0.0;
  for (double v : a.values()) s += v * v;
  return std::sqrt(s);
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

namespace {

struct LuFactors {
  DenseMatrix lu;               // L below diagonal (unit), U on/above
  std::vector<std::size_t> perm;  // row permutation
};

LuFactors lu_factor(DenseMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("lu_factor: matrix must be square");
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  const double tiny = static_cast<double>(std::max<std::size_t>(n, 1)) *
                      std::numeric_limits<double>::epsilon() * scale;

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        piv = i;
      }
    }
    if (best <= tiny)
      throw SingularMatrixError("dense_solve: matrix is singular to working precision");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(perm[k], perm[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = a(i, k) / a(k, k);
      a(i, k) = l;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= l * a(k, j);
    }
  }
  return {std::move(a), std::move(perm)};
}

Vector lu_solve(const LuFactors& f, const Vector& b) {
  const std::size_t n = f.lu.rows();
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (std::size_t i = 1; i < n; ++i) {
    double s = x[i];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * x[j];
    x[ii] = s / f.lu(ii, ii);
  }
  return x;
}

}  // namespace

Vector dense_solve(const DenseMatrix& a, const Vector& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("dense_solve: matrix must be square");
  if (a.rows() != b.size()) throw std::invalid_argument("dense_solve: dimension mismatch");
  const LuFactors f = lu_factor(a);
  Vector x = lu_solve(f, b);
  // one refinement step
  Vector r = subtract(b, dense_matvec(a, x));
  Vector dx = lu_solve(f, r);
  axpy(1.0, dx, x);
  return x;
}

DenseMatrix dense_inverse(const DenseMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("dense_inverse: matrix must be square");
  const LuFactors f = lu_factor(a);
  DenseMatrix inv(n, n);
  Vector e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    Vector col = lu_solve(f, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    e[j] = 0.0;
  }
  return inv;
}

std::vector<double> symmetric_eigenvalues(DenseMatrix s) {
  const std::size_t n = s.rows();
  if (n != s.cols()) throw std::invalid_argument("symmetric_eigenvalues: matrix must be square");
  if (n == 0) return {};

  const double norm = frobenius_norm(s);
  const double stop = 1e-14 * std::max(norm, std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += s(p, q) * s(p, q);
    if (std::sqrt(2.0 * off) <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = s(p, q);
        if (std::abs(apq) <= stop / static_cast<double>(n)) continue;
        const double tau = (s(q, q) - s(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          const double sip = s(i, p);
          const double siq = s(i, q);
          s(i, p) = c * sip - sn * siq;
          s(i, q) = sn * sip + c * siq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const double spj = s(p, j);
          const double sqj = s(q, j);
          s(p, j) = c * spj - sn * sqj;
          s(q, j) = sn * spj + c * sqj;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = s(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

SpectrumSummary symmetric_part_spectrum(const DenseMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("symmetric_part_spectrum: matrix must be square");

  DenseMatrix h(n, n);
  DenseMatrix skew(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(i, j) = 0.5 * (a(i, j) + a(j, i));
      skew(i, j) = 0.5 * (a(i, j) - a(j, i));
    }
  }
  const std::vector<double> eig_h = symmetric_eigenvalues(h);

  // sigma_max(S)^2 = lambda_max(S^T S); S^T S is symmetric positive semidefinite
  DenseMatrix sts(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double v = 0.0;
      for (std::size_t k = 0; k < n; ++k) v += skew(k, i) * skew(k, j);
      sts(i, j) = v;
    }
  }
  const std::vector<double> eig_sts = symmetric_eigenvalues(sts);

  SpectrumSummary out;
  out.lambda_min_sym = n ? eig_h.front() : 0.0;
  out.lambda_max_sym = n ? eig_h.back() : 0.0;
  out.rho_skew = n ? std::sqrt(std::max(0.0, eig_sts.back())) : 0.0;
  return out;
}

Vector forward_substitute(const TriangularSystem& sys, double guard) {
  const DenseMatrix& l = sys.lower;
  const std::size_t n = l.rows();
  if (n != l.cols()) throw std::invalid_argument("forward_substitute: matrix must be square");
  if (sys.rhs.size() != n) throw std::invalid_argument("forward_substitute: rhs length mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (l(i, j) != 0.0)
        throw std::invalid_argument("forward_substitute: strictly-upper entries must be zero");

  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double row_norm = 0.0;
    for (std::size_t j = 0; j <= i; ++j) row_norm = std::max(row_norm, std::abs(l(i, j)));
    if (std::abs(l(i, i)) <= guard * row_norm)
      throw TriangularBreakdownError(
          "forward_substitute: diagonal below breakdown guard at index " + std::to_string(i), i);
    double s = sys.rhs[i];
    for (std::size_t j = 0; j < i; ++j) s -= l(i, j) * x[j];
    x[i] = s / l(i, i);
  }
  return x;
}

}  // namespace semicg
