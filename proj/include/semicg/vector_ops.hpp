/// \file vector_ops.hpp
/// \brief Dense vector kernels with deterministic (left-to-right) accumulation.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace semicg {

using Vector = std::vector<double>;

/// Guard under which a divisor counts as a breakdown: |d| <= guard * scale.
inline constexpr double kDefaultBreakdownGuard = 100.0 * std::numeric_limits<double>::epsilon();

/// Left-to-right dot product. No pairwise or SIMD reassociation, so repeated
/// runs on one platform produce bit-identical results.
inline double dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double nrm2(const Vector& x) { return std::sqrt(dot(x, x)); }

inline double inf_norm(const Vector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

/// y += a*x
inline void axpy(double a, const Vector& x, Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

inline void scal(double a, Vector& x) {
  for (double& v : x) v *= a;
}

inline Vector scaled(const Vector& x, double a) {
  Vector y = x;
  scal(a, y);
  return y;
}

/// z = x - y
inline Vector subtract(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("subtract: length mismatch");
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

inline bool all_finite(const Vector& x) {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace semicg
