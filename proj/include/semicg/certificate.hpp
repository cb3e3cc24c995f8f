/// \file certificate.hpp
/// \brief Sliding-window convergence diagnostic.

#pragma once

#include "semicg/dense.hpp"

namespace semicg {

/// Result of the spectral convergence test for the windowed solver: the
/// iteration contracts the error energy d^T A d whenever the symmetric part
/// of A^{-1} dominates its skew part, i.e. lambda_min_H > rho_S.
struct ConvergenceCertificate {
  bool condition_holds = false;
  double lambda_min_H = 0.0;   ///< lambda_min of (A^{-1} + A^{-T})/2
  double rho_S = 0.0;          ///< spectral radius of (A^{-1} - A^{-T})/2
  double contraction_bound = 1.0;  ///< per-step bound on the energy ratio
};

/// Forms A^{-1} densely and evaluates the condition above. Desk-scale only.
/// Throws SingularMatrixError when A is singular to working precision.
ConvergenceCertificate convergence_certificate(const DenseMatrix& a);

}  // namespace semicg
