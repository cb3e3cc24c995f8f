/// \file problems.hpp
/// \brief Built-in linear problems: small exact systems, a finite-difference
///        convection-diffusion generator, and seeded random positive definite
///        systems for the property suites.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "semicg/sparse_matrix.hpp"

namespace semicg {

struct LinearProblem {
  SparseMatrix matrix;
  Vector rhs;
  std::optional<Vector> known_solution;
  std::string label;
};

/// 3x3 unsymmetric positive definite system with b = (1,0,0) and exact
/// solution (1/3, 0, -1/3). Small enough to trace by hand; the error and
/// iterate norms of Galerkin-type solvers are non-monotonic on it.
LinearProblem example_3x3();

/// 5x5 unsymmetric positive definite system with b = (1,1,1,0,0). Separates
/// the windowed solvers: swi(2) keeps local semi-conjugacy but loses residual
/// orthogonality (r_3^T r_5 = -12/5491), while diom(2) keeps window residual
/// orthogonality but loses local semi-conjugacy (p_3^T A p_4 = sqrt(6)/303).
LinearProblem example_5x5();

/// 5-point central-difference discretization of
///   -epsilon * lap(u) + wind . grad(u) = 0
/// on the unit square with an N x N interior grid (h = 1/(N+1)) and Dirichlet
/// data folded into the right-hand side. The boundary profile is
/// u(x,0) = 2x-1, u(x,1) = 0, u(0,y) = -1, u(1,y) = +1 (imposed exactly).
/// Unsymmetric whenever wind != 0; the symmetric part is the scaled Laplacian.
LinearProblem convection_diffusion(std::size_t grid_points_per_side, double epsilon,
                                   std::array<double, 2> wind);

/// A = S + skew_scale*K + sigma*I with S random symmetric, K random skew, and
/// sigma shifting lambda_min of the symmetric part to 1. rhs = A*ones, so the
/// known solution is the all-ones vector. Bit-deterministic in (order, seed,
/// skew_scale).
LinearProblem random_pd_system(std::size_t order, std::uint64_t seed, double skew_scale);

LinearProblem identity_problem(std::size_t order);

}  // namespace semicg
