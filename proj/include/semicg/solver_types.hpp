/// \file solver_types.hpp
/// \brief Shared solver configuration and reporting types.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semicg/vector_ops.hpp"

namespace semicg {

struct SolverConfig {
  double rel_tol = 1e-6;           ///< stop when ||r_k|| / ||r_0|| < rel_tol
  std::size_t max_iter = 10'000;
  std::size_t memory_m = 2;        ///< window width for swi/diom/dqgmres
  double breakdown_guard = kDefaultBreakdownGuard;
  bool record_directions = false;  ///< capture per-iteration trace (tests only)
  bool recompute_final_residual = true;
  /// Hard cap on stored direction pairs for the unwindowed solver; 0 means
  /// unbounded. Hitting the cap aborts with MemoryCap instead of silently
  /// truncating the history.
  std::size_t max_stored_directions = 0;
};

enum class SolveStatus { Converged, MaxIterations, Breakdown, MemoryCap };

enum class BreakdownKind {
  None,
  NonpositiveCurvature,  ///< p^T q at or below the guard
  PivotBreakdown,        ///< progressive-LU or rotation pivot vanished
  RhoBreakdown,          ///< biorthogonality scalar collapsed
  OmegaBreakdown,        ///< stabilization coefficient collapsed
};

std::string to_string(SolveStatus s);
std::string to_string(BreakdownKind k);

/// One semi-conjugate direction with its image under A and the cached
/// curvature p^T q (positive while no breakdown occurred).
struct DirectionPair {
  Vector p;
  Vector q;
  double pq = 0.0;
};

/// Optional per-iteration snapshots, recorded under record_directions.
/// iterates[k] = x_k and residuals[k] = r_k for k = 0..iterations;
/// directions[k] is the pair consumed by step k.
struct SolveTrace {
  std::vector<Vector> iterates;
  std::vector<Vector> residuals;
  std::vector<DirectionPair> directions;
};

/// Arnoldi snapshot (orthonormal basis, column-growing Hessenberg, beta).
/// hessenberg[j] holds column j+1: entries h_{1,j+1} .. h_{j+2,j+1}.
struct ArnoldiState {
  std::vector<Vector> basis;
  std::vector<std::vector<double>> hessenberg;
  double beta = 0.0;
};

struct SolveReport {
  Vector solution;
  SolveStatus status = SolveStatus::MaxIterations;
  BreakdownKind breakdown = BreakdownKind::None;
  std::size_t breakdown_iteration = 0;
  std::size_t iterations = 0;
  /// residual_history[k] = ||r_k|| / ||r_0|| (recurrence or rotation estimate,
  /// depending on the solver); residual_history[0] = 1 when r_0 != 0.
  std::vector<double> residual_history;
  /// ||b - A x|| / ||b|| recomputed at exit when requested.
  std::optional<double> true_final_residual;
  std::optional<SolveTrace> trace;
  std::optional<ArnoldiState> arnoldi;
};

}  // namespace semicg
