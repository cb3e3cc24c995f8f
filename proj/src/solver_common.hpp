// Internal helpers shared by the solver translation units.

#pragma once

#include <stdexcept>

#include "semicg/solver_types.hpp"
#include "semicg/solvers.hpp"
#include "semicg/sparse_matrix.hpp"

namespace semicg::detail {

inline void check_system(const SparseMatrix& a, const Vector& b) {
  if (a.nrows() != a.ncols()) throw std::invalid_argument("solver: matrix must be square");
  if (a.nrows() != b.size()) throw std::invalid_argument("solver: rhs length mismatch");
}

inline void check_config(const SolverConfig& cfg, bool needs_window) {
  if (!(cfg.rel_tol > 0.0)) throw std::invalid_argument("solver: rel_tol must be positive");
  if (cfg.max_iter < 1) throw std::invalid_argument("solver: max_iter must be at least 1");
  if (needs_window && cfg.memory_m < 1)
    throw std::invalid_argument("solver: memory_m must be at least 1");
}

/// b == 0: x = 0 is exact; report converged at iteration 0.
inline SolveReport zero_rhs_report(std::size_t n, const SolverConfig& cfg) {
  SolveReport rep;
  rep.solution.assign(n, 0.0);
  rep.status = SolveStatus::Converged;
  rep.iterations = 0;
  rep.residual_history = {0.0};
  if (cfg.recompute_final_residual) rep.true_final_residual = 0.0;
  if (cfg.record_directions) {
    rep.trace.emplace();
    rep.trace->iterates.push_back(rep.solution);
    rep.trace->residuals.push_back(Vector(n, 0.0));
  }
  return rep;
}

inline void finalize_report(SolveReport& rep, const SparseMatrix& a, const Vector& b,
                            double rnorm0, const SolverConfig& cfg) {
  if (!cfg.recompute_final_residual) return;
  Vector r = b;
  const Vector ax = spmv(a, rep.solution);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= ax[i];
  rep.true_final_residual = nrm2(r) / rnorm0;
}

}  // namespace semicg::detail
