/// \file solvers.hpp
/// \brief Iterative solvers for square positive definite systems A x = b.
///
/// All solvers start from x_0 = 0, stop when ||r_k||/||r_0|| < rel_tol or the
/// iteration cap is reached, and report a per-iteration relative-residual
/// history. Positive definiteness is not verified up front; violations
/// surface as explicit breakdown statuses.

#pragma once

#include <optional>
#include <string_view>

#include "semicg/solver_types.hpp"
#include "semicg/sparse_matrix.hpp"

namespace semicg {

/// Semi-conjugate gradient with full direction history.
SolveReport scg_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg = {});

/// Sliding-window implementation of scg_solve: deflation is restricted to the
/// m most recent direction pairs (all of them while fewer than m exist).
/// m = 0 deflates against the current direction only.
SolveReport swi_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg = {});

/// Full orthogonalization method: Arnoldi + progressive pivot-free LU.
SolveReport fom_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg = {});

/// Incomplete-orthogonalization variant of fom_solve with window m.
SolveReport diom_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg = {});

/// Unrestarted GMRES via Arnoldi and Givens rotations.
SolveReport gmres_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg = {});

/// Truncated-orthogonalization quasi-minimum-residual variant with window m.
SolveReport dqgmres_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg = {});

/// BiCGSTAB with the shadow residual fixed at r_0.
SolveReport bicgstab_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg = {});

/// Textbook conjugate gradient; requires symmetric positive definite A.
/// Exists as the SPD oracle for the property suites.
SolveReport reference_cg(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg = {});

enum class SolverKind { Scg, Swi, Fom, Diom, Gmres, Dqgmres, Bicgstab };

std::optional<SolverKind> solver_from_name(std::string_view name);
std::string_view solver_name(SolverKind kind);
bool solver_uses_memory(SolverKind kind);
SolveReport run_solver(SolverKind kind, const SparseMatrix& a, const Vector& b,
                       const SolverConfig& cfg);

}  // namespace semicg
