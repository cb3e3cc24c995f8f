#include <stdexcept>

#include "semicg/solvers.hpp"

namespace semicg {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::MaxIterations: return "MaxIterations";
    case SolveStatus::Breakdown: return "Breakdown";
    case SolveStatus::MemoryCap: return "MemoryCap";
  }
  return "Unknown";
}

std::string to_string(BreakdownKind k) {
  switch (k) {
    case BreakdownKind::None: return "None";
    case BreakdownKind::NonpositiveCurvature: return "NonpositiveCurvature";
    case BreakdownKind::PivotBreakdown: return "PivotBreakdown";
    case BreakdownKind::RhoBreakdown: return "RhoBreakdown";
    case BreakdownKind::OmegaBreakdown: return "OmegaBreakdown";
  }
  return "Unknown";
}

std::optional<SolverKind> solver_from_name(std::string_view name) {
  if (name == "scg") return SolverKind::Scg;
  if (name == "swi") return SolverKind::Swi;
  if (name == "fom") return SolverKind::Fom;
  if (name == "diom") return SolverKind::Diom;
  if (name == "gmres") return SolverKind::Gmres;
  if (name == "dqgmres") return SolverKind::Dqgmres;
  if (name == "bicgstab") return SolverKind::Bicgstab;
  return std::nullopt;
}

std::string_view solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::Scg: return "scg";
    case SolverKind::Swi: return "swi";
    case SolverKind::Fom: return "fom";
    case SolverKind::Diom: return "diom";
    case SolverKind::Gmres: return "gmres";
    case SolverKind::Dqgmres: return "dqgmres";
    case SolverKind::Bicgstab: return "bicgstab";
  }
  throw std::logic_error("solver_name: unknown kind");
}

bool solver_uses_memory(SolverKind kind) {
  return kind == SolverKind::Swi || kind == SolverKind::Diom || kind == SolverKind::Dqgmres;
}

SolveReport run_solver(SolverKind kind, const SparseMatrix& a, const Vector& b,
                       const SolverConfig& cfg) {
  switch (kind) {
    case SolverKind::Scg: return scg_solve(a, b, cfg);
    case SolverKind::Swi: return swi_solve(a, b, cfg);
    case SolverKind::Fom: return fom_solve(a, b, cfg);
    case SolverKind::Diom: return diom_solve(a, b, cfg);
    case SolverKind::Gmres: return gmres_solve(a, b, cfg);
    case SolverKind::Dqgmres: return dqgmres_solve(a, b, cfg);
    case SolverKind::Bicgstab: return bicgstab_solve(a, b, cfg);
  }
  throw std::logic_error("run_solver: unknown kind");
}

}  // namespace semicg
