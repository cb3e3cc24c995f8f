#include <cmath>
#include <utility>

#include "semicg/solvers.hpp"
#include "solver_common.hpp"

namespace semicg {

SolveReport bicgstab_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg) {
  detail::check_system(a, b);
  detail::check_config(cfg, false);
  const std::size_t n = b.size();
  const double beta = nrm2(b);
  if (beta == 0.0) return detail::zero_rhs_report(n, cfg);

  SolveReport rep;
  rep.residual_history.push_back(1.0);

  Vector x(n, 0.0);
  Vector r = b;
  const Vector r_shadow = b;  // fixed shadow residual r_0
  const double shadow_norm = beta;

  Vector p(n, 0.0), v(n, 0.0), s(n), t(n);
  double rho_prev = 1.0, alpha = 1.0, omega = 1.0;
  double rnorm = beta;

  for (std::size_t k = 1; k <= cfg.max_iter; ++k) {
    const double rho = dot(r_shadow, r);
    if (std::abs(rho) <= cfg.breakdown_guard * shadow_norm * rnorm) {
      rep.status = SolveStatus::Breakdown;
      rep.breakdown = BreakdownKind::RhoBreakdown;
      rep.breakdown_iteration = k;
      break;
    }
    if (k == 1) {
      p = r;
    } else {
      const double beta_k = (rho / rho_prev) * (alpha / omega);
      for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta_k * (p[i] - omega * v[i]);
    }
    spmv(a, p, v);
    const double rv = dot(r_shadow, v);
    if (std::abs(rv) <= cfg.breakdown_guard * shadow_norm * nrm2(v)) {
      rep.status = SolveStatus::Breakdown;
      rep.breakdown = BreakdownKind::RhoBreakdown;
      rep.breakdown_iteration = k;
      break;
    }
    alpha = rho / rv;
    s = r;
    axpy(-alpha, v, s);
    const double snorm = nrm2(s);
    if (snorm / beta < cfg.rel_tol) {
      axpy(alpha, p, x);
      r = s;
      rep.residual_history.push_back(snorm / beta);
      rep.iterations = k;
      rep.status = SolveStatus::Converged;
      break;
    }
    spmv(a, s, t);
    const double tt = dot(t, t);
    const double ts = dot(t, s);
    if (tt == 0.0 || std::abs(ts) <= cfg.breakdown_guard * std::sqrt(tt) * snorm) {
      rep.status = SolveStatus::Breakdown;
      rep.breakdown = BreakdownKind::OmegaBreakdown;
      rep.breakdown_iteration = k;
      break;
    }
    omega = ts / tt;
    axpy(alpha, p, x);
    axpy(omega, s, x);
    r = s;
    axpy(-omega, t, r);
    rnorm = nrm2(r);
    rep.residual_history.push_back(rnorm / beta);
    rep.iterations = k;
    if (rep.residual_history.back() < cfg.rel_tol) {
      rep.status = SolveStatus::Converged;
      break;
    }
    if (k == cfg.max_iter) {
      rep.status = SolveStatus::MaxIterations;
      break;
    }
    rho_prev = rho;
  }

  rep.solution = std::move(x);
  detail::finalize_report(rep, a, b, beta, cfg);
  return rep;
}

}  // namespace semicg
