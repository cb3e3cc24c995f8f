#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "semicg/direction_window.hpp"
#include "semicg/solvers.hpp"
#include "solver_common.hpp"

namespace semicg {

namespace {

// FOM and DIOM share one driver: Arnoldi (full or truncated to the last
// `window` basis vectors), progressive pivot-free LU of the Hessenberg, and
// the zeta/direction update. window == 0 means full orthogonalization.
SolveReport arnoldi_lu_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg,
                             std::size_t window) {
  detail::check_system(a, b);
  detail::check_config(cfg, window != 0);
  const std::size_t n = b.size();
  const double beta = nrm2(b);
  if (beta == 0.0) return detail::zero_rhs_report(n, cfg);

  const bool full = window == 0;
  const std::size_t unbounded = std::numeric_limits<std::size_t>::max();

  SolveReport rep;
  rep.residual_history.push_back(1.0);
  if (cfg.record_directions) {
    rep.trace.emplace();
    rep.arnoldi.emplace();
    rep.arnoldi->beta = beta;
  }

  Ring<Vector> basis(full ? unbounded : window);
  Ring<Vector> p_ring(full ? unbounded : window - 1);
  Ring<Vector> q_ring(full ? unbounded : window - 1);
  std::vector<double> l_sub;  // l_sub[i] = l_{i+2,i+1} of the unit lower factor

  {
    Vector v1 = scaled(b, 1.0 / beta);
    if (rep.arnoldi) rep.arnoldi->basis.push_back(v1);
    basis.push(std::move(v1));
  }

  Vector x(n, 0.0);
  Vector r = b;
  Vector av(n), w, p_hat, q_hat;
  std::vector<double> hcol, ucol;
  double zeta = 0.0;

  for (std::size_t k = 1; k <= cfg.max_iter; ++k) {
    if (rep.trace) {
      rep.trace->iterates.push_back(x);
      rep.trace->residuals.push_back(r);
    }
    const std::size_t lo = full ? 1 : (k >= window ? k - window + 1 : 1);

    spmv(a, basis.at(k - 1), av);
    const double av_norm = nrm2(av);
    w = av;
    hcol.assign(k - lo + 1, 0.0);
    for (std::size_t i = lo; i <= k; ++i) {
      const Vector& vi = basis.at(i - 1);
      const double h = dot(vi, w);
      hcol[i - lo] = h;
      axpy(-h, vi, w);
    }
    const double h_next = nrm2(w);
    // h_{k+1,k} = 0 with a positive definite A means the Krylov space is
    // invariant and the Galerkin step is exact: finish the update, converge.
    const bool lucky = h_next <= cfg.breakdown_guard * av_norm;

    if (rep.arnoldi) {
      std::vector<double> column(k + 1, 0.0);
      for (std::size_t i = lo; i <= k; ++i) column[i - 1] = hcol[i - lo];
      column[k] = h_next;
      rep.arnoldi->hessenberg.push_back(std::move(column));
    }

    // progressive LU: u_{i,k} = h_{i,k} - l_{i,i-1} u_{i-1,k}, band lo..k
    ucol.assign(hcol.size(), 0.0);
    double colscale = h_next;
    for (std::size_t bi = 0; bi < hcol.size(); ++bi) {
      const std::size_t i = lo + bi;
      double u = hcol[bi];
      if (bi >= 1) u -= l_sub[i - 2] * ucol[bi - 1];
      ucol[bi] = u;
      colscale = std::max(colscale, std::abs(hcol[bi]));
    }
    const double pivot = ucol.back();
    if (std::abs(pivot) <= cfg.breakdown_guard * colscale) {
      rep.status = SolveStatus::Breakdown;
      rep.breakdown = BreakdownKind::PivotBreakdown;
      rep.breakdown_iteration = k;
      break;
    }

    zeta = (k == 1) ? beta : -l_sub[k - 2] * zeta;

    p_hat = basis.at(k - 1);
    q_hat = av;
    for (std::size_t i = lo; i + 1 <= k; ++i) {
      axpy(-ucol[i - lo], p_ring.at(i - 1), p_hat);
      axpy(-ucol[i - lo], q_ring.at(i - 1), q_hat);
    }
    scal(1.0 / pivot, p_hat);
    scal(1.0 / pivot, q_hat);
    if (rep.trace) rep.trace->directions.push_back({p_hat, q_hat, dot(p_hat, q_hat)});

    axpy(zeta, p_hat, x);
    axpy(-zeta, q_hat, r);
    rep.residual_history.push_back(nrm2(r) / beta);
    rep.iterations = k;

    if (rep.residual_history.back() < cfg.rel_tol || lucky) {
      rep.status = SolveStatus::Converged;
      break;
    }
    if (k == cfg.max_iter) {
      rep.status = SolveStatus::MaxIterations;
      break;
    }

    l_sub.push_back(h_next / pivot);
    scal(1.0 / h_next, w);
    if (rep.arnoldi) rep.arnoldi->basis.push_back(w);
    basis.push(std::move(w));
    p_ring.push(std::move(p_hat));
    q_ring.push(std::move(q_hat));
  }

  if (rep.trace) {
    rep.trace->iterates.push_back(x);
    rep.trace->residuals.push_back(r);
  }
  rep.solution = std::move(x);
  detail::finalize_report(rep, a, b, beta, cfg);
  return rep;
}

}  // namespace

SolveReport fom_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg) {
  return arnoldi_lu_solve(a, b, cfg, 0);
}

SolveReport diom_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg) {
  if (cfg.memory_m < 1) throw std::invalid_argument("diom_solve: memory_m must be at least 1");
  return arnoldi_lu_solve(a, b, cfg, cfg.memory_m);
}

}  // namespace semicg
