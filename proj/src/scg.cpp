#include <cmath>
#include <utility>

#include "semicg/direction_window.hpp"
#include "semicg/solvers.hpp"
#include "solver_common.hpp"

namespace semicg {

namespace {

bool curvature_ok(double pq, const Vector& p, const Vector& q, double guard) {
  return pq > guard * nrm2(p) * nrm2(q);
}

// Full history: two growing column stores, optionally capped.
struct UnboundedHistory {
  std::vector<DirectionPair> pairs;
  std::size_t cap = 0;  // 0 = unlimited

  bool push(DirectionPair d) {
    if (cap != 0 && pairs.size() >= cap) return false;
    pairs.push_back(std::move(d));
    return true;
  }
  std::size_t size() const { return pairs.size(); }
  const DirectionPair& operator[](std::size_t i) const { return pairs[i]; }
  const DirectionPair& newest() const { return pairs.back(); }
};

struct WindowHistory {
  WindowBuffer buf;

  bool push(DirectionPair d) {
    buf.push(std::move(d));
    return true;
  }
  std::size_t size() const { return buf.size(); }
  const DirectionPair& operator[](std::size_t i) const { return buf[i]; }
  const DirectionPair& newest() const { return buf.newest(); }
};

// Shared driver for SCG and SWI; they differ only in which direction pairs
// the sweep sees.
template <class History>
SolveReport semi_conjugate_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg,
                                 History& hist) {
  detail::check_system(a, b);
  detail::check_config(cfg, false);
  const std::size_t n = b.size();
  const double rnorm0 = nrm2(b);
  if (rnorm0 == 0.0) return detail::zero_rhs_report(n, cfg);

  SolveReport rep;
  rep.residual_history.push_back(1.0);
  if (cfg.record_directions) rep.trace.emplace();

  Vector x(n, 0.0);
  Vector r = b;
  Vector q = spmv(a, r);  // q_0 = A p_0 with p_0 = r_0
  double pq = dot(r, q);
  if (!curvature_ok(pq, r, q, cfg.breakdown_guard)) {
    rep.status = SolveStatus::Breakdown;
    rep.breakdown = BreakdownKind::NonpositiveCurvature;
    rep.breakdown_iteration = 0;
    if (rep.trace) {
      rep.trace->iterates.push_back(x);
      rep.trace->residuals.push_back(r);
    }
    rep.solution = std::move(x);
    detail::finalize_report(rep, a, b, rnorm0, cfg);
    return rep;
  }
  hist.push({r, std::move(q), pq});

  double rr = dot(r, r);
  Vector v(n), p_next, q_next;
  std::vector<double> lambda;

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    {
      const DirectionPair& cur = hist.newest();
      if (rep.trace) {
        rep.trace->iterates.push_back(x);
        rep.trace->residuals.push_back(r);
        rep.trace->directions.push_back(cur);
      }
      const double alpha = rr / cur.pq;  // = p_k^T r_k / p_k^T q_k since P_k^T r_k = 0
      axpy(alpha, cur.p, x);
      axpy(-alpha, cur.q, r);
    }
    rr = dot(r, r);
    rep.residual_history.push_back(std::sqrt(rr) / rnorm0);
    rep.iterations = k + 1;
    if (rep.residual_history.back() < cfg.rel_tol) {
      rep.status = SolveStatus::Converged;
      break;
    }
    if (k + 1 == cfg.max_iter) {
      rep.status = SolveStatus::MaxIterations;
      break;
    }

    spmv(a, r, v);
    direction_sweep(
        r, v, hist.size(), [&](std::size_t i) -> const DirectionPair& { return hist[i]; }, p_next,
        q_next, lambda);
    const double pq_next = dot(p_next, q_next);
    if (!curvature_ok(pq_next, p_next, q_next, cfg.breakdown_guard)) {
      rep.status = SolveStatus::Breakdown;
      rep.breakdown = BreakdownKind::NonpositiveCurvature;
      rep.breakdown_iteration = k + 1;
      break;
    }
    if (!hist.push({std::move(p_next), std::move(q_next), pq_next})) {
      rep.status = SolveStatus::MemoryCap;
      break;
    }
  }

  if (rep.trace) {
    rep.trace->iterates.push_back(x);
    rep.trace->residuals.push_back(r);
  }
  rep.solution = std::move(x);
  detail::finalize_report(rep, a, b, rnorm0, cfg);
  return rep;
}

}  // namespace

SolveReport scg_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg) {
  UnboundedHistory hist;
  hist.cap = cfg.max_stored_directions;
  return semi_conjugate_solve(a, b, cfg, hist);
}

SolveReport swi_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg) {
  WindowHistory hist{WindowBuffer(cfg.memory_m)};
  return semi_conjugate_solve(a, b, cfg, hist);
}

SolveReport reference_cg(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg) {
  detail::check_system(a, b);
  detail::check_config(cfg, false);
  const std::size_t n = b.size();
  const double rnorm0 = nrm2(b);
  if (rnorm0 == 0.0) return detail::zero_rhs_report(n, cfg);

  SolveReport rep;
  rep.residual_history.push_back(1.0);
  if (cfg.record_directions) rep.trace.emplace();

  Vector x(n, 0.0);
  Vector r = b;
  Vector p = r;
  Vector q(n);
  double rr = dot(r, r);

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    spmv(a, p, q);
    const double pq = dot(p, q);
    if (!curvature_ok(pq, p, q, cfg.breakdown_guard)) {
      rep.status = SolveStatus::Breakdown;
      rep.breakdown = BreakdownKind::NonpositiveCurvature;
      rep.breakdown_iteration = k;
      break;
    }
    if (rep.trace) {
      rep.trace->iterates.push_back(x);
      rep.trace->residuals.push_back(r);
      rep.trace->directions.push_back({p, q, pq});
    }
    const double alpha = rr / pq;
    axpy(alpha, p, x);
    axpy(-alpha, q, r);
    const double rr_next = dot(r, r);
    rep.residual_history.push_back(std::sqrt(rr_next) / rnorm0);
    rep.iterations = k + 1;
    if (rep.residual_history.back() < cfg.rel_tol) {
      rep.status = SolveStatus::Converged;
      break;
    }
    if (k + 1 == cfg.max_iter) {
      rep.status = SolveStatus::MaxIterations;
      break;
    }
    const double beta = rr_next / rr;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    rr = rr_next;
  }

  if (rep.trace) {
    rep.trace->iterates.push_back(x);
    rep.trace->residuals.push_back(r);
  }
  rep.solution = std::move(x);
  detail::finalize_report(rep, a, b, rnorm0, cfg);
  return rep;
}

}  // namespace semicg
