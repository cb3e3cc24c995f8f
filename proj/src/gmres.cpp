#include <algorithm>
#include <cmath>
#include <utility>

#include "semicg/direction_window.hpp"
#include "semicg/solvers.hpp"
#include "solver_common.hpp"

namespace semicg {

namespace {

// Saad-convention Givens rotation: (a, b) -> (c a + s b, -s a + c b).
void apply_rotation(double c, double s, double& a, double& b) {
  const double ta = c * a + s * b;
  const double tb = -s * a + c * b;
  a = ta;
  b = tb;
}

}  // namespace

SolveReport gmres_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg) {
  detail::check_system(a, b);
  detail::check_config(cfg, false);
  const std::size_t n = b.size();
  const double beta = nrm2(b);
  if (beta == 0.0) return detail::zero_rhs_report(n, cfg);

  SolveReport rep;
  rep.residual_history.push_back(1.0);
  if (cfg.record_directions) {
    rep.arnoldi.emplace();
    rep.arnoldi->beta = beta;
  }

  std::vector<Vector> basis;
  basis.push_back(scaled(b, 1.0 / beta));
  if (rep.arnoldi) rep.arnoldi->basis.push_back(basis.front());

  std::vector<std::vector<double>> r_cols;  // column k: rows 1..k of R
  std::vector<double> rot_c, rot_s;
  std::vector<double> g{beta};

  Vector av(n), w;
  for (std::size_t k = 1; k <= cfg.max_iter; ++k) {
    spmv(a, basis[k - 1], av);
    const double av_norm = nrm2(av);
    w = av;
    std::vector<double> col(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      col[i] = dot(basis[i], w);
      axpy(-col[i], basis[i], w);
    }
    const double h_next = nrm2(w);
    const bool lucky = h_next <= cfg.breakdown_guard * av_norm;

    if (rep.arnoldi) {
      std::vector<double> column(col);
      column.push_back(h_next);
      rep.arnoldi->hessenberg.push_back(std::move(column));
    }

    double colscale = h_next;
    for (double h : col) colscale = std::max(colscale, std::abs(h));
    for (std::size_t i = 0; i + 1 < k; ++i) apply_rotation(rot_c[i], rot_s[i], col[i], col[i + 1]);

    const double delta = std::hypot(col[k - 1], h_next);
    if (delta <= cfg.breakdown_guard * colscale) {
      rep.status = SolveStatus::Breakdown;
      rep.breakdown = BreakdownKind::PivotBreakdown;
      rep.breakdown_iteration = k;
      break;
    }
    rot_c.push_back(col[k - 1] / delta);
    rot_s.push_back(h_next / delta);
    col[k - 1] = delta;
    r_cols.push_back(std::move(col));

    const double g_next = -rot_s.back() * g[k - 1];
    g[k - 1] *= rot_c.back();
    g.push_back(g_next);

    rep.residual_history.push_back(std::abs(g_next) / beta);  // rotation estimate
    rep.iterations = k;
    if (rep.residual_history.back() < cfg.rel_tol || lucky) {
      rep.status = SolveStatus::Converged;
      break;
    }
    if (k == cfg.max_iter) {
      rep.status = SolveStatus::MaxIterations;
      break;
    }
    scal(1.0 / h_next, w);
    if (rep.arnoldi) rep.arnoldi->basis.push_back(w);
    basis.push_back(std::move(w));
  }

  // back substitution over however many columns completed
  const std::size_t dim = rep.iterations;
  std::vector<double> y(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(dim));
  for (std::size_t j = dim; j-- > 0;) {
    y[j] /= r_cols[j][j];
    for (std::size_t i = 0; i < j; ++i) y[i] -= r_cols[j][i] * y[j];
  }
  Vector x(n, 0.0);
  for (std::size_t j = 0; j < dim; ++j) axpy(y[j], basis[j], x);

  rep.solution = std::move(x);
  detail::finalize_report(rep, a, b, beta, cfg);
  return rep;
}

SolveReport dqgmres_solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg) {
  detail::check_system(a, b);
  detail::check_config(cfg, true);
  const std::size_t n = b.size();
  const std::size_t m = cfg.memory_m;
  const double beta = nrm2(b);
  if (beta == 0.0) return detail::zero_rhs_report(n, cfg);

  SolveReport rep;
  rep.residual_history.push_back(1.0);
  if (cfg.record_directions) {
    rep.arnoldi.emplace();
    rep.arnoldi->beta = beta;
  }

  Ring<Vector> basis(m);
  Ring<Vector> p_ring(m);
  std::vector<double> rot_c, rot_s;
  double gk = beta;  // running gamma_k

  {
    Vector v1 = scaled(b, 1.0 / beta);
    if (rep.arnoldi) rep.arnoldi->basis.push_back(v1);
    basis.push(std::move(v1));
  }

  Vector x(n, 0.0), av(n), w, p;
  for (std::size_t k = 1; k <= cfg.max_iter; ++k) {
    const std::size_t lo = k >= m ? k - m + 1 : 1;        // orthogonalization window
    const std::size_t band_lo = k > m ? k - m : 1;        // rotations widen the band by one

    spmv(a, basis.at(k - 1), av);
    const double av_norm = nrm2(av);
    w = av;
    // column over absolute rows band_lo..k+1
    std::vector<double> col(k + 2 - band_lo, 0.0);
    for (std::size_t i = lo; i <= k; ++i) {
      const Vector& vi = basis.at(i - 1);
      const double h = dot(vi, w);
      col[i - band_lo] = h;
      axpy(-h, vi, w);
    }
    const double h_next = nrm2(w);
    const bool lucky = h_next <= cfg.breakdown_guard * av_norm;
    col.back() = h_next;

    if (rep.arnoldi) {
      std::vector<double> column(k + 1, 0.0);
      for (std::size_t i = lo; i <= k; ++i) column[i - 1] = col[i - band_lo];
      column[k] = h_next;
      rep.arnoldi->hessenberg.push_back(std::move(column));
    }

    double colscale = 0.0;
    for (double h : col) colscale = std::max(colscale, std::abs(h));
    for (std::size_t i = band_lo; i + 1 <= k; ++i)
      apply_rotation(rot_c[i - 1], rot_s[i - 1], col[i - band_lo], col[i + 1 - band_lo]);

    const double delta = std::hypot(col[k - band_lo], h_next);
    if (delta <= cfg.breakdown_guard * colscale) {
      rep.status = SolveStatus::Breakdown;
      rep.breakdown = BreakdownKind::PivotBreakdown;
      rep.breakdown_iteration = k;
      break;
    }
    rot_c.push_back(col[k - band_lo] / delta);
    rot_s.push_back(h_next / delta);

    p = basis.at(k - 1);
    for (std::size_t i = band_lo; i + 1 <= k; ++i) axpy(-col[i - band_lo], p_ring.at(i - 1), p);
    scal(1.0 / delta, p);

    const double g_next = -rot_s.back() * gk;
    gk *= rot_c.back();
    axpy(gk, p, x);

    rep.residual_history.push_back(std::abs(g_next) / beta);  // quasi-residual estimate
    rep.iterations = k;
    if (rep.residual_history.back() < cfg.rel_tol || lucky) {
      rep.status = SolveStatus::Converged;
      break;
    }
    if (k == cfg.max_iter) {
      rep.status = SolveStatus::MaxIterations;
      break;
    }

    gk = g_next;
    scal(1.0 / h_next, w);
    if (rep.arnoldi) rep.arnoldi->basis.push_back(w);
    basis.push(std::move(w));
    p_ring.push(std::move(p));
  }

  rep.solution = std::move(x);
  detail::finalize_report(rep, a, b, beta, cfg);
  return rep;
}

}  // namespace semicg
