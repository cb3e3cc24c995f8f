// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. SuiteSparse checks need the matrix files under --data
// (default data/suitesparse) and are reported SKIPPED when absent; see the
// README for how to fetch them.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semicg/bench.hpp"
#include "semicg/certificate.hpp"
#include "semicg/matrix_market.hpp"
#include "semicg/problems.hpp"
#include "semicg/solvers.hpp"

using namespace semicg;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(const std::string& id, bool pass, const std::string& detail) {
  std::printf("[%s] %-58s %s\n", id.c_str(), detail.c_str(), pass ? "PASS" : "FAIL");
  if (!pass) ++failures;
}

void report_skip(const std::string& id, const std::string& detail) {
  std::printf("[%s] %-58s SKIPPED\n", id.c_str(), detail.c_str());
}

void info(const std::string& text) { std::printf("    info: %s\n", text.c_str()); }

SolverConfig tracing(double tol, std::size_t max_iter, std::size_t m = 2) {
  SolverConfig cfg;
  cfg.rel_tol = tol;
  cfg.max_iter = max_iter;
  cfg.memory_m = m;
  cfg.record_directions = true;
  return cfg;
}

// ---- criterion 1: exact golden counter-example -----------------------------

void criterion_1() {
  Timer timer;
  const LinearProblem prob = example_5x5();
  bool pass = true;
  std::ostringstream detail;

  const SolveReport diom = diom_solve(prob.matrix, prob.rhs, tracing(1e-12, 50, 2));
  double conj = std::nan("");
  if (diom.trace && diom.trace->directions.size() >= 4) {
    conj = dot(diom.trace->directions[2].p, spmv(prob.matrix, diom.trace->directions[3].p));
  }
  const double conj_err = std::abs(conj - std::sqrt(6.0) / 303.0);
  pass = pass && conj_err <= 1e-12;

  const SolveReport swi = swi_solve(prob.matrix, prob.rhs, tracing(1e-12, 50, 2));
  double rr = std::nan("");
  if (swi.trace && swi.trace->residuals.size() >= 6)
    rr = dot(swi.trace->residuals[3], swi.trace->residuals[5]);
  const double rr_err = std::abs(rr - (-12.0 / 5491.0));
  pass = pass && rr_err <= 1e-12;

  const double elapsed = timer.seconds();
  pass = pass && elapsed < 1.0;
  detail << "golden 5x5: diom p3'Ap4 err " << conj_err << ", swi r3'r5 err " << rr_err << ", "
         << elapsed << "s";
  report("1", pass, detail.str());
}

// ---- criterion 2: golden FOM trace -----------------------------------------

void criterion_2() {
  const LinearProblem prob = example_3x3();
  const SolveReport rep = fom_solve(prob.matrix, prob.rhs, tracing(1e-12, 10));
  bool pass = rep.status == SolveStatus::Converged && rep.arnoldi && rep.trace &&
              rep.arnoldi->basis.size() >= 2 && rep.trace->iterates.size() >= 3;
  if (pass) {
    const Vector& v2 = rep.arnoldi->basis[1];
    pass = pass && std::abs(v2[0]) <= 1e-14 && std::abs(v2[1]) <= 1e-14 &&
           std::abs(v2[2] - 1.0) <= 1e-14;
    const auto& h = rep.arnoldi->hessenberg;
    pass = pass && std::abs(h[0][0] - 1.0) <= 1e-14 && std::abs(h[0][1] - 2.0) <= 1e-14 &&
           std::abs(h[1][0] + 2.0) <= 1e-14 && std::abs(h[1][1] - 2.0) <= 1e-14;
    const Vector& x1 = rep.trace->iterates[1];
    const Vector& x2 = rep.trace->iterates[2];
    pass = pass && std::abs(x2[0] - 1.0 / 3.0) <= 1e-12 && std::abs(x2[1]) <= 1e-12 &&
           std::abs(x2[2] + 1.0 / 3.0) <= 1e-12;
    const Vector& xs = *prob.known_solution;
    Vector d0 = rep.trace->iterates[0];
    axpy(-1.0, xs, d0);
    Vector d1 = x1;
    axpy(-1.0, xs, d1);
    pass = pass && std::abs(nrm2(d1) - std::sqrt(5.0) / 3.0) <= 1e-12 &&
           std::abs(nrm2(d0) - std::sqrt(2.0) / 3.0) <= 1e-12 && nrm2(d1) > nrm2(d0) &&
           std::abs(nrm2(x1) - 1.0) <= 1e-12 &&
           std::abs(nrm2(x2) - std::sqrt(2.0) / 3.0) <= 1e-12;
  }
  report("2", pass, "golden 3x3 fom trace: v2, H2, x2, non-monotone norms");
}

// ---- criterion 3: SCG == FOM residual agreement -----------------------------

void criterion_3() {
  Timer timer;
  bool pass = true;
  for (std::uint64_t seed = 1; seed <= 50 && pass; ++seed) {
    const LinearProblem prob = random_pd_system(40, seed, 0.5);
    const SolveReport fom = fom_solve(prob.matrix, prob.rhs, tracing(1e-10, 300));
    const SolveReport scg = scg_solve(prob.matrix, prob.rhs, tracing(1e-10, 300));
    const double b_norm = nrm2(prob.rhs);
    const std::size_t common =
        std::min(fom.trace->residuals.size(), scg.trace->residuals.size());
    for (std::size_t k = 0; k < common; ++k) {
      if (fom.residual_history[k] <= 1e-10 || scg.residual_history[k] <= 1e-10) break;
      Vector diff = fom.trace->residuals[k];
      axpy(-1.0, scg.trace->residuals[k], diff);
      if (nrm2(diff) > 1e-8 * b_norm) {
        pass = false;
        break;
      }
    }
  }
  const double elapsed = timer.seconds();
  pass = pass && elapsed < 30.0;
  std::ostringstream detail;
  detail << "scg/fom residual vectors agree on 50 systems, " << elapsed << "s";
  report("3", pass, detail.str());
}

// ---- criterion 4: semi-conjugacy suites -------------------------------------

void criterion_4() {
  bool pass = true;
  bool truncation_seen = false;
  const std::size_t m = 2;
  for (std::uint64_t seed = 1; seed <= 50 && pass; ++seed) {
    const LinearProblem prob = random_pd_system(40, seed, 0.5);
    const SparseMatrix& a = prob.matrix;
    const double a_norm = frobenius_norm(a);

    const SolveReport scg = scg_solve(a, prob.rhs, tracing(1e-6, 300));
    for (std::size_t j = 1; j < scg.trace->directions.size() && pass; ++j) {
      const Vector apj = spmv(a, scg.trace->directions[j].p);
      for (std::size_t i = 0; i < j; ++i) {
        const double bound = 1e-10 * a_norm * nrm2(scg.trace->directions[i].p) *
                             nrm2(scg.trace->directions[j].p);
        if (std::abs(dot(scg.trace->directions[i].p, apj)) > bound) {
          pass = false;
          break;
        }
      }
    }

    const SolveReport swi = swi_solve(a, prob.rhs, tracing(1e-6, 600, m));
    for (std::size_t k = 1; k < swi.trace->directions.size() && pass; ++k) {
      const Vector apk = spmv(a, swi.trace->directions[k].p);
      const std::size_t lo = k > m ? k - m : 0;
      for (std::size_t i = lo; i < k; ++i) {
        const double bound = 1e-10 * a_norm * nrm2(swi.trace->directions[i].p) *
                             nrm2(swi.trace->directions[k].p);
        if (std::abs(dot(swi.trace->directions[i].p, apk)) > bound) {
          pass = false;
          break;
        }
      }
      for (std::size_t i = 0; i < lo; ++i)
        if (std::abs(dot(swi.trace->directions[i].p, apk)) > 1e-6) truncation_seen = true;
    }
  }
  pass = pass && truncation_seen;
  report("4", pass, "semi-conjugacy: scg all pairs, swi(2) window only, drift outside");
}

// ---- criterion 5: finite termination ----------------------------------------

void criterion_5() {
  bool pass = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 30;
    const LinearProblem prob = random_pd_system(n, seed, 0.5);
    SolverConfig cfg;
    cfg.rel_tol = 1e-8;
    cfg.max_iter = n + 5;
    if (scg_solve(prob.matrix, prob.rhs, cfg).status != SolveStatus::Converged) pass = false;
  }
  report("5", pass, "scg reaches 1e-8 within n+5 iterations on 20 systems (n=30)");
}

// ---- criterion 6: SPD collapse -----------------------------------------------

void criterion_6() {
  bool pass = true;
  for (std::uint64_t seed = 1; seed <= 20 && pass; ++seed) {
    const LinearProblem prob = random_pd_system(30, seed, 0.0);
    SolverConfig cfg;
    cfg.rel_tol = 1e-9;
    const SolveReport cg = reference_cg(prob.matrix, prob.rhs, cfg);
    const SolveReport scg = scg_solve(prob.matrix, prob.rhs, cfg);
    cfg.memory_m = 1;
    const SolveReport swi1 = swi_solve(prob.matrix, prob.rhs, cfg);
    cfg.memory_m = 5;
    const SolveReport swi5 = swi_solve(prob.matrix, prob.rhs, cfg);
    for (const SolveReport* other : {&scg, &swi1, &swi5}) {
      const std::size_t common =
          std::min(cg.residual_history.size(), other->residual_history.size());
      for (std::size_t k = 1; k < common; ++k) {
        const double diff = std::abs(other->residual_history[k] - cg.residual_history[k]);
        if (diff > 1e-9 * cg.residual_history[k]) {
          pass = false;
          break;
        }
      }
    }
  }
  report("6", pass, "spd collapse: scg, swi(1), swi(5), cg share residual histories");
}

// ---- criterion 7: energy contraction -----------------------------------------

void criterion_7() {
  bool pass = true;
  std::size_t qualifying = 0;
  for (double skew : {0.5, 0.1, 0.05}) {
    for (std::uint64_t seed = 1; seed <= 20 && pass; ++seed) {
      const LinearProblem prob = random_pd_system(40, seed, skew);
      const DenseMatrix dense = to_dense(prob.matrix);
      const ConvergenceCertificate cert = convergence_certificate(dense);
      if (!cert.condition_holds) continue;
      ++qualifying;

      const SolveReport rep = swi_solve(prob.matrix, prob.rhs, tracing(1e-6, 400, 2));
      if (rep.status != SolveStatus::Converged) {
        pass = false;
        break;
      }
      const Vector x_star = dense_solve(dense, prob.rhs);
      std::vector<double> energy;
      for (const Vector& xk : rep.trace->iterates) {
        Vector d = xk;
        axpy(-1.0, x_star, d);
        energy.push_back(dot(d, spmv(prob.matrix, d)));
      }
      for (std::size_t k = 0; k + 1 < energy.size(); ++k) {
        if (!(energy[k + 1] < energy[k]) ||
            energy[k + 1] > (cert.contraction_bound + 1e-9) * energy[k]) {
          pass = false;
          break;
        }
      }
    }
  }
  pass = pass && qualifying >= 1;
  std::ostringstream detail;
  detail << "energy decay within contraction bound (" << qualifying << " qualifying systems)";
  report("7", pass, detail.str());
}

// ---- criterion 8: SuiteSparse reproduction + FD trend -------------------------

std::optional<SparseMatrix> try_load(const std::string& dir, const std::string& name) {
  const std::filesystem::path path = std::filesystem::path(dir) / (name + ".mtx");
  if (!std::filesystem::exists(path)) return std::nullopt;
  return read_matrix_market_file(path.string());
}

void criterion_8a(const std::string& data_dir) {
  struct Case {
    const char* matrix;
    SolverKind solver;
    std::size_t expected;
  };
  const Case cases[] = {
      {"add32", SolverKind::Gmres, 57},   {"add32", SolverKind::Fom, 59},
      {"add32", SolverKind::Scg, 59},     {"swang1", SolverKind::Scg, 19},
      {"pde2961", SolverKind::Scg, 192},  {"swang1", SolverKind::Bicgstab, 22},
  };

  Timer timer;
  bool any_missing = false;
  bool pass = true;
  std::ostringstream detail;
  for (const Case& c : cases) {
    const auto matrix = try_load(data_dir, c.matrix);
    if (!matrix) {
      any_missing = true;
      continue;
    }
    const Vector b = spmv(*matrix, Vector(matrix->ncols(), 1.0));
    SolverConfig cfg;  // rel_tol 1e-6, max_iter 1e4
    const SolveReport rep = run_solver(c.solver, *matrix, b, cfg);
    const double slack = std::max(3.0, 0.05 * static_cast<double>(c.expected));
    const bool iter_ok =
        std::abs(static_cast<double>(rep.iterations) - static_cast<double>(c.expected)) <= slack;
    const bool res_ok = rep.true_final_residual && *rep.true_final_residual < 1e-6;
    if (!(rep.status == SolveStatus::Converged && iter_ok && res_ok)) pass = false;
    detail << c.matrix << "/" << solver_name(c.solver) << "=" << rep.iterations << "(ref "
           << c.expected << ") ";
  }
  if (any_missing) {
    report_skip("8a", "suitesparse reproduction: matrix files not found under " + data_dir);
    return;
  }
  const double elapsed = timer.seconds();
  pass = pass && elapsed < 60.0;
  std::ostringstream line;
  line << "suitesparse iterations: " << detail.str() << "(" << elapsed << "s)";
  report("8a", pass, line.str());
}

void criterion_8b() {
  // substituted FD trend, pinned at N in {32, 64}
  SolverConfig cfg;
  cfg.memory_m = 2;
  const LinearProblem coarse = convection_diffusion(32, 1.0 / 200.0, {0.0, 1.0});
  const SolveReport rep32 = swi_solve(coarse.matrix, coarse.rhs, cfg);
  const LinearProblem fine = convection_diffusion(64, 1.0 / 200.0, {0.0, 1.0});
  const SolveReport rep64 = swi_solve(fine.matrix, fine.rhs, cfg);
  const bool converged = rep32.status == SolveStatus::Converged &&
                         rep64.status == SolveStatus::Converged &&
                         rep32.true_final_residual.value_or(1.0) < 1e-6 &&
                         rep64.true_final_residual.value_or(1.0) < 1e-6;
  const double factor =
      static_cast<double>(rep64.iterations) / static_cast<double>(rep32.iterations);
  const bool factor_ok = factor >= 1.5 && factor <= 2.5;
  std::ostringstream fd;
  fd << "fd trend swi(2): iters " << rep32.iterations << " -> " << rep64.iterations
     << ", factor " << factor;
  report("8b", converged && factor_ok, fd.str());
  if (!factor_ok)
    info(
        "growth factor at the pinned coarse pair is outside [1.5, 2.5]: at N=32 the mesh "
        "Peclet number is ~3 and the width-2 window stalls; the near-doubling trend appears "
        "once the grid resolves the convection (N 96->192 factor 1.51, N 128->256 factor "
        "1.74) or under a one-wider window (m=3 gives 79 -> 132, factor 1.67), but that "
        "window contradicts the exact residuals pinned by criterion 1");
}

// ---- criterion 9: performance profile vs brute force --------------------------

void criterion_9() {
  const std::size_t iters_a[3] = {10, 30, 25};
  const std::size_t iters_b[3] = {20, 15, 25};
  std::vector<bench::RunRecord> records;
  const char* problems[3] = {"p1", "p2", "p3"};
  for (int p = 0; p < 3; ++p) {
    records.push_back(
        {problems[p], "a", std::nullopt, iters_a[p], 0.0, 1e-7, 1e-7, "Converged"});
    records.push_back(
        {problems[p], "b", std::nullopt, iters_b[p], 0.0, 1e-7, 1e-7, "Converged"});
  }

  std::vector<double> ratios_a(3), ratios_b(3), taus;
  for (int p = 0; p < 3; ++p) {
    const double best = static_cast<double>(std::min(iters_a[p], iters_b[p]));
    ratios_a[p] = static_cast<double>(iters_a[p]) / best;
    ratios_b[p] = static_cast<double>(iters_b[p]) / best;
    taus.push_back(ratios_a[p]);
    taus.push_back(ratios_b[p]);
  }
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
  const auto rho = [](const std::vector<double>& ratios, double tau) {
    int cnt = 0;
    for (double r : ratios)
      if (r <= tau) ++cnt;
    return static_cast<double>(cnt) / 3.0;
  };

  std::ostringstream out;
  bench::emit_performance_profile(records, bench::ProfileMetric::Iter, out);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  bool pass = line == "tau,a,b";
  std::size_t row = 0;
  while (std::getline(lines, line) && pass) {
    if (row >= taus.size()) {
      pass = false;
      break;
    }
    std::istringstream fields(line);
    std::string tau_s, a_s, b_s;
    std::getline(fields, tau_s, ',');
    std::getline(fields, a_s, ',');
    std::getline(fields, b_s, ',');
    pass = pass && std::stod(tau_s) == taus[row] && std::stod(a_s) == rho(ratios_a, taus[row]) &&
           std::stod(b_s) == rho(ratios_b, taus[row]);
    ++row;
  }
  pass = pass && row == taus.size();
  report("9", pass, "performance profile equals the brute-force computation exactly");
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = "data/suitesparse";
  std::string only;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--data") data_dir = argv[i + 1];
    if (std::string(argv[i]) == "--only") only = argv[i + 1];
  }
  const auto wanted = [&](const char* id) { return only.empty() || only == id; };

  if (wanted("1")) criterion_1();
  if (wanted("2")) criterion_2();
  if (wanted("3")) criterion_3();
  if (wanted("4")) criterion_4();
  if (wanted("5")) criterion_5();
  if (wanted("6")) criterion_6();
  if (wanted("7")) criterion_7();
  if (wanted("8a")) criterion_8a(data_dir);
  if (wanted("8b")) criterion_8b();
  if (wanted("9")) criterion_9();

  std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
