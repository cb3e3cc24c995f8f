#include <doctest.h>

#include <cmath>

#include "semicg/dense.hpp"
#include "semicg/problems.hpp"
#include "semicg/solvers.hpp"
#include "test_support.hpp"

using namespace semicg;

namespace {

SolverConfig tracing_config(double tol = 1e-10, std::size_t max_iter = 500, std::size_t m = 2) {
  SolverConfig cfg;
  cfg.rel_tol = tol;
  cfg.max_iter = max_iter;
  cfg.memory_m = m;
  cfg.record_directions = true;
  return cfg;
}

}  // namespace

TEST_CASE("fom: 3x3 golden trace") {
  const LinearProblem prob = example_3x3();
  const SolveReport rep = fom_solve(prob.matrix, prob.rhs, tracing_config(1e-12));
  REQUIRE(rep.status == SolveStatus::Converged);
  REQUIRE(rep.iterations == 2);
  REQUIRE(rep.trace);
  REQUIRE(rep.arnoldi);

  // second basis vector is e3
  const Vector& v2 = rep.arnoldi->basis.at(1);
  CHECK(std::abs(v2[0]) <= 1e-14);
  CHECK(std::abs(v2[1]) <= 1e-14);
  CHECK(std::abs(v2[2] - 1.0) <= 1e-14);

  // H_2 = ((1, -2), (2, 2))
  const auto& h = rep.arnoldi->hessenberg;
  REQUIRE(h.size() >= 2);
  CHECK(std::abs(h[0][0] - 1.0) <= 1e-14);
  CHECK(std::abs(h[0][1] - 2.0) <= 1e-14);
  CHECK(std::abs(h[1][0] + 2.0) <= 1e-14);
  CHECK(std::abs(h[1][1] - 2.0) <= 1e-14);

  // iterates x_1 = (1,0,0), x_2 = x_star
  const Vector& x1 = rep.trace->iterates.at(1);
  CHECK(std::abs(x1[0] - 1.0) <= 1e-12);
  CHECK(std::abs(x1[1]) <= 1e-12);
  CHECK(std::abs(x1[2]) <= 1e-12);
  const Vector& x2 = rep.trace->iterates.at(2);
  CHECK(std::abs(x2[0] - 1.0 / 3.0) <= 1e-12);
  CHECK(std::abs(x2[1]) <= 1e-12);
  CHECK(std::abs(x2[2] + 1.0 / 3.0) <= 1e-12);

  // neither the error norms nor the iterate norms are monotonic
  const Vector& x_star = *prob.known_solution;
  const auto err = [&](const Vector& x) {
    Vector d = x;
    axpy(-1.0, x_star, d);
    return nrm2(d);
  };
  CHECK(std::abs(err(rep.trace->iterates.at(0)) - std::sqrt(2.0) / 3.0) <= 1e-12);
  CHECK(std::abs(err(x1) - std::sqrt(5.0) / 3.0) <= 1e-12);
  CHECK(err(x1) > err(rep.trace->iterates.at(0)));
  CHECK(std::abs(nrm2(x1) - 1.0) <= 1e-12);
  CHECK(std::abs(nrm2(x2) - std::sqrt(2.0) / 3.0) <= 1e-12);
  CHECK(nrm2(x1) > nrm2(x2));
}

TEST_CASE("fom: identity converges in one step") {
  const LinearProblem prob = identity_problem(7);
  const SolveReport rep = fom_solve(prob.matrix, prob.rhs);
  CHECK(rep.status == SolveStatus::Converged);
  CHECK(rep.iterations == 1);
}

TEST_CASE("fom: pivot breakdown on a skew system") {
  const Triplet entries[] = {{0, 1, 1.0}, {1, 0, -1.0}};
  const SparseMatrix a = SparseMatrix::from_triplets(2, 2, entries);
  const SolveReport rep = fom_solve(a, Vector{1.0, 0.0});
  CHECK(rep.status == SolveStatus::Breakdown);
  CHECK(rep.breakdown == BreakdownKind::PivotBreakdown);
  CHECK(rep.breakdown_iteration == 1);
}

TEST_CASE("fom and scg produce the same residual vectors") {
  for (std::uint64_t seed : {3, 14, 25}) {
    const LinearProblem prob = random_pd_system(40, seed, 0.5);
    const SolveReport fom = fom_solve(prob.matrix, prob.rhs, tracing_config(1e-10, 200));
    const SolveReport scg = scg_solve(prob.matrix, prob.rhs, tracing_config(1e-10, 200));
    const double b_norm = nrm2(prob.rhs);
    const std::size_t common =
        std::min(fom.trace->residuals.size(), scg.trace->residuals.size());
    for (std::size_t k = 0; k < common; ++k) {
      if (fom.residual_history[k] <= 1e-10) break;
      Vector diff = fom.trace->residuals[k];
      axpy(-1.0, scg.trace->residuals[k], diff);
      CHECK(nrm2(diff) <= 1e-8 * b_norm);
    }
  }
}

TEST_CASE("fom residual identity: r_k is a scalar multiple of v_{k+1}") {
  const LinearProblem prob = random_pd_system(24, 8, 0.5);
  const SolveReport rep = fom_solve(prob.matrix, prob.rhs, tracing_config(1e-10, 100));
  REQUIRE(rep.arnoldi);
  const ArnoldiState& st = *rep.arnoldi;
  const double b_norm = nrm2(prob.rhs);

  for (std::size_t k = 1; k < rep.iterations; ++k) {
    // y_k = H_k^{-1} (beta e_1), solved densely and independently
    DenseMatrix hk(k, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < std::min(k, j + 2); ++i) hk(i, j) = st.hessenberg[j][i];
    Vector be1(k, 0.0);
    be1[0] = st.beta;
    const Vector y = dense_solve(hk, be1);

    const double h_next = st.hessenberg[k - 1][k];  // h_{k+1,k}
    const double scale = -h_next * y[k - 1];
    Vector predicted = scaled(st.basis.at(k), scale);
    Vector diff = rep.trace->residuals.at(k);
    axpy(-1.0, predicted, diff);
    CHECK(nrm2(diff) <= 1e-10 * b_norm);
  }
}

TEST_CASE("diom: 5x5 counter-example loses semi-conjugacy exactly") {
  const LinearProblem prob = example_5x5();
  const SolveReport rep = diom_solve(prob.matrix, prob.rhs, tracing_config(1e-12, 50, 2));
  REQUIRE(rep.trace);
  REQUIRE(rep.trace->directions.size() >= 4);
  const Vector& p3 = rep.trace->directions[2].p;  // \hat p_3
  const Vector& p4 = rep.trace->directions[3].p;  // \hat p_4
  const double conj = dot(p3, spmv(prob.matrix, p4));
  CHECK(std::abs(conj - std::sqrt(6.0) / 303.0) <= 1e-12);

  // window residual orthogonality still holds: r_3^T r_5 = 0
  REQUIRE(rep.trace->residuals.size() >= 6);
  const Vector& r3 = rep.trace->residuals[3];
  const Vector& r5 = rep.trace->residuals[5];
  CHECK(std::abs(dot(r3, r5)) <= 1e-10 * nrm2(r3) * nrm2(r5));
}

TEST_CASE("diom: 5x5 golden Hessenberg, basis, and directions") {
  const LinearProblem prob = example_5x5();
  const SolveReport rep = diom_solve(prob.matrix, prob.rhs, tracing_config(1e-12, 50, 2));
  REQUIRE(rep.arnoldi);
  const auto& h = rep.arnoldi->hessenberg;
  REQUIRE(h.size() >= 4);
  CHECK(std::abs(rep.arnoldi->beta - std::sqrt(3.0)) <= 1e-14);
  // spot-check H_4 against the worked values
  CHECK(std::abs(h[0][0] - 1.0) <= 1e-13);
  CHECK(std::abs(h[0][1] - std::sqrt(2.0 / 3.0)) <= 1e-13);
  CHECK(std::abs(h[1][1] - 1.5) <= 1e-13);
  CHECK(std::abs(h[1][2] - std::sqrt(21.0) / 6.0) <= 1e-13);
  CHECK(std::abs(h[2][1] - (-1.0 / (2.0 * std::sqrt(21.0)))) <= 1e-13);
  CHECK(std::abs(h[2][2] - 17.0 / 14.0) <= 1e-13);
  CHECK(std::abs(h[2][3] - 2.0 * std::sqrt(6.0) / 7.0) <= 1e-13);
  CHECK(std::abs(h[3][2] - (-9.0 / (7.0 * std::sqrt(6.0)))) <= 1e-13);
  CHECK(std::abs(h[3][3] - 29.0 / 28.0) <= 1e-13);

  // first direction is b/sqrt(3), fourth matches the worked vector
  const Vector& p1 = rep.trace->directions[0].p;
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(std::abs(p1[i] - prob.rhs[i] / std::sqrt(3.0)) <= 1e-13);
  const Vector& p4 = rep.trace->directions[3].p;
  const double c4 = 2.0 / (101.0 * std::sqrt(7.0));
  const double expected4[] = {-69.0, 64.0, 8.0, -37.0, 40.0};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(p4[i] - c4 * expected4[i]) <= 1e-12);
}

TEST_CASE("diom: m >= n reproduces fom") {
  const LinearProblem prob = random_pd_system(18, 12, 0.5);
  SolverConfig cfg = tracing_config(1e-10, 100, 32);
  const SolveReport diom = diom_solve(prob.matrix, prob.rhs, cfg);
  const SolveReport fom = fom_solve(prob.matrix, prob.rhs, cfg);
  REQUIRE(diom.iterations == fom.iterations);
  for (std::size_t k = 0; k < diom.trace->iterates.size(); ++k) {
    Vector diff = diom.trace->iterates[k];
    axpy(-1.0, fom.trace->iterates[k], diff);
    CHECK(nrm2(diff) <= 1e-10 * (1.0 + nrm2(fom.trace->iterates[k])));
  }
}

TEST_CASE("diom: identity converges in one step for any m") {
  for (std::size_t m : {1, 2, 5}) {
    const LinearProblem prob = identity_problem(6);
    SolverConfig cfg;
    cfg.memory_m = m;
    const SolveReport rep = diom_solve(prob.matrix, prob.rhs, cfg);
    CHECK(rep.status == SolveStatus::Converged);
    CHECK(rep.iterations == 1);
  }
}
