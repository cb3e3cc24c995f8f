#include "semicg/problems.hpp"

#include <cstdio>
#include <random>
#include <stdexcept>

#include "semicg/dense.hpp"

namespace semicg {

namespace {

// 53-bit uniform in [-1, 1); keeps generator output identical across
// standard libraries (distributions are implementation-defined, raw draws
// are not).
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : rng_(seed) {}
  double next() {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

LinearProblem example_3x3() {
  const Triplet entries[] = {
      {0, 0, 1.0}, {0, 2, -2.0}, {1, 1, 1.0}, {2, 0, 2.0}, {2, 2, 2.0},
  };
  LinearProblem prob;
  prob.matrix = SparseMatrix::from_triplets(3, 3, entries);
  prob.rhs = {1.0, 0.0, 0.0};
  prob.known_solution = Vector{1.0 / 3.0, 0.0, -1.0 / 3.0};
  prob.label = "example-3x3";
  return prob;
}

LinearProblem example_5x5() {
  const Triplet entries[] = {
      {0, 0, 1.0}, {0, 4, -1.0}, {1, 1, 1.0}, {1, 3, -1.0}, {2, 2, 1.0},
      {3, 1, 1.0}, {3, 3, 1.0},  {4, 0, 1.0}, {4, 4, 2.0},
  };
  LinearProblem prob;
  prob.matrix = SparseMatrix::from_triplets(5, 5, entries);
  prob.rhs = {1.0, 1.0, 1.0, 0.0, 0.0};
  prob.known_solution = dense_solve(to_dense(prob.matrix), prob.rhs);
  prob.label = "example-5x5";
  return prob;
}

LinearProblem convection_diffusion(std::size_t grid_points_per_side, double epsilon,
                                   std::array<double, 2> wind) {
  if (grid_points_per_side < 3)
    throw std::invalid_argument("convection_diffusion: need at least 3 grid points per side");
  if (!(epsilon > 0.0)) throw std::invalid_argument("convection_diffusion: epsilon must be positive");

  const std::size_t nside = grid_points_per_side;
  const std::size_t n = nside * nside;
  const double h = 1.0 / static_cast<double>(nside + 1);
  const double diag = 4.0 * epsilon / (h * h);
  const double wx = wind[0], wy = wind[1];
  const double west = -epsilon / (h * h) - wx / (2.0 * h);
  const double east = -epsilon / (h * h) + wx / (2.0 * h);
  const double south = -epsilon / (h * h) - wy / (2.0 * h);
  const double north = -epsilon / (h * h) + wy / (2.0 * h);

  const auto boundary = [](double x, double y) {
    if (y == 0.0) return 2.0 * x - 1.0;
    if (y == 1.0) return 0.0;
    return x == 0.0 ? -1.0 : 1.0;
  };

  std::vector<Triplet> entries;
  entries.reserve(5 * n);
  Vector rhs(n, 0.0);
  for (std::size_t j = 0; j < nside; ++j) {
    for (std::size_t i = 0; i < nside; ++i) {
      const std::size_t row = j * nside + i;
      const double x = static_cast<double>(i + 1) * h;
      const double y = static_cast<double>(j + 1) * h;
      entries.push_back({row, row, diag});
      if (i > 0)
        entries.push_back({row, row - 1, west});
      else
        rhs[row] -= west * boundary(0.0, y);
      if (i + 1 < nside)
        entries.push_back({row, row + 1, east});
      else
        rhs[row] -= east * boundary(1.0, y);
      if (j > 0)
        entries.push_back({row, row - nside, south});
      else
        rhs[row] -= south * boundary(x, 0.0);
      if (j + 1 < nside)
        entries.push_back({row, row + nside, north});
      else
        rhs[row] -= north * boundary(x, 1.0);
    }
  }

  char eps_text[32];
  std::snprintf(eps_text, sizeof eps_text, "%g", epsilon);
  LinearProblem prob;
  prob.matrix = SparseMatrix::from_triplets(n, n, entries);
  prob.rhs = std::move(rhs);
  prob.label = "convdiff-n" + std::to_string(nside) + "-eps" + eps_text;
  return prob;
}

LinearProblem random_pd_system(std::size_t order, std::uint64_t seed, double skew_scale) {
  if (order < 1) throw std::invalid_argument("random_pd_system: order must be at least 1");
  if (skew_scale < 0.0) throw std::invalid_argument("random_pd_system: skew_scale must be >= 0");

  UniformSource src(seed);
  DenseMatrix sym(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i; j < order; ++j) {
      const double v = src.next();
      sym(i, j) = v;
      sym(j, i) = v;
    }
  }
  DenseMatrix skew(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i + 1; j < order; ++j) {
      const double v = src.next();
      skew(i, j) = v;
      skew(j, i) = -v;
    }
  }

  const double shift = 1.0 - symmetric_eigenvalues(sym).front();
  DenseMatrix a(order, order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      a(i, j) = sym(i, j) + skew_scale * skew(i, j) + (i == j ? shift : 0.0);

  LinearProblem prob;
  prob.matrix = to_sparse(a);
  prob.rhs = spmv(prob.matrix, Vector(order, 1.0));
  prob.known_solution = Vector(order, 1.0);
  prob.label = "randpd-n" + std::to_string(order) + "-seed" + std::to_string(seed);
  return prob;
}

LinearProblem identity_problem(std::size_t order) {
  LinearProblem prob;
  prob.matrix = SparseMatrix::identity(order);
  prob.rhs = Vector(order, 1.0);
  prob.known_solution = Vector(order, 1.0);
  prob.label = "identity-" + std::to_string(order);
  return prob;
}

}  // namespace semicg
