/// \file bench.hpp
/// \brief Benchmark harness: run problems x solvers, emit tables,
///        residual histories, and performance profiles.

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "semicg/problems.hpp"
#include "semicg/solvers.hpp"

namespace semicg::bench {

struct ManifestError : std::runtime_error {
  explicit ManifestError(const std::string& what) : std::runtime_error(what) {}
};

struct MatrixFileSpec {
  std::string path;  ///< Matrix Market file; rhs becomes b = A*ones
};

struct GeneratorSpec {
  std::string name;  ///< identity | example-3x3 | example-5x5 | convdiff | random-pd
  std::size_t n = 0;
  double eps = 1.0;
  std::array<double, 2> wind{0.0, 0.0};
  std::uint64_t seed = 0;
  double skew = 0.5;
};

struct ProblemSpec {
  std::variant<MatrixFileSpec, GeneratorSpec> source;
};

struct SolverSpec {
  std::string name;
  std::optional<std::size_t> m;  ///< required for swi/diom/dqgmres
};

enum class OutputFormat { Csv, Json };

struct RunManifest {
  std::vector<ProblemSpec> problems;
  std::vector<SolverSpec> solvers;
  double rel_tol = 1e-6;
  std::size_t max_iter = 10'000;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> history_dir;
  bool parallel = false;
};

struct RunRecord {
  std::string problem_label;
  std::string solver_label;
  std::optional<std::size_t> m;
  std::size_t iterations = 0;
  double wall_time_seconds = 0.0;
  double final_res = 0.0;  ///< last entry of the residual history
  double true_res = 0.0;   ///< recomputed ||b - A x||/||b||
  std::string status;      ///< Converged | MaxIterations | Breakdown | MemoryCap | Error
};

/// Throws ManifestError on structural problems (no problems/solvers, unknown
/// solver name, missing or invalid window width, bad tolerances).
void validate(const RunManifest& manifest);

/// Parses the JSON manifest format; see README for the schema.
RunManifest manifest_from_json_text(const std::string& text);
RunManifest manifest_from_json_file(const std::string& path);

/// Executes the full problems x solvers product in manifest order. Matrix
/// read failures become per-pair Error records; the sweep never aborts.
/// Deterministic in everything except wall_time_seconds.
std::vector<RunRecord> run(const RunManifest& manifest);

/// CSV or JSON table, one row per record in input order. CSV keeps `res` and
/// `true_res` in 4-significant-digit scientific notation.
void emit_table(const std::vector<RunRecord>& records, OutputFormat format, std::ostream& out);

/// Inverse of the CSV emitter (values as formatted); the round-trip oracle.
std::vector<RunRecord> parse_table_csv(std::istream& in);

enum class ProfileMetric { Iter, Cpu };

/// Dolan-More performance profile: for each problem, the per-solver ratio
/// r_{p,s} = t_{p,s}/min_s t_{p,s}; failed runs count as r = +inf. Emits
/// rho_s(tau) = |{p : r_{p,s} <= tau}| / |P| sampled at every realized ratio.
void emit_performance_profile(const std::vector<RunRecord>& records, ProfileMetric metric,
                              std::ostream& out);

}  // namespace semicg::bench
