// bench-cli: run iterative solvers over Matrix Market files and built-in
// generators, emitting iteration/residual tables or performance profiles.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semicg/bench.hpp"

namespace {

semicg::bench::SolverSpec parse_solver_arg(const std::string& arg) {
  semicg::bench::SolverSpec spec;
  const auto colon = arg.find(':');
  if (colon == std::string::npos) {
    spec.name = arg;
  } else {
    spec.name = arg.substr(0, colon);
    try {
      spec.m = static_cast<std::size_t>(std::stoull(arg.substr(colon + 1)));
    } catch (const std::exception&) {
      throw semicg::bench::ManifestError("invalid window width in '" + arg + "'");
    }
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semicg benchmark harness"};

  std::string manifest_path;
  std::vector<std::string> matrices;
  std::vector<std::string> solvers;
  double tol = 1e-6;
  std::size_t max_iter = 10'000;
  std::string format = "csv";
  std::string history_dir;
  std::string out_path;
  std::string profile_metric;
  bool parallel = false;

  app.add_option("--manifest", manifest_path, "JSON manifest file");
  app.add_option("--matrix", matrices, "Matrix Market file (repeatable); rhs is b = A*ones");
  app.add_option("--solver", solvers,
                 "solver name, optionally with window width as name:m (repeatable)");
  app.add_option("--tol", tol, "relative residual tolerance");
  app.add_option("--max-iter", max_iter, "iteration cap");
  app.add_option("--format", format, "table format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--history-dir", history_dir,
                 "write one (iteration, relative residual) CSV per run into this directory");
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--profile", profile_metric, "emit a performance profile over iter or cpu")
      ->check(CLI::IsMember({"iter", "cpu"}));
  app.add_flag("--parallel", parallel, "run (problem, solver) pairs concurrently");

  CLI11_PARSE(app, argc, argv);

  try {
    semicg::bench::RunManifest manifest;
    if (!manifest_path.empty()) {
      manifest = semicg::bench::manifest_from_json_file(manifest_path);
    } else {
      for (const std::string& path : matrices)
        manifest.problems.push_back({semicg::bench::MatrixFileSpec{path}});
      for (const std::string& s : solvers) manifest.solvers.push_back(parse_solver_arg(s));
    }
    if (app.count("--tol")) manifest.rel_tol = tol;
    if (app.count("--max-iter")) manifest.max_iter = max_iter;
    if (app.count("--format"))
      manifest.format = format == "json" ? semicg::bench::OutputFormat::Json
                                         : semicg::bench::OutputFormat::Csv;
    if (app.count("--history-dir")) manifest.history_dir = history_dir;
    if (app.count("--parallel")) manifest.parallel = parallel;

    semicg::bench::validate(manifest);
    const std::vector<semicg::bench::RunRecord> records = semicg::bench::run(manifest);

    std::ofstream file_out;
    if (!out_path.empty()) {
      file_out.open(out_path);
      if (!file_out) {
        std::cerr << "bench-cli: cannot open output file '" << out_path << "'\n";
        return 2;
      }
    }
    std::ostream& out = out_path.empty() ? std::cout : file_out;

    if (!profile_metric.empty()) {
      semicg::bench::emit_performance_profile(records,
                                              profile_metric == "iter"
                                                  ? semicg::bench::ProfileMetric::Iter
                                                  : semicg::bench::ProfileMetric::Cpu,
                                              out);
    } else {
      semicg::bench::emit_table(records, manifest.format, out);
    }

    for (const semicg::bench::RunRecord& r : records) {
      if (r.status == "Error") {
        std::cerr << "bench-cli: run " << r.problem_label << " / " << r.solver_label
                  << " failed to execute\n";
        return 2;
      }
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "bench-cli: " << e.what() << '\n';
    return 2;
  }
}
