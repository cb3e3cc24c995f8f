#include "semicg/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "semicg/matrix_market.hpp"

namespace semicg::bench {

namespace {

using nlohmann::json;

std::string solver_label(const SolverSpec& s) {
  if (s.m) return s.name + "(m=" + std::to_string(*s.m) + ")";
  return s.name;
}

std::string path_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::string fmt_sci4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const std::set<std::string>& generator_names() {
  static const std::set<std::string> names{"identity", "example-3x3", "example-5x5", "convdiff",
                                           "random-pd"};
  return names;
}

LinearProblem materialize(const ProblemSpec& spec) {
  if (const auto* file = std::get_if<MatrixFileSpec>(&spec.source)) {
    LinearProblem prob;
    prob.matrix = read_matrix_market_file(file->path);
    if (prob.matrix.nrows() != prob.matrix.ncols())
      throw MatrixMarketError("matrix market: '" + file->path + "' is not square");
    prob.rhs = spmv(prob.matrix, Vector(prob.matrix.ncols(), 1.0));
    prob.known_solution = Vector(prob.matrix.ncols(), 1.0);
    prob.label = path_stem(file->path);
    return prob;
  }
  const auto& gen = std::get<GeneratorSpec>(spec.source);
  if (gen.name == "identity") return identity_problem(gen.n);
  if (gen.name == "example-3x3") return example_3x3();
  if (gen.name == "example-5x5") return example_5x5();
  if (gen.name == "convdiff") return convection_diffusion(gen.n, gen.eps, gen.wind);
  if (gen.name == "random-pd") return random_pd_system(gen.n, gen.seed, gen.skew);
  throw ManifestError("unknown generator '" + gen.name + "'");
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '.') c = '_';
  return s;
}

void write_history(const std::string& dir, const RunRecord& rec,
                   const std::vector<double>& history) {
  std::filesystem::create_directories(dir);
  const std::string name =
      sanitize(rec.problem_label) + "__" + sanitize(rec.solver_label) + ".csv";
  std::ofstream out(std::filesystem::path(dir) / name);
  out << "iteration,relative_residual\n";
  char buf[40];
  for (std::size_t k = 0; k < history.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", history[k]);
    out << k << ',' << buf << '\n';
  }
}

struct PairOutcome {
  RunRecord record;
  std::vector<double> history;
};

PairOutcome run_pair(const LinearProblem* prob, const std::string& problem_label,
                     const SolverSpec& solver, const RunManifest& manifest) {
  PairOutcome out;
  out.record.problem_label = problem_label;
  out.record.solver_label = solver_label(solver);
  out.record.m = solver.m;
  if (!prob) {
    out.record.status = "Error";
    return out;
  }

  SolverConfig cfg;
  cfg.rel_tol = manifest.rel_tol;
  cfg.max_iter = manifest.max_iter;
  if (solver.m) cfg.memory_m = *solver.m;
  cfg.recompute_final_residual = true;

  const SolverKind kind = *solver_from_name(solver.name);
  const auto start = std::chrono::steady_clock::now();
  const SolveReport rep = run_solver(kind, prob->matrix, prob->rhs, cfg);
  const auto stop = std::chrono::steady_clock::now();

  out.record.iterations = rep.iterations;
  out.record.wall_time_seconds = std::chrono::duration<double>(stop - start).count();
  out.record.final_res = rep.residual_history.empty() ? 0.0 : rep.residual_history.back();
  out.record.true_res = rep.true_final_residual.value_or(out.record.final_res);
  out.record.status = to_string(rep.status);
  out.history = rep.residual_history;
  return out;
}

}  // namespace

void validate(const RunManifest& manifest) {
  if (manifest.problems.empty()) throw ManifestError("manifest needs at least one problem");
  if (manifest.solvers.empty()) throw ManifestError("manifest needs at least one solver");
  if (!(manifest.rel_tol > 0.0)) throw ManifestError("rel_tol must be positive");
  if (manifest.max_iter < 1) throw ManifestError("max_iter must be at least 1");
  for (const SolverSpec& s : manifest.solvers) {
    const auto kind = solver_from_name(s.name);
    if (!kind) throw ManifestError("unknown solver '" + s.name + "'");
    if (solver_uses_memory(*kind)) {
      if (!s.m) throw ManifestError("solver '" + s.name + "' requires a window width m");
      if (*s.m < 1 && s.name != "swi")
        throw ManifestError("solver '" + s.name + "' requires m >= 1");
    }
  }
  for (const ProblemSpec& p : manifest.problems) {
    if (const auto* gen = std::get_if<GeneratorSpec>(&p.source)) {
      if (!generator_names().count(gen->name))
        throw ManifestError("unknown generator '" + gen->name + "'");
      if ((gen->name == "identity" || gen->name == "convdiff" || gen->name == "random-pd") &&
          gen->n == 0)
        throw ManifestError("generator '" + gen->name + "' requires n >= 1");
    } else if (std::get<MatrixFileSpec>(p.source).path.empty()) {
      throw ManifestError("matrix path must not be empty");
    }
  }
}

RunManifest manifest_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ManifestError(std::string("manifest JSON parse error: ") + e.what());
  }
  try {
    RunManifest m;
    for (const json& p : doc.at("problems")) {
      ProblemSpec spec;
      if (p.contains("path")) {
        spec.source = MatrixFileSpec{p.at("path").get<std::string>()};
      } else {
        GeneratorSpec gen;
        gen.name = p.at("generator").get<std::string>();
        if (p.contains("n")) gen.n = p.at("n").get<std::size_t>();
        if (p.contains("eps")) gen.eps = p.at("eps").get<double>();
        if (p.contains("wind")) {
          gen.wind[0] = p.at("wind").at(0).get<double>();
          gen.wind[1] = p.at("wind").at(1).get<double>();
        }
        if (p.contains("seed")) gen.seed = p.at("seed").get<std::uint64_t>();
        if (p.contains("skew")) gen.skew = p.at("skew").get<double>();
        spec.source = gen;
      }
      m.problems.push_back(std::move(spec));
    }
    for (const json& s : doc.at("solvers")) {
      SolverSpec spec;
      spec.name = s.at("name").get<std::string>();
      if (s.contains("m") && !s.at("m").is_null()) spec.m = s.at("m").get<std::size_t>();
      m.solvers.push_back(std::move(spec));
    }
    if (doc.contains("rel_tol")) m.rel_tol = doc.at("rel_tol").get<double>();
    if (doc.contains("max_iter")) m.max_iter = doc.at("max_iter").get<std::size_t>();
    if (doc.contains("format")) {
      const std::string f = doc.at("format").get<std::string>();
      if (f == "csv")
        m.format = OutputFormat::Csv;
      else if (f == "json")
        m.format = OutputFormat::Json;
      else
        throw ManifestError("format must be 'csv' or 'json'");
    }
    if (doc.contains("history_dir") && !doc.at("history_dir").is_null())
      m.history_dir = doc.at("history_dir").get<std::string>();
    if (doc.contains("parallel")) m.parallel = doc.at("parallel").get<bool>();
    return m;
  } catch (const json::exception& e) {
    throw ManifestError(std::string("manifest JSON schema error: ") + e.what());
  }
}

RunManifest manifest_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open manifest '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return manifest_from_json_text(ss.str());
}

std::vector<RunRecord> run(const RunManifest& manifest) {
  validate(manifest);

  struct Materialized {
    std::optional<LinearProblem> problem;
    std::string label;
  };
  std::vector<Materialized> probs;
  probs.reserve(manifest.problems.size());
  for (const ProblemSpec& spec : manifest.problems) {
    Materialized m;
    try {
      m.problem = materialize(spec);
      m.label = m.problem->label;
    } catch (const std::exception&) {
      if (const auto* file = std::get_if<MatrixFileSpec>(&spec.source))
        m.label = path_stem(file->path);
      else
        m.label = std::get<GeneratorSpec>(spec.source).name;
    }
    probs.push_back(std::move(m));
  }

  const std::size_t total = probs.size() * manifest.solvers.size();
  std::vector<PairOutcome> outcomes(total);
  const auto task = [&](std::size_t idx) {
    const Materialized& mp = probs[idx / manifest.solvers.size()];
    const SolverSpec& solver = manifest.solvers[idx % manifest.solvers.size()];
    return run_pair(mp.problem ? &*mp.problem : nullptr, mp.label, solver, manifest);
  };

  if (manifest.parallel) {
    std::vector<std::future<PairOutcome>> futures;
    futures.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx)
      futures.push_back(std::async(std::launch::async, task, idx));
    for (std::size_t idx = 0; idx < total; ++idx) outcomes[idx] = futures[idx].get();
  } else {
    for (std::size_t idx = 0; idx < total; ++idx) outcomes[idx] = task(idx);
  }

  std::vector<RunRecord> records;
  records.reserve(total);
  for (PairOutcome& o : outcomes) {
    if (manifest.history_dir && !o.history.empty())
      write_history(*manifest.history_dir, o.record, o.history);
    records.push_back(std::move(o.record));
  }
  return records;
}

namespace {

bool needs_quotes(const std::string& s) {
  return s.find_first_of(",\"\n") != std::string::npos;
}

std::string csv_field(const std::string& s) {
  if (!needs_quotes(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

void emit_table(const std::vector<RunRecord>& records, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    out << "problem,solver,m,iter,cpu_s,res,true_res,status\n";
    for (const RunRecord& r : records) {
      out << csv_field(r.problem_label) << ',' << csv_field(r.solver_label) << ',';
      if (r.m) out << *r.m;
      out << ',' << r.iterations << ',' << fmt_g(r.wall_time_seconds) << ',' << fmt_sci4(r.final_res)
          << ',' << fmt_sci4(r.true_res) << ',' << r.status << '\n';
    }
    return;
  }
  json arr = json::array();
  for (const RunRecord& r : records) {
    json row;
    row["problem"] = r.problem_label;
    row["solver"] = r.solver_label;
    if (r.m)
      row["m"] = *r.m;
    else
      row["m"] = nullptr;
    row["iter"] = r.iterations;
    row["cpu_s"] = r.wall_time_seconds;
    row["res"] = r.final_res;
    row["true_res"] = r.true_res;
    row["status"] = r.status;
    arr.push_back(std::move(row));
  }
  out << arr.dump(2) << '\n';
}

std::vector<RunRecord> parse_table_csv(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  if (!std::getline(in, line)) return records;
  if (split_csv_line(line).size() != 8) throw std::runtime_error("parse_table_csv: bad header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 8) throw std::runtime_error("parse_table_csv: bad row");
    RunRecord r;
    r.problem_label = f[0];
    r.solver_label = f[1];
    if (!f[2].empty()) r.m = static_cast<std::size_t>(std::stoull(f[2]));
    r.iterations = static_cast<std::size_t>(std::stoull(f[3]));
    r.wall_time_seconds = std::stod(f[4]);
    r.final_res = std::stod(f[5]);
    r.true_res = std::stod(f[6]);
    r.status = f[7];
    records.push_back(std::move(r));
  }
  return records;
}

void emit_performance_profile(const std::vector<RunRecord>& records, ProfileMetric metric,
                              std::ostream& out) {
  // group by problem (input order) and by solver (input order)
  std::vector<std::string> problems, solvers;
  for (const RunRecord& r : records) {
    if (std::find(problems.begin(), problems.end(), r.problem_label) == problems.end())
      problems.push_back(r.problem_label);
    if (std::find(solvers.begin(), solvers.end(), r.solver_label) == solvers.end())
      solvers.push_back(r.solver_label);
  }
  if (solvers.size() < 2)
    throw std::invalid_argument("emit_performance_profile: need at least two solvers");
  if (problems.empty())
    throw std::invalid_argument("emit_performance_profile: need at least one problem");

  const double inf = std::numeric_limits<double>::infinity();
  std::map<std::pair<std::string, std::string>, double> cost;
  for (const std::string& p : problems)
    for (const std::string& s : solvers) cost[{p, s}] = inf;
  for (const RunRecord& r : records) {
    if (r.status == "Converged")
      cost[{r.problem_label, r.solver_label}] =
          metric == ProfileMetric::Iter ? static_cast<double>(r.iterations) : r.wall_time_seconds;
  }

  // ratios r_{p,s} = t_{p,s} / min_s t_{p,s}
  std::map<std::pair<std::string, std::string>, double> ratio;
  std::vector<double> taus;
  for (const std::string& p : problems) {
    double best = inf;
    for (const std::string& s : solvers) best = std::min(best, cost[{p, s}]);
    for (const std::string& s : solvers) {
      const double t = cost[{p, s}];
      const double r = (t == inf || best == inf) ? inf : t / best;
      ratio[{p, s}] = r;
      if (r != inf) taus.push_back(r);
    }
  }
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
  if (taus.empty()) taus.push_back(1.0);

  out << "tau";
  for (const std::string& s : solvers) out << ',' << csv_field(s);
  out << '\n';
  char buf[40];
  for (double tau : taus) {
    std::snprintf(buf, sizeof buf, "%.17g", tau);
    out << buf;
    for (const std::string& s : solvers) {
      std::size_t count = 0;
      for (const std::string& p : problems)
        if (ratio[{p, s}] <= tau) ++count;
      std::snprintf(buf, sizeof buf, "%.17g",
                    static_cast<double>(count) / static_cast<double>(problems.size()));
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace semicg::bench
