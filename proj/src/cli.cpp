#include "mvmatch/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "mvmatch/crosscheck.hpp"
#include "mvmatch/dimacs.hpp"
#include "mvmatch/oracle.hpp"
#include "mvmatch/phase.hpp"
#include "mvmatch/solver.hpp"
#include "mvmatch/trace.hpp"

namespace mvmatch {

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> seed;
  bool trace = false;
  std::string out_path;
  int n = 0;
  std::int64_t m = 0;
  int samples = 20;
  int runs = 1;
  bool guard_override = false;
  bool inject_fault = false;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  Graph read_graph(const std::string& path) {
    if (path == "-") return parse_dimacs(in_);
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    return parse_dimacs(f);
  }

  Matching read_matching(const std::string& path, int n) {
    if (path == "-") return parse_matching(in_, n);
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    return parse_matching(f, n);
  }

  /// Destination for the primary result: --out when given, else stdout.
  std::ostream& result(const std::string& out_path) {
    if (out_path.empty()) return out_;
    file_.open(out_path);
    if (!file_) throw InputError("cannot write '" + out_path + "'");
    return file_;
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::ofstream file_;
};

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string path_text(const AlternatingPath& p) {
  std::string s;
  for (Vertex v : p.vertices) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

int phase_bound(int n) { return static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(n)))) + 2; }

int cmd_solve(const RunConfig& cfg, Io& io) {
  const Graph g = io.read_graph(cfg.inputs.empty() ? "-" : cfg.inputs.front());
  std::optional<TraceWriter> trace;
  SolveOptions options;
  if (cfg.trace) {
    trace.emplace(io.out());
    options.observer_for_phase = [&](int k) -> PhaseObserver* {
      trace->begin_phase(k + 1);
      return &*trace;
    };
  }
  const SolveResult r = solve(g, options);
  if (trace) trace->finish();
  std::ostream& dest = io.result(cfg.out_path);
  write_matching(r.matching, dest);
  dest << "c phases " << r.num_phases() << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, Io& io) {
  if (cfg.inputs.size() != 2) throw InputError("verify needs a graph file and a matching file");
  if (cfg.inputs[0] == "-" && cfg.inputs[1] == "-") throw InputError("only one input may be standard input");
  const Graph g = io.read_graph(cfg.inputs[0]);
  const Matching m = io.read_matching(cfg.inputs[1], g.num_vertices());
  const ValidationReport report = validate_matching(g, m);
  if (!report.valid()) {
    io.out() << "invalid matching\n";
    for (const MatchingViolation& v : report.violations) io.out() << "violation: " << v.message << '\n';
    return kExitFailure;
  }
  const PhaseResult phase = run_phase(g, m);
  if (!phase.paths.empty()) {
    io.out() << "not maximum: augmenting path " << path_text(phase.paths.front()) << '\n';
    return kExitFailure;
  }
  io.out() << "maximum size " << m.size() << '\n';
  return kExitOk;
}

int cmd_gen(const RunConfig& cfg, Io& io) {
  const std::uint64_t seed = resolve_seed(cfg);
  const Graph g = generate_random_graph(cfg.n, cfg.m, seed);
  std::ostream& dest = io.result(cfg.out_path);
  dest << "c seed " << seed << '\n';
  write_dimacs(g, dest);
  return kExitOk;
}

int cmd_oracle_check(const RunConfig& cfg, Io& io) {
  const std::uint64_t seed = resolve_seed(cfg);
  std::mt19937_64 rng(seed);
  io.out() << "seed " << seed << '\n';
  CrossCheckOptions options;
  options.oracle.guard_override = cfg.guard_override;
  options.inject_fault = cfg.inject_fault;
  const std::vector<std::string> inputs = cfg.inputs.empty() ? std::vector<std::string>{"-"} : cfg.inputs;
  int checked = 0;
  int failing = 0;
  for (const std::string& path : inputs) {
    const Graph g = io.read_graph(path);
    if (g.num_vertices() > kOracleMaxVertices && !cfg.guard_override) {
      throw GuardExceeded(path + " has " + std::to_string(g.num_vertices()) + " vertices; the oracle supports at most " +
                          std::to_string(kOracleMaxVertices) + " (--guard-override to force)");
    }
    const std::vector<Matching> matchings = sample_matchings(g, cfg.samples, rng);
    for (std::size_t j = 0; j < matchings.size(); ++j) {
      const CrossCheckReport report = cross_check_phase(g, matchings[j], options);
      ++checked;
      if (report.ok()) continue;
      ++failing;
      for (const std::string& f : report.findings()) {
        io.out() << path << " matching " << j << " (size " << matchings[j].size() << "): " << f << '\n';
      }
    }
  }
  io.out() << "checked " << checked << " instances, " << failing << " failing\n";
  return failing == 0 ? kExitOk : kExitFailure;
}

int cmd_bench(const RunConfig& cfg, Io& io) {
  const std::uint64_t seed = resolve_seed(cfg);
  const int bound = phase_bound(cfg.n);
  std::ostream& dest = io.result(cfg.out_path);
  dest << "seed " << seed << '\n';
  dest << std::left << std::setw(10) << "n" << std::setw(12) << "m" << std::setw(8) << "phases" << std::setw(8)
       << "bound" << std::setw(10) << "size" << "seconds\n";
  bool within = true;
  for (int r = 0; r < cfg.runs; ++r) {
    const Graph g = generate_random_graph(cfg.n, cfg.m, seed + static_cast<std::uint64_t>(r));
    const auto start = std::chrono::steady_clock::now();
    const SolveResult result = solve(g);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    within = within && result.num_phases() <= bound;
    dest << std::left << std::setw(10) << cfg.n << std::setw(12) << cfg.m << std::setw(8) << result.num_phases()
         << std::setw(8) << bound << std::setw(10) << result.matching.size() << std::fixed << std::setprecision(4)
         << secs << '\n';
  }
  if (!within) {
    io.err() << "phase bound exceeded\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum cardinality matching in general graphs", "mvmatch"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* solve_cmd = app.add_subcommand("solve", "Compute a maximum matching of a DIMACS graph");
  solve_cmd->add_option("input", cfg.inputs, "DIMACS file, or - for standard input")->expected(0, 1);
  solve_cmd->add_flag("--trace", cfg.trace, "Emit a phase trace before the matching");
  solve_cmd->add_option("--out", cfg.out_path, "Write the matching here instead of standard output");
  solve_cmd->add_option("--seed", cfg.seed, "Accepted for uniformity; solve uses no randomness");

  auto* verify_cmd = app.add_subcommand("verify", "Check that a matching is valid and maximum");
  verify_cmd->add_option("files", cfg.inputs, "Graph file and matching file")->expected(2)->required();

  auto* gen_cmd = app.add_subcommand("gen", "Write a uniformly random simple graph");
  gen_cmd->add_option("--n", cfg.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--m", cfg.m, "Edge count")->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", cfg.seed, "Generator seed; drawn and printed when omitted");
  gen_cmd->add_option("--out", cfg.out_path, "Output file");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare engine phases against the brute-force oracle");
  oracle_cmd->add_option("inputs", cfg.inputs, "DIMACS files, or - for standard input");
  oracle_cmd->add_option("--samples", cfg.samples, "Random matchings per graph")->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--seed", cfg.seed, "Sampling seed; drawn and printed when omitted");
  oracle_cmd->add_flag("--guard-override", cfg.guard_override, "Run the oracle beyond its size guards");
#ifdef MVMATCH_FAULT_INJECTION
  oracle_cmd->add_flag("--inject-fault", cfg.inject_fault, "Corrupt one engine minlevel per phase");
#endif

  auto* bench_cmd = app.add_subcommand("bench", "Time the solver on random graphs");
  bench_cmd->add_option("--n", cfg.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--m", cfg.m, "Edge count")->required()->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--seed", cfg.seed, "Seed of the first run; run r uses seed + r");
  bench_cmd->add_option("--runs", cfg.runs, "Number of graphs")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", cfg.out_path, "Write the table here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Io io(in, out, err);
  try {
    if (*solve_cmd) return cmd_solve(cfg, io);
    if (*verify_cmd) return cmd_verify(cfg, io);
    if (*gen_cmd) return cmd_gen(cfg, io);
    if (*oracle_cmd) return cmd_oracle_check(cfg, io);
    return cmd_bench(cfg, io);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    err << "error: oracle guard exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace mvmatch
