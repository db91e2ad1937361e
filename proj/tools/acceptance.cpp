// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mvmatch/crosscheck.hpp"
#include "mvmatch/ddfs.hpp"
#include "mvmatch/graph.hpp"
#include "mvmatch/oracle.hpp"
#include "mvmatch/solver.hpp"
#include "support/ddfs_oracle.hpp"

using namespace mvmatch;

namespace {

// Pinned parameters and tolerances.
constexpr std::uint64_t kSeed = 20261014;
constexpr int kExactSmallMaxN = 8;
constexpr int kExactSmallInstances = 10000;
constexpr int kExhaustiveMaxN = 5;
constexpr int kExactRandomMaxN = 12;
constexpr int kExactRandomInstances = 1000;
constexpr int kCorpusMaxN = 10;
constexpr int kCorpusInstances = 1000;
constexpr int kDdfsViews = 500;
constexpr int kDdfsMaxVertices = 10;
constexpr int kMaxTargetCalls = 1;
constexpr int kMaxBacktracks = 1;
constexpr int kPerfN = 100000;
constexpr std::int64_t kPerfLowM = 250000;
constexpr std::int64_t kPerfHighM = 500000;
constexpr int kPerfRuns = 5;
constexpr double kMaxDoublingRatio = 2.6;
constexpr double kMaxLargeSeconds = 10.0;

struct Line {
  bool pass;
  std::string detail;
};

void report(int id, const std::string& name, const Line& line, bool& all) {
  std::cout << (line.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << line.detail << std::endl;
  all = all && line.pass;
}

int phase_bound(int n) { return static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(n)))) + 2; }

bool connected(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int components = n;
  for (const Edge& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components <= 1;
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

Line exactness() {
  std::mt19937_64 rng(kSeed);
  int small = 0;
  int random = 0;
  std::vector<std::string> bad;
  auto check = [&](const Graph& g) {
    const int engine = max_matching(g).size();
    const int oracle = brute_max_matching(g).size;
    if (engine != oracle && bad.size() < 5) {
      std::ostringstream s;
      s << "n=" << g.num_vertices() << " m=" << g.num_edges() << " engine " << engine << " oracle " << oracle;
      bad.push_back(s.str());
    }
    return engine == oracle;
  };
  int mismatches = 0;
  for (int n = 1; n <= kExhaustiveMaxN; ++n) {
    const std::vector<Edge> pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1) edges.push_back(pairs[k]);
      if (!connected(n, edges)) continue;
      mismatches += !check(Graph(n, edges));
      ++small;
    }
  }
  while (small < kExactSmallInstances) {
    const int n = kExhaustiveMaxN + 1 + static_cast<int>(rng() % (kExactSmallMaxN - kExhaustiveMaxN));
    const std::vector<Edge> pairs = all_pairs(n);
    const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    std::vector<Edge> edges;
    for (const Edge& e : pairs)
      if (std::bernoulli_distribution(p)(rng)) edges.push_back(e);
    if (!connected(n, edges)) continue;
    mismatches += !check(Graph(n, edges));
    ++small;
  }
  for (; random < kExactRandomInstances; ++random) {
    const int n = 1 + static_cast<int>(rng() % kExactRandomMaxN);
    const std::uint64_t cap = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
    mismatches += !check(generate_random_graph(n, static_cast<std::int64_t>(rng() % (cap + 1)), rng()));
  }
  std::ostringstream s;
  s << small << " connected graphs n<=" << kExactSmallMaxN << " (all for n<=" << kExhaustiveMaxN << "), " << random
    << " random n<=" << kExactRandomMaxN << ", " << mismatches << " size mismatches (tolerance 0)";
  for (const std::string& b : bad) s << "; " << b;
  return {mismatches == 0, s.str()};
}

struct CorpusTally {
  int instances = 0;
  int with_blossoms = 0;
  int with_paths = 0;
  int levels = 0;
  int structural = 0;
  int blossoms = 0;
  int petals = 0;
  int maximality = 0;
  int errors = 0;
  std::vector<std::string> examples;
};

CorpusTally run_corpus() {
  std::mt19937_64 rng(kSeed + 1);
  CorpusTally t;
  while (t.instances < kCorpusInstances) {
    const int n = 2 + static_cast<int>(rng() % (kCorpusMaxN - 1));
    const std::uint64_t cap = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
    const std::int64_t m = static_cast<std::int64_t>(std::min<std::uint64_t>(cap, n / 2 + rng() % (cap + 1)));
    const std::uint64_t graph_seed = rng();
    const Graph g = generate_random_graph(n, m, graph_seed);
    const std::vector<Matching> candidates = sample_matchings(g, 3, rng);
    const Matching& matching = candidates[rng() % candidates.size()];
    const CrossCheckReport r = cross_check_phase(g, matching);
    ++t.instances;
    const OracleProfile profile = build_profile(g, matching);
    const BlossomResult bl = brute_blossoms(g, matching, profile);
    t.with_blossoms += !bl.recursive.empty();
    t.with_paths += r.engine_paths > 0;
    const bool engine_failed = !r.errors.empty();
    t.errors += engine_failed;
    t.levels += !r.levels.empty() || engine_failed;
    t.structural += !r.structural.ok();
    t.blossoms += !r.blossom_definitions_agree;
    t.petals += !r.petals.empty() || !r.supports.empty() || engine_failed;
    t.maximality += !r.paths.empty() || r.engine_l_m != r.oracle_l_m || engine_failed;
    if (!r.ok() && t.examples.size() < 5) {
      const std::vector<std::string> f = r.findings();
      t.examples.push_back("graph seed " + std::to_string(graph_seed) + ": " + (f.empty() ? "?" : f.front()));
    }
  }
  return t;
}

Line corpus_line(const CorpusTally& t, int failures, const std::string& what) {
  std::ostringstream s;
  s << t.instances << " instances n<=" << kCorpusMaxN << " (" << t.with_blossoms << " with blossoms, " << t.with_paths
    << " with paths), " << failures << " with " << what << " (tolerance 0)";
  if (failures)
    for (const std::string& e : t.examples) s << "; " << e;
  return {failures == 0, s.str()};
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t k = xs.size() / 2;
  return xs.size() % 2 ? xs[k] : (xs[k - 1] + xs[k]) / 2;
}

struct BenchRun {
  int n;
  int phases;
  double seconds;
};

BenchRun bench(int n, std::int64_t m, std::uint64_t seed) {
  const Graph g = generate_random_graph(n, m, seed);
  const auto start = std::chrono::steady_clock::now();
  const SolveResult r = solve(g);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {n, r.num_phases(), secs};
}

Line ddfs_suite() {
  std::mt19937_64 rng(kSeed + 2);
  int mismatches = 0;
  int over_calls = 0;
  int over_backtracks = 0;
  int bottlenecks = 0;
  std::string example;
  for (int trial = 0; trial < kDdfsViews; ++trial) {
    Vertex r, g;
    testing::VectorView view = testing::random_layered_view(rng, kDdfsMaxVertices, r, g);
    testing::BacktrackCounter obs;
    std::string problem;
    try {
      const DdfsOutcome out = run_ddfs(view, r, g, &obs);
      problem = testing::check_ddfs_outcome(view, r, g, out);
      bottlenecks += std::holds_alternative<DdfsBottleneck>(out);
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (!problem.empty()) {
      ++mismatches;
      if (example.empty()) example = "; " + view.describe() + ": " + problem;
    }
    over_calls += view.max_target_calls() > kMaxTargetCalls;
    over_backtracks += obs.max_count() > kMaxBacktracks;
  }
  std::ostringstream s;
  s << kDdfsViews << " views <=" << kDdfsMaxVertices << " vertices (" << bottlenecks << " bottlenecks), "
    << mismatches << " outcome mismatches, " << over_calls << " with an edge explored more than " << kMaxTargetCalls
    << "x, " << over_backtracks << " with a vertex backtracked more than " << kMaxBacktracks << "x" << example;
  return {mismatches == 0 && over_calls == 0 && over_backtracks == 0, s.str()};
}

}  // namespace

int main() {
  bool all = true;
  std::cout.setf(std::ios::fixed);
  std::cout.precision(3);

  report(1, "exactness", exactness(), all);

  const CorpusTally t = run_corpus();
  report(2, "level correctness", corpus_line(t, t.levels, "level mismatches"), all);
  report(3, "structural theorems", corpus_line(t, t.structural, "violations"), all);
  report(4, "blossom definition equivalence", corpus_line(t, t.blossoms, "disagreements"), all);
  report(5, "petal-blossom correspondence", corpus_line(t, t.petals, "petal or support mismatches"), all);
  report(6, "maximal disjoint path sets", corpus_line(t, t.maximality, "path set violations"), all);

  std::vector<BenchRun> runs;
  std::vector<double> low;
  std::vector<double> high;
  for (int r = 0; r < kPerfRuns; ++r) {
    runs.push_back(bench(kPerfN, kPerfLowM, kSeed + 100 + static_cast<std::uint64_t>(r)));
    low.push_back(runs.back().seconds);
    runs.push_back(bench(kPerfN, kPerfHighM, kSeed + 200 + static_cast<std::uint64_t>(r)));
    high.push_back(runs.back().seconds);
  }
  std::mt19937_64 rng(kSeed + 3);
  for (int n : {10, 100, 1000, 10000}) {
    for (int density : {1, 2, 5, 20}) {
      const std::uint64_t cap = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
      const std::int64_t m = static_cast<std::int64_t>(std::min<std::uint64_t>(cap, std::uint64_t(density) * n));
      runs.push_back(bench(n, m, rng()));
    }
  }
  int over = 0;
  int worst_slack = 1 << 30;
  for (const BenchRun& b : runs) {
    over += b.phases > phase_bound(b.n);
    worst_slack = std::min(worst_slack, phase_bound(b.n) - b.phases);
  }
  {
    std::ostringstream s;
    s << runs.size() << " benchmark runs, " << over << " over ceil(2 sqrt n)+2, smallest slack " << worst_slack;
    report(7, "phase bound", {over == 0, s.str()}, all);
  }
  {
    const double ratio = median(high) / median(low);
    const double worst = *std::max_element(high.begin(), high.end());
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    s << "n=" << kPerfN << " median " << median(low) << "s at m=" << kPerfLowM << ", " << median(high) << "s at m="
      << kPerfHighM << ", ratio " << ratio << " (limit " << kMaxDoublingRatio << "), slowest m=" << kPerfHighM
      << " run " << worst << "s (limit " << kMaxLargeSeconds << "s)";
    report(8, "performance", {ratio < kMaxDoublingRatio && worst < kMaxLargeSeconds, s.str()}, all);
  }

  report(9, "ddfs suite", ddfs_suite(), all);
  return all ? 0 : 1;
}
