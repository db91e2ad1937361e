#pragma once

// Runs one engine phase under observation and compares everything it
// computes against the brute-force oracle.

#include <random>
#include <string>
#include <vector>

#include "mvmatch/graph.hpp"
#include "mvmatch/oracle.hpp"

namespace mvmatch {

struct CrossCheckReport {
  int engine_l_m = kInfinity;
  int oracle_l_m = kInfinity;
  int engine_paths = 0;
  /// Engine evenlevel/oddlevel differ from the oracle for a vertex of
  /// tenacity below l_m, or a minlevel within the levels searched differs.
  std::vector<std::string> levels;
  /// Br(t) differs from the oracle's bridges of tenacity t, t < l_m.
  std::vector<std::string> bridges;
  /// A bridge was processed at the wrong search level.
  std::vector<std::string> synchronization;
  /// Petal members differ from support minus earlier same-tenacity vertices.
  std::vector<std::string> supports;
  /// bud* classes or petal unions differ from S_{b,t} or B_{b,t}.
  std::vector<std::string> petals;
  /// Returned paths are invalid, overlapping, of the wrong length, or not maximal.
  std::vector<std::string> paths;
  /// The engine threw.
  std::vector<std::string> errors;
  StructuralReport structural;
  bool blossom_definitions_agree = true;

  bool engine_agrees() const noexcept {
    return levels.empty() && bridges.empty() && synchronization.empty() && supports.empty() && petals.empty() &&
           paths.empty() && errors.empty() && engine_l_m == oracle_l_m;
  }
  bool ok() const noexcept { return engine_agrees() && structural.ok() && blossom_definitions_agree; }
  /// Every finding as one line each.
  std::vector<std::string> findings() const;
};

struct CrossCheckOptions {
  OracleOptions oracle;
  /// Corrupt one minlevel in the engine. Honored only in builds compiled
  /// with MVMATCH_FAULT_INJECTION; ignored otherwise.
  bool inject_fault = false;
};

/// Checks one phase starting from matching m.
CrossCheckReport cross_check_phase(const Graph& g, const Matching& m, const CrossCheckOptions& options = {});

/// The matching at the start of every solver phase, then `samples` more:
/// index j % 3 == 1 is a maximum matching minus one pair, j % 3 == 0 a
/// random maximal matching, and the rest random partial matchings.
std::vector<Matching> sample_matchings(const Graph& g, int samples, std::mt19937_64& rng);

}  // namespace mvmatch
