#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mvmatch/graph.hpp"
#include "mvmatch/phase.hpp"

namespace mvmatch {

struct PhaseSummary {
  int l_m = kInfinity;
  int paths = 0;
  int levels = 0;
};

struct SolveResult {
  Matching matching;
  /// Every phase run, including the final one that found no path.
  std::vector<PhaseSummary> phases;
  int num_phases() const noexcept { return static_cast<int>(phases.size()); }
};

struct SolveOptions {
  /// Starting matching; empty when unset.
  std::optional<Matching> initial;
  /// Observer attached to each phase; receives the phase index first.
  std::function<PhaseObserver*(int phase)> observer_for_phase;
};

/// Maximum cardinality matching by repeated phases, each augmenting along a
/// maximal set of disjoint minimum-length augmenting paths.
SolveResult solve(const Graph& g, const SolveOptions& options = {});

/// Convenience wrapper returning only the matching.
Matching max_matching(const Graph& g);

}  // namespace mvmatch
