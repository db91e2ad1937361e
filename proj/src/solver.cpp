#include "mvmatch/solver.hpp"

#include <stdexcept>

namespace mvmatch {

SolveResult solve(const Graph& g, const SolveOptions& options) {
  SolveResult result{options.initial.value_or(Matching(g.num_vertices())), {}};
  if (result.matching.num_vertices() != g.num_vertices()) {
    throw InputError("initial matching does not match the graph's vertex count");
  }
  if (!validate_matching(g, result.matching).valid()) throw InputError("initial matching is invalid");
  PhaseState state(g);
  for (;;) {
    PhaseObserver* obs =
        options.observer_for_phase ? options.observer_for_phase(result.num_phases()) : nullptr;
    state.set_observer(obs);
    state.init(result.matching);
    PhaseResult phase = state.run();
    result.phases.push_back({phase.l_m, static_cast<int>(phase.paths.size()), phase.levels});
    if (phase.paths.empty()) break;
    for (const AlternatingPath& p : phase.paths) augment_in_place(result.matching, p);
  }
  return result;
}

Matching max_matching(const Graph& g) { return solve(g).matching; }

}  // namespace mvmatch
