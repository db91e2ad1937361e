#pragma once

// Line-oriented phase trace, versioned by a leading `mvtrace 1` header.
// Vertex ids are 1-based, matching the DIMACS boundary.

#include <iosfwd>

#include "mvmatch/phase.hpp"

namespace mvmatch {

class TraceWriter : public PhaseObserver {
 public:
  explicit TraceWriter(std::ostream& out);

  /// Starts phase k, closing the previous one if open.
  void begin_phase(int k);
  /// Closes the open phase; safe to call twice.
  void finish();

  void on_level_begin(const PhaseState& s, int level) override;
  void on_level_set(const PhaseState& s, Vertex v, int level) override;
  void on_bridge_filed(const PhaseState& s, EdgeId e, int tenacity) override;
  void on_petal(const PhaseState& s, const Petal& p) override;
  void on_path(const PhaseState& s, const AlternatingPath& path) override;

 private:
  std::ostream& out_;
  int phase_ = -1;
  int paths_ = 0;
  int l_m_ = kInfinity;
};

}  // namespace mvmatch
