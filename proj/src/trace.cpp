#include "mvmatch/trace.hpp"

#include <ostream>

namespace mvmatch {

TraceWriter::TraceWriter(std::ostream& out) : out_(out) { out_ << "mvtrace 1\n"; }

void TraceWriter::begin_phase(int k) {
  finish();
  phase_ = k;
  paths_ = 0;
  l_m_ = kInfinity;
  out_ << "phase " << k << '\n';
}

void TraceWriter::finish() {
  if (phase_ < 0) return;
  out_ << "end phase " << phase_ << " lm ";
  if (l_m_ == kInfinity) {
    out_ << "inf";
  } else {
    out_ << l_m_;
  }
  out_ << " paths " << paths_ << '\n';
  phase_ = -1;
}

void TraceWriter::on_level_begin(const PhaseState&, int level) { out_ << "level " << level << '\n'; }

void TraceWriter::on_level_set(const PhaseState&, Vertex v, int level) {
  out_ << (level % 2 == 0 ? "even " : "odd ") << v + 1 << ' ' << level << '\n';
}

void TraceWriter::on_bridge_filed(const PhaseState& s, EdgeId e, int tenacity) {
  const Edge& ed = s.graph().edge(e);
  out_ << "bridge " << ed.u + 1 << ' ' << ed.v + 1 << " tenacity " << tenacity << '\n';
}

void TraceWriter::on_petal(const PhaseState& s, const Petal& p) {
  const Edge& ed = s.graph().edge(p.bridge);
  out_ << "petal " << p.id << " bud " << p.bud + 1 << " bridge " << ed.u + 1 << ' ' << ed.v + 1 << " members";
  for (Vertex v : p.members) out_ << ' ' << v + 1;
  out_ << '\n';
}

void TraceWriter::on_path(const PhaseState&, const AlternatingPath& path) {
  l_m_ = path.length();
  out_ << "path " << paths_++ << " length " << path.length() << " vertices";
  for (Vertex v : path.vertices) out_ << ' ' << v + 1;
  out_ << '\n';
}

}  // namespace mvmatch
