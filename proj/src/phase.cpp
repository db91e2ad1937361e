#include "mvmatch/phase.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace mvmatch {

namespace {

const std::vector<EdgeId> kNoBridges;

}  // namespace

Vertex PhaseState::View::target(Vertex v, int k) {
  const Vertex y = s_->preds_[static_cast<std::size_t>(s_->g_->incidence_offset(v) + k)];
  if (s_->removed(y)) return kNoVertex;
  const Vertex z = s_->bud_star(y);
  return z == v ? kNoVertex : z;
}

PhaseState::PhaseState(const Graph& g) : g_(&g), ddfs_(g.num_vertices()) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const auto m = static_cast<std::size_t>(g.num_edges());
  even_.resize(n);
  odd_.resize(n);
  class_.resize(m);
  edge_ten_.resize(m);
  bridge_src_.resize(m);
  deferred_.resize(n);
  preds_.resize(2 * m);
  succs_.resize(2 * m);
  pred_count_.resize(n);
  succ_count_.resize(n);
  alive_preds_.resize(n);
  alive_degree_.resize(n);
  petal_of_.resize(n);
  bud_.resize(n);
  star_.resize(n);
  pet_color_.resize(n);
  pet_link_.resize(n);
  petals_by_bud_.resize(n);
  removed_.resize(n);
  mark_.resize(n);
}

void PhaseState::init(const Matching& m) {
  if (m.num_vertices() != g_->num_vertices()) {
    throw InputError("matching has " + std::to_string(m.num_vertices()) + " vertices, graph has " +
                     std::to_string(g_->num_vertices()));
  }
  m_ = m;
  initialized_ = true;
  for (auto& b : buckets_) b.clear();
  for (auto& b : br_) b.clear();
  max_bucket_ = -1;
  max_bridge_slot_ = -1;
  std::fill(class_.begin(), class_.end(), EdgeClass::kUnscanned);
  std::fill(edge_ten_.begin(), edge_ten_.end(), kInfinity);
  std::fill(bridge_src_.begin(), bridge_src_.end(), kNoVertex);
  petals_.clear();
  paths_.clear();
  level_ = 0;
  br_cursor_ = 0;
  const int n = g_->num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    const auto i = idx(v);
    even_[i] = kInfinity;
    odd_[i] = kInfinity;
    deferred_[i].clear();
    pred_count_[i] = 0;
    succ_count_[i] = 0;
    alive_preds_[i] = 0;
    alive_degree_[i] = g_->degree(v);
    petal_of_[i] = -1;
    bud_[i] = kNoVertex;
    star_[i] = kNoVertex;
    pet_color_[i] = DdfsColor::kUnvisited;
    pet_link_[i] = {};
    petals_by_bud_[i].clear();
    removed_[i] = 0;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!m.is_matched(v)) set_level(v, 0);
  }
#ifdef MVMATCH_FAULT_INJECTION
  fault_vertex_ = kNoVertex;
#endif
}

void PhaseState::push_bucket(Vertex v, int level) {
  const auto l = static_cast<std::size_t>(level);
  if (buckets_.size() <= l) buckets_.resize(l + 1);
  buckets_[l].push_back(v);
  max_bucket_ = std::max(max_bucket_, level);
}

void PhaseState::set_level(Vertex v, int level) {
  int& slot = level % 2 == 0 ? even_[idx(v)] : odd_[idx(v)];
  if (slot == level) return;
  slot = level;
  push_bucket(v, level);
  if (observer_) observer_->on_level_set(*this, v, level);
}

const std::vector<EdgeId>& PhaseState::bridges(int tenacity) const {
  if (tenacity < 1 || tenacity % 2 == 0) return kNoBridges;
  const auto slot = static_cast<std::size_t>((tenacity - 1) / 2);
  return slot < br_.size() ? br_[slot] : kNoBridges;
}

Vertex PhaseState::bud_star_peek(Vertex v) const {
  while (star_[idx(v)] != kNoVertex) v = star_[idx(v)];
  return v;
}

Vertex PhaseState::bud_star(Vertex v) {
  const Vertex root = bud_star_peek(v);
  while (star_[idx(v)] != kNoVertex && star_[idx(v)] != root) {
    const Vertex next = star_[idx(v)];
    star_[idx(v)] = root;
    v = next;
  }
  return root;
}

void PhaseState::file_bridge(EdgeId e, Vertex from, int tenacity) {
  if (tenacity < 2 * level_ + 1) {
    throw std::logic_error("bridge " + std::to_string(e) + " of tenacity " + std::to_string(tenacity) +
                           " found at search level " + std::to_string(level_));
  }
  const auto ei = static_cast<std::size_t>(e);
  edge_ten_[ei] = tenacity;
  bridge_src_[ei] = from;
  const int slot = (tenacity - 1) / 2;
  if (br_.size() <= static_cast<std::size_t>(slot)) br_.resize(static_cast<std::size_t>(slot) + 1);
  br_[static_cast<std::size_t>(slot)].push_back(e);
  max_bridge_slot_ = std::max(max_bridge_slot_, slot);
  if (observer_) observer_->on_bridge_filed(*this, e, tenacity);
}

void PhaseState::classify_bridge(EdgeId e, Vertex from) {
  const Vertex to = g_->edge(e).other(from);
  const bool matched = m_.mate(from) == to;
  const auto& lv = matched ? odd_ : even_;
  const int t = level_add(level_add(lv[idx(from)], lv[idx(to)]), 1);
  if (t < kInfinity) {
    file_bridge(e, from, t);
    return;
  }
  // The tenacity waits on whichever endpoint lacks the needed level.
  bridge_src_[static_cast<std::size_t>(e)] = from;
  deferred_[idx(lv[idx(to)] == kInfinity ? to : from)].push_back(e);
}

void PhaseState::scan_edge(Vertex u, Vertex v, EdgeId e, int i) {
  const auto ei = static_cast<std::size_t>(e);
  if (class_[ei] != EdgeClass::kUnscanned) return;
  if (minlevel(v) >= i + 1) {
    class_[ei] = EdgeClass::kProp;
    int level = i + 1;
#ifdef MVMATCH_FAULT_INJECTION
    if (fault_ && fault_vertex_ == kNoVertex && i >= 1 && minlevel(v) == kInfinity) {
      fault_vertex_ = v;
      level += 2;
    }
    if (v != fault_vertex_ || level != i + 1) set_level(v, level);
#else
    set_level(v, level);
#endif
    const auto off_v = static_cast<std::size_t>(g_->incidence_offset(v));
    const auto off_u = static_cast<std::size_t>(g_->incidence_offset(u));
    preds_[off_v + static_cast<std::size_t>(pred_count_[idx(v)]++)] = u;
    ++alive_preds_[idx(v)];
    succs_[off_u + static_cast<std::size_t>(succ_count_[idx(u)]++)] = v;
    return;
  }
  class_[ei] = EdgeClass::kBridge;
  classify_bridge(e, u);
}

void PhaseState::min_step(int i) {
  level_ = i;
  if (static_cast<std::size_t>(i) >= buckets_.size()) return;
  for (std::size_t k = 0; k < buckets_[static_cast<std::size_t>(i)].size(); ++k) {
    const Vertex u = buckets_[static_cast<std::size_t>(i)][k];
    if (i % 2 == 0) {
      const Vertex mate = m_.mate(u);
      for (const Incidence& inc : g_->neighbors(u)) {
        if (inc.neighbor != mate) scan_edge(u, inc.neighbor, inc.edge, i);
      }
    } else {
      const Vertex mate = m_.mate(u);
      if (mate == kNoVertex) continue;
      scan_edge(u, mate, *g_->find_edge(u, mate), i);
    }
  }
}

void PhaseState::form_petal(EdgeId e, Vertex r, Vertex g, const DdfsBottleneck& out) {
  Petal p;
  p.id = static_cast<int>(petals_.size());
  p.bridge = e;
  p.red_end = bridge_src_[static_cast<std::size_t>(e)];
  p.green_end = g_->edge(e).other(p.red_end);
  p.red_root = r;
  p.green_root = g;
  p.bud = out.bottleneck;
  p.tenacity = 2 * level_ + 1;
  p.members.reserve(out.red_set.size() + out.green_set.size());
  for (Vertex v : out.red_set) {
    p.members.push_back(v);
    pet_color_[idx(v)] = DdfsColor::kRed;
  }
  for (Vertex v : out.green_set) {
    p.members.push_back(v);
    pet_color_[idx(v)] = DdfsColor::kGreen;
  }
  for (const DdfsTreeEntry& t : out.red_tree) {
    if (t.vertex == p.bud) p.bud_red_link = t.link;
    else pet_link_[idx(t.vertex)] = t.link;
  }
  for (const DdfsTreeEntry& t : out.green_tree) {
    if (t.vertex == p.bud) p.bud_green_link = t.link;
    else pet_link_[idx(t.vertex)] = t.link;
  }
  petals_by_bud_[idx(p.bud)].push_back(p.id);

  std::vector<Vertex> newly_even;
  for (Vertex v : p.members) {
    const auto i = idx(v);
    petal_of_[i] = p.id;
    bud_[i] = p.bud;
    star_[i] = p.bud;
    const int maxlevel = p.tenacity - minlevel(v);
    if (even_[i] == kInfinity) newly_even.push_back(v);
    set_level(v, maxlevel);
  }
  petals_.push_back(std::move(p));
  if (observer_) observer_->on_petal(*this, petals_.back());

  for (Vertex v : newly_even) {
    std::vector<EdgeId> waiting;
    waiting.swap(deferred_[idx(v)]);
    for (EdgeId d : waiting) classify_bridge(d, bridge_src_[static_cast<std::size_t>(d)]);
  }
}

bool PhaseState::process_next_bridge() {
  const auto slot = static_cast<std::size_t>(level_);
  if (slot >= br_.size() || br_cursor_ >= br_[slot].size()) return false;
  const EdgeId e = br_[slot][br_cursor_++];
  const Vertex s = bridge_src_[static_cast<std::size_t>(e)];
  const Vertex t = g_->edge(e).other(s);
  if (removed(s) || removed(t)) return true;
  if (observer_) observer_->on_bridge_processed(*this, e);
  const Vertex r = bud_star(s);
  const Vertex g = bud_star(t);
  View view(*this);
  DdfsOutcome out = ddfs_.run(view, r, g, observer_ ? observer_->ddfs_observer() : nullptr);
  if (auto* b = std::get_if<DdfsBottleneck>(&out)) {
    form_petal(e, r, g, *b);
  } else if (auto* two = std::get_if<DdfsTwoPaths>(&out)) {
    AlternatingPath path = extract_path(*two, e);
    recursive_remove(path.vertices);
    paths_.push_back(std::move(path));
    if (observer_) observer_->on_path(*this, paths_.back());
  }
  return true;
}

void PhaseState::max_step(int i) {
  level_ = i;
  br_cursor_ = 0;
  while (process_next_bridge()) {
  }
}

PhaseResult PhaseState::run() {
  if (!initialized_) throw std::logic_error("PhaseState::run called before init");
  PhaseResult result;
  for (int i = 0;; ++i) {
    if (observer_) observer_->on_level_begin(*this, i);
    min_step(i);
    max_step(i);
    if (observer_) observer_->on_level_end(*this, i);
    result.levels = i + 1;
    if (!paths_.empty()) {
      result.l_m = 2 * i + 1;
      break;
    }
    if (i >= max_bucket_ && i >= max_bridge_slot_) break;
  }
  result.paths = paths_;
  return result;
}

PhaseState init_phase(const Graph& g, const Matching& m) {
  PhaseState s(g);
  s.init(m);
  return s;
}

void min_step(PhaseState& s, int i) { s.min_step(i); }
void max_step(PhaseState& s, int i) { s.max_step(i); }
Vertex bud_star(PhaseState& s, Vertex v) { return s.bud_star(v); }
PhaseState::View layered_adapter(PhaseState& s) { return s.layered_view(); }

PhaseResult run_phase(const Graph& g, const Matching& m, PhaseObserver* observer) {
  PhaseState s(g);
  s.init(m);
  s.set_observer(observer);
  return s.run();
}

}  // namespace mvmatch
