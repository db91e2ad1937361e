#include <algorithm>
#include <stdexcept>
#include <string>

#include "mvmatch/phase.hpp"

namespace mvmatch {

namespace {

Parity bridge_parity(const Matching& m, const Edge& e) {
  return m.mate(e.u) == e.v ? Parity::kOdd : Parity::kEven;
}

std::string describe(const std::vector<Vertex>& path) {
  std::string s;
  for (Vertex v : path) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

}  // namespace

Vertex PhaseState::as_of_petal(int petal_id, Vertex y) const {
  while (petal_of_[idx(y)] >= 0 && petal_of_[idx(y)] < petal_id) y = bud_[idx(y)];
  return y;
}

void PhaseState::extend_step(std::vector<Vertex>& out, Vertex from, int edge_index, Vertex to) {
  const Vertex y = preds_[static_cast<std::size_t>(g_->incidence_offset(from) + edge_index)];
  out.push_back(y);
  extend(out, y, parity_of(minlevel(from) - 1), to);
}

std::vector<Vertex> PhaseState::petal_descent(const Petal& p, Vertex v) {
  // Depth-first search from v to the bud through the petal's own vertices,
  // returning the sequence of (vertex, predecessor index) steps flattened.
  if (++stamp_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0u);
    stamp_ = 1;
  }
  struct Frame {
    Vertex x;
    int next;
  };
  std::vector<Frame> stack{{v, 0}};
  std::vector<int> taken;
  mark_[idx(v)] = stamp_;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == pred_count_[idx(f.x)]) {
      stack.pop_back();
      if (!taken.empty()) taken.pop_back();
      continue;
    }
    const int k = f.next++;
    const Vertex y = preds_[static_cast<std::size_t>(g_->incidence_offset(f.x) + k)];
    if (removed(y)) continue;
    const Vertex z = as_of_petal(p.id, y);
    if (z == p.bud) {
      taken.push_back(k);
      std::vector<Vertex> steps;
      steps.reserve(2 * stack.size());
      for (std::size_t j = 0; j < stack.size(); ++j) {
        steps.push_back(stack[j].x);
        steps.push_back(taken[j]);
      }
      return steps;
    }
    if (petal_of_[idx(z)] != p.id || mark_[idx(z)] == stamp_) continue;
    mark_[idx(z)] = stamp_;
    taken.push_back(k);
    stack.push_back({z, 0});
  }
  throw std::logic_error("no descent from " + std::to_string(v) + " to bud " + std::to_string(p.bud) +
                         " inside petal " + std::to_string(p.id));
}

void PhaseState::extend_tree_chain(std::vector<Vertex>& out, Vertex top, Vertex bottom,
                                   DdfsLink bottom_link) {
  // Tree links point upward; collect the chain from bottom to top, then
  // expand it from top to bottom.
  std::vector<std::pair<Vertex, DdfsLink>> chain;
  Vertex x = bottom;
  DdfsLink link = bottom_link;
  while (x != top) {
    if (!link.valid()) {
      throw std::logic_error("tree chain from " + std::to_string(bottom) + " does not reach " +
                             std::to_string(top));
    }
    chain.emplace_back(x, link);
    x = link.parent;
    link = pet_link_[idx(x)];
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    extend_step(out, it->second.parent, it->second.edge_index, it->first);
  }
}

void PhaseState::extend(std::vector<Vertex>& out, Vertex v, Parity par, Vertex low) {
  while (v != low) {
    const int pid = petal_of_[idx(v)];
    if (pid < 0) {
      throw std::logic_error("vertex " + std::to_string(v) + " is not above " + std::to_string(low));
    }
    const Petal& p = petals_[static_cast<std::size_t>(pid)];
    const int lvl = level(v, par);
    if (lvl == kInfinity) {
      throw std::logic_error("vertex " + std::to_string(v) + " has no level of the requested parity");
    }
    if (lvl == minlevel(v)) {
      const std::vector<Vertex> steps = petal_descent(p, v);
      for (std::size_t j = 0; j < steps.size(); j += 2) {
        const Vertex to = j + 2 < steps.size() ? steps[j + 2] : p.bud;
        extend_step(out, steps[j], steps[j + 1], to);
      }
    } else {
      const bool red = pet_color_[idx(v)] == DdfsColor::kRed;
      const Vertex own_root = red ? p.red_root : p.green_root;
      const Vertex own_end = red ? p.red_end : p.green_end;
      const Vertex other_root = red ? p.green_root : p.red_root;
      const Vertex other_end = red ? p.green_end : p.red_end;
      const DdfsLink other_bud_link = red ? p.bud_green_link : p.bud_red_link;
      const Parity bp = bridge_parity(m_, g_->edge(p.bridge));

      // Up v's own tree to its root, then up to the bridge endpoint.
      std::vector<Vertex> up{own_root};
      extend_tree_chain(up, own_root, v, pet_link_[idx(v)]);
      std::vector<Vertex> end{own_end};
      extend(end, own_end, bp, own_root);
      out.insert(out.end(), up.rbegin() + 1, up.rend());
      out.insert(out.end(), end.rbegin() + 1, end.rend());
      // Across the bridge and down the other tree to the bud.
      out.push_back(other_end);
      extend(out, other_end, bp, other_root);
      extend_tree_chain(out, other_root, p.bud, other_bud_link);
    }
    v = p.bud;
    par = Parity::kEven;
  }
}

AlternatingPath PhaseState::open_petal(const PathRequest& request) {
  std::vector<Vertex> out{request.high};
  extend(out, request.high, request.parity, request.low);
  std::reverse(out.begin(), out.end());
  return AlternatingPath{std::move(out)};
}

AlternatingPath PhaseState::extract_path(const DdfsTwoPaths& outcome, EdgeId bridge) {
  const Vertex s = bridge_src_[static_cast<std::size_t>(bridge)];
  const Vertex t = g_->edge(bridge).other(s);
  const Parity bp = bridge_parity(m_, g_->edge(bridge));
  auto side = [&](Vertex end, const std::vector<Vertex>& hp, const std::vector<int>& he) {
    std::vector<Vertex> out{end};
    extend(out, end, bp, hp.front());
    for (std::size_t j = 0; j + 1 < hp.size(); ++j) extend_step(out, hp[j], he[j], hp[j + 1]);
    return out;
  };
  std::vector<Vertex> red = side(s, outcome.red_path, outcome.red_edges);
  const std::vector<Vertex> green = side(t, outcome.green_path, outcome.green_edges);
  std::reverse(red.begin(), red.end());
  red.insert(red.end(), green.begin(), green.end());
  AlternatingPath path{std::move(red)};
  validate_found_path(path);
  return path;
}

void PhaseState::validate_found_path(const AlternatingPath& path) const {
  const int expected = 2 * level_ + 1;
  if (path.length() != expected) {
    throw std::logic_error("extracted path has length " + std::to_string(path.length()) + ", expected " +
                           std::to_string(expected) + ": " + describe(path.vertices));
  }
  if (auto err = augmenting_path_error(*g_, m_, path)) {
    throw std::logic_error("extracted path is not augmenting (" + *err + "): " + describe(path.vertices));
  }
  for (Vertex v : path.vertices) {
    if (removed(v)) {
      throw std::logic_error("extracted path uses removed vertex " + std::to_string(v) + ": " +
                             describe(path.vertices));
    }
  }
}

void PhaseState::remove_vertex(Vertex v, std::vector<Vertex>& queue) {
  if (removed_[idx(v)]) return;
  removed_[idx(v)] = 1;
  queue.push_back(v);
}

void PhaseState::recursive_remove(std::span<const Vertex> seed) {
  std::vector<Vertex> queue;
  for (Vertex v : seed) remove_vertex(v, queue);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex c = queue[head];
    for (Vertex x : successors(c)) {
      if (removed(x)) continue;
      if (--alive_preds_[idx(x)] == 0 && m_.is_matched(x)) remove_vertex(x, queue);
    }
    // Vertices whose bud chain runs through c can no longer reach a free
    // vertex through their petals.
    for (int pid : petals_by_bud_[idx(c)]) {
      for (Vertex y : petals_[static_cast<std::size_t>(pid)].members) remove_vertex(y, queue);
    }
    for (const Incidence& inc : g_->neighbors(c)) {
      const Vertex w = inc.neighbor;
      if (removed(w)) continue;
      if (--alive_degree_[idx(w)] == 0 && !m_.is_matched(w)) remove_vertex(w, queue);
    }
  }
}

std::vector<AlternatingPath> PhaseState::collect_maximal() {
  while (process_next_bridge()) {
  }
  return paths_;
}

}  // namespace mvmatch
