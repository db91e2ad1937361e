#include "mvmatch/ddfs.hpp"

#include <algorithm>
#include <string>

namespace mvmatch {

const char* to_string(DdfsAction action) noexcept {
  switch (action) {
    case DdfsAction::kAdvance: return "advance";
    case DdfsAction::kBacktrack: return "backtrack";
    case DdfsAction::kMeet: return "meet";
    case DdfsAction::kReassign: return "reassign";
    case DdfsAction::kTerminate: return "terminate";
  }
  return "?";
}

const char* to_string(DdfsTree tree) noexcept {
  return tree == DdfsTree::kRed ? "red" : "green";
}

void Ddfs::reserve(int num_vertices) {
  const auto n = static_cast<std::size_t>(std::max(num_vertices, 0));
  if (color_.size() >= n) return;
  color_.resize(n, DdfsColor::kUnvisited);
  cursor_.resize(n, 0);
  red_link_.resize(n);
  green_link_.resize(n);
  is_touched_.resize(n, 0);
}

void Ddfs::reset() {
  for (Vertex v : touched_) {
    const auto i = static_cast<std::size_t>(v);
    color_[i] = DdfsColor::kUnvisited;
    cursor_[i] = 0;
    red_link_[i] = {};
    green_link_[i] = {};
    is_touched_[i] = 0;
  }
  touched_.clear();
  stats_ = {};
}

void Ddfs::emit(DdfsAction action, DdfsTree tree, Vertex v) {
  if (observer_) observer_->on_ddfs_event({action, tree, v, view_->layer(v)});
}

void Ddfs::visit(LayeredView& view, Vertex v, DdfsColor c) {
  const auto i = static_cast<std::size_t>(v);
  if (!is_touched_[i]) {
    is_touched_[i] = 1;
    touched_.push_back(v);
  }
  color_[i] = c;
  if (view.layer(v) > 0 && view.out_degree(v) == 0) {
    throw LayeredViewError("vertex " + std::to_string(v) + " at layer " +
                           std::to_string(view.layer(v)) + " has no out-edges");
  }
}

Vertex Ddfs::checked_target(LayeredView& view, Vertex from, int index) {
  const Vertex u = view.target(from, index);
  if (u == kNoVertex) return u;
  if (u < 0 || u >= static_cast<Vertex>(color_.size())) {
    throw LayeredViewError("out-edge of " + std::to_string(from) + " leaves the view");
  }
  if (view.layer(u) >= view.layer(from)) {
    throw LayeredViewError("edge " + std::to_string(from) + " -> " + std::to_string(u) +
                           " does not descend (layers " + std::to_string(view.layer(from)) +
                           " -> " + std::to_string(view.layer(u)) + ")");
  }
  return u;
}

Ddfs::StepResult Ddfs::red_step(LayeredView& view) {
  const Vertex v = center_red_;
  const auto vi = static_cast<std::size_t>(v);
  const int degree = view.out_degree(v);
  while (cursor_[vi] < degree) {
    const int k = cursor_[vi]++;
    ++stats_.edges_explored;
    const Vertex u = checked_target(view, v, k);
    if (u == kNoVertex) continue;
    const auto ui = static_cast<std::size_t>(u);
    if (color_[ui] == DdfsColor::kUnvisited) {
      visit(view, u, DdfsColor::kRed);
      red_link_[ui] = {v, k};
      center_red_ = u;
      emit(DdfsAction::kAdvance, DdfsTree::kRed, u);
      return StepResult::kContinue;
    }
    if (u == center_green_) {
      // The contested vertex stays green; red records how it got there and
      // keeps looking for another way down.
      red_link_[ui] = {v, k};
      emit(DdfsAction::kMeet, DdfsTree::kRed, u);
      return StepResult::kContinue;
    }
  }

  if (v != barrier_) {
    center_red_ = red_link_[vi].parent;
    ++stats_.red_backtracks;
    emit(DdfsAction::kBacktrack, DdfsTree::kRed, v);
    return StepResult::kContinue;
  }

  const Vertex u = center_green_;
  const auto ui = static_cast<std::size_t>(u);
  if (!red_link_[ui].valid()) {
    throw std::logic_error("ddfs: red exhausted at barrier " + std::to_string(v) +
                           " without an edge to green center " + std::to_string(u));
  }
  color_[ui] = DdfsColor::kRed;
  barrier_ = u;
  center_red_ = u;
  emit(DdfsAction::kReassign, DdfsTree::kRed, u);
  if (u == green_root_) return StepResult::kBottleneck;
  center_green_ = green_link_[ui].parent;
  ++stats_.green_backtracks;
  emit(DdfsAction::kBacktrack, DdfsTree::kGreen, u);
  return StepResult::kContinue;
}

Ddfs::StepResult Ddfs::green_step(LayeredView& view) {
  const Vertex v = center_green_;
  const auto vi = static_cast<std::size_t>(v);
  const int degree = view.out_degree(v);
  while (cursor_[vi] < degree) {
    const int k = cursor_[vi]++;
    ++stats_.edges_explored;
    const Vertex u = checked_target(view, v, k);
    if (u == kNoVertex) continue;
    const auto ui = static_cast<std::size_t>(u);
    if (color_[ui] == DdfsColor::kUnvisited) {
      visit(view, u, DdfsColor::kGreen);
      green_link_[ui] = {v, k};
      center_green_ = u;
      emit(DdfsAction::kAdvance, DdfsTree::kGreen, u);
      return StepResult::kContinue;
    }
    if (u == center_red_) {
      green_link_[ui] = {v, k};
      emit(DdfsAction::kMeet, DdfsTree::kGreen, u);
      if (u == barrier_) return StepResult::kContinue;
      color_[ui] = DdfsColor::kGreen;
      center_green_ = u;
      center_red_ = red_link_[ui].parent;
      ++stats_.red_backtracks;
      emit(DdfsAction::kBacktrack, DdfsTree::kRed, u);
      return StepResult::kContinue;
    }
  }

  if (v == green_root_) {
    if (!green_link_[static_cast<std::size_t>(center_red_)].valid()) {
      throw std::logic_error("ddfs: green exhausted at its root without reaching red center " +
                             std::to_string(center_red_));
    }
    return StepResult::kBottleneck;
  }
  center_green_ = green_link_[vi].parent;
  ++stats_.green_backtracks;
  emit(DdfsAction::kBacktrack, DdfsTree::kGreen, v);
  return StepResult::kContinue;
}

DdfsBottleneck Ddfs::make_bottleneck(Vertex b) const {
  DdfsBottleneck out;
  out.bottleneck = b;
  for (Vertex v : touched_) {
    const auto i = static_cast<std::size_t>(v);
    if (v != b) {
      if (color_[i] == DdfsColor::kRed) out.red_set.push_back(v);
      if (color_[i] == DdfsColor::kGreen) out.green_set.push_back(v);
    }
    if (v == b || color_[i] == DdfsColor::kRed) {
      if (v != red_root_ && red_link_[i].valid()) out.red_tree.push_back({v, red_link_[i]});
    }
    if (v == b || color_[i] == DdfsColor::kGreen) {
      if (v != green_root_ && green_link_[i].valid()) out.green_tree.push_back({v, green_link_[i]});
    }
  }
  return out;
}

DdfsTwoPaths Ddfs::make_two_paths() const {
  DdfsTwoPaths out;
  auto chain = [](Vertex end, const std::vector<DdfsLink>& links, std::vector<Vertex>& path,
                  std::vector<int>& edges) {
    for (Vertex v = end; v != kNoVertex; v = links[static_cast<std::size_t>(v)].parent) {
      path.push_back(v);
      const DdfsLink& l = links[static_cast<std::size_t>(v)];
      if (l.valid()) edges.push_back(l.edge_index);
    }
    std::reverse(path.begin(), path.end());
    std::reverse(edges.begin(), edges.end());
  };
  chain(center_red_, red_link_, out.red_path, out.red_edges);
  chain(center_green_, green_link_, out.green_path, out.green_edges);
  return out;
}

DdfsOutcome Ddfs::run(LayeredView& view, Vertex r, Vertex g, DdfsObserver* observer) {
  reserve(view.num_vertices());
  reset();
  view_ = &view;
  observer_ = observer;
  red_root_ = r;
  green_root_ = g;
  if (r == g) {
    emit(DdfsAction::kTerminate, DdfsTree::kRed, r);
    return DdfsEmptySupport{};
  }
  // Both roots are marked before any step so the trees start disjoint.
  visit(view, r, DdfsColor::kRed);
  visit(view, g, DdfsColor::kGreen);
  red_link_[static_cast<std::size_t>(r)] = {};
  green_link_[static_cast<std::size_t>(g)] = {};
  center_red_ = r;
  center_green_ = g;
  barrier_ = r;

  for (;;) {
    const int lr = view.layer(center_red_);
    const int lg = view.layer(center_green_);
    if (lr == 0 && lg == 0) {
      emit(DdfsAction::kTerminate, DdfsTree::kRed, center_red_);
      emit(DdfsAction::kTerminate, DdfsTree::kGreen, center_green_);
      return make_two_paths();
    }
    const StepResult step = lr >= lg ? red_step(view) : green_step(view);
    if (step == StepResult::kBottleneck) {
      const Vertex b = center_red_;
      emit(DdfsAction::kTerminate, DdfsTree::kRed, b);
      return make_bottleneck(b);
    }
  }
}

DdfsOutcome run_ddfs(LayeredView& view, Vertex r, Vertex g, DdfsObserver* observer) {
  Ddfs ddfs(view.num_vertices());
  return ddfs.run(view, r, g, observer);
}

}  // namespace mvmatch
