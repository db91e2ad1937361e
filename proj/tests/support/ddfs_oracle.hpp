#pragma once

// Exhaustive reference analysis of small layered views, plus a counting view
// used to check DDFS's exploration and backtracking bounds.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "mvmatch/ddfs.hpp"

namespace mvmatch::testing {

/// Explicit layered view. A target of kNoVertex is a masked edge.
class VectorView : public LayeredView {
 public:
  VectorView(std::vector<int> layers, std::vector<std::vector<Vertex>> out)
      : layers_(std::move(layers)), out_(std::move(out)), calls_(out_.size()) {
    for (std::size_t v = 0; v < out_.size(); ++v) calls_[v].assign(out_[v].size(), 0);
  }

  int num_vertices() override { return static_cast<int>(layers_.size()); }
  int layer(Vertex v) override { return layers_[static_cast<std::size_t>(v)]; }
  int out_degree(Vertex v) override { return static_cast<int>(out_[static_cast<std::size_t>(v)].size()); }
  Vertex target(Vertex v, int k) override {
    ++calls_[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)];
    return out_[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)];
  }

  int max_target_calls() const {
    int best = 0;
    for (const auto& row : calls_)
      for (int c : row) best = std::max(best, c);
    return best;
  }

  const std::vector<int>& layers() const { return layers_; }
  const std::vector<std::vector<Vertex>>& out() const { return out_; }

  std::string describe() const {
    std::ostringstream s;
    for (std::size_t v = 0; v < layers_.size(); ++v) {
      s << v << "@" << layers_[v] << " ->";
      for (Vertex t : out_[v]) s << ' ' << (t == kNoVertex ? std::string("x") : std::to_string(t));
      s << "; ";
    }
    return s.str();
  }

 private:
  std::vector<int> layers_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<int>> calls_;
};

/// Counts backtracks per (tree, vertex).
class BacktrackCounter : public DdfsObserver {
 public:
  void on_ddfs_event(const DdfsEvent& e) override {
    events.push_back(e);
    if (e.action == DdfsAction::kBacktrack) ++counts[{e.tree, e.vertex}];
  }
  int max_count() const {
    int best = 0;
    for (const auto& [key, c] : counts) best = std::max(best, c);
    return best;
  }
  std::map<std::pair<DdfsTree, Vertex>, int> counts;
  std::vector<DdfsEvent> events;
};

struct LayeredAnalysis {
  std::optional<Vertex> highest_bottleneck;
  /// Vertices lying on some path from r or g to the highest bottleneck.
  std::set<Vertex> support;
};

inline LayeredAnalysis analyze_layered(const VectorView& view, Vertex r, Vertex g) {
  const auto& out = view.out();
  const auto& layers = view.layers();
  const int n = static_cast<int>(layers.size());

  // Intersection of the vertex sets of all paths from s to layer 0.
  auto on_all_paths = [&](Vertex s) {
    std::optional<std::set<Vertex>> common;
    std::vector<Vertex> path{s};
    auto dfs = [&](auto&& self, Vertex v) -> void {
      if (layers[static_cast<std::size_t>(v)] == 0) {
        std::set<Vertex> here(path.begin(), path.end());
        if (!common) {
          common = here;
        } else {
          std::set<Vertex> keep;
          std::set_intersection(common->begin(), common->end(), here.begin(), here.end(),
                                std::inserter(keep, keep.begin()));
          common = keep;
        }
        return;
      }
      for (Vertex u : out[static_cast<std::size_t>(v)]) {
        if (u == kNoVertex) continue;
        path.push_back(u);
        self(self, u);
        path.pop_back();
      }
    };
    dfs(dfs, s);
    return common.value_or(std::set<Vertex>{});
  };

  LayeredAnalysis a;
  auto from_r = on_all_paths(r);
  auto from_g = on_all_paths(g);
  for (Vertex v : from_r) {
    if (!from_g.count(v)) continue;
    if (!a.highest_bottleneck || layers[static_cast<std::size_t>(v)] >
                                     layers[static_cast<std::size_t>(*a.highest_bottleneck)]) {
      a.highest_bottleneck = v;
    }
  }
  if (!a.highest_bottleneck) return a;

  const Vertex b = *a.highest_bottleneck;
  std::vector<char> reach(static_cast<std::size_t>(n), 0), coreach(static_cast<std::size_t>(n), 0);
  auto fwd = [&](auto&& self, Vertex v) -> void {
    if (reach[static_cast<std::size_t>(v)]) return;
    reach[static_cast<std::size_t>(v)] = 1;
    for (Vertex u : out[static_cast<std::size_t>(v)])
      if (u != kNoVertex) self(self, u);
  };
  fwd(fwd, r);
  fwd(fwd, g);
  // Vertices that can reach b, found by repeated relaxation over the DAG.
  coreach[static_cast<std::size_t>(b)] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (coreach[static_cast<std::size_t>(v)]) continue;
      for (Vertex u : out[static_cast<std::size_t>(v)]) {
        if (u != kNoVertex && coreach[static_cast<std::size_t>(u)]) {
          coreach[static_cast<std::size_t>(v)] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (reach[static_cast<std::size_t>(v)] && coreach[static_cast<std::size_t>(v)]) a.support.insert(v);
  }
  return a;
}

/// Random view on at most max_vertices vertices satisfying the DDFS
/// requirement, with a few masked edges.
inline VectorView random_layered_view(std::mt19937_64& rng, int max_vertices, Vertex& r, Vertex& g) {
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const int n = pick(2, max_vertices);
  const int height = pick(1, n - 1);
  std::vector<int> layers(static_cast<std::size_t>(n));
  layers[0] = 0;
  for (int v = 1; v < n; ++v) layers[static_cast<std::size_t>(v)] = pick(0, height);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  const int density = pick(1, 4);
  for (int v = 0; v < n; ++v) {
    const int lv = layers[static_cast<std::size_t>(v)];
    if (lv == 0) continue;
    std::vector<Vertex> lower;
    for (int u = 0; u < n; ++u)
      if (layers[static_cast<std::size_t>(u)] < lv) lower.push_back(u);
    std::shuffle(lower.begin(), lower.end(), rng);
    const int k = pick(1, std::min<int>(static_cast<int>(lower.size()), density));
    for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(v)].push_back(lower[static_cast<std::size_t>(i)]);
    if (pick(0, 5) == 0) {
      auto& row = out[static_cast<std::size_t>(v)];
      row.insert(row.begin() + pick(0, static_cast<int>(row.size())), kNoVertex);
    }
  }
  r = pick(0, n - 1);
  g = pick(0, n - 1);
  if (r == g && pick(0, 4) != 0) g = (g + 1) % n;
  return VectorView(std::move(layers), std::move(out));
}

/// Checks a DDFS outcome against the exhaustive analysis. Returns an empty
/// string on agreement, otherwise a description of the first disagreement.
inline std::string check_ddfs_outcome(VectorView& view, Vertex r, Vertex g, const DdfsOutcome& outcome) {
  const auto& out = view.out();
  const auto& layers = view.layers();
  auto layer = [&](Vertex v) { return layers[static_cast<std::size_t>(v)]; };
  auto edge_ok = [&](Vertex from, int k, Vertex to) {
    return k >= 0 && k < static_cast<int>(out[static_cast<std::size_t>(from)].size()) &&
           out[static_cast<std::size_t>(from)][static_cast<std::size_t>(k)] == to;
  };

  if (r == g) {
    return std::holds_alternative<DdfsEmptySupport>(outcome) ? "" : "expected empty support";
  }
  if (std::holds_alternative<DdfsEmptySupport>(outcome)) return "unexpected empty support";

  const LayeredAnalysis a = analyze_layered(view, r, g);

  if (const auto* two = std::get_if<DdfsTwoPaths>(&outcome)) {
    if (a.highest_bottleneck) return "two paths reported but bottleneck exists";
    std::set<Vertex> used;
    auto check = [&](const std::vector<Vertex>& p, const std::vector<int>& e, Vertex root) -> std::string {
      if (p.empty() || p.front() != root) return "path does not start at its root";
      if (layer(p.back()) != 0) return "path does not end at layer 0";
      if (e.size() + 1 != p.size()) return "edge index list has wrong length";
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!edge_ok(p[i], e[i], p[i + 1])) return "path uses a non-edge";
      }
      for (Vertex v : p)
        if (!used.insert(v).second) return "paths are not vertex-disjoint";
      return "";
    };
    if (auto s = check(two->red_path, two->red_edges, r); !s.empty()) return "red: " + s;
    if (auto s = check(two->green_path, two->green_edges, g); !s.empty()) return "green: " + s;
    return "";
  }

  const auto& bot = std::get<DdfsBottleneck>(outcome);
  if (!a.highest_bottleneck) return "bottleneck reported but none exists";
  if (bot.bottleneck != *a.highest_bottleneck) {
    return "bottleneck " + std::to_string(bot.bottleneck) + " but highest is " +
           std::to_string(*a.highest_bottleneck);
  }
  const Vertex b = bot.bottleneck;
  std::set<Vertex> red(bot.red_set.begin(), bot.red_set.end());
  std::set<Vertex> green(bot.green_set.begin(), bot.green_set.end());
  if (red.count(b) || green.count(b)) return "bottleneck inside a colored set";
  for (Vertex v : red)
    if (green.count(v)) return "red and green sets overlap";
  if (r != b && !red.count(r)) return "red root missing from red set";
  if (g != b && !green.count(g)) return "green root missing from green set";
  std::set<Vertex> colored = red;
  colored.insert(green.begin(), green.end());
  std::set<Vertex> expected = a.support;
  expected.erase(b);
  if (colored != expected) return "colored set differs from support minus bottleneck";

  // Every tree link must be an edge between same-colored vertices (or into
  // b), and following links from any vertex must reach the tree's root.
  auto check_tree = [&](const std::vector<DdfsTreeEntry>& entries, const std::set<Vertex>& own,
                        Vertex root) -> std::string {
    std::map<Vertex, DdfsLink> parent;
    for (const auto& e : entries) {
      if (!own.count(e.vertex) && e.vertex != b) return "tree entry outside its color";
      if (!own.count(e.link.parent)) return "tree parent outside its color";
      if (!edge_ok(e.link.parent, e.link.edge_index, e.vertex)) return "tree link is not an edge";
      parent[e.vertex] = e.link;
    }
    std::vector<Vertex> targets(own.begin(), own.end());
    targets.push_back(b);
    for (Vertex v : targets) {
      Vertex x = v;
      int guard = 0;
      while (x != root) {
        auto it = parent.find(x);
        if (it == parent.end()) return "vertex " + std::to_string(v) + " has no tree path to root";
        x = it->second.parent;
        if (++guard > 64) return "tree links cycle";
      }
    }
    return "";
  };
  std::set<Vertex> red_own = red, green_own = green;
  if (r == b) red_own.insert(b);
  if (g == b) green_own.insert(b);
  if (auto s = check_tree(bot.red_tree, red_own, r); !s.empty()) return "red tree: " + s;
  if (auto s = check_tree(bot.green_tree, green_own, g); !s.empty()) return "green tree: " + s;
  return "";
}

}  // namespace mvmatch::testing
