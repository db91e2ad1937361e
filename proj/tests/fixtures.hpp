#pragma once

#include <utility>
#include <vector>

#include "mvmatch/graph.hpp"

namespace mvmatch::fixtures {

inline Graph make_graph(int n, std::vector<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Matching make_matching(int n, std::vector<std::pair<int, int>> pairs) {
  Matching m(n);
  for (auto [u, v] : pairs) m.match(u, v);
  return m;
}

/// 0-1-2-3.
inline Graph path4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

/// f = 0 joined to u = 1 and v = 2, with u-v matched.
inline Graph triangle() { return make_graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline Matching triangle_matching() { return make_matching(3, {{1, 2}}); }

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return make_graph(n, e);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return make_graph(n, e);
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return make_graph(10, e);
}

/// Free vertex 4 under matched pairs 2-1 and 3-0, with 0-1 and 1-3 across.
/// Unmatched edge 1-3 is scanned before evenlevel(3) is known, so its
/// tenacity (7) is settled only when the tenacity-5 petal assigns it; its
/// endpoints then share bud* 4, so its support is empty.
inline Graph deferred_bridge() { return make_graph(5, {{1, 2}, {0, 3}, {0, 1}, {1, 3}, {2, 4}, {3, 4}}); }
inline Matching deferred_bridge_matching() { return make_matching(5, {{0, 3}, {1, 2}}); }

/// One augmenting path at l_m = 5, reached only after a bridge of the same
/// tenacity has formed a petal.
inline Graph two_bridges() { return make_graph(6, {{0, 4}, {1, 5}, {1, 3}, {2, 3}, {0, 2}, {3, 5}}); }
inline Matching two_bridges_matching() { return make_matching(6, {{0, 2}, {1, 5}}); }

/// Odd cycle 0-1=2-3=4 ... 8=7-6=5-0 through free vertex 0 (tenacity 9), with
/// a triangle 2-9=10-2 hanging off vertex 2 (tenacity 7). The triangle's
/// petal has bud 2, which later joins the big petal with bud 0.
inline Graph nested_petals() {
  return make_graph(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}, {7, 8}, {4, 8}, {2, 9}, {2, 10}, {9, 10}});
}
inline Matching nested_petals_matching() { return make_matching(11, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}}); }

/// Free 0 and 5 joined by 0-1=2-3=4-5; matched pair 6=7 hangs off 2 alone.
inline Graph pendant_cascade() {
  return make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {6, 7}});
}
inline Matching pendant_cascade_matching() { return make_matching(8, {{1, 2}, {3, 4}, {6, 7}}); }

/// k disjoint copies of 0-1=2-3.
inline Graph disjoint_paths4(int k) {
  std::vector<std::pair<int, int>> e;
  for (int c = 0; c < k; ++c) {
    e.push_back({4 * c, 4 * c + 1});
    e.push_back({4 * c + 1, 4 * c + 2});
    e.push_back({4 * c + 2, 4 * c + 3});
  }
  return make_graph(4 * k, e);
}
inline Matching disjoint_paths4_matching(int k) {
  Matching m(4 * k);
  for (int c = 0; c < k; ++c) m.match(4 * c + 1, 4 * c + 2);
  return m;
}

}  // namespace mvmatch::fixtures
