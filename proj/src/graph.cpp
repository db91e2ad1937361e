#include "mvmatch/graph.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace mvmatch {
namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

// Uniform draw in [0, bound) by rejection, so results depend only on the
// engine's raw output and not on a standard library's distribution code.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace

Graph::Graph(int num_vertices, std::span<const Edge> edges) : n_(num_vertices) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!contains(e.u) || !contains(e.v)) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has an endpoint outside [0, " + std::to_string(n_) + ")");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (seen.insert(pair_key(e.u, e.v)).second) edges_.push_back(e);
  }

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[static_cast<std::size_t>(e.u) + 1];
    ++offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];

  adjacency_.resize(edges_.size() * 2);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[static_cast<std::size_t>(id)];
    adjacency_[fill[static_cast<std::size_t>(e.u)]++] = {e.v, id};
    adjacency_[fill[static_cast<std::size_t>(e.v)]++] = {e.u, id};
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  for (const Incidence& inc : neighbors(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

Matching Matching::from_partners(std::vector<Vertex> partners) {
  Matching m;
  m.mate_ = std::move(partners);
  return m;
}

int Matching::size() const noexcept {
  int count = 0;
  const int n = num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    Vertex w = mate(v);
    if (w > v && w < n && mate(w) == v) ++count;
  }
  return count;
}

void Matching::match(Vertex u, Vertex v) {
  unmatch(u);
  unmatch(v);
  mate_[static_cast<std::size_t>(u)] = v;
  mate_[static_cast<std::size_t>(v)] = u;
}

void Matching::unmatch(Vertex v) {
  Vertex w = mate(v);
  if (w == kNoVertex) return;
  if (w >= 0 && w < num_vertices() && mate(w) == v) mate_[static_cast<std::size_t>(w)] = kNoVertex;
  mate_[static_cast<std::size_t>(v)] = kNoVertex;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  const int n = num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    Vertex w = mate(v);
    if (w > v && w < n && mate(w) == v) out.push_back({v, w});
  }
  return out;
}

ValidationReport validate_matching(const Graph& g, const Matching& m) {
  ValidationReport report;
  if (m.num_vertices() != g.num_vertices()) {
    report.violations.push_back(
        {ViolationKind::kOutOfRange, kNoVertex, kNoVertex,
         "matching has " + std::to_string(m.num_vertices()) + " entries but graph has " +
             std::to_string(g.num_vertices()) + " vertices"});
  }
  const int n = std::min(m.num_vertices(), g.num_vertices());
  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = m.mate(v);
    if (w == kNoVertex) continue;
    const std::string pair = "(" + std::to_string(v) + ", " + std::to_string(w) + ")";
    if (w < 0 || w >= n) {
      report.violations.push_back(
          {ViolationKind::kOutOfRange, v, w, "partner of " + std::to_string(v) + " out of range"});
      continue;
    }
    if (w == v) {
      report.violations.push_back(
          {ViolationKind::kSelfPartner, v, w, "vertex " + std::to_string(v) + " is its own partner"});
      continue;
    }
    if (m.mate(w) != v) {
      const Vertex back = m.mate(w);
      report.violations.push_back(
          {ViolationKind::kAsymmetric, v, w,
           "partner(" + std::to_string(v) + ") = " + std::to_string(w) + " but partner(" +
               std::to_string(w) + ") = " + (back == kNoVertex ? "none" : std::to_string(back))});
    }
    if (v < w || m.mate(w) != v) {
      if (!g.find_edge(v, w)) {
        report.violations.push_back(
            {ViolationKind::kNotAnEdge, v, w, "matched pair " + pair + " is not an edge"});
      }
    }
  }
  return report;
}

std::optional<std::string> augmenting_path_error(const Graph& g, const Matching& m,
                                                 const AlternatingPath& path) {
  const auto& p = path.vertices;
  if (p.size() < 2) return "path has fewer than two vertices";
  for (Vertex v : p) {
    if (!g.contains(v) || v >= m.num_vertices()) {
      return "vertex " + std::to_string(v) + " out of range";
    }
  }
  std::vector<Vertex> sorted(p);
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    return "path is not simple: vertex " + std::to_string(*it) + " repeats";
  }
  if (m.is_matched(p.front())) return "endpoint " + std::to_string(p.front()) + " is matched";
  if (m.is_matched(p.back())) return "endpoint " + std::to_string(p.back()) + " is matched";
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.find_edge(p[i], p[i + 1])) {
      return "(" + std::to_string(p[i]) + ", " + std::to_string(p[i + 1]) + ") is not an edge";
    }
    const bool matched = m.mate(p[i]) == p[i + 1];
    if (matched != (i % 2 == 1)) {
      return "path does not alternate at edge (" + std::to_string(p[i]) + ", " +
             std::to_string(p[i + 1]) + ")";
    }
  }
  return std::nullopt;
}

Matching augment(const Graph& g, const Matching& m, const AlternatingPath& path) {
  if (auto err = augmenting_path_error(g, m, path)) throw InputError(*err);
  Matching out = m;
  augment_in_place(out, path);
  return out;
}

void augment_in_place(Matching& m, const AlternatingPath& path) {
  const auto& p = path.vertices;
  for (std::size_t i = 0; i + 1 < p.size(); i += 2) m.match(p[i], p[i + 1]);
}

Graph generate_random_graph(int n, std::int64_t m, std::uint64_t seed) {
  if (n < 0) throw InputError("negative vertex count");
  if (m < 0) throw InputError("negative edge count");
  const std::int64_t capacity = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m > capacity) {
    throw InputError("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) +
                     " vertices (at most " + std::to_string(capacity) + ")");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));

  auto draw_pair = [&]() {
    for (;;) {
      auto u = static_cast<Vertex>(bounded(rng, static_cast<std::uint64_t>(n)));
      auto v = static_cast<Vertex>(bounded(rng, static_cast<std::uint64_t>(n)));
      if (u != v) return Edge{std::min(u, v), std::max(u, v)};
    }
  };

  if (m <= capacity / 2) {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    while (static_cast<std::int64_t>(edges.size()) < m) {
      Edge e = draw_pair();
      if (chosen.insert(pair_key(e.u, e.v)).second) edges.push_back(e);
    }
  } else {
    std::unordered_set<std::uint64_t> excluded;
    const std::int64_t skip = capacity - m;
    excluded.reserve(static_cast<std::size_t>(skip) * 2);
    while (static_cast<std::int64_t>(excluded.size()) < skip) {
      Edge e = draw_pair();
      excluded.insert(pair_key(e.u, e.v));
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!excluded.count(pair_key(u, v))) edges.push_back({u, v});
      }
    }
    for (std::size_t i = edges.size(); i > 1; --i) {
      std::swap(edges[i - 1], edges[bounded(rng, i)]);
    }
  }
  return Graph(n, edges);
}

}  // namespace mvmatch
