#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvmatch/types.hpp"

namespace mvmatch {

struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor = kNoVertex;
  EdgeId edge = kNoEdge;
};

/// Static undirected simple graph over vertices 0..n-1.
///
/// Edges are identified by their index in edges(); adjacency is stored in
/// compressed form so that per-vertex scratch arrays can reuse the same
/// offsets (see incidence_offset()).
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Parallel edges are merged (the first
  /// occurrence keeps its position), self-loops and out-of-range endpoints
  /// throw InputError.
  Graph(int num_vertices, std::span<const Edge> edges);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const Incidence> neighbors(Vertex v) const noexcept {
    auto begin = offsets_[static_cast<std::size_t>(v)];
    auto end = offsets_[static_cast<std::size_t>(v) + 1];
    return {adjacency_.data() + begin, end - begin};
  }

  int degree(Vertex v) const noexcept { return static_cast<int>(neighbors(v).size()); }

  /// Position of v's first incidence in the flat adjacency array. Slices
  /// [incidence_offset(v), incidence_offset(v) + degree(v)) partition
  /// [0, 2m).
  std::size_t incidence_offset(Vertex v) const noexcept {
    return offsets_[static_cast<std::size_t>(v)];
  }

  /// Edge id joining u and v, if any. O(min degree).
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

/// Partner per vertex. Symmetry is maintained by the mutators; a raw partner
/// vector (possibly inconsistent) can be wrapped with from_partners() for
/// validation.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int num_vertices)
      : mate_(static_cast<std::size_t>(num_vertices), kNoVertex) {}

  static Matching from_partners(std::vector<Vertex> partners);

  int num_vertices() const noexcept { return static_cast<int>(mate_.size()); }
  Vertex mate(Vertex v) const noexcept { return mate_[static_cast<std::size_t>(v)]; }
  std::optional<Vertex> partner(Vertex v) const noexcept {
    Vertex w = mate(v);
    if (w == kNoVertex) return std::nullopt;
    return w;
  }
  bool is_matched(Vertex v) const noexcept { return mate(v) != kNoVertex; }

  /// Number of matched pairs, counting each symmetric pair once.
  int size() const noexcept;

  void match(Vertex u, Vertex v);
  void unmatch(Vertex v);

  const std::vector<Vertex>& partners() const noexcept { return mate_; }

  /// Matched pairs (u < v), ascending.
  std::vector<Edge> pairs() const;

  bool is_matched_edge(const Edge& e) const noexcept {
    return e.u >= 0 && mate(e.u) == e.v && e.v != kNoVertex;
  }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> mate_;
};

struct AlternatingPath {
  std::vector<Vertex> vertices;

  int length() const noexcept {
    return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1;
  }
  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

enum class ViolationKind { kOutOfRange, kAsymmetric, kNotAnEdge, kSelfPartner };

struct MatchingViolation {
  ViolationKind kind;
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  std::string message;
};

struct ValidationReport {
  std::vector<MatchingViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

ValidationReport validate_matching(const Graph& g, const Matching& m);

/// Returns a description of why `path` is not an augmenting path with respect
/// to `m`, or nullopt when it is one.
std::optional<std::string> augmenting_path_error(const Graph& g, const Matching& m,
                                                 const AlternatingPath& path);

/// Flips the edges of an augmenting path. Throws InputError if `path` is not
/// simple, not alternating, does not follow graph edges, or has a matched
/// endpoint.
Matching augment(const Graph& g, const Matching& m, const AlternatingPath& path);

/// In-place variant used by the solver once paths are known to be valid.
void augment_in_place(Matching& m, const AlternatingPath& path);

/// Uniformly random simple graph with exactly m edges. Deterministic for a
/// fixed (n, m, seed) on every platform.
Graph generate_random_graph(int n, std::int64_t m, std::uint64_t seed);

}  // namespace mvmatch
