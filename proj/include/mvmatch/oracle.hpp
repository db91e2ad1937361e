#pragma once

// Brute-force reference computations by exhaustive enumeration of simple
// alternating paths. Exponential time; guarded to small graphs.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mvmatch/graph.hpp"

namespace mvmatch {

inline constexpr int kOracleMaxVertices = 14;
inline constexpr int kOracleMaxMatchingVertices = 20;
inline constexpr int kOracleMaxMatchingEdges = 24;

struct OracleOptions {
  /// Skip the size guards.
  bool guard_override = false;
};

/// Calls `visit` with every simple alternating path that starts at an
/// unmatched vertex with an unmatched edge, including the length-0 path of
/// each unmatched vertex. Throws GuardExceeded above kOracleMaxVertices.
void for_each_alternating_path(const Graph& g, const Matching& m,
                               const std::function<void(std::span<const Vertex>)>& visit,
                               const OracleOptions& options = {});

struct OracleLevels {
  std::vector<int> even;
  std::vector<int> odd;
};

OracleLevels brute_levels(const Graph& g, const Matching& m, const OracleOptions& options = {});

struct OracleProfile {
  std::vector<int> even;
  std::vector<int> odd;
  std::vector<int> tenacity;
  /// Per edge: tenacity (kInfinity when a needed level is infinite) and
  /// whether it ends some minlevel path of one of its endpoints.
  std::vector<int> edge_tenacity;
  std::vector<std::uint8_t> edge_is_prop;
  int t_m = kInfinity;
  int l_m = kInfinity;
  /// B(v) for vertices of eligible tenacity, sorted; empty otherwise.
  std::vector<std::vector<Vertex>> base_set;

  int num_vertices() const noexcept { return static_cast<int>(even.size()); }
  int minlevel(Vertex v) const;
  int maxlevel(Vertex v) const;
  bool is_outer(Vertex v) const;
  bool eligible(Vertex v) const;
  std::optional<Vertex> base(Vertex v) const;
};

OracleProfile build_profile(const Graph& g, const Matching& m, const OracleOptions& options = {});

enum class BaseKind : std::uint8_t { kSingleton, kNoBase, kNotEligible };

struct BaseResult {
  BaseKind kind = BaseKind::kNotEligible;
  /// Valid for kSingleton.
  Vertex vertex = kNoVertex;
  /// Every F(p, v) seen.
  std::vector<Vertex> candidates;
};

/// Base of v by enumerating its evenlevel and oddlevel paths under the
/// levels recorded in `profile`.
BaseResult brute_base(const Graph& g, const Matching& m, const OracleProfile& profile, Vertex v,
                      const OracleOptions& options = {});

/// (base, tenacity) -> sorted member list; empty blossoms are omitted.
using BlossomMap = std::map<std::pair<Vertex, int>, std::vector<Vertex>>;

struct BlossomResult {
  BlossomMap recursive;
  BlossomMap by_base;
  bool equal = false;
};

BlossomResult brute_blossoms(const Graph& g, const Matching& m, const OracleProfile& profile,
                             const OracleOptions& options = {});

/// S_{b,t}: vertices of tenacity t whose base is b, for eligible t.
BlossomMap brute_base_classes(const OracleProfile& profile);

/// Support of bridge e: tenacity-t(e) vertices with a maxlevel path through e.
std::vector<Vertex> brute_support(const Graph& g, const Matching& m, const OracleProfile& profile, EdgeId e,
                                  const OracleOptions& options = {});

struct MaxMatchingResult {
  int size = 0;
  Matching witness{0};
};

MaxMatchingResult brute_max_matching(const Graph& g, const OracleOptions& options = {});

/// Augmenting paths of exactly `length` avoiding `blocked` vertices.
std::optional<AlternatingPath> brute_find_augmenting_path(const Graph& g, const Matching& m, int length,
                                                          const std::vector<std::uint8_t>& blocked,
                                                          const OracleOptions& options = {});

struct Violation {
  /// Short check id: honesty, matched-tenacity, base, unique-bridge,
  /// laminar, free, uses.
  std::string check;
  std::string witness;
};

struct StructuralReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

StructuralReport check_structural_theorems(const Graph& g, const Matching& m, const OracleProfile& profile,
                                           const OracleOptions& options = {});

/// Text form: `tm`, `lm` lines, then `v <id> even <e> odd <o>` per vertex
/// and `edge <u> <v> <prop|bridge> tenacity <t|?>` per edge, 1-based ids,
/// infinite levels written as `inf`.
std::string serialize_profile(const Graph& g, const OracleProfile& profile);

}  // namespace mvmatch
