#pragma once

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "mvmatch/types.hpp"

namespace mvmatch {

/// Directed layered graph consumed by DDFS. Every out-edge must go to a
/// strictly lower layer, and every vertex above layer 0 must have a path to
/// layer 0.
///
/// Out-edges are addressed by (vertex, index). target() may return
/// kNoVertex for an edge that is currently masked out; DDFS skips those.
/// Accessors are non-const so adapters can memoize (e.g. compress paths)
/// while answering.
class LayeredView {
 public:
  virtual ~LayeredView() = default;
  virtual int num_vertices() = 0;
  virtual int layer(Vertex v) = 0;
  virtual int out_degree(Vertex v) = 0;
  virtual Vertex target(Vertex v, int index) = 0;
};

/// Raised when a view breaks layer monotonicity or has a dead end above
/// layer 0.
class LayeredViewError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class DdfsTree : std::uint8_t { kRed, kGreen };
enum class DdfsColor : std::uint8_t { kUnvisited, kRed, kGreen };

/// Link from a vertex to its parent in one tree, with the index of the
/// parent's out-edge that reached it.
struct DdfsLink {
  Vertex parent = kNoVertex;
  int edge_index = -1;
  bool valid() const noexcept { return parent != kNoVertex; }
};

struct DdfsTreeEntry {
  Vertex vertex = kNoVertex;
  DdfsLink link;
};

struct DdfsBottleneck {
  Vertex bottleneck = kNoVertex;
  std::vector<Vertex> red_set;
  std::vector<Vertex> green_set;
  /// Parent links for every red vertex except the red root, plus the
  /// bottleneck when the red tree reaches it through an edge.
  std::vector<DdfsTreeEntry> red_tree;
  std::vector<DdfsTreeEntry> green_tree;
};

struct DdfsTwoPaths {
  /// Root-to-layer-0 vertex sequences.
  std::vector<Vertex> red_path;
  std::vector<Vertex> green_path;
  /// red_edges[i] is the out-edge index taken from red_path[i].
  std::vector<int> red_edges;
  std::vector<int> green_edges;
};

struct DdfsEmptySupport {};

using DdfsOutcome = std::variant<DdfsBottleneck, DdfsTwoPaths, DdfsEmptySupport>;

enum class DdfsAction : std::uint8_t { kAdvance, kBacktrack, kMeet, kReassign, kTerminate };

struct DdfsEvent {
  DdfsAction action;
  DdfsTree tree;
  Vertex vertex;
  int layer;
};

class DdfsObserver {
 public:
  virtual ~DdfsObserver() = default;
  virtual void on_ddfs_event(const DdfsEvent& event) = 0;
};

struct DdfsStats {
  std::int64_t edges_explored = 0;
  std::int64_t red_backtracks = 0;
  std::int64_t green_backtracks = 0;
};

const char* to_string(DdfsAction action) noexcept;
const char* to_string(DdfsTree tree) noexcept;

/// Reusable DDFS workspace. Per-vertex arrays are sized once and reset
/// through a touched list, so each run costs time proportional to the part
/// of the view it explores.
class Ddfs {
 public:
  Ddfs() = default;
  explicit Ddfs(int num_vertices) { reserve(num_vertices); }

  void reserve(int num_vertices);

  DdfsOutcome run(LayeredView& view, Vertex r, Vertex g, DdfsObserver* observer = nullptr);

  /// State of the most recent run; valid until the next call to run().
  DdfsColor color(Vertex v) const { return color_[static_cast<std::size_t>(v)]; }
  DdfsLink red_link(Vertex v) const { return red_link_[static_cast<std::size_t>(v)]; }
  DdfsLink green_link(Vertex v) const { return green_link_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& visited() const noexcept { return touched_; }
  const DdfsStats& stats() const noexcept { return stats_; }

 private:
  enum class StepResult { kContinue, kBottleneck };

  void reset();
  void visit(LayeredView& view, Vertex v, DdfsColor c);
  void emit(DdfsAction action, DdfsTree tree, Vertex v);
  StepResult red_step(LayeredView& view);
  StepResult green_step(LayeredView& view);
  Vertex checked_target(LayeredView& view, Vertex from, int index);

  DdfsBottleneck make_bottleneck(Vertex b) const;
  DdfsTwoPaths make_two_paths() const;

  std::vector<DdfsColor> color_;
  std::vector<int> cursor_;
  std::vector<DdfsLink> red_link_;
  std::vector<DdfsLink> green_link_;
  std::vector<Vertex> touched_;
  std::vector<std::uint8_t> is_touched_;

  LayeredView* view_ = nullptr;
  DdfsObserver* observer_ = nullptr;
  DdfsStats stats_;
  Vertex red_root_ = kNoVertex;
  Vertex green_root_ = kNoVertex;
  Vertex center_red_ = kNoVertex;
  Vertex center_green_ = kNoVertex;
  Vertex barrier_ = kNoVertex;
  Vertex bottleneck_ = kNoVertex;
};

/// One-shot convenience wrapper around Ddfs.
DdfsOutcome run_ddfs(LayeredView& view, Vertex r, Vertex g, DdfsObserver* observer = nullptr);

}  // namespace mvmatch
