#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "mvmatch/ddfs.hpp"
#include "mvmatch/graph.hpp"

namespace mvmatch {

enum class Parity : std::uint8_t { kEven, kOdd };

inline Parity parity_of(int level) noexcept { return level % 2 == 0 ? Parity::kEven : Parity::kOdd; }

enum class EdgeClass : std::uint8_t { kUnscanned, kProp, kBridge };

/// One petal: the vertices a bottleneck DDFS colored, with enough of the
/// search record to walk alternating paths through them later.
struct Petal {
  int id = -1;
  EdgeId bridge = kNoEdge;
  /// Bridge endpoint on the red side and on the green side.
  Vertex red_end = kNoVertex;
  Vertex green_end = kNoVertex;
  Vertex red_root = kNoVertex;
  Vertex green_root = kNoVertex;
  Vertex bud = kNoVertex;
  int tenacity = 0;
  std::vector<Vertex> members;
  /// How each tree reached the bud (invalid when the bud is that tree's root).
  DdfsLink bud_red_link;
  DdfsLink bud_green_link;
};

struct PhaseResult {
  std::vector<AlternatingPath> paths;
  /// Minimum augmenting path length, or kInfinity when none exists.
  int l_m = kInfinity;
  /// Number of search levels executed.
  int levels = 0;
};

class PhaseState;

/// Hooks called while a phase runs. All default to no-ops.
class PhaseObserver {
 public:
  virtual ~PhaseObserver() = default;
  virtual void on_level_begin(const PhaseState&, int /*level*/) {}
  virtual void on_level_set(const PhaseState&, Vertex /*v*/, int /*level*/) {}
  virtual void on_bridge_filed(const PhaseState&, EdgeId /*e*/, int /*tenacity*/) {}
  virtual void on_bridge_processed(const PhaseState&, EdgeId /*e*/) {}
  virtual void on_petal(const PhaseState&, const Petal&) {}
  virtual void on_path(const PhaseState&, const AlternatingPath&) {}
  virtual void on_level_end(const PhaseState&, int /*level*/) {}
  virtual DdfsObserver* ddfs_observer() { return nullptr; }
};

/// Request for an alternating path from `high` down to `low`, where `low`
/// is `high` itself or one of its iterated buds, and `high` is reached at
/// its evenlevel (kEven) or oddlevel (kOdd).
struct PathRequest {
  Vertex high = kNoVertex;
  Vertex low = kNoVertex;
  Parity parity = Parity::kEven;
};

/// All per-phase search state: levels, edge classes, predecessor lists,
/// bridge lists, petals, the bud forest and removal flags. Arrays are
/// allocated once per graph and reset by init(), so one PhaseState serves
/// every phase of a solve.
class PhaseState {
 public:
  explicit PhaseState(const Graph& g);

  /// Resets for a new phase with matching m. The graph and matching must
  /// outlive the phase.
  void init(const Matching& m);

  void min_step(int i);
  void max_step(int i);

  /// Runs search levels until augmenting paths are found or no work remains.
  PhaseResult run();

  void set_observer(PhaseObserver* observer) noexcept { observer_ = observer; }

  const Graph& graph() const noexcept { return *g_; }
  const Matching& matching() const noexcept { return m_; }
  int current_level() const noexcept { return level_; }

  int evenlevel(Vertex v) const { return even_[idx(v)]; }
  int oddlevel(Vertex v) const { return odd_[idx(v)]; }
  int minlevel(Vertex v) const { return std::min(even_[idx(v)], odd_[idx(v)]); }
  int maxlevel(Vertex v) const { return std::max(even_[idx(v)], odd_[idx(v)]); }
  int level(Vertex v, Parity p) const { return p == Parity::kEven ? evenlevel(v) : oddlevel(v); }
  int tenacity(Vertex v) const { return level_add(even_[idx(v)], odd_[idx(v)]); }
  bool is_outer(Vertex v) const { return evenlevel(v) < oddlevel(v); }

  EdgeClass edge_class(EdgeId e) const { return class_[static_cast<std::size_t>(e)]; }
  /// Known tenacity of a classified bridge, else kInfinity.
  int edge_tenacity(EdgeId e) const { return edge_ten_[static_cast<std::size_t>(e)]; }
  /// Endpoint the bridge was scanned from; DDFS roots its red tree there.
  Vertex bridge_source(EdgeId e) const { return bridge_src_[static_cast<std::size_t>(e)]; }

  std::span<const Vertex> predecessors(Vertex v) const {
    return {preds_.data() + g_->incidence_offset(v), static_cast<std::size_t>(pred_count_[idx(v)])};
  }
  std::span<const Vertex> successors(Vertex v) const {
    return {succs_.data() + g_->incidence_offset(v), static_cast<std::size_t>(succ_count_[idx(v)])};
  }

  /// Br(t) for odd t, in filing order.
  const std::vector<EdgeId>& bridges(int tenacity) const;

  /// Root of v's bud chain; compresses the chain.
  Vertex bud_star(Vertex v);
  /// Same root without compressing.
  Vertex bud_star_peek(Vertex v) const;
  Vertex bud(Vertex v) const { return bud_[idx(v)]; }

  int petal_of(Vertex v) const { return petal_of_[idx(v)]; }
  const Petal& petal(int id) const { return petals_[static_cast<std::size_t>(id)]; }
  int num_petals() const noexcept { return static_cast<int>(petals_.size()); }
  DdfsColor petal_color(Vertex v) const { return pet_color_[idx(v)]; }
  DdfsLink petal_link(Vertex v) const { return pet_link_[idx(v)]; }

  bool removed(Vertex v) const { return removed_[idx(v)] != 0; }
  int alive_predecessors(Vertex v) const { return alive_preds_[idx(v)]; }

  const std::vector<AlternatingPath>& paths() const noexcept { return paths_; }

  /// The layered view DDFS sees: layer = minlevel, out-edges are
  /// predecessors mapped through bud*, removed vertices masked.
  class View : public LayeredView {
   public:
    explicit View(PhaseState& s) : s_(&s) {}
    int num_vertices() override { return s_->g_->num_vertices(); }
    int layer(Vertex v) override { return s_->minlevel(v); }
    int out_degree(Vertex v) override { return s_->pred_count_[idx(v)]; }
    Vertex target(Vertex v, int k) override;

   private:
    PhaseState* s_;
  };

  View layered_view() noexcept { return View(*this); }

  // Path extraction and removal.
  AlternatingPath extract_path(const DdfsTwoPaths& outcome, EdgeId bridge);
  AlternatingPath open_petal(const PathRequest& request);
  void recursive_remove(std::span<const Vertex> seed);
  std::vector<AlternatingPath> collect_maximal();

#ifdef MVMATCH_FAULT_INJECTION
  /// Test-only: the first vertex to get a minlevel above 1 gets it two
  /// levels too high, and keeps it.
  void inject_fault(bool on) noexcept { fault_ = on; }
#endif

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  void scan_edge(Vertex u, Vertex v, EdgeId e, int i);
  void set_level(Vertex v, int level);
  void file_bridge(EdgeId e, Vertex from, int tenacity);
  void classify_bridge(EdgeId e, Vertex from);
  bool process_next_bridge();
  void form_petal(EdgeId e, Vertex r, Vertex g, const DdfsBottleneck& outcome);
  void push_bucket(Vertex v, int level);
  void remove_vertex(Vertex v, std::vector<Vertex>& queue);

  // Path assembly helpers; `out.back()` is `v` on entry.
  void extend(std::vector<Vertex>& out, Vertex v, Parity p, Vertex low);
  void extend_step(std::vector<Vertex>& out, Vertex from, int edge_index, Vertex to);
  void extend_tree_chain(std::vector<Vertex>& out, Vertex top, Vertex bottom, DdfsLink bottom_link);
  Vertex as_of_petal(int petal_id, Vertex y) const;
  std::vector<Vertex> petal_descent(const Petal& p, Vertex v);
  void validate_found_path(const AlternatingPath& path) const;

  const Graph* g_;
  Matching m_;
  bool initialized_ = false;
  PhaseObserver* observer_ = nullptr;
  Ddfs ddfs_;

  std::vector<int> even_, odd_;
  std::vector<std::vector<Vertex>> buckets_;
  int max_bucket_ = -1;

  std::vector<EdgeClass> class_;
  std::vector<int> edge_ten_;
  std::vector<Vertex> bridge_src_;
  std::vector<std::vector<EdgeId>> br_;
  int max_bridge_slot_ = -1;
  std::vector<std::vector<EdgeId>> deferred_;

  std::vector<Vertex> preds_, succs_;
  std::vector<int> pred_count_, succ_count_, alive_preds_, alive_degree_;

  std::vector<Petal> petals_;
  std::vector<int> petal_of_;
  std::vector<Vertex> bud_, star_;
  std::vector<DdfsColor> pet_color_;
  std::vector<DdfsLink> pet_link_;
  std::vector<std::vector<int>> petals_by_bud_;

  std::vector<std::uint8_t> removed_;
  std::vector<AlternatingPath> paths_;

  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;

  int level_ = 0;
  std::size_t br_cursor_ = 0;
#ifdef MVMATCH_FAULT_INJECTION
  bool fault_ = false;
  Vertex fault_vertex_ = kNoVertex;
#endif
};

/// Fresh state for one phase.
PhaseState init_phase(const Graph& g, const Matching& m);
void min_step(PhaseState& s, int i);
void max_step(PhaseState& s, int i);
Vertex bud_star(PhaseState& s, Vertex v);
PhaseState::View layered_adapter(PhaseState& s);
PhaseResult run_phase(const Graph& g, const Matching& m, PhaseObserver* observer = nullptr);

}  // namespace mvmatch
