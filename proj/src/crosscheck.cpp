#include "mvmatch/crosscheck.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "mvmatch/phase.hpp"

namespace mvmatch {

namespace {

std::string show(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

std::string show_level(int x) { return x == kInfinity ? std::string("inf") : std::to_string(x); }

std::string edge_name(const Graph& g, EdgeId e) {
  return std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
}

std::vector<std::string> diff_maps(const BlossomMap& engine, const BlossomMap& oracle, int t, const char* what) {
  std::vector<std::string> out;
  std::set<Vertex> bases;
  for (const auto& [key, members] : engine)
    if (key.second == t) bases.insert(key.first);
  for (const auto& [key, members] : oracle)
    if (key.second == t) bases.insert(key.first);
  for (Vertex b : bases) {
    auto e = engine.find({b, t});
    auto o = oracle.find({b, t});
    const std::vector<Vertex> ev = e == engine.end() ? std::vector<Vertex>{} : e->second;
    const std::vector<Vertex> ov = o == oracle.end() ? std::vector<Vertex>{} : o->second;
    if (ev != ov) {
      out.push_back(std::string(what) + " base " + std::to_string(b) + " tenacity " + std::to_string(t) +
                    ": engine " + show(ev) + ", oracle " + show(ov));
    }
  }
  return out;
}

class Recorder : public PhaseObserver {
 public:
  Recorder(const Graph& g, const Matching& m, const OracleProfile& pr, const OracleOptions& opts,
           CrossCheckReport& report)
      : g_(g), m_(m), pr_(pr), opts_(opts), report_(report), classes_(brute_base_classes(pr)) {
    blossoms_ = brute_blossoms(g, m, pr, opts).recursive;
  }

  void on_bridge_processed(const PhaseState& s, EdgeId e) override {
    settle(s);
    const int t = s.edge_tenacity(e);
    if (t != 2 * s.current_level() + 1) {
      report_.synchronization.push_back("bridge " + edge_name(g_, e) + " of tenacity " + show_level(t) +
                                        " processed at search level " + std::to_string(s.current_level()));
    }
    pending_ = e;
  }

  void on_petal(const PhaseState& s, const Petal& p) override {
    std::vector<Vertex> members = p.members;
    std::sort(members.begin(), members.end());
    compare_support(p.bridge, p.tenacity, members);
    for (Vertex v : members) petaled_[p.tenacity].insert(v);
    pending_.reset();
    (void)s;
  }

  void on_path(const PhaseState&, const AlternatingPath&) override { pending_.reset(); }

  void on_level_end(const PhaseState& s, int level) override {
    settle(s);
    const int t = 2 * level + 1;
    if (t >= pr_.l_m || t < pr_.t_m) return;
    BlossomMap classes, unions;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      const int tv = s.tenacity(v);
      if (tv > t) continue;
      const Vertex b = s.bud_star_peek(v);
      unions[{b, t}].push_back(v);
      if (tv == t) classes[{b, t}].push_back(v);
    }
    for (auto& line : diff_maps(classes, classes_, t, "bud* class")) report_.petals.push_back(std::move(line));
    for (auto& line : diff_maps(unions, blossoms_, t, "petal union")) report_.petals.push_back(std::move(line));
  }

 private:
  // A processed bridge that produced neither a petal nor a path had empty support.
  void settle(const PhaseState& s) {
    if (!pending_) return;
    const EdgeId e = *pending_;
    pending_.reset();
    compare_support(e, s.edge_tenacity(e), {});
  }

  void compare_support(EdgeId e, int t, const std::vector<Vertex>& members) {
    if (t >= pr_.l_m) return;
    std::vector<Vertex> expected;
    for (Vertex v : brute_support(g_, m_, pr_, e, opts_)) {
      if (!petaled_[t].count(v)) expected.push_back(v);
    }
    if (expected != members) {
      report_.supports.push_back("bridge " + edge_name(g_, e) + " of tenacity " + std::to_string(t) +
                                 ": petal " + show(members) + ", oracle support minus earlier petals " +
                                 show(expected));
    }
  }

  const Graph& g_;
  const Matching& m_;
  const OracleProfile& pr_;
  const OracleOptions& opts_;
  CrossCheckReport& report_;
  BlossomMap classes_;
  BlossomMap blossoms_;
  std::map<int, std::set<Vertex>> petaled_;
  std::optional<EdgeId> pending_;
};

}  // namespace

std::vector<std::string> CrossCheckReport::findings() const {
  std::vector<std::string> out;
  auto add = [&](const char* tag, const std::vector<std::string>& lines) {
    for (const auto& l : lines) out.push_back(std::string(tag) + ": " + l);
  };
  if (engine_l_m != oracle_l_m) {
    out.push_back("l_m: engine " + show_level(engine_l_m) + ", oracle " + show_level(oracle_l_m));
  }
  add("levels", levels);
  add("bridges", bridges);
  add("synchronization", synchronization);
  add("support", supports);
  add("petals", petals);
  add("paths", paths);
  add("error", errors);
  for (const auto& v : structural.violations) out.push_back("theorem " + v.check + ": " + v.witness);
  if (!blossom_definitions_agree) out.push_back("blossoms: the two definitions disagree");
  return out;
}

CrossCheckReport cross_check_phase(const Graph& g, const Matching& m, const CrossCheckOptions& options) {
  CrossCheckReport report;
  const OracleProfile pr = build_profile(g, m, options.oracle);
  report.oracle_l_m = pr.l_m;
  report.structural = check_structural_theorems(g, m, pr, options.oracle);
  report.blossom_definitions_agree = brute_blossoms(g, m, pr, options.oracle).equal;

  PhaseState s(g);
  s.init(m);
#ifdef MVMATCH_FAULT_INJECTION
  s.inject_fault(options.inject_fault);
#endif
  Recorder rec(g, m, pr, options.oracle, report);
  s.set_observer(&rec);
  PhaseResult result;
  try {
    result = s.run();
  } catch (const std::exception& e) {
    report.errors.push_back(e.what());
    return report;
  }
  report.engine_l_m = result.l_m;
  report.engine_paths = static_cast<int>(result.paths.size());

  const int n = g.num_vertices();
  // MIN at the last search level j assigns every minlevel up to j + 1.
  const int settled_minlevel = result.levels;
  for (Vertex v = 0; v < n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (pr.tenacity[i] >= pr.l_m) {
      const int oracle_min = pr.minlevel(v);
      if (oracle_min <= settled_minlevel && s.minlevel(v) != oracle_min) {
        report.levels.push_back("vertex " + std::to_string(v) + ": engine minlevel " + show_level(s.minlevel(v)) +
                                ", oracle " + show_level(oracle_min));
      }
      continue;
    }
    if (s.evenlevel(v) != pr.even[i] || s.oddlevel(v) != pr.odd[i]) {
      report.levels.push_back("vertex " + std::to_string(v) + ": engine (" + show_level(s.evenlevel(v)) + ", " +
                              show_level(s.oddlevel(v)) + "), oracle (" + show_level(pr.even[i]) + ", " +
                              show_level(pr.odd[i]) + ")");
    }
  }

  const int top = std::min(pr.l_m, 2 * n + 1);
  for (int t = 1; t < top; t += 2) {
    std::vector<EdgeId> engine(s.bridges(t).begin(), s.bridges(t).end());
    std::vector<EdgeId> oracle;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (!pr.edge_is_prop[static_cast<std::size_t>(e)] && pr.edge_tenacity[static_cast<std::size_t>(e)] == t) {
        oracle.push_back(e);
      }
    }
    std::sort(engine.begin(), engine.end());
    if (engine != oracle) {
      auto names = [&](const std::vector<EdgeId>& es) {
        std::string s2 = "{";
        for (std::size_t k = 0; k < es.size(); ++k) s2 += (k ? "," : "") + edge_name(g, es[k]);
        return s2 + "}";
      };
      report.bridges.push_back("tenacity " + std::to_string(t) + ": engine " + names(engine) + ", oracle " +
                               names(oracle));
    }
  }

  std::vector<std::uint8_t> used(static_cast<std::size_t>(n), 0);
  for (const AlternatingPath& p : result.paths) {
    if (auto err = augmenting_path_error(g, m, p)) report.paths.push_back("invalid path: " + *err);
    if (p.length() != pr.l_m) {
      report.paths.push_back("path of length " + std::to_string(p.length()) + ", oracle l_m " +
                             show_level(pr.l_m));
    }
    for (Vertex v : p.vertices) {
      if (v < 0 || v >= n) continue;
      if (used[static_cast<std::size_t>(v)]) report.paths.push_back("vertex " + std::to_string(v) + " shared by two paths");
      used[static_cast<std::size_t>(v)] = 1;
    }
  }
  if (pr.l_m != kInfinity) {
    if (auto extra = brute_find_augmenting_path(g, m, pr.l_m, used, options.oracle)) {
      std::string w;
      for (Vertex v : extra->vertices) w += (w.empty() ? "" : "-") + std::to_string(v);
      report.paths.push_back("not maximal: disjoint augmenting path " + w + " remains");
    }
  }
  return report;
}

std::vector<Matching> sample_matchings(const Graph& g, int samples, std::mt19937_64& rng) {
  std::vector<Matching> out;
  Matching m(g.num_vertices());
  for (;;) {
    out.push_back(m);
    const PhaseResult phase = run_phase(g, m);
    if (phase.paths.empty()) break;
    for (const AlternatingPath& p : phase.paths) augment_in_place(m, p);
  }
  const Matching maximum = m;
  std::vector<EdgeId> order(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) order[static_cast<std::size_t>(e)] = e;
  for (int j = 0; j < samples; ++j) {
    Matching s(g.num_vertices());
    if (j % 3 == 1) {
      s = maximum;
      const std::vector<Edge> pairs = s.pairs();
      if (!pairs.empty()) s.unmatch(pairs[rng() % pairs.size()].u);
    } else {
      std::shuffle(order.begin(), order.end(), rng);
      for (EdgeId e : order) {
        const Edge& ed = g.edge(e);
        if (!s.is_matched(ed.u) && !s.is_matched(ed.v) && (j % 3 == 0 || rng() % 2 == 0)) s.match(ed.u, ed.v);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace mvmatch
