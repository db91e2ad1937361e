#include "mvmatch/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mvmatch {

namespace {

void check_guard(const Graph& g, const OracleOptions& options) {
  if (!options.guard_override && g.num_vertices() > kOracleMaxVertices) {
    throw GuardExceeded("oracle path enumeration supports at most " + std::to_string(kOracleMaxVertices) +
                        " vertices, got " + std::to_string(g.num_vertices()));
  }
}

/// Depth-first enumeration of alternating paths. `visit` returns false to
/// stop the whole enumeration. Vertices flagged in `blocked` are never used.
class PathEnumerator {
 public:
  PathEnumerator(const Graph& g, const Matching& m, const std::vector<std::uint8_t>* blocked)
      : g_(g), m_(m), blocked_(blocked), on_path_(static_cast<std::size_t>(g.num_vertices()), 0) {}

  template <class Visit>
  void run(Visit&& visit) {
    for (Vertex f = 0; f < g_.num_vertices(); ++f) {
      if (m_.is_matched(f) || is_blocked(f)) continue;
      path_.assign(1, f);
      on_path_[static_cast<std::size_t>(f)] = 1;
      const bool go_on = extend(visit);
      on_path_[static_cast<std::size_t>(f)] = 0;
      if (!go_on) return;
    }
  }

 private:
  bool is_blocked(Vertex v) const { return blocked_ && (*blocked_)[static_cast<std::size_t>(v)]; }

  template <class Visit>
  bool step(Visit& visit, Vertex y) {
    if (on_path_[static_cast<std::size_t>(y)] || is_blocked(y)) return true;
    path_.push_back(y);
    on_path_[static_cast<std::size_t>(y)] = 1;
    const bool go_on = extend(visit);
    on_path_[static_cast<std::size_t>(y)] = 0;
    path_.pop_back();
    return go_on;
  }

  template <class Visit>
  bool extend(Visit& visit) {
    if (!visit(std::span<const Vertex>(path_))) return false;
    const Vertex x = path_.back();
    const Vertex mate = m_.mate(x);
    if ((path_.size() - 1) % 2 == 0) {
      for (const Incidence& inc : g_.neighbors(x)) {
        if (inc.neighbor == mate) continue;
        if (!step(visit, inc.neighbor)) return false;
      }
      return true;
    }
    if (mate == kNoVertex) return true;
    return step(visit, mate);
  }

  const Graph& g_;
  const Matching& m_;
  const std::vector<std::uint8_t>* blocked_;
  std::vector<std::uint8_t> on_path_;
  std::vector<Vertex> path_;
};

int path_length(std::span<const Vertex> p) { return static_cast<int>(p.size()) - 1; }

std::string show_path(std::span<const Vertex> p) {
  std::string s;
  for (Vertex v : p) {
    if (!s.empty()) s += '-';
    s += std::to_string(v);
  }
  return s;
}

std::string show_set(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

std::string show_level(int x) { return x == kInfinity ? std::string("inf") : std::to_string(x); }

/// Whether p has length exactly evenlevel(v) or oddlevel(v) for its last vertex v.
bool is_level_path(const OracleProfile& pr, std::span<const Vertex> p) {
  const auto v = static_cast<std::size_t>(p.back());
  const int len = path_length(p);
  return len % 2 == 0 ? len == pr.even[v] : len == pr.odd[v];
}

/// F(p, v): highest vertex on p with tenacity greater than t(v).
Vertex base_wrt(const OracleProfile& pr, std::span<const Vertex> p) {
  const int t = pr.tenacity[static_cast<std::size_t>(p.back())];
  for (std::size_t k = p.size(); k-- > 0;) {
    if (pr.tenacity[static_cast<std::size_t>(p[k])] > t) return p[k];
  }
  return kNoVertex;
}

}  // namespace

void for_each_alternating_path(const Graph& g, const Matching& m,
                               const std::function<void(std::span<const Vertex>)>& visit,
                               const OracleOptions& options) {
  check_guard(g, options);
  PathEnumerator(g, m, nullptr).run([&](std::span<const Vertex> p) {
    visit(p);
    return true;
  });
}

OracleLevels brute_levels(const Graph& g, const Matching& m, const OracleOptions& options) {
  check_guard(g, options);
  const auto n = static_cast<std::size_t>(g.num_vertices());
  OracleLevels lv{std::vector<int>(n, kInfinity), std::vector<int>(n, kInfinity)};
  PathEnumerator(g, m, nullptr).run([&](std::span<const Vertex> p) {
    const int len = path_length(p);
    int& slot = len % 2 == 0 ? lv.even[static_cast<std::size_t>(p.back())] : lv.odd[static_cast<std::size_t>(p.back())];
    slot = std::min(slot, len);
    return true;
  });
  return lv;
}

int OracleProfile::minlevel(Vertex v) const {
  return std::min(even[static_cast<std::size_t>(v)], odd[static_cast<std::size_t>(v)]);
}

int OracleProfile::maxlevel(Vertex v) const {
  return std::max(even[static_cast<std::size_t>(v)], odd[static_cast<std::size_t>(v)]);
}

bool OracleProfile::is_outer(Vertex v) const {
  return even[static_cast<std::size_t>(v)] < odd[static_cast<std::size_t>(v)];
}

bool OracleProfile::eligible(Vertex v) const {
  const int t = tenacity[static_cast<std::size_t>(v)];
  return t != kInfinity && t >= t_m && t < l_m;
}

std::optional<Vertex> OracleProfile::base(Vertex v) const {
  const auto& s = base_set[static_cast<std::size_t>(v)];
  if (s.size() != 1) return std::nullopt;
  return s.front();
}

OracleProfile build_profile(const Graph& g, const Matching& m, const OracleOptions& options) {
  OracleLevels lv = brute_levels(g, m, options);
  OracleProfile pr;
  const int n = g.num_vertices();
  pr.even = std::move(lv.even);
  pr.odd = std::move(lv.odd);
  pr.tenacity.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    pr.tenacity[i] = level_add(pr.even[i], pr.odd[i]);
    pr.t_m = std::min(pr.t_m, pr.tenacity[i]);
    if (!m.is_matched(v)) pr.l_m = std::min(pr.l_m, pr.odd[i]);
  }
  pr.edge_tenacity.resize(static_cast<std::size_t>(g.num_edges()));
  pr.edge_is_prop.assign(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const auto& lvl = m.mate(ed.u) == ed.v ? pr.odd : pr.even;
    pr.edge_tenacity[static_cast<std::size_t>(e)] =
        level_add(level_add(lvl[static_cast<std::size_t>(ed.u)], lvl[static_cast<std::size_t>(ed.v)]), 1);
  }
  pr.base_set.assign(static_cast<std::size_t>(n), {});
  std::vector<std::set<Vertex>> bases(static_cast<std::size_t>(n));
  PathEnumerator(g, m, nullptr).run([&](std::span<const Vertex> p) {
    const Vertex v = p.back();
    const int len = path_length(p);
    if (len > 0 && len == pr.minlevel(v)) {
      pr.edge_is_prop[static_cast<std::size_t>(*g.find_edge(p[p.size() - 2], v))] = 1;
    }
    if (pr.eligible(v) && is_level_path(pr, p)) bases[static_cast<std::size_t>(v)].insert(base_wrt(pr, p));
    return true;
  });
  for (Vertex v = 0; v < n; ++v) {
    const auto& s = bases[static_cast<std::size_t>(v)];
    pr.base_set[static_cast<std::size_t>(v)].assign(s.begin(), s.end());
  }
  return pr;
}

BaseResult brute_base(const Graph& g, const Matching& m, const OracleProfile& profile, Vertex v,
                      const OracleOptions& options) {
  check_guard(g, options);
  BaseResult r;
  if (!profile.eligible(v)) return r;
  std::set<Vertex> seen;
  PathEnumerator(g, m, nullptr).run([&](std::span<const Vertex> p) {
    if (p.back() == v && is_level_path(profile, p)) seen.insert(base_wrt(profile, p));
    return true;
  });
  r.candidates.assign(seen.begin(), seen.end());
  if (r.candidates.size() == 1 && r.candidates.front() != kNoVertex) {
    r.kind = BaseKind::kSingleton;
    r.vertex = r.candidates.front();
  } else {
    r.kind = BaseKind::kNoBase;
  }
  return r;
}

BlossomMap brute_base_classes(const OracleProfile& pr) {
  BlossomMap s;
  for (Vertex v = 0; v < pr.num_vertices(); ++v) {
    if (!pr.eligible(v)) continue;
    if (auto b = pr.base(v)) s[{*b, pr.tenacity[static_cast<std::size_t>(v)]}].push_back(v);
  }
  return s;
}

BlossomResult brute_blossoms(const Graph& g, const Matching& /*m*/, const OracleProfile& pr,
                             const OracleOptions& options) {
  check_guard(g, options);
  BlossomResult out;
  if (pr.t_m == kInfinity || pr.t_m >= pr.l_m) {
    out.equal = true;
    return out;
  }
  const int n = pr.num_vertices();
  const BlossomMap classes = brute_base_classes(pr);

  std::map<std::pair<Vertex, int>, std::set<Vertex>> memo;
  auto recursive = [&](auto&& self, Vertex b, int t) -> const std::set<Vertex>& {
    auto [it, fresh] = memo.try_emplace({b, t});
    if (!fresh || t < pr.t_m) return it->second;
    std::set<Vertex> acc;
    std::vector<Vertex> owners{b};
    if (auto c = classes.find({b, t}); c != classes.end()) {
      acc.insert(c->second.begin(), c->second.end());
      owners.insert(owners.end(), c->second.begin(), c->second.end());
    }
    for (Vertex v : owners) {
      if (!pr.is_outer(v)) continue;
      const auto& inner = self(self, v, t - 2);
      acc.insert(inner.begin(), inner.end());
    }
    auto& slot = memo[{b, t}];
    slot = std::move(acc);
    return slot;
  };

  // Finite tenacities never exceed 2n - 1.
  const int top = std::min(pr.l_m, 2 * n);
  for (int t = pr.t_m; t < top; t += 2) {
    for (Vertex b = 0; b < n; ++b) {
      if (!pr.is_outer(b) || pr.tenacity[static_cast<std::size_t>(b)] <= t) continue;
      const auto& members = recursive(recursive, b, t);
      if (!members.empty()) out.recursive[{b, t}] = {members.begin(), members.end()};
    }
    for (Vertex v = 0; v < n; ++v) {
      if (pr.tenacity[static_cast<std::size_t>(v)] > t) continue;
      Vertex x = v;
      bool defined = true;
      while (pr.tenacity[static_cast<std::size_t>(x)] <= t) {
        auto b = pr.base(x);
        if (!b) {
          defined = false;
          break;
        }
        x = *b;
      }
      if (defined) out.by_base[{x, t}].push_back(v);
    }
  }
  out.equal = out.recursive == out.by_base;
  return out;
}

std::vector<Vertex> brute_support(const Graph& g, const Matching& m, const OracleProfile& pr, EdgeId e,
                                  const OracleOptions& options) {
  check_guard(g, options);
  const Edge& ed = g.edge(e);
  const int t = pr.edge_tenacity[static_cast<std::size_t>(e)];
  std::set<Vertex> support;
  PathEnumerator(g, m, nullptr).run([&](std::span<const Vertex> p) {
    const Vertex w = p.back();
    if (pr.tenacity[static_cast<std::size_t>(w)] != t || t == kInfinity) return true;
    if (path_length(p) != pr.maxlevel(w)) return true;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      if (Edge{p[k], p[k + 1]} == ed || Edge{p[k + 1], p[k]} == ed) {
        support.insert(w);
        break;
      }
    }
    return true;
  });
  return {support.begin(), support.end()};
}

MaxMatchingResult brute_max_matching(const Graph& g, const OracleOptions& options) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  MaxMatchingResult r{0, Matching(n)};
  if (n <= kOracleMaxMatchingVertices) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
      adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
      adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
    auto best = [&](auto&& self, std::uint32_t mask) -> int {
      if (mask == 0) return 0;
      auto& slot = memo[mask];
      if (slot >= 0) return slot;
      const int v = __builtin_ctz(mask);
      const std::uint32_t rest = mask & ~(1u << v);
      int value = self(self, rest);
      for (std::uint32_t cand = rest & adj[static_cast<std::size_t>(v)]; cand; cand &= cand - 1) {
        const int w = __builtin_ctz(cand);
        value = std::max(value, 1 + self(self, rest & ~(1u << w)));
      }
      slot = static_cast<std::int8_t>(value);
      return value;
    };
    std::uint32_t mask = n == 32 ? ~0u : (1u << n) - 1;
    r.size = best(best, mask);
    while (mask) {
      const int v = __builtin_ctz(mask);
      const std::uint32_t rest = mask & ~(1u << v);
      const int here = best(best, mask);
      if (best(best, rest) == here) {
        mask = rest;
        continue;
      }
      for (std::uint32_t cand = rest & adj[static_cast<std::size_t>(v)]; cand; cand &= cand - 1) {
        const int w = __builtin_ctz(cand);
        if (1 + best(best, rest & ~(1u << w)) == here) {
          r.witness.match(v, w);
          mask = rest & ~(1u << w);
          break;
        }
      }
    }
    return r;
  }
  if (!options.guard_override && m > kOracleMaxMatchingEdges) {
    throw GuardExceeded("brute-force matching supports n <= " + std::to_string(kOracleMaxMatchingVertices) +
                        " or m <= " + std::to_string(kOracleMaxMatchingEdges) + ", got n = " + std::to_string(n) +
                        ", m = " + std::to_string(m));
  }
  Matching cur(n);
  auto search = [&](auto&& self, EdgeId i, int size) -> void {
    if (size + (m - i) <= r.size) return;
    if (i == m) {
      r.size = size;
      r.witness = cur;
      return;
    }
    const Edge& e = g.edge(i);
    if (!cur.is_matched(e.u) && !cur.is_matched(e.v)) {
      cur.match(e.u, e.v);
      self(self, i + 1, size + 1);
      cur.unmatch(e.u);
    }
    self(self, i + 1, size);
  };
  search(search, 0, 0);
  return r;
}

std::optional<AlternatingPath> brute_find_augmenting_path(const Graph& g, const Matching& m, int length,
                                                          const std::vector<std::uint8_t>& blocked,
                                                          const OracleOptions& options) {
  check_guard(g, options);
  std::optional<AlternatingPath> found;
  PathEnumerator(g, m, &blocked).run([&](std::span<const Vertex> p) {
    const int len = path_length(p);
    if (len == length && len % 2 == 1 && !m.is_matched(p.back())) {
      found = AlternatingPath{{p.begin(), p.end()}};
      return false;
    }
    return len < length;
  });
  return found;
}

StructuralReport check_structural_theorems(const Graph& g, const Matching& m, const OracleProfile& pr,
                                           const OracleOptions& options) {
  check_guard(g, options);
  StructuralReport report;
  const int n = g.num_vertices();
  auto ten = [&](Vertex v) { return pr.tenacity[static_cast<std::size_t>(v)]; };
  auto add = [&](const char* check, std::string witness) {
    report.violations.push_back({check, std::move(witness)});
  };

  // Path-based checks: honesty, unique bridge, free-vertex symmetry.
  std::vector<std::set<Vertex>> even_from(static_cast<std::size_t>(n)), odd_from(static_cast<std::size_t>(n));
  PathEnumerator(g, m, nullptr).run([&](std::span<const Vertex> p) {
    const Vertex v = p.back();
    const int len = path_length(p);
    if (is_level_path(pr, p)) {
      (len % 2 == 0 ? even_from : odd_from)[static_cast<std::size_t>(v)].insert(p.front());
      for (std::size_t k = 0; k < p.size(); ++k) {
        const Vertex u = p[k];
        if (ten(u) < ten(v)) continue;
        const int at = static_cast<int>(k);
        const int expect = at % 2 == 0 ? pr.even[static_cast<std::size_t>(u)] : pr.odd[static_cast<std::size_t>(u)];
        if (at != expect || (ten(u) > ten(v) && at != pr.minlevel(u))) {
          add("honesty", "vertex " + std::to_string(u) + " at position " + std::to_string(at) + " on path " +
                             show_path(p) + " (evenlevel " + show_level(pr.even[static_cast<std::size_t>(u)]) +
                             ", oddlevel " + show_level(pr.odd[static_cast<std::size_t>(u)]) + ")");
        }
      }
    }
    const int t = ten(v);
    if (t != kInfinity && (pr.eligible(v) || t == pr.l_m) && len == pr.maxlevel(v)) {
      int count = 0;
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        const EdgeId e = *g.find_edge(p[k], p[k + 1]);
        if (!pr.edge_is_prop[static_cast<std::size_t>(e)] && pr.edge_tenacity[static_cast<std::size_t>(e)] == t) {
          ++count;
        }
      }
      if (count != 1) {
        add("unique-bridge", "maxlevel path " + show_path(p) + " of vertex " + std::to_string(v) + " has " +
                                 std::to_string(count) + " bridges of tenacity " + std::to_string(t));
      }
    }
    return true;
  });

  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = m.mate(v);
    if (w != kNoVertex && v < w && ten(v) != ten(w)) {
      add("matched-tenacity", "matched edge " + std::to_string(v) + "-" + std::to_string(w) + " has tenacities " +
                                  show_level(ten(v)) + " and " + show_level(ten(w)));
    }
    if (!pr.eligible(v)) continue;
    const auto& bs = pr.base_set[static_cast<std::size_t>(v)];
    if (bs.size() != 1 || bs.front() == kNoVertex) {
      add("base", "vertex " + std::to_string(v) + " has base candidates " + show_set(bs));
    }
    const auto& ef = even_from[static_cast<std::size_t>(v)];
    const auto& of = odd_from[static_cast<std::size_t>(v)];
    if (ef != of) {
      add("free", "vertex " + std::to_string(v) + " has evenlevel paths from " +
                      show_set({ef.begin(), ef.end()}) + " but oddlevel paths from " +
                      show_set({of.begin(), of.end()}));
    }
  }

  // Laminarity of the recursive blossoms.
  const BlossomResult bl = brute_blossoms(g, m, pr, options);
  std::vector<std::pair<std::pair<Vertex, int>, std::set<Vertex>>> sets;
  for (const auto& [key, members] : bl.recursive) sets.push_back({key, {members.begin(), members.end()}});
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const auto& a = sets[i].second;
      const auto& b = sets[j].second;
      std::vector<Vertex> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      const bool nested = common.size() == a.size() || common.size() == b.size();
      if (!common.empty() && !nested) {
        add("laminar", "blossoms (" + std::to_string(sets[i].first.first) + "," +
                           std::to_string(sets[i].first.second) + ") and (" + std::to_string(sets[j].first.first) +
                           "," + std::to_string(sets[j].first.second) + ") overlap without nesting");
      }
    }
  }

  // Bridge endpoint cases.
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (pr.edge_is_prop[static_cast<std::size_t>(e)]) continue;
    const int te = pr.edge_tenacity[static_cast<std::size_t>(e)];
    if (te == kInfinity || te > pr.l_m) continue;
    const Edge& ed = g.edge(e);
    const std::string name = "bridge " + std::to_string(ed.u) + "-" + std::to_string(ed.v);
    if (m.mate(ed.u) == ed.v) {
      if (pr.is_outer(ed.u) || pr.is_outer(ed.v)) add("uses", "matched " + name + " has an outer endpoint");
      continue;
    }
    for (Vertex x : {ed.u, ed.v}) {
      const bool ok = pr.is_outer(x) ? ten(x) <= te : ten(x) < te;
      if (!ok) {
        add("uses", name + " of tenacity " + std::to_string(te) + ": endpoint " + std::to_string(x) + " (" +
                        (pr.is_outer(x) ? "outer" : "inner") + ") has tenacity " + show_level(ten(x)));
      }
    }
  }
  return report;
}

std::string serialize_profile(const Graph& g, const OracleProfile& pr) {
  std::ostringstream out;
  out << "tm " << show_level(pr.t_m) << "\n";
  out << "lm " << show_level(pr.l_m) << "\n";
  for (Vertex v = 0; v < pr.num_vertices(); ++v) {
    out << "v " << v + 1 << " even " << show_level(pr.even[static_cast<std::size_t>(v)]) << " odd "
        << show_level(pr.odd[static_cast<std::size_t>(v)]) << "\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const int t = pr.edge_tenacity[static_cast<std::size_t>(e)];
    out << "edge " << ed.u + 1 << " " << ed.v + 1 << " "
        << (pr.edge_is_prop[static_cast<std::size_t>(e)] ? "prop" : "bridge") << " tenacity "
        << (t == kInfinity ? std::string("?") : std::to_string(t)) << "\n";
  }
  return out.str();
}

}  // namespace mvmatch
