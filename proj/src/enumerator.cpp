#include "ptri/enumerator.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace ptri {

std::string CountTable::to_json() const {
  std::ostringstream os;
  os << "{\"n\":" << n << ",\"interior\":[";
  for (size_t i = 0; i < interior.size(); ++i)
    os << (i ? "," : "") << interior[i];
  os << "],\"counts\":[";
  bool first = true;
  for (const auto& [key, cnt] : counts) {
    if (!first) os << ",";
    first = false;
    os << "{\"w\":[";
    bool f2 = true;
    for (size_t k = 0; k < interior.size(); ++k) {
      if (!key.contains(static_cast<int>(k))) continue;
      if (!f2) os << ",";
      f2 = false;
      os << interior[k];
    }
    os << "],\"count\":\"" << cnt.get_str() << "\"}";
  }
  os << "],\"total\":\"" << total.get_str() << "\"}";
  return os.str();
}

namespace {

struct SearchSpace {
  const PointSet* ps;
  std::vector<Edge> hull_edges;
  std::vector<Edge> candidates;          // canonical (lexicographic) order
  std::vector<uint64_t> conflicts;       // per candidate, crossing candidates
  std::vector<uint64_t> incident;        // per vertex, incident candidates
  std::vector<int> base_degree;          // hull-edge degree per vertex
  int min_extra;                         // candidates needed: 2n-3-h
  int max_extra;                         // candidates allowed: 3n-3-2h
};

SearchSpace build_space(const PointSet& ps, bool pointed_only) {
  SearchSpace s;
  s.ps = &ps;
  int n = ps.size();
  int h = static_cast<int>(ps.hull.size());
  for (int k = 0; k < h; ++k)
    s.hull_edges.push_back(make_edge(ps.hull[k], ps.hull[(k + 1) % h]));
  std::sort(s.hull_edges.begin(), s.hull_edges.end());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!std::binary_search(s.hull_edges.begin(), s.hull_edges.end(),
                              Edge{i, j}))
        s.candidates.push_back({i, j});
  int m = static_cast<int>(s.candidates.size());
  if (m > 62) throw std::invalid_argument("point set too large to enumerate");
  s.conflicts.assign(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const Edge& e = s.candidates[a];
      const Edge& f = s.candidates[b];
      if (segments_properly_cross(ps.points[e.first], ps.points[e.second],
                                  ps.points[f.first], ps.points[f.second])) {
        s.conflicts[a] |= uint64_t(1) << b;
        s.conflicts[b] |= uint64_t(1) << a;
      }
    }
  s.incident.assign(n, 0);
  for (int a = 0; a < m; ++a) {
    s.incident[s.candidates[a].first] |= uint64_t(1) << a;
    s.incident[s.candidates[a].second] |= uint64_t(1) << a;
  }
  s.base_degree.assign(n, 0);
  for (const Edge& e : s.hull_edges) {
    ++s.base_degree[e.first];
    ++s.base_degree[e.second];
  }
  s.min_extra = 2 * n - 3 - h;
  s.max_extra = pointed_only ? s.min_extra : 3 * n - 3 - 2 * h;
  return s;
}

struct Searcher {
  const SearchSpace& sp;
  bool pointed_only;
  long long budget;
  long long emitted = 0;
  bool stopped = false;
  const std::function<bool(const PseudoTriangulation&)>* visit;
  std::vector<Edge> scratch;

  // Pointedness can only be destroyed by adding edges, so a vertex that is
  // already non-pointed prunes the whole subtree in pointed-only mode.
  bool pointed_possible(uint64_t chosen, int v) const {
    const auto& pts = sp.ps->points;
    std::vector<std::pair<Coord, Coord>> dirs;
    for (const Edge& e : sp.hull_edges) {
      if (e.first == v)
        dirs.emplace_back(pts[e.second].x - pts[v].x, pts[e.second].y - pts[v].y);
      else if (e.second == v)
        dirs.emplace_back(pts[e.first].x - pts[v].x, pts[e.first].y - pts[v].y);
    }
    uint64_t inc = sp.incident[v] & chosen;
    while (inc) {
      int a = __builtin_ctzll(inc);
      inc &= inc - 1;
      const Edge& e = sp.candidates[a];
      int w = e.first == v ? e.second : e.first;
      dirs.emplace_back(pts[w].x - pts[v].x, pts[w].y - pts[v].y);
    }
    if (dirs.size() < 2) return true;
    // Pointed iff the directions do not positively span the plane: some
    // open half-plane contains them all, i.e. some direction has every
    // other strictly within pi counter-clockwise of it.
    for (size_t i = 0; i < dirs.size(); ++i) {
      bool all = true;
      for (size_t j = 0; j < dirs.size() && all; ++j) {
        if (i == j) continue;
        __int128 cr = (__int128)dirs[i].first * dirs[j].second -
                      (__int128)dirs[i].second * dirs[j].first;
        if (cr < 0) all = false;
        if (cr == 0) all = false;  // cannot happen in general position
      }
      if (all) return true;
    }
    return false;
  }

  void leaf(uint64_t chosen, int count) {
    if (count < sp.min_extra || count > sp.max_extra) return;
    scratch = sp.hull_edges;
    uint64_t c = chosen;
    while (c) {
      int a = __builtin_ctzll(c);
      c &= c - 1;
      scratch.push_back(sp.candidates[a]);
    }
    auto t = try_validate(*sp.ps, scratch);
    if (!t) return;
    if (pointed_only && t->graph.edges.size() !=
                            size_t(2 * sp.ps->size() - 3))
      return;
    ++emitted;
    if (!(*visit)(*t)) {
      stopped = true;
      return;
    }
    if (budget >= 0 && emitted >= budget)
      throw EnumerationBudgetExceeded(emitted);
  }

  void dfs(int k, uint64_t chosen, uint64_t avail, int count) {
    if (stopped) return;
    int m = static_cast<int>(sp.candidates.size());
    if (count > sp.max_extra) return;
    uint64_t future = avail & (~uint64_t(0) << k & (m < 64 ? (uint64_t(1) << m) - 1 : ~uint64_t(0)));
    if (count + __builtin_popcountll(future) < sp.min_extra) return;
    // Every vertex still needs total degree >= 2.
    for (int v = 0; v < sp.ps->size(); ++v) {
      int d = sp.base_degree[v] + __builtin_popcountll(sp.incident[v] & chosen);
      if (d >= 2) continue;
      if (d + __builtin_popcountll(sp.incident[v] & future) < 2) return;
    }
    if (k == m) {
      leaf(chosen, count);
      return;
    }
    if ((avail >> k) & 1) {
      uint64_t nchosen = chosen | (uint64_t(1) << k);
      bool ok = true;
      if (pointed_only) {
        const Edge& e = sp.candidates[k];
        ok = pointed_possible(nchosen, e.first) &&
             pointed_possible(nchosen, e.second);
      }
      if (ok) dfs(k + 1, nchosen, avail & ~sp.conflicts[k], count + 1);
      if (stopped) return;
    }
    dfs(k + 1, chosen, avail & ~(uint64_t(1) << k), count);
  }
};

uint64_t all_mask(int m) {
  return m >= 64 ? ~uint64_t(0) : (uint64_t(1) << m) - 1;
}

}  // namespace

void enumerate_pt(const PointSet& ps,
                  const std::function<bool(const PseudoTriangulation&)>& visit,
                  const EnumerateOptions& opts) {
  if (ps.size() > opts.point_cap)
    throw std::invalid_argument("enumerate_pt: " + std::to_string(ps.size()) +
                                " points exceeds cap " +
                                std::to_string(opts.point_cap));
  SearchSpace sp = build_space(ps, opts.pointed_only);
  int m = static_cast<int>(sp.candidates.size());
  if (opts.parallel && opts.budget < 0 && m >= 2) {
    // Deterministic split: resolve the first two include/exclude decisions
    // up front, search the four subtrees concurrently, then replay their
    // results in canonical order.
    using EdgeList = std::vector<Edge>;
    auto run_subtree = [&](int take0, int take1) {
      std::vector<EdgeList> out;
      Searcher s{sp, opts.pointed_only, -1, 0, false, nullptr, {}};
      std::function<bool(const PseudoTriangulation&)> collect =
          [&](const PseudoTriangulation& t) {
            out.push_back(t.graph.edges);
            return true;
          };
      s.visit = &collect;
      uint64_t chosen = 0, avail = all_mask(m);
      int count = 0;
      bool feasible = true;
      auto decide = [&](int idx, int take) {
        if (take) {
          if (!((avail >> idx) & 1)) {
            feasible = false;
            return;
          }
          chosen |= uint64_t(1) << idx;
          avail &= ~sp.conflicts[idx];
          ++count;
        } else {
          avail &= ~(uint64_t(1) << idx);
        }
      };
      decide(0, take0);
      if (feasible) decide(1, take1);
      if (feasible) s.dfs(2, chosen, avail, count);
      return out;
    };
    std::vector<std::future<std::vector<EdgeList>>> futs;
    for (int take0 : {1, 0})
      for (int take1 : {1, 0})
        futs.push_back(std::async(std::launch::async, run_subtree, take0, take1));
    // Canonical DFS order is include-first at each level, matching the
    // launch order above.
    for (auto& f : futs)
      for (const EdgeList& edges : f.get()) {
        auto t = try_validate(ps, edges);
        if (!visit(*t)) return;
      }
    return;
  }
  Searcher s{sp, opts.pointed_only, opts.budget, 0, false, &visit, {}};
  s.dfs(0, 0, all_mask(m), 0);
}

long long count_pt(const PointSet& ps, const EnumerateOptions& opts) {
  long long n = 0;
  enumerate_pt(
      ps,
      [&](const PseudoTriangulation&) {
        ++n;
        return true;
      },
      opts);
  return n;
}

CountTable stratify(const PointSet& ps, const EnumerateOptions& opts) {
  CountTable tbl;
  tbl.descriptor = ps.label;
  tbl.n = ps.size();
  tbl.interior = ps.interior;
  int ni = static_cast<int>(ps.interior.size());
  for (uint64_t w = 0; w < (uint64_t(1) << ni); ++w)
    tbl.counts[InteriorSubset{w}] = 0;
  enumerate_pt(
      ps,
      [&](const PseudoTriangulation& t) {
        tbl.counts[t.signature] += 1;
        tbl.total += 1;
        return true;
      },
      opts);
  return tbl;
}

CountTable stratify_by_tip(const PointSet& ps, const EnumerateOptions& opts) {
  if (!as_single_chain(ps))
    throw std::invalid_argument("stratify_by_tip: not a single chain");
  CountTable tbl;
  tbl.descriptor = ps.label + " (pointed, by tip)";
  tbl.n = ps.size();
  tbl.interior = ps.interior;
  int ni = static_cast<int>(ps.interior.size());
  for (uint64_t w = 0; w < (uint64_t(1) << ni); ++w)
    tbl.counts[InteriorSubset{w}] = 0;
  EnumerateOptions o = opts;
  o.pointed_only = true;
  enumerate_pt(
      ps,
      [&](const PseudoTriangulation& t) {
        tbl.counts[tip_signature(t)] += 1;
        tbl.total += 1;
        return true;
      },
      o);
  return tbl;
}

namespace {

// Triangulations of the convex range [a..b] (edge (a,b) given), collecting
// diagonals; at each full triangulation of [0..N-1] the filter runs.
void convex_triangulations(int a, int b, std::vector<Edge>& diagonals,
                           const std::function<void()>& leaf_cb, int N,
                           std::vector<std::pair<int, int>>& stack) {
  if (b - a < 2) {
    if (stack.empty()) {
      leaf_cb();
      return;
    }
    auto [na, nb] = stack.back();
    stack.pop_back();
    convex_triangulations(na, nb, diagonals, leaf_cb, N, stack);
    stack.push_back({na, nb});
    return;
  }
  for (int c = a + 1; c < b; ++c) {
    size_t added = 0;
    if (c - a >= 2) {
      diagonals.push_back({a, c});
      ++added;
    }
    if (b - c >= 2) {
      diagonals.push_back({c, b});
      ++added;
    }
    if (c - a >= 2) stack.push_back({a, c});
    convex_triangulations(c, b, diagonals, leaf_cb, N, stack);
    if (c - a >= 2) stack.pop_back();
    diagonals.resize(diagonals.size() - added);
  }
}

}  // namespace

long long enumerate_convex_TW(int l, uint64_t w_mask) {
  // Convex (l+3)-gon in cyclic order 0,1,...,l+1,q with q at index l+2.
  int N = l + 3;
  int q = l + 2;
  long long count = 0;
  std::vector<Edge> diagonals;
  std::vector<std::pair<int, int>> stack;
  auto leaf = [&]() {
    for (const Edge& d : diagonals) {
      int other = -1;
      if (d.first == q) other = d.second;
      else if (d.second == q) other = d.first;
      else continue;
      if (other >= 1 && other <= l && !((w_mask >> (other - 1)) & 1)) return;
    }
    ++count;
  };
  convex_triangulations(0, N - 1, diagonals, leaf, N, stack);
  return count;
}

}  // namespace ptri
