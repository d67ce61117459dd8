#include "ptri/constructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace ptri {

namespace {

std::mutex cache_mutex;

}  // namespace

const PointSet& canonical_single_chain(int l) {
  static std::map<int, PointSet> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(l);
  if (it == cache.end()) it = cache.emplace(l, make_single_chain(l)).first;
  return it->second;
}

const PointSet& canonical_double_chain(int l, int m) {
  static std::map<std::pair<int, int>, PointSet> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find({l, m});
  if (it == cache.end())
    it = cache.emplace(std::pair{l, m}, make_double_chain(l, m)).first;
  return it->second;
}

namespace {

// Canonical single-chain layout: chain vertices are point indices 0..l+1,
// the tip is l+2.
struct ChainCtx {
  int l;
  int tip;
};

ChainCtx chain_ctx(const PointSet& ps) {
  auto view = as_single_chain(ps);
  if (!view)
    throw std::invalid_argument("expected a single chain point set");
  for (int k = 0; k <= view->l + 1; ++k)
    if (view->chain[k] != k)
      throw std::invalid_argument("expected canonical single-chain labels");
  if (view->tip != view->l + 2)
    throw std::invalid_argument("expected canonical single-chain labels");
  return {view->l, view->tip};
}

// Chain vertices joined to the tip, as a bitmask with bit k-1 = vertex k.
uint64_t tip_mask(const PseudoTriangulation& t, const ChainCtx& c) {
  uint64_t mask = 0;
  for (const Edge& e : t.graph.edges) {
    int other = -1;
    if (e.first == c.tip) other = e.second;
    else if (e.second == c.tip) other = e.first;
    else continue;
    if (other >= 1 && other <= c.l) mask |= uint64_t(1) << (other - 1);
  }
  return mask;
}

std::vector<int> mask_members(uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(__builtin_ctzll(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

void require_pointed(const PseudoTriangulation& t, const char* who) {
  for (bool p : t.pointed)
    if (!p) throw std::invalid_argument(std::string(who) +
                                        ": not a pointed pseudo-triangulation");
}

const Face* face_left_of(const PseudoTriangulation& t, int a, int b) {
  for (const Face& f : t.faces) {
    int k = static_cast<int>(f.boundary.size());
    for (int i = 0; i < k; ++i)
      if (f.boundary[i] == a && f.boundary[(i + 1) % k] == b) return &f;
  }
  return nullptr;
}

// Remove edge e and find the unique replacement edge that restores a
// pointed pseudo-triangulation.
std::pair<PseudoTriangulation, Edge> flip(const PseudoTriangulation& t,
                                          Edge e) {
  const PointSet& ps = t.pointset();
  std::vector<Edge> base;
  bool found = false;
  for (const Edge& f : t.graph.edges) {
    if (f == make_edge(e.first, e.second)) {
      found = true;
      continue;
    }
    base.push_back(f);
  }
  if (!found) throw std::invalid_argument("flip: edge not present");
  std::optional<PseudoTriangulation> result;
  Edge added{-1, -1};
  int n = ps.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Edge cand{a, b};
      if (cand == make_edge(e.first, e.second)) continue;
      if (std::find(base.begin(), base.end(), cand) != base.end()) continue;
      std::vector<Edge> trial = base;
      trial.push_back(cand);
      auto pt = try_validate(ps, trial);
      if (!pt) continue;
      bool pointed = true;
      for (bool q : pt->pointed) pointed = pointed && q;
      if (!pointed) continue;
      if (result)
        throw std::logic_error("flip: replacement edge is not unique");
      result = std::move(pt);
      added = cand;
    }
  }
  if (!result) throw std::logic_error("flip: no replacement edge found");
  return {std::move(*result), added};
}

int entry_for_reflex(const PseudoTriangulation& t, const ChainCtx& c, int v) {
  // Unique face in which v lies on the boundary but is not a corner; the
  // reflex chain of that face through v runs between two corners, one of
  // which is the tip.
  for (const Face& f : t.faces) {
    int k = static_cast<int>(f.boundary.size());
    int pos = -1;
    for (int i = 0; i < k; ++i)
      if (f.boundary[i] == v) pos = i;
    if (pos < 0) continue;
    if (std::find(f.corners.begin(), f.corners.end(), v) != f.corners.end())
      continue;
    auto is_corner = [&](int w) {
      return std::find(f.corners.begin(), f.corners.end(), w) !=
             f.corners.end();
    };
    int fwd = pos, bwd = pos;
    do fwd = (fwd + 1) % k;
    while (!is_corner(f.boundary[fwd]));
    do bwd = (bwd + k - 1) % k;
    while (!is_corner(f.boundary[bwd]));
    int cf = f.boundary[fwd], cb = f.boundary[bwd];
    if (cf == c.tip) return cb;
    if (cb == c.tip) return cf;
    throw std::logic_error("end point: reflex chain not anchored at the tip");
  }
  throw std::logic_error("end point: vertex is a corner everywhere");
}

std::vector<Edge> edges_within(const PseudoTriangulation& t,
                               const std::set<int>& verts) {
  std::vector<Edge> out;
  for (const Edge& e : t.graph.edges)
    if (verts.count(e.first) && verts.count(e.second)) out.push_back(e);
  return out;
}

std::vector<Edge> remap(const std::vector<Edge>& edges,
                        const std::map<int, int>& sub) {
  std::vector<Edge> out;
  for (const Edge& e : edges) {
    auto f = [&](int v) {
      auto it = sub.find(v);
      return it == sub.end() ? v : it->second;
    };
    out.push_back(make_edge(f(e.first), f(e.second)));
  }
  return out;
}

void add_edges(std::set<Edge>& acc, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) acc.insert(e);
}

EndPointVector transformed_vector(const EndPointVector& x, int v, int l,
                                  bool wrap) {
  // Lemma-8 statement: first entry becomes x_1 - 1 (or l+1 in the
  // wrap-around case); later entries equal to x_1 become v.
  EndPointVector y;
  int x1 = x.entries[0];
  y.entries.push_back(wrap ? l + 1 : x1 - 1);
  for (size_t i = 1; i < x.entries.size(); ++i)
    y.entries.push_back(x.entries[i] == x1 ? v : x.entries[i]);
  return y;
}

}  // namespace

EndPointVector end_point_vector(const PseudoTriangulation& t,
                                EndPointVariant variant, int v) {
  ChainCtx c = chain_ctx(t.pointset());
  require_pointed(t, "end_point_vector");
  uint64_t w = tip_mask(t, c);
  EndPointVector out;
  if (variant == EndPointVariant::W) {
    for (int vi : mask_members(w))
      out.entries.push_back(entry_for_reflex(t, c, vi));
    return out;
  }
  if (v < 1 || v > c.l || ((w >> (v - 1)) & 1))
    throw std::invalid_argument(
        "end_point_vector: v must be a chain vertex not joined to the tip");
  if (w && __builtin_ctzll(w) + 1 < v)
    throw std::invalid_argument("end_point_vector: v must precede the tip set");
  // x_1 = third corner of the triangle on the chain-polygon side of the
  // edge (v-1, v); "below" in the paper's drawing, where the tip is above.
  const Face* f = face_left_of(t, v - 1, v);
  if (!f || f->boundary.size() != 3)
    throw std::logic_error("end_point_vector: no triangle beside (v-1,v)");
  for (int b : f->boundary)
    if (b != v - 1 && b != v) out.entries.push_back(b);
  for (int vi : mask_members(w))
    out.entries.push_back(entry_for_reflex(t, c, vi));
  return out;
}

PseudoTriangulation bijection_forward(const PseudoTriangulation& t) {
  const PointSet& ps = t.pointset();
  ChainCtx c = chain_ctx(ps);
  require_pointed(t, "bijection_forward");
  uint64_t w = tip_mask(t, c);
  if (w == 0) throw std::invalid_argument("bijection_forward: W is empty");
  int v = __builtin_ctzll(w) + 1;
  if (t.graph.has_edge(v, c.l + 1))
    throw std::invalid_argument("bijection_forward: edge (v,l+1) present");
  EndPointVector x = end_point_vector(t, EndPointVariant::W);
  int x1 = x.entries[0];
  if (x1 == c.l + 1)
    throw std::logic_error("bijection_forward: x1 = l+1 without edge (v,l+1)");
  std::vector<int> wm = mask_members(w);

  auto [flipped, added] = flip(t, {v, c.tip});
  PseudoTriangulation result;
  if (x1 > v) {
    if (added != make_edge(v - 1, v))
      throw std::logic_error("bijection_forward: flip did not give (v-1,v)");
    result = std::move(flipped);
  } else {
    int y = added.first == v ? added.second : added.first;
    if (!(added.first == v || added.second == v))
      throw std::logic_error("bijection_forward: flip edge misses v");
    int expected_y = v + 1;
    if (wm.size() >= 2 && wm[1] == v + 1 && x.entries[1] > v + 1)
      expected_y = x.entries[1];
    if (y != expected_y)
      throw std::logic_error("bijection_forward: unexpected flip target");

    // Cut at the triangle (x1, v, y): T1 triangulates the polygon
    // {x1..v}, T2 covers the rest on the vertex set without {x1+1..v}.
    std::set<int> t1set, t2set;
    for (int k = x1; k <= v; ++k) t1set.insert(k);
    for (int k = 0; k <= x1; ++k) t2set.insert(k);
    for (int k = v + 1; k <= c.l + 1; ++k) t2set.insert(k);
    t2set.insert(c.tip);
    std::vector<Edge> t1 = edges_within(flipped, t1set);
    std::vector<Edge> t2 = edges_within(flipped, t2set);

    std::set<Edge> acc;
    if (x1 > 0) {
      // Substitute v for x1 in T2, shift T1 one step left, and add the
      // triangle (x1-1, v-1, v).
      add_edges(acc, remap(t2, {{x1, v}}));
      std::map<int, int> down;
      for (int k = x1; k <= v; ++k) down[k] = k - 1;
      add_edges(acc, remap(t1, down));
      acc.insert(make_edge(x1 - 1, v - 1));
      acc.insert(make_edge(v - 1, v));
      acc.insert(make_edge(x1 - 1, v));
    } else {
      // Wrap-around: l+1 plays the role of x1-1. The substituted tip
      // edge (p,v) stands for the boundary path p,0,...,v and is
      // replaced by the hull edge (p,0).
      std::vector<Edge> t2m = remap(t2, {{0, v}});
      std::set<Edge> t2s(t2m.begin(), t2m.end());
      t2s.erase(make_edge(c.tip, v));
      acc.insert(t2s.begin(), t2s.end());
      acc.insert(make_edge(c.tip, 0));
      std::map<int, int> down{{0, c.l + 1}};
      for (int k = 1; k <= v; ++k) down[k] = k - 1;
      add_edges(acc, remap(t1, down));
      acc.insert(make_edge(c.l + 1, v - 1));
      acc.insert(make_edge(v - 1, v));
      acc.insert(make_edge(c.l + 1, v));
    }
    result = validate(ps, std::vector<Edge>(acc.begin(), acc.end()));
    require_pointed(result, "bijection_forward result");
  }

  if (tip_mask(result, c) != (w & (w - 1)))
    throw std::logic_error("bijection_forward: wrong image tip set");
  EndPointVector expect =
      x1 > v ? x : transformed_vector(x, v, c.l, /*wrap=*/x1 == 0);
  if (end_point_vector(result, EndPointVariant::WMinusV, v) != expect)
    throw std::logic_error("bijection_forward: wrong image end-point vector");
  return result;
}

PseudoTriangulation bijection_inverse(const PseudoTriangulation& t, int v) {
  const PointSet& ps = t.pointset();
  ChainCtx c = chain_ctx(ps);
  require_pointed(t, "bijection_inverse");
  uint64_t wm = tip_mask(t, c);
  EndPointVector y = end_point_vector(t, EndPointVariant::WMinusV, v);
  int y1 = y.entries[0];
  if (y1 == v || y1 == v - 1)
    throw std::logic_error("bijection_inverse: impossible end point");

  PseudoTriangulation result;
  if (y1 > v && y1 < c.l + 1) {
    auto [flipped, added] = flip(t, {v - 1, v});
    if (added != make_edge(c.tip, v))
      throw std::logic_error("bijection_inverse: flip did not give (p,v)");
    result = std::move(flipped);
  } else {
    std::set<Edge> acc;
    if (y1 < v - 1) {
      // Reverse rearrangement: T'1 triangulated {y1..v-1} (shift it right),
      // T'2 covers the rest (substitute y1+1 back for v). The preimage is
      // T1, T2, and the tip edge (p,v).
      std::set<int> t1set, t2set;
      for (int k = y1; k <= v - 1; ++k) t1set.insert(k);
      for (int k = 0; k <= y1; ++k) t2set.insert(k);
      for (int k = v; k <= c.l + 1; ++k) t2set.insert(k);
      t2set.insert(c.tip);
      std::vector<Edge> t1 = edges_within(t, t1set);
      std::vector<Edge> t2 = edges_within(t, t2set);
      add_edges(acc, remap(t2, {{v, y1 + 1}}));
      std::map<int, int> up;
      for (int k = y1; k <= v - 1; ++k) up[k] = k + 1;
      add_edges(acc, remap(t1, up));
    } else {
      // y1 = l+1: wrap-around. T'1 triangulated {l+1, 0..v-1}; T'2 covers
      // {v..l+1, p} once the boundary path p,0,...,v is contracted to the
      // hull edge (p,0), which maps back to the tip edge (p,v)'s role.
      std::set<int> t1set, t2set;
      t1set.insert(c.l + 1);
      for (int k = 0; k <= v - 1; ++k) t1set.insert(k);
      for (int k = v; k <= c.l + 1; ++k) t2set.insert(k);
      t2set.insert(c.tip);
      std::vector<Edge> t1 = edges_within(t, t1set);
      std::vector<Edge> t2 = edges_within(t, t2set);
      t2.push_back(make_edge(c.tip, v));  // stands for the hull edge (p,0)
      add_edges(acc, remap(t2, {{v, 0}}));
      std::map<int, int> up{{c.l + 1, 0}};
      for (int k = 0; k <= v - 1; ++k) up[k] = k + 1;
      add_edges(acc, remap(t1, up));
    }
    acc.insert(make_edge(c.tip, v));
    result = validate(ps, std::vector<Edge>(acc.begin(), acc.end()));
    require_pointed(result, "bijection_inverse result");
  }

  if (tip_mask(result, c) != (wm | (uint64_t(1) << (v - 1))))
    throw std::logic_error("bijection_inverse: wrong image tip set");
  if (result.graph.has_edge(v, c.l + 1))
    throw std::logic_error("bijection_inverse: image uses edge (v,l+1)");
  return result;
}

PseudoTriangulation reconstruct_from_choice(int l,
                                            const std::vector<Edge>& tri,
                                            const std::vector<int>& missing) {
  const PointSet& ps = canonical_single_chain(l);
  int tip = l + 2;
  std::set<Edge> poly;  // full edge set of the (l+2)-gon triangulation
  for (int k = 0; k <= l; ++k) poly.insert({k, k + 1});
  poly.insert({0, l + 1});
  for (const Edge& e : tri) {
    if (e.first < 0 || e.second > l + 1)
      throw std::invalid_argument("reconstruct_from_choice: bad polygon edge");
    poly.insert(make_edge(e.first, e.second));
  }
  if (static_cast<int>(poly.size()) != (l + 2) + (l - 1))
    throw std::invalid_argument(
        "reconstruct_from_choice: not a triangulation of the polygon");
  std::set<int> miss(missing.begin(), missing.end());
  for (int k : miss)
    if (k < 0 || k > l)
      throw std::invalid_argument("reconstruct_from_choice: bad missing edge");

  // Bad ear: vertex i with the ear triangle (i-1, i, i+1) present and both
  // boundary edges (i-1,i), (i,i+1) missing.
  for (int i = 1; i <= l; ++i)
    if (miss.count(i - 1) && miss.count(i) && poly.count({i - 1, i + 1}))
      throw BadEarError(i);

  std::set<Edge> acc;
  acc.insert(make_edge(0, tip));
  acc.insert(make_edge(l + 1, tip));
  acc.insert({0, l + 1});
  for (const Edge& e : poly) {
    if (e.second - e.first == 1 && miss.count(e.first)) continue;  // removed
    acc.insert(e);
  }
  for (int i : miss) {
    // Apex of the triangle of the polygon triangulation over edge (i,i+1).
    int apex = -1;
    for (int k = 0; k <= l + 1; ++k) {
      if (k == i || k == i + 1) continue;
      if (poly.count(make_edge(i, k)) && poly.count(make_edge(i + 1, k)))
        apex = k;
    }
    if (apex < 0)
      throw std::invalid_argument("reconstruct_from_choice: no apex found");
    acc.insert(make_edge(tip, apex < i ? i : i + 1));
  }
  PseudoTriangulation result =
      validate(ps, std::vector<Edge>(acc.begin(), acc.end()));
  require_pointed(result, "reconstruct_from_choice result");
  return result;
}

namespace {

struct DoubleCtx {
  int l, m;
  int tl, tr, bl, br;
  bool is_top(int v) const { return v <= l + 1; }
};

DoubleCtx double_ctx(const PointSet& ps) {
  auto view = as_double_chain(ps);
  if (!view) throw std::invalid_argument("expected a double chain point set");
  return {view->l, view->m, 0, view->l + 1, view->l + 2,
          view->l + view->m + 3};
}

// Sorted chain neighbors of the tip in a canonical single-chain PT,
// including the two hull neighbors 0 and l+1.
std::vector<int> tip_fan(const PseudoTriangulation& t, int l) {
  std::vector<int> out;
  for (const Edge& e : t.graph.edges) {
    if (e.first == l + 2) out.push_back(e.second);
    else if (e.second == l + 2) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DoubleChainDecomposition decompose_double_chain(const PseudoTriangulation& t) {
  const PointSet& ps = t.pointset();
  DoubleCtx c = double_ctx(ps);

  // Contractions: all bottom vertices to the top chain's tip, and all top
  // vertices to the bottom chain's tip.
  const PointSet& chain_top = canonical_single_chain(c.l);
  const PointSet& chain_bot = canonical_single_chain(c.m);
  std::set<Edge> top_edges, bot_edges;
  for (const Edge& e : t.graph.edges) {
    int a = e.first, b = e.second;
    int ta = c.is_top(a) ? a : c.l + 2;
    int tb = c.is_top(b) ? b : c.l + 2;
    if (ta != tb) top_edges.insert(make_edge(ta, tb));
    int ba = c.is_top(a) ? c.m + 2 : a - (c.l + 2);
    int bb = c.is_top(b) ? c.m + 2 : b - (c.l + 2);
    if (ba != bb) bot_edges.insert(make_edge(ba, bb));
  }
  PseudoTriangulation top = validate(
      chain_top, std::vector<Edge>(top_edges.begin(), top_edges.end()));
  PseudoTriangulation bottom = validate(
      chain_bot, std::vector<Edge>(bot_edges.begin(), bot_edges.end()));

  // Middle faces, ordered left to right along their transversal edges.
  struct Mid {
    int index;
    int type;  // 0 = hangs from the top chain, 1 = from the bottom
    Edge e1, e2;
  };
  std::vector<Mid> mids;
  std::map<Edge, std::vector<int>> by_edge;
  for (size_t fi = 0; fi < t.faces.size(); ++fi) {
    const Face& f = t.faces[fi];
    int tc = 0, bc = 0;
    for (int v : f.boundary) (c.is_top(v) ? tc : bc)++;
    if (tc == 0 || bc == 0) continue;
    if (tc > 1 && bc > 1)
      throw std::logic_error("decompose: face spans both chains");
    std::vector<Edge> trans;
    int k = static_cast<int>(f.boundary.size());
    for (int i = 0; i < k; ++i) {
      int a = f.boundary[i], b = f.boundary[(i + 1) % k];
      if (c.is_top(a) != c.is_top(b)) trans.push_back(make_edge(a, b));
    }
    if (trans.size() != 2)
      throw std::logic_error("decompose: middle face without two crossings");
    Mid mid{static_cast<int>(mids.size()), bc == 1 ? 0 : 1, trans[0], trans[1]};
    by_edge[trans[0]].push_back(mid.index);
    by_edge[trans[1]].push_back(mid.index);
    mids.push_back(mid);
  }
  ShuffleWord word;
  Edge cur = make_edge(c.tl, c.bl);
  int prev = -1;
  while (cur != make_edge(c.tr, c.br)) {
    const auto& owners = by_edge.at(cur);
    int next = -1;
    for (int idx : owners)
      if (idx != prev) next = idx;
    if (next < 0) throw std::logic_error("decompose: broken middle sequence");
    word.symbols.push_back(mids[next].type);
    cur = mids[next].e1 == cur ? mids[next].e2 : mids[next].e1;
    prev = next;
  }
  int i = static_cast<int>(tip_fan(top, c.l).size()) - 2;
  int j = static_cast<int>(tip_fan(bottom, c.m).size()) - 2;
  if (static_cast<int>(word.symbols.size()) != i + j + 2)
    throw std::logic_error("decompose: word length mismatch");
  return {std::move(top), std::move(bottom), std::move(word)};
}

PseudoTriangulation compose_double_chain(const PseudoTriangulation& top,
                                         const PseudoTriangulation& bottom,
                                         const ShuffleWord& word) {
  ChainCtx ct = chain_ctx(top.pointset());
  ChainCtx cb = chain_ctx(bottom.pointset());
  int l = ct.l, m = cb.l;
  const PointSet& ps = canonical_double_chain(l, m);
  std::vector<int> u = tip_fan(top, l);     // top anchors, left to right
  std::vector<int> w = tip_fan(bottom, m);  // bottom anchors
  int i = static_cast<int>(u.size()) - 2;
  int j = static_cast<int>(w.size()) - 2;
  if (static_cast<int>(word.symbols.size()) != i + j + 2)
    throw std::invalid_argument("compose: word length must be i+j+2");
  int zeros = 0;
  for (int s : word.symbols) {
    if (s != 0 && s != 1)
      throw std::invalid_argument("compose: word symbols must be 0 or 1");
    zeros += s == 0;
  }
  if (zeros != i + 1)
    throw std::invalid_argument("compose: word must have i+1 top symbols");

  auto bmap = [&](int x) { return l + 2 + x; };  // bottom label -> point index
  std::set<Edge> acc;
  for (const Edge& e : top.graph.edges)
    if (e.first != l + 2 && e.second != l + 2) acc.insert(e);
  for (const Edge& e : bottom.graph.edges)
    if (e.first != m + 2 && e.second != m + 2)
      acc.insert(make_edge(bmap(e.first), bmap(e.second)));
  // Interleave the two tip fans: each word symbol consumes one fan face
  // and advances the corresponding anchor.
  int a = 0, b = 0;
  acc.insert(make_edge(u[a], bmap(w[b])));
  for (int s : word.symbols) {
    if (s == 0) {
      ++a;
      if (a > i + 1) throw std::invalid_argument("compose: word overruns top");
    } else {
      ++b;
      if (b > j + 1)
        throw std::invalid_argument("compose: word overruns bottom");
    }
    acc.insert(make_edge(u[a], bmap(w[b])));
  }
  return validate(ps, std::vector<Edge>(acc.begin(), acc.end()));
}

}  // namespace ptri
