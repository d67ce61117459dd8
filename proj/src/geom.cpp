#include "ptri/geom.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <istream>
#include <numeric>
#include <sstream>

namespace ptri {

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  __int128 det = (__int128)(b.x - a.x) * (c.y - a.y) -
                 (__int128)(b.y - a.y) * (c.x - a.x);
  if (det > 0) return Orientation::Left;
  if (det < 0) return Orientation::Right;
  return Orientation::Collinear;
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c,
                             const Point& d) {
  Orientation o1 = orientation(a, b, c);
  Orientation o2 = orientation(a, b, d);
  Orientation o3 = orientation(c, d, a);
  Orientation o4 = orientation(c, d, b);
  if (o1 == Orientation::Collinear || o2 == Orientation::Collinear ||
      o3 == Orientation::Collinear || o4 == Orientation::Collinear)
    return false;  // endpoint contact only, given general position
  return o1 != o2 && o3 != o4;
}

bool PointSet::is_hull_vertex(int v) const {
  return std::find(hull.begin(), hull.end(), v) != hull.end();
}

bool PointSet::is_hull_edge(int a, int b) const {
  int h = static_cast<int>(hull.size());
  for (int k = 0; k < h; ++k) {
    int u = hull[k], w = hull[(k + 1) % h];
    if ((u == a && w == b) || (u == b && w == a)) return true;
  }
  return false;
}

int PointSet::interior_pos(int v) const {
  auto it = std::lower_bound(interior.begin(), interior.end(), v);
  if (it == interior.end() || *it != v) return -1;
  return static_cast<int>(it - interior.begin());
}

namespace {

// Monotone-chain hull over point indices, counter-clockwise.
std::vector<int> convex_hull_indices(const std::vector<Point>& pts) {
  int n = static_cast<int>(pts.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
  });
  auto build = [&](auto begin, auto end) {
    std::vector<int> h;
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= 2 &&
             orientation(pts[h[h.size() - 2]], pts[h.back()], pts[*it]) !=
                 Orientation::Left)
        h.pop_back();
      h.push_back(*it);
    }
    return h;
  };
  std::vector<int> lower = build(idx.begin(), idx.end());
  std::vector<int> upper = build(idx.rbegin(), idx.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

bool general_position(const std::vector<Point>& pts, std::string* witness) {
  int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pts[i] == pts[j]) {
        if (witness) {
          std::ostringstream os;
          os << "duplicate points " << i << "," << j;
          *witness = os.str();
        }
        return false;
      }
      for (int k = j + 1; k < n; ++k) {
        if (orientation(pts[i], pts[j], pts[k]) == Orientation::Collinear) {
          if (witness) {
            std::ostringstream os;
            os << "collinear triple (" << i << "," << j << "," << k << ")";
            *witness = os.str();
          }
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

PointSet make_point_set(std::vector<Point> pts, std::string label) {
  if (pts.size() < 3) throw std::invalid_argument("need at least 3 points");
  std::string witness;
  if (!general_position(pts, &witness))
    throw std::invalid_argument("degenerate point set: " + witness);
  PointSet ps;
  ps.points = std::move(pts);
  ps.hull = convex_hull_indices(ps.points);
  std::vector<bool> on_hull(ps.points.size(), false);
  for (int v : ps.hull) on_hull[v] = true;
  for (int i = 0; i < ps.size(); ++i)
    if (!on_hull[i]) ps.interior.push_back(i);
  ps.label = std::move(label);
  return ps;
}

PointSet make_convex(int n) {
  if (n < 3) throw std::invalid_argument("make_convex: n must be >= 3");
  std::vector<Point> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) pts.push_back({k, (Coord)k * k});
  PointSet ps = make_point_set(std::move(pts), "convex n=" + std::to_string(n));
  if (static_cast<int>(ps.hull.size()) != n)
    throw std::logic_error("make_convex: hull incomplete");
  return ps;
}

bool validate_closeness(const PointSet& ps, int p, std::pair<int, int> edge) {
  const Point& P = ps.points[p];
  const Point& Q = ps.points[edge.first];
  const Point& R = ps.points[edge.second];
  int n = ps.size();
  for (int a = 0; a < n; ++a) {
    if (a == p) continue;
    for (int b = a + 1; b < n; ++b) {
      if (b == p) continue;
      const Point& A = ps.points[a];
      const Point& B = ps.points[b];
      if (segments_properly_cross(A, B, P, Q) &&
          segments_properly_cross(A, B, P, R))
        return false;
    }
  }
  return true;
}

PointSet make_almost_convex(int v, const std::vector<int>& hosts) {
  if (v < 3) throw std::invalid_argument("make_almost_convex: v must be >= 3");
  {
    std::vector<int> h = hosts;
    std::sort(h.begin(), h.end());
    if (std::adjacent_find(h.begin(), h.end()) != h.end())
      throw std::invalid_argument("make_almost_convex: duplicate host edges");
    for (int e : h)
      if (e < 0 || e >= v)
        throw std::invalid_argument("make_almost_convex: host edge out of range");
  }
  std::string label = "almost-convex v=" + std::to_string(v) + " i=" +
                      std::to_string(hosts.size());
  for (Coord scale = 4;; scale *= 2) {
    if (scale > (Coord(1) << 40))
      throw std::runtime_error("make_almost_convex: certificate construction failed");
    std::vector<Point> pts;
    for (int k = 0; k < v; ++k) pts.push_back({k * scale, (Coord)k * k * scale});
    // Hull order of the scaled parabola polygon, counter-clockwise.
    std::vector<int> hull = convex_hull_indices(pts);
    std::vector<Point> all = pts;
    bool ok = true;
    for (int e : hosts) {
      const Point& q = pts[hull[e]];
      const Point& r = pts[hull[(e + 1) % v]];
      Point mid{(q.x + r.x) / 2, (q.y + r.y) / 2};
      Coord dx = r.x - q.x, dy = r.y - q.y;
      Coord g = std::gcd(std::abs(dx), std::abs(dy));
      Point n1{-dy / g, dx / g};
      // Pick the normal that points toward the polygon interior.
      Point other = pts[hull[(e + 2) % v]];
      Point cand{mid.x + n1.x, mid.y + n1.y};
      if (orientation(q, r, cand) != orientation(q, r, other)) {
        cand = Point{mid.x - n1.x, mid.y - n1.y};
      }
      all.push_back(cand);
    }
    std::string witness;
    if (!general_position(all, &witness)) continue;
    // The limit configuration puts each interior point exactly on its edge
    // midpoint; those limit points are in convex position, so every triple
    // not collinear in the limit has a forced orientation. Reject the scale
    // until the realized order type agrees (doubled coordinates keep the
    // midpoints integral).
    std::vector<Point> ref;
    for (const Point& p : pts) ref.push_back({2 * p.x, 2 * p.y});
    for (int e : hosts) {
      const Point& q = pts[hull[e]];
      const Point& r = pts[hull[(e + 1) % v]];
      ref.push_back({q.x + r.x, q.y + r.y});
    }
    int total = static_cast<int>(all.size());
    for (int a = 0; ok && a < total; ++a)
      for (int b = a + 1; ok && b < total; ++b)
        for (int c = b + 1; ok && c < total; ++c) {
          Orientation lim = orientation(ref[a], ref[b], ref[c]);
          if (lim == Orientation::Collinear) continue;
          if (orientation(all[a], all[b], all[c]) != lim) ok = false;
        }
    if (!ok) continue;
    PointSet ps;
    try {
      ps = make_point_set(all, label);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (static_cast<int>(ps.hull.size()) != v) continue;
    for (size_t t = 0; t < hosts.size(); ++t) {
      int p = v + static_cast<int>(t);
      int e = hosts[t];
      if (!validate_closeness(ps, p, {hull[e], hull[(e + 1) % v]})) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    return ps;
  }
}

PointSet make_single_chain(int l) {
  if (l < 0) throw std::invalid_argument("make_single_chain: l must be >= 0");
  std::string label = "single-chain l=" + std::to_string(l);
  for (Coord b = (Coord)l * l + 2;; b *= 2) {
    if (b > (Coord(1) << 40))
      throw std::runtime_error("make_single_chain: construction failed");
    std::vector<Point> pts;
    for (int k = 0; k <= l + 1; ++k) pts.push_back({k, (Coord)k * k});
    pts.push_back({1, -b});  // tip
    std::string witness;
    if (!general_position(pts, &witness)) continue;
    PointSet ps = make_point_set(pts, label);
    if (ps.hull.size() != 3) continue;
    auto view = as_single_chain(ps);
    if (!view || view->tip != l + 2) continue;
    return ps;
  }
}

PointSet make_double_chain(int l, int m) {
  if (l < 0 || m < 0)
    throw std::invalid_argument("make_double_chain: l,m must be >= 0");
  std::string label =
      "double-chain l=" + std::to_string(l) + " m=" + std::to_string(m);
  Coord big = std::max({l, m, 1}) + 2;
  for (int attempt = 0; attempt < 20; ++attempt) {
    Coord width = 4 * big * big * (1 + attempt);
    Coord ytop = 2 * big * width;
    Coord ybase = 4 * big * big + attempt;
    Coord cx = width / 2;
    std::vector<Point> pts;
    pts.push_back({0, ytop});                      // 0: top-left
    for (int k = 1; k <= l; ++k)                   // 1..l: top chain
      pts.push_back({cx + (2 * k - l - 1), ybase + (Coord)(2 * k - l - 1) * (2 * k - l - 1)});
    pts.push_back({width, ytop});                  // l+1: top-right
    pts.push_back({0, -ytop});                     // l+2: bottom-left
    for (int k = 1; k <= m; ++k)                   // l+3..l+m+2: bottom chain
      pts.push_back({cx + (2 * k - m - 1), -(ybase + (Coord)(2 * k - m - 1) * (2 * k - m - 1))});
    pts.push_back({width, -ytop});                 // l+m+3: bottom-right
    std::string witness;
    if (!general_position(pts, &witness)) continue;
    PointSet ps = make_point_set(pts, label);
    if (ps.hull.size() != 4) continue;
    // Top and bottom parts must each be in convex position.
    auto convex_part = [&](std::vector<int> part) {
      for (size_t k = 0; k + 2 < part.size(); ++k) {
        Orientation o = orientation(ps.points[part[k]], ps.points[part[k + 1]],
                                    ps.points[part[k + 2]]);
        Orientation want = orientation(ps.points[part[0]], ps.points[part[1]],
                                       ps.points[part.back()]);
        if (o != want) return false;
      }
      return true;
    };
    std::vector<int> top, bottom;
    top.push_back(0);
    for (int k = 1; k <= l; ++k) top.push_back(k);
    top.push_back(l + 1);
    bottom.push_back(l + 2);
    for (int k = 1; k <= m; ++k) bottom.push_back(l + 2 + k);
    bottom.push_back(l + m + 3);
    if (l > 0 && !convex_part(top)) continue;
    if (m > 0 && !convex_part(bottom)) continue;
    // Chains must not cross the diagonals of the 4-gon.
    const Point& tl = ps.points[0];
    const Point& tr = ps.points[l + 1];
    const Point& bl = ps.points[l + 2];
    const Point& br = ps.points[l + m + 3];
    bool ok = true;
    auto chain_clear = [&](const std::vector<int>& part) {
      for (size_t k = 0; k + 1 < part.size(); ++k) {
        const Point& a = ps.points[part[k]];
        const Point& b = ps.points[part[k + 1]];
        if (segments_properly_cross(a, b, tl, br) ||
            segments_properly_cross(a, b, tr, bl))
          return false;
      }
      return true;
    };
    if (!chain_clear(top) || !chain_clear(bottom)) ok = false;
    if (!ok) continue;
    return ps;
  }
  throw std::runtime_error("make_double_chain: construction failed");
}

PointSet make_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::Convex:
      return make_convex(spec.n);
    case FamilySpec::Kind::AlmostConvex:
      return make_almost_convex(spec.v, spec.hosts);
    case FamilySpec::Kind::SingleChain:
      return make_single_chain(spec.l);
    case FamilySpec::Kind::DoubleChain:
      return make_double_chain(spec.l, spec.m);
  }
  throw std::invalid_argument("make_family: unknown kind");
}

std::optional<SingleChainView> as_single_chain(const PointSet& ps) {
  if (ps.hull.size() != 3) return std::nullopt;
  int n = ps.size();
  // Small chains admit several valid tips; prefer the labeling where the
  // chain reads 0..n-2 and the tip is the last point.
  std::optional<SingleChainView> fallback;
  for (int tip : ps.hull) {
    std::vector<Point> rest;
    std::vector<int> rest_idx;
    for (int i = 0; i < n; ++i) {
      if (i == tip) continue;
      rest.push_back(ps.points[i]);
      rest_idx.push_back(i);
    }
    std::vector<int> h = convex_hull_indices(rest);
    if (h.size() != rest.size()) continue;  // chain must be in convex position
    // The chain runs between the two hull vertices of ps other than the tip.
    int a = -1, b = -1;
    for (int v : ps.hull)
      if (v != tip) (a < 0 ? a : b) = v;
    auto global = [&](int k) { return rest_idx[h[k]]; };
    int pos_a = -1;
    int sz = static_cast<int>(h.size());
    for (int k = 0; k < sz; ++k)
      if (global(k) == a) pos_a = k;
    if (pos_a < 0) continue;
    for (int dir : {1, -1}) {
      std::vector<int> chain;
      for (int s = 0; s < sz; ++s)
        chain.push_back(global(((pos_a + dir * s) % sz + sz) % sz));
      if (chain.back() != b) continue;
      // Tip must see every chain edge: the triangle (tip, c_k, c_{k+1})
      // contains no other point of the set.
      bool ok = true;
      for (int k = 0; ok && k + 1 < sz; ++k) {
        const Point& u = ps.points[chain[k]];
        const Point& w = ps.points[chain[k + 1]];
        const Point& t = ps.points[tip];
        for (int q = 0; ok && q < n; ++q) {
          if (q == tip || q == chain[k] || q == chain[k + 1]) continue;
          const Point& x = ps.points[q];
          Orientation o1 = orientation(t, u, x);
          Orientation o2 = orientation(u, w, x);
          Orientation o3 = orientation(w, t, x);
          if (o1 == o2 && o2 == o3) ok = false;  // strictly inside
        }
      }
      if (!ok) continue;
      SingleChainView view;
      view.tip = tip;
      view.chain = chain;
      view.l = sz - 2;
      bool canonical = tip == n - 1;
      for (int k = 0; canonical && k < sz; ++k)
        canonical = chain[k] == k;
      if (canonical) return view;
      if (!fallback) fallback = view;
    }
  }
  return fallback;
}

std::optional<DoubleChainView> as_double_chain(const PointSet& ps) {
  int l = -1, m = -1;
  if (sscanf(ps.label.c_str(), "double-chain l=%d m=%d", &l, &m) != 2)
    return std::nullopt;
  if (l < 0 || m < 0 || ps.size() != l + m + 4) return std::nullopt;
  DoubleChainView view;
  view.l = l;
  view.m = m;
  for (int k = 0; k <= l + 1; ++k) view.top.push_back(k);
  for (int k = l + 2; k <= l + m + 3; ++k) view.bottom.push_back(k);
  return view;
}

std::string write_point_set(const PointSet& ps) {
  std::ostringstream os;
  if (!ps.label.empty()) os << "# " << ps.label << "\n";
  os << ps.size() << "\n";
  for (const Point& p : ps.points) os << p.x << " " << p.y << "\n";
  return os.str();
}

PointSet read_point_set(std::istream& in) {
  std::string line, label;
  int n = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string c = line.substr(1);
      size_t s = c.find_first_not_of(' ');
      if (s != std::string::npos && label.empty()) label = c.substr(s);
      continue;
    }
    n = std::stoi(line);
    break;
  }
  if (n < 3) throw std::invalid_argument("read_point_set: bad header");
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    Point p;
    if (!(in >> p.x >> p.y))
      throw std::invalid_argument("read_point_set: truncated file");
    pts.push_back(p);
  }
  return make_point_set(std::move(pts), label);
}

}  // namespace ptri
