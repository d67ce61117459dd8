#include "ptri/ptgraph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace ptri {

std::vector<int> InteriorSubset::members(const PointSet& ps) const {
  std::vector<int> out;
  for (size_t k = 0; k < ps.interior.size(); ++k)
    if (contains(static_cast<int>(k))) out.push_back(ps.interior[k]);
  return out;
}

InteriorSubset InteriorSubset::from_members(const PointSet& ps,
                                            const std::vector<int>& pts) {
  InteriorSubset s;
  for (int v : pts) {
    int pos = ps.interior_pos(v);
    if (pos < 0)
      throw std::invalid_argument("InteriorSubset: point " +
                                  std::to_string(v) + " is not interior");
    s.mask |= uint64_t(1) << pos;
  }
  return s;
}

bool PlaneGraph::has_edge(int a, int b) const {
  return std::binary_search(edges.begin(), edges.end(), make_edge(a, b));
}

namespace {

// CCW order of direction vectors starting from the positive x-axis.
bool angular_less(Coord ax, Coord ay, Coord bx, Coord by) {
  int ha = (ay > 0 || (ay == 0 && ax > 0)) ? 0 : 1;
  int hb = (by > 0 || (by == 0 && bx > 0)) ? 0 : 1;
  if (ha != hb) return ha < hb;
  __int128 cr = (__int128)ax * by - (__int128)ay * bx;
  return cr > 0;
}

// rot[v] = neighbors of v in counter-clockwise angular order.
std::vector<std::vector<int>> rotation_system(const PlaneGraph& g) {
  int n = g.ps->size();
  std::vector<std::vector<int>> rot(n);
  for (const Edge& e : g.edges) {
    rot[e.first].push_back(e.second);
    rot[e.second].push_back(e.first);
  }
  const auto& pts = g.ps->points;
  for (int v = 0; v < n; ++v) {
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
      return angular_less(pts[a].x - pts[v].x, pts[a].y - pts[v].y,
                          pts[b].x - pts[v].x, pts[b].y - pts[v].y);
    });
  }
  return rot;
}

__int128 twice_signed_area(const PointSet& ps, const std::vector<int>& walk) {
  __int128 area = 0;
  int k = static_cast<int>(walk.size());
  for (int i = 0; i < k; ++i) {
    const Point& a = ps.points[walk[i]];
    const Point& b = ps.points[walk[(i + 1) % k]];
    area += (__int128)a.x * b.y - (__int128)a.y * b.x;
  }
  return area;
}

}  // namespace

std::vector<Face> faces_of(const PlaneGraph& g) {
  const PointSet& ps = *g.ps;
  auto rot = rotation_system(g);
  std::map<std::pair<int, int>, bool> used;  // directed edges consumed
  for (const Edge& e : g.edges) {
    used[{e.first, e.second}] = false;
    used[{e.second, e.first}] = false;
  }
  std::vector<Face> faces;
  for (auto& [start, seen] : used) {
    if (seen) continue;
    std::vector<int> walk;
    int u = start.first, v = start.second;
    while (!used[{u, v}]) {
      used[{u, v}] = true;
      walk.push_back(u);
      // Next directed edge: predecessor of u in the CCW order around v,
      // which keeps the face interior on the left.
      const auto& ring = rot[v];
      int pos = static_cast<int>(
          std::find(ring.begin(), ring.end(), u) - ring.begin());
      int w = ring[(pos + static_cast<int>(ring.size()) - 1) % ring.size()];
      u = v;
      v = w;
    }
    if (twice_signed_area(ps, walk) <= 0) continue;  // outer face
    Face f;
    f.boundary = std::move(walk);
    int k = static_cast<int>(f.boundary.size());
    for (int i = 0; i < k; ++i) {
      int a = f.boundary[(i + k - 1) % k];
      int b = f.boundary[i];
      int c = f.boundary[(i + 1) % k];
      if (orientation(ps.points[a], ps.points[b], ps.points[c]) ==
          Orientation::Left)
        f.corners.push_back(b);
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

bool is_pointed(const PlaneGraph& g, int v) {
  const auto& pts = g.ps->points;
  std::vector<std::pair<Coord, Coord>> dirs;
  for (const Edge& e : g.edges) {
    int w = -1;
    if (e.first == v) w = e.second;
    else if (e.second == v) w = e.first;
    else continue;
    dirs.emplace_back(pts[w].x - pts[v].x, pts[w].y - pts[v].y);
  }
  if (dirs.size() < 2)
    throw std::invalid_argument("is_pointed: vertex " + std::to_string(v) +
                                " has degree < 2");
  std::sort(dirs.begin(), dirs.end(), [](const auto& a, const auto& b) {
    return angular_less(a.first, a.second, b.first, b.second);
  });
  // A gap from dir i to its CCW successor exceeds pi iff their cross
  // product is negative (antiparallel pairs cannot occur in general
  // position).
  int k = static_cast<int>(dirs.size());
  for (int i = 0; i < k; ++i) {
    const auto& a = dirs[i];
    const auto& b = dirs[(i + 1) % k];
    __int128 cr = (__int128)a.first * b.second - (__int128)a.second * b.first;
    if (cr < 0) return true;
  }
  return false;
}

namespace {

bool fail(ValidationError* err, ValidationErrorKind kind, std::string witness) {
  if (err) *err = {kind, std::move(witness)};
  return false;
}

bool validate_impl(const PointSet& ps, const std::vector<Edge>& edges_in,
                   PseudoTriangulation& out, ValidationError* err) {
  int n = ps.size();
  std::vector<Edge> edges = edges_in;
  for (Edge& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n || e.first == e.second)
      throw std::invalid_argument("validate: edge index out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<int> degree(n, 0);
  for (const Edge& e : edges) {
    ++degree[e.first];
    ++degree[e.second];
  }
  for (int v = 0; v < n; ++v)
    if (degree[v] < 2)
      return fail(err, ValidationErrorKind::IsolatedOrDegreeOneVertex,
                  "vertex " + std::to_string(v));

  int h = static_cast<int>(ps.hull.size());
  for (int k = 0; k < h; ++k) {
    int a = ps.hull[k], b = ps.hull[(k + 1) % h];
    if (!std::binary_search(edges.begin(), edges.end(), make_edge(a, b)))
      return fail(err, ValidationErrorKind::MissingHullEdge,
                  "(" + std::to_string(std::min(a, b)) + "," +
                      std::to_string(std::max(a, b)) + ")");
  }

  int m = static_cast<int>(edges.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      if (segments_properly_cross(ps.points[e.first], ps.points[e.second],
                                  ps.points[f.first], ps.points[f.second]))
        return fail(err, ValidationErrorKind::CrossingEdges,
                    "(" + std::to_string(e.first) + "," +
                        std::to_string(e.second) + ") x (" +
                        std::to_string(f.first) + "," +
                        std::to_string(f.second) + ")");
    }
  }

  {
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n) {
      int missing = 0;
      while (seen[missing]) ++missing;
      return fail(err, ValidationErrorKind::Disconnected,
                  "vertex " + std::to_string(missing) + " unreachable");
    }
  }

  PlaneGraph g{&ps, edges};
  std::vector<Face> faces = faces_of(g);
  for (const Face& f : faces) {
    std::vector<int> b = f.boundary;
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      return fail(err, ValidationErrorKind::FaceNotPseudoTriangle,
                  "non-simple face at vertex " +
                      std::to_string(*std::adjacent_find(b.begin(), b.end())));
    if (f.corners.size() != 3) {
      std::ostringstream os;
      os << "face";
      for (int v : f.boundary) os << " " << v;
      os << " has " << f.corners.size() << " corners";
      return fail(err, ValidationErrorKind::FaceNotPseudoTriangle, os.str());
    }
  }

  std::vector<bool> pointed(n);
  int nonpointed = 0;
  for (int v = 0; v < n; ++v) {
    pointed[v] = is_pointed(g, v);
    if (!pointed[v]) ++nonpointed;
  }
  if (m != 2 * n - 3 + nonpointed)
    return fail(err, ValidationErrorKind::EdgeCountMismatch,
                std::to_string(m) + " edges vs 2n-3+x = " +
                    std::to_string(2 * n - 3 + nonpointed));
  if (static_cast<int>(faces.size()) != n - 2 + nonpointed)
    return fail(err, ValidationErrorKind::EdgeCountMismatch,
                std::to_string(faces.size()) + " faces vs n-2+x = " +
                    std::to_string(n - 2 + nonpointed));

  out.graph = std::move(g);
  out.faces = std::move(faces);
  out.signature = InteriorSubset{};
  for (size_t k = 0; k < ps.interior.size(); ++k)
    if (pointed[ps.interior[k]]) out.signature.mask |= uint64_t(1) << k;
  out.pointed = std::move(pointed);
  return true;
}

}  // namespace

std::optional<PseudoTriangulation> try_validate(const PointSet& ps,
                                                const std::vector<Edge>& edges,
                                                ValidationError* err) {
  PseudoTriangulation t;
  if (!validate_impl(ps, edges, t, err)) return std::nullopt;
  return t;
}

PseudoTriangulation validate(const PointSet& ps,
                             const std::vector<Edge>& edges) {
  ValidationError err;
  PseudoTriangulation t;
  if (!validate_impl(ps, edges, t, &err))
    throw std::invalid_argument("not a pseudo-triangulation: " +
                                describe(err.kind) + " [" + err.witness + "]");
  return t;
}

InteriorSubset tip_signature(const PseudoTriangulation& t) {
  const PointSet& ps = t.pointset();
  auto view = as_single_chain(ps);
  if (!view)
    throw std::invalid_argument("tip_signature: point set is not a single chain");
  std::vector<int> joined;
  for (const Edge& e : t.graph.edges) {
    int other = -1;
    if (e.first == view->tip) other = e.second;
    else if (e.second == view->tip) other = e.first;
    else continue;
    if (!ps.is_hull_vertex(other)) joined.push_back(other);
  }
  return InteriorSubset::from_members(ps, joined);
}

std::string describe(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::CrossingEdges: return "CrossingEdges";
    case ValidationErrorKind::MissingHullEdge: return "MissingHullEdge";
    case ValidationErrorKind::IsolatedOrDegreeOneVertex:
      return "IsolatedOrDegreeOneVertex";
    case ValidationErrorKind::Disconnected: return "Disconnected";
    case ValidationErrorKind::FaceNotPseudoTriangle:
      return "FaceNotPseudoTriangle";
    case ValidationErrorKind::EdgeCountMismatch: return "EdgeCountMismatch";
  }
  return "?";
}

std::string write_edges(const std::vector<Edge>& edges) {
  std::ostringstream os;
  for (const Edge& e : edges) os << e.first << " " << e.second << "\n";
  return os.str();
}

std::vector<Edge> read_edges(std::istream& in) {
  std::vector<Edge> edges;
  int a, b;
  while (in >> a >> b) edges.push_back(make_edge(a, b));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace ptri
