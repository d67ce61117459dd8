#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "ptri/ptgraph.hpp"

using namespace ptri;

namespace {

std::vector<Edge> hull_edges(const PointSet& ps) {
  std::vector<Edge> out;
  int h = static_cast<int>(ps.hull.size());
  for (int k = 0; k < h; ++k)
    out.push_back(make_edge(ps.hull[k], ps.hull[(k + 1) % h]));
  return out;
}

}  // namespace

TEST_CASE("triangulated square has two triangular faces") {
  PointSet ps = make_convex(4);
  std::vector<Edge> edges = hull_edges(ps);
  edges.push_back(make_edge(ps.hull[0], ps.hull[2]));
  PseudoTriangulation t = validate(ps, edges);
  REQUIRE(t.faces.size() == 2);
  for (const Face& f : t.faces) {
    CHECK(f.boundary.size() == 3);
    CHECK(f.corners.size() == 3);
  }
  for (int v = 0; v < 4; ++v) CHECK(t.pointed[v]);
}

TEST_CASE("faces with reflex vertices still have exactly three corners") {
  // Single chain l = 2: chain polygon triangulated with the diagonal (0,2),
  // leaving one big pseudo-triangle between the chain and the tip.
  PointSet ps = make_single_chain(2);
  std::vector<Edge> edges = hull_edges(ps);
  for (Edge e : {make_edge(0, 1), make_edge(1, 2), make_edge(2, 3),
                 make_edge(0, 2)})
    edges.push_back(e);
  PseudoTriangulation t = validate(ps, edges);
  REQUIRE(t.faces.size() == 3);
  std::vector<size_t> sizes;
  for (const Face& f : t.faces) {
    sizes.push_back(f.boundary.size());
    CHECK(f.corners.size() == 3);
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{3, 3, 5});
}

TEST_CASE("validation rejects broken inputs") {
  PointSet ps = make_convex(4);
  ValidationError err;

  SUBCASE("crossing diagonals") {
    std::vector<Edge> edges = hull_edges(ps);
    edges.push_back(make_edge(ps.hull[0], ps.hull[2]));
    edges.push_back(make_edge(ps.hull[1], ps.hull[3]));
    CHECK(!try_validate(ps, edges, &err).has_value());
    CHECK(err.kind == ValidationErrorKind::CrossingEdges);
  }
  SUBCASE("missing hull edge") {
    PointSet pent = make_convex(5);
    std::vector<Edge> edges = hull_edges(pent);
    edges.pop_back();  // drop (hull[4], hull[0])
    edges.push_back(make_edge(pent.hull[0], pent.hull[2]));
    edges.push_back(make_edge(pent.hull[2], pent.hull[4]));
    CHECK(!try_validate(pent, edges, &err).has_value());
    CHECK(err.kind == ValidationErrorKind::MissingHullEdge);
  }
  SUBCASE("square without a diagonal is not a pseudo-triangle") {
    CHECK(!try_validate(ps, hull_edges(ps), &err).has_value());
    CHECK(err.kind == ValidationErrorKind::FaceNotPseudoTriangle);
  }
}

TEST_CASE("edge and face counts follow the non-pointedness excess") {
  PointSet ps = make_single_chain(2);  // n = 5, hull {0,3,4}
  // Chain polygon triangulated with diagonal (0,2); nothing joins the tip.
  std::vector<Edge> edges = hull_edges(ps);
  edges.push_back(make_edge(0, 1));
  edges.push_back(make_edge(1, 2));
  edges.push_back(make_edge(2, 3));
  edges.push_back(make_edge(0, 2));
  PseudoTriangulation t = validate(ps, edges);
  CHECK(static_cast<int>(t.graph.edges.size()) == 2 * 5 - 3);
  CHECK(static_cast<int>(t.faces.size()) == 5 - 2);
  CHECK(t.signature.count() == 2);
  CHECK(tip_signature(t).mask == 0);

  // Joining both chain vertices to the tip gives a full triangulation.
  edges.push_back(make_edge(1, 4));
  edges.push_back(make_edge(2, 4));
  PseudoTriangulation tri = validate(ps, edges);
  CHECK(static_cast<int>(tri.graph.edges.size()) == 2 * 5 - 3 + 2);
  CHECK(static_cast<int>(tri.faces.size()) == 5 - 2 + 2);
  CHECK(tri.signature.mask == 0);
}

TEST_CASE("tip signature lists chain vertices joined to the tip") {
  PointSet ps = make_single_chain(1);
  std::vector<Edge> edges = hull_edges(ps);
  edges.push_back(make_edge(0, 1));
  edges.push_back(make_edge(1, 3));
  PseudoTriangulation t = validate(ps, edges);
  CHECK(t.pointed[1]);
  CHECK(tip_signature(t).members(ps) == std::vector<int>{1});
}

TEST_CASE("edge list text round trip") {
  std::vector<Edge> edges{{0, 1}, {1, 4}, {2, 3}};
  std::istringstream in(write_edges(edges));
  CHECK(read_edges(in) == edges);
}
