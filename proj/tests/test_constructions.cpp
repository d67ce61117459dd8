#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "ptri/constructions.hpp"
#include "ptri/counters.hpp"
#include "ptri/enumerator.hpp"

using namespace ptri;

namespace {

std::vector<PseudoTriangulation> pointed_pts(const PointSet& ps) {
  std::vector<PseudoTriangulation> out;
  enumerate_pt(
      ps, [&](const PseudoTriangulation& t) { out.push_back(t); return true; },
      {.pointed_only = true});
  return out;
}

}  // namespace

TEST_CASE("canonical point sets are cached by reference") {
  const PointSet& a = canonical_single_chain(3);
  const PointSet& b = canonical_single_chain(3);
  CHECK(&a == &b);
  const PointSet& c = canonical_double_chain(2, 1);
  CHECK(&c == &canonical_double_chain(2, 1));
}

TEST_CASE("end point vector aligns with the tip signature") {
  const PointSet& ps = canonical_single_chain(3);
  for (const PseudoTriangulation& t : pointed_pts(ps)) {
    InteriorSubset w = tip_signature(t);
    EndPointVector v = end_point_vector(t, EndPointVariant::W);
    CHECK(v.entries.size() == static_cast<size_t>(w.count()));
    for (int x : v.entries) {
      CHECK(x >= 0);
      CHECK(x <= 4);
    }
  }
}

TEST_CASE("tip-removal bijection round trips") {
  for (int l = 1; l <= 3; ++l) {
    const PointSet& ps = canonical_single_chain(l);
    std::map<uint64_t, std::vector<PseudoTriangulation>> by_tip;
    for (const PseudoTriangulation& t : pointed_pts(ps))
      by_tip[tip_signature(t).mask].push_back(t);
    for (const auto& [w, group] : by_tip) {
      if (w == 0) continue;
      int v = __builtin_ctzll(w) + 1;
      int mapped = 0;
      for (const PseudoTriangulation& t : group) {
        if (t.graph.has_edge(v, l + 1)) continue;
        PseudoTriangulation img = bijection_forward(t);
        CHECK(tip_signature(img).mask == (w & (w - 1)));
        PseudoTriangulation back = bijection_inverse(img, v);
        CHECK(back.graph.edges == t.graph.edges);
        ++mapped;
      }
      // Everything in the smaller class is hit exactly once.
      CHECK(mapped ==
            static_cast<int>(by_tip.count(w & (w - 1))
                                 ? by_tip[w & (w - 1)].size()
                                 : 0));
    }
  }
}

namespace {

// All triangulations of the convex polygon on vertices lo..hi, as diagonal
// lists (boundary edges excluded). Splits on the apex of triangle (lo,·,hi).
std::vector<std::vector<Edge>> polygon_triangulations(int lo, int hi) {
  std::vector<std::vector<Edge>> out;
  if (hi - lo < 2) {
    out.push_back({});
    return out;
  }
  for (int k = lo + 1; k < hi; ++k) {
    auto left = polygon_triangulations(lo, k);
    auto right = polygon_triangulations(k, hi);
    for (const auto& a : left)
      for (const auto& b : right) {
        std::vector<Edge> all;
        if (k - lo > 1) all.push_back(make_edge(lo, k));
        if (hi - k > 1) all.push_back(make_edge(k, hi));
        all.insert(all.end(), a.begin(), a.end());
        all.insert(all.end(), b.begin(), b.end());
        out.push_back(all);
      }
  }
  return out;
}

}  // namespace

TEST_CASE("reconstruction hits each compatible pointed object exactly once") {
  for (int l = 1; l <= 3; ++l) {
    // Every (polygon triangulation, missing chain edges) pair either hits a
    // bad ear or yields a distinct pointed pseudo-triangulation whose chain
    // polygon restricts to that triangulation.
    std::vector<std::vector<Edge>> diags = polygon_triangulations(0, l + 1);
    CHECK(diags.size() == catalan(l).get_ui());
    std::set<std::vector<Edge>> built;
    int successes = 0;
    for (const auto& d : diags) {
      std::vector<Edge> tri = d;
      for (int k = 0; k <= l; ++k) tri.push_back(make_edge(k, k + 1));
      tri.push_back(make_edge(0, l + 1));
      std::sort(tri.begin(), tri.end());
      for (uint64_t s = 0; s < (uint64_t(1) << (l + 1)); ++s) {
        std::vector<int> missing;
        for (int k = 0; k <= l; ++k)
          if ((s >> k) & 1) missing.push_back(k);
        try {
          PseudoTriangulation t = reconstruct_from_choice(l, tri, missing);
          for (int k = 0; k <= l; ++k)
            CHECK(t.graph.has_edge(k, k + 1) == !((s >> k) & 1));
          ++successes;
          built.insert(t.graph.edges);
        } catch (const BadEarError&) {
        }
      }
    }
    CHECK(built.size() == static_cast<size_t>(successes));  // injectivity
    // The image is exactly the compatible objects: those with l-1 diagonals
    // inside the chain polygon. The rest contain a bad quadrangle.
    std::set<std::vector<Edge>> compatible;
    for (const PseudoTriangulation& t : pointed_pts(canonical_single_chain(l))) {
      int inner = 0;
      for (const Edge& e : t.graph.edges)
        if (e.second <= l + 1 && e.second - e.first >= 2 &&
            !(e.first == 0 && e.second == l + 1))
          ++inner;
      if (inner == l - 1) compatible.insert(t.graph.edges);
    }
    CHECK(built == compatible);
  }
}

TEST_CASE("bad ears are rejected") {
  // Chain polygon of l = 2 triangulated with the ear 0,1,2; removing both
  // chain edges at vertex 1 leaves no way to repair the ear.
  std::vector<Edge> tri{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
  CHECK_THROWS_AS(reconstruct_from_choice(2, tri, {0, 1}), BadEarError);
  try {
    reconstruct_from_choice(2, tri, {0, 1});
  } catch (const BadEarError& e) {
    CHECK(e.vertex == 1);
  }
}

TEST_CASE("double chain decomposition round trips") {
  const PointSet& ps = canonical_double_chain(1, 1);
  int seen = 0;
  enumerate_pt(ps, [&](const PseudoTriangulation& t) {
    DoubleChainDecomposition d = decompose_double_chain(t);
    PseudoTriangulation back = compose_double_chain(d.top, d.bottom, d.word);
    CHECK(back.graph.edges == t.graph.edges);
    return ++seen < 40;
  });
  CHECK(seen > 0);
}
