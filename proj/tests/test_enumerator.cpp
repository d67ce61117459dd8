#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "ptri/enumerator.hpp"

using namespace ptri;

namespace {

// Independent Catalan oracle: the standard convolution recurrence.
long catalan_ref(int n) {
  std::vector<long> c{1};
  for (int k = 1; k <= n; ++k) {
    long s = 0;
    for (int i = 0; i < k; ++i) s += c[i] * c[k - 1 - i];
    c.push_back(s);
  }
  return c[n];
}

// Independent Motzkin oracle: lattice paths with U/D/F steps staying >= 0.
long motzkin_ref(int n) {
  std::vector<long> h(n + 2, 0);
  h[0] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<long> nx(n + 2, 0);
    for (int y = 0; y <= n; ++y) {
      if (!h[y]) continue;
      nx[y] += h[y];
      nx[y + 1] += h[y];
      if (y > 0) nx[y - 1] += h[y];
    }
    h = nx;
  }
  return h[0];
}

}  // namespace

TEST_CASE("convex polygons admit only triangulations") {
  for (int n = 3; n <= 9; ++n) {
    PointSet ps = make_convex(n);
    CHECK(count_pt(ps) == catalan_ref(n - 2));
    long long pointed = count_pt(ps, {.pointed_only = true});
    CHECK(pointed == catalan_ref(n - 2));
  }
}

TEST_CASE("every enumerated object is a distinct valid pseudo-triangulation") {
  PointSet ps = make_single_chain(2);
  std::vector<std::vector<Edge>> seen;
  enumerate_pt(ps, [&](const PseudoTriangulation& t) {
    validate(ps, t.graph.edges);  // throws if inconsistent
    seen.push_back(t.graph.edges);
    return true;
  });
  std::vector<std::vector<Edge>> sorted = seen;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(static_cast<long long>(seen.size()) == count_pt(ps));

  // Deterministic order: a second run replays the same sequence.
  std::vector<std::vector<Edge>> again;
  enumerate_pt(ps, [&](const PseudoTriangulation& t) {
    again.push_back(t.graph.edges);
    return true;
  });
  CHECK(again == seen);
}

TEST_CASE("parallel and serial enumeration agree") {
  PointSet ps = make_double_chain(1, 1);
  std::vector<std::vector<Edge>> serial, par;
  enumerate_pt(ps, [&](const PseudoTriangulation& t) {
    serial.push_back(t.graph.edges);
    return true;
  });
  enumerate_pt(
      ps,
      [&](const PseudoTriangulation& t) {
        par.push_back(t.graph.edges);
        return true;
      },
      {.parallel = true});
  CHECK(par == serial);
}

TEST_CASE("budget and point cap guards") {
  PointSet ps = make_convex(6);
  CHECK_THROWS_AS(count_pt(ps, {.budget = 3}), EnumerationBudgetExceeded);
  CHECK_THROWS_AS(count_pt(make_convex(8), {.point_cap = 7}),
                  std::invalid_argument);
}

TEST_CASE("early stop via callback") {
  PointSet ps = make_convex(7);
  int seen = 0;
  enumerate_pt(ps, [&](const PseudoTriangulation&) { return ++seen < 4; });
  CHECK(seen == 4);
}

TEST_CASE("stratification partitions the total") {
  PointSet ps = make_almost_convex(4, {0});
  CountTable tbl = stratify(ps);
  CHECK(tbl.counts.size() == 2);
  BigCount sum = 0;
  for (const auto& [sub, cnt] : tbl.counts) sum += cnt;
  CHECK(sum == tbl.total);
  CHECK(tbl.total == static_cast<long>(count_pt(ps)));
  // Non-pointed stratum = the 3 triangulations; 8 pointed ones remain.
  CHECK(tbl.counts.at({0}) == 3);
  CHECK(tbl.counts.at({1}) == 8);
}

TEST_CASE("tip stratification of a tiny chain") {
  PointSet ps = make_single_chain(1);
  CountTable tbl = stratify_by_tip(ps);
  REQUIRE(tbl.counts.size() == 2);
  CHECK(tbl.counts.at({0}) == 1);   // C_1 chain-polygon triangulations
  CHECK(tbl.counts.at({1}) == 2);   // C_2 with the tip edge present
  CHECK(tbl.total == 3);
}

TEST_CASE("restricted convex triangulation counts") {
  for (int l = 0; l <= 5; ++l) {
    CHECK(enumerate_convex_TW(l, 0) == catalan_ref(l));
    uint64_t full = (uint64_t(1) << l) - 1;
    CHECK(enumerate_convex_TW(l, full) == catalan_ref(l + 1));
  }
  CHECK(enumerate_convex_TW(3, 0b011) == 9);
}

TEST_CASE("motzkin numbers count triangulations of one-interior-point sets") {
  for (int n = 0; n <= 12; ++n) CHECK(motzkin(n) == motzkin_ref(n));
}
