#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "ptri/geom.hpp"

using namespace ptri;

TEST_CASE("orientation is exact and antisymmetric") {
  Point a{0, 0}, b{10, 0}, c{5, 7};
  CHECK(orientation(a, b, c) == Orientation::Left);
  CHECK(orientation(b, a, c) == Orientation::Right);
  CHECK(orientation(a, b, Point{20, 0}) == Orientation::Collinear);
  // Values near the 2^62 coordinate bound still give the right sign.
  Coord big = (Coord(1) << 60);
  CHECK(orientation({-big, -big}, {big, big}, {big - 1, big}) ==
        Orientation::Left);
}

TEST_CASE("proper crossing excludes shared endpoints") {
  Point a{0, 0}, b{4, 4}, c{0, 4}, d{4, 0};
  CHECK(segments_properly_cross(a, b, c, d));
  CHECK(!segments_properly_cross(a, b, a, c));
  CHECK(!segments_properly_cross(a, b, b, d));
  CHECK(!segments_properly_cross(a, Point{1, 1}, Point{2, 2}, b));
}

TEST_CASE("make_point_set rejects collinear triples") {
  CHECK_THROWS_AS(make_point_set({{0, 0}, {1, 1}, {2, 2}, {0, 5}}),
                  std::invalid_argument);
}

TEST_CASE("convex family") {
  for (int n = 3; n <= 9; ++n) {
    PointSet ps = make_convex(n);
    CHECK(ps.size() == n);
    CHECK(static_cast<int>(ps.hull.size()) == n);
    CHECK(ps.interior.empty());
  }
}

TEST_CASE("almost-convex family keeps interior points near their hull edge") {
  PointSet ps = make_almost_convex(5, {0, 2});
  CHECK(static_cast<int>(ps.hull.size()) == 5);
  CHECK(static_cast<int>(ps.interior.size()) == 2);
  CHECK(validate_closeness(ps, ps.interior[0], {ps.hull[0], ps.hull[1]}));
  CHECK(validate_closeness(ps, ps.interior[1], {ps.hull[2], ps.hull[3]}));
}

TEST_CASE("single chain structure") {
  for (int l = 0; l <= 6; ++l) {
    PointSet ps = make_single_chain(l);
    CHECK(ps.size() == l + 3);
    CHECK(static_cast<int>(ps.hull.size()) == 3);
    auto view = as_single_chain(ps);
    REQUIRE(view.has_value());
    CHECK(view->l == l);
    CHECK(static_cast<int>(view->chain.size()) == l + 2);
    CHECK(view->tip == l + 2);
  }
}

TEST_CASE("double chain structure") {
  for (int l = 0; l <= 3; ++l)
    for (int m = 0; m <= 3; ++m) {
      PointSet ps = make_double_chain(l, m);
      CHECK(ps.size() == l + m + 4);
      CHECK(static_cast<int>(ps.hull.size()) == 4);
      auto view = as_double_chain(ps);
      REQUIRE(view.has_value());
      CHECK(view->l == l);
      CHECK(view->m == m);
    }
}

TEST_CASE("point set text round trip") {
  PointSet ps = make_double_chain(2, 1);
  std::istringstream in(write_point_set(ps));
  PointSet back = read_point_set(in);
  CHECK(back.points == ps.points);
  CHECK(back.hull == ps.hull);
  CHECK(back.interior == ps.interior);
}
