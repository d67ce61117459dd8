#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ptri/constructions.hpp"
#include "ptri/harness.hpp"

using namespace ptri;

TEST_CASE("report formatting") {
  VerificationReport r{"demo", {{"ok", true, ""}, {"bad", false, "x=3"}}, 1.5};
  CHECK(!r.all_passed());
  std::string text = r.to_text();
  CHECK(text.find("PASS ok") != std::string::npos);
  CHECK(text.find("FAIL bad") != std::string::npos);
  CHECK(text.find("x=3") != std::string::npos);
  // Serialized output carries no timing, so repeated runs are identical.
  CHECK(text.find("1.5") == std::string::npos);
  CHECK(r.to_json().find("1.5") == std::string::npos);
}

TEST_CASE("monotonicity and triple inequality hold on small families") {
  for (const PointSet* ps :
       {&canonical_single_chain(3), &canonical_double_chain(1, 1)}) {
    CountTable tbl = stratify(*ps);
    CHECK(check_monotonicity(tbl).all_passed());
    CHECK(check_triple_inequality(tbl).all_passed());
  }
}

TEST_CASE("monotonicity checker rejects incomplete tables") {
  CountTable tbl = stratify(canonical_single_chain(2));
  tbl.counts.erase(tbl.counts.begin());
  CHECK_THROWS_AS(check_monotonicity(tbl), std::invalid_argument);
}

TEST_CASE("single interior point sets gain a Catalan number") {
  CHECK(check_single_interior_catalan(make_almost_convex(4, {0})).all_passed());
  CHECK(check_single_interior_catalan(make_almost_convex(5, {1})).all_passed());
}

TEST_CASE("random point sets are reproducible and in general position") {
  PointSet a = random_general_position(7, 42);
  PointSet b = random_general_position(7, 42);
  CHECK(a.points == b.points);
  PointSet c = random_general_position(7, 43);
  CHECK(a.points != c.points);
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      for (int k = j + 1; k < a.size(); ++k)
        CHECK(orientation(a.points[i], a.points[j], a.points[k]) !=
              Orientation::Collinear);
}

TEST_CASE("ratio table layout") {
  std::string csv = ratio_table_csv("single-chain", 5);
  CHECK(csv.rfind("family,param,interior,ratio,limit", 0) == 0);
  CHECK(csv.find("single-chain") != std::string::npos);
  CHECK_THROWS_AS(ratio_table_csv("nope", 3), std::invalid_argument);
}

TEST_CASE("cross validation rejects unknown scopes") {
  CHECK_THROWS_AS(cross_validate("nope"), std::invalid_argument);
}
