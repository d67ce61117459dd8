#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ptri/counters.hpp"

using namespace ptri;

TEST_CASE("binomial and catalan basics") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(catalan(0) == 1);
  CHECK(catalan(5) == 42);
  CHECK(catalan(10) == 16796);
}

TEST_CASE("motzkin sequence prefix") {
  long want[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
  for (int n = 0; n <= 10; ++n) CHECK(motzkin(n) == want[n]);
}

TEST_CASE("triangulation array boundary and difference structure") {
  for (int v = 3; v <= 10; ++v) CHECK(t_almost_convex(v, 0) == catalan(v - 2));
  for (int v = 3; v <= 8; ++v)
    for (int i = 1; i <= 5; ++i)
      CHECK(t_almost_convex(v, i) ==
            t_almost_convex(v + 1, i - 1) - t_almost_convex(v, i - 1));
  for (int n = 0; n <= 12; ++n) CHECK(t_almost_convex(3, n) == motzkin(n));
}

TEST_CASE("pointed and total counts satisfy their recurrences") {
  for (int v = 3; v <= 8; ++v) {
    CHECK(ppt_almost_convex(v, 0) == catalan(v - 2));
    CHECK(pt_almost_convex(v, 0) == catalan(v - 2));
    for (int i = 1; i <= 5; ++i) {
      CHECK(ppt_almost_convex(v, i) == 2 * ppt_almost_convex(v + 1, i - 1) -
                                           ppt_almost_convex(v, i - 1));
      CHECK(pt_almost_convex(v, i) ==
            3 * pt_almost_convex(v + 1, i - 1) - 2 * pt_almost_convex(v, i - 1));
    }
  }
  CHECK(ppt_almost_convex(4, 1) == 8);
  CHECK(pt_almost_convex(4, 1) == 11);
}

TEST_CASE("strata interpolate between triangulations and pointed counts") {
  for (int v = 3; v <= 7; ++v)
    for (int j = 0; j <= 3; ++j) {
      CHECK(s_almost_convex(v, j, 0) == t_almost_convex(v, j));
      CHECK(s_almost_convex(v, 0, j) == ppt_almost_convex(v, j));
      for (int k = 0; k <= 3; ++k) {
        CHECK(s_almost_convex(v, j + 1, k) ==
              s_almost_convex(v + 1, j, k) - s_almost_convex(v, j, k));
        CHECK(s_almost_convex(v, j, k + 1) ==
              2 * s_almost_convex(v + 1, j, k) - s_almost_convex(v, j, k));
      }
    }
}

TEST_CASE("restricted chain-polygon triangulation counts") {
  for (int l = 0; l <= 8; ++l) {
    CHECK(count_TW(l, 0) == catalan(l));
    CHECK(count_TW(l, (uint64_t(1) << l) - 1) == catalan(l + 1));
  }
  CHECK(count_TW(3, 0b011) == 9);
  // Monotone in the allowed set.
  for (int l = 1; l <= 6; ++l) {
    uint64_t full = (uint64_t(1) << l) - 1;
    for (uint64_t w = 0; w < full; ++w)
      for (int b = 0; b < l; ++b)
        if (!((w >> b) & 1))
          CHECK(count_TW(l, w | (uint64_t(1) << b)) >= count_TW(l, w));
  }
}

TEST_CASE("single-chain strata sum over sub-signatures") {
  for (int l = 0; l <= 6; ++l) {
    uint64_t full = (uint64_t(1) << l) - 1;
    for (uint64_t w = 0;; ++w) {
      BigCount direct = 0;
      uint64_t s = w;
      for (;;) {
        direct += count_TW(l, s);
        if (s == 0) break;
        s = (s - 1) & w;
      }
      CHECK(pt_W_single_chain(l, w) == direct);
      if (w == full) break;
    }
  }
}

TEST_CASE("single-chain aggregate counts") {
  BigCount a_row[] = {1, 3, 13, 67, 381, 2307};
  BigCount b_row[] = {1, 4, 25, 190, 1606, 14506};
  for (int l = 0; l <= 5; ++l) {
    CHECK(ppt_single_chain(l) == a_row[l]);
    CHECK(pt_single_chain(l) == b_row[l]);
    BigCount by_parts = 0;
    for (int i = 0; i <= l; ++i) by_parts += a_single_chain(l, i);
    CHECK(by_parts == a_row[l]);
  }
  CHECK(a_single_chain(4, 2) == 135);
  CHECK(a_single_chain(5, 3) == 770);
  // a_l = 2^{l+1} C_l - a_{l-1};  2 b_l = 3^{l+1} C_l - b_{l-1}.
  for (int l = 1; l <= 10; ++l) {
    CHECK(ppt_single_chain(l) ==
          (BigCount(1) << (l + 1)) * catalan(l) - ppt_single_chain(l - 1));
    BigCount p3 = 1;
    for (int k = 0; k <= l; ++k) p3 *= 3;
    CHECK(2 * pt_single_chain(l) == p3 * catalan(l) - pt_single_chain(l - 1));
  }
}

TEST_CASE("double-chain counts") {
  CHECK(triangulations_double_chain(2, 2) == 80);
  for (int l = 0; l <= 4; ++l)
    for (int m = 0; m <= 4; ++m)
      CHECK(triangulations_double_chain(l, m) ==
            catalan(l) * catalan(m) * binomial(l + m + 2, l + 1));
  // Aggregates agree with the subset sums they abbreviate.
  for (int l = 0; l <= 3; ++l)
    for (int m = 0; m <= 3; ++m) {
      BigCount ppt_sum = 0, pt_sum = 0;
      uint64_t fl = (uint64_t(1) << l) - 1, fm = (uint64_t(1) << m) - 1;
      for (uint64_t v = 0;; ++v) {
        for (uint64_t w = 0;; ++w) {
          int pv = __builtin_popcountll(v), pw = __builtin_popcountll(w);
          ppt_sum += binomial(pv + pw + 2, pv + 1) * count_TW(l, v) *
                     count_TW(m, w);
          pt_sum += pt_VW_double_chain(l, m, v, w);
          if (w == fm) break;
        }
        if (v == fl) break;
      }
      CHECK(ppt_double_chain(l, m) == ppt_sum);
      CHECK(pt_double_chain(l, m) == pt_sum);
    }
}

TEST_CASE("rook-path tables") {
  CHECK(E_rook(0, 0) == 2);
  CHECK(E_rook(1, 0) == 5);
  CHECK(E_rook(1, 1) == 14);
  for (int l = 0; l <= 10; ++l) CHECK(E_rook(l, 0) == (l + 4) * (BigCount(1) << l) / 2);
  for (int l = 0; l <= 8; ++l)
    for (int m = 0; m <= 8; ++m)
      CHECK(E_rook(l + 1, m + 1) ==
            2 * E_rook(l, m + 1) + 2 * E_rook(l + 1, m) - 3 * E_rook(l, m));
  CHECK(F_rook(0, 0) == 2);
  CHECK(F_rook(1, 0) == 8);
  CHECK(F_rook(2, 0) == 30);
  CHECK(F_rook(1, 1) == 38);
}
