#include "ptri/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ptri/constructions.hpp"

namespace ptri {

namespace {

void add(VerificationReport& r, std::string name, bool ok,
         std::string witness = "") {
  r.checks.push_back({std::move(name), ok, std::move(witness)});
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

double rel_err(double value, double target) {
  return std::fabs(value / target - 1.0);
}

std::string num_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "# " << subject << "\n";
  for (const auto& c : checks) {
    out << (c.passed ? "PASS" : "FAIL") << " " << c.name;
    if (!c.witness.empty()) out << " -- " << c.witness;
    out << "\n";
  }
  out << (all_passed() ? "OK" : "FAILED") << " (" << checks.size()
      << " checks)\n";
  return out.str();
}

std::string VerificationReport::to_json() const {
  std::ostringstream out;
  out << "{\"subject\":\"" << json_escape(subject) << "\",\"checks\":[";
  for (size_t i = 0; i < checks.size(); ++i) {
    if (i) out << ",";
    out << "{\"name\":\"" << json_escape(checks[i].name) << "\",\"passed\":"
        << (checks[i].passed ? "true" : "false") << ",\"witness\":\""
        << json_escape(checks[i].witness) << "\"}";
  }
  out << "],\"all_passed\":" << (all_passed() ? "true" : "false") << "}";
  return out.str();
}

VerificationReport check_monotonicity(const CountTable& tbl) {
  VerificationReport r{"monotonicity: " + tbl.descriptor, {}, 0.0};
  size_t ni = tbl.interior.size();
  if (tbl.counts.size() != (size_t(1) << ni))
    throw std::invalid_argument("check_monotonicity: incomplete table");
  bool any = false;
  for (const auto& [sub, cnt] : tbl.counts) {
    uint64_t m = sub.mask;
    while (m) {
      uint64_t bit = m & -m;
      m &= m - 1;
      const BigCount& prev = tbl.counts.at({sub.mask & ~bit});
      if (cnt < prev) {
        any = true;
        add(r, "monotonicity violation", false,
            "mask=" + std::to_string(sub.mask) + " bit=" + std::to_string(bit));
      }
    }
  }
  if (!any)
    add(r, "monotonicity", true,
        std::to_string(tbl.counts.size()) + " subsets checked");
  return r;
}

VerificationReport check_triple_inequality(const CountTable& tbl) {
  VerificationReport r{"triple inequality: " + tbl.descriptor, {}, 0.0};
  size_t ni = tbl.interior.size();
  if (tbl.counts.size() != (size_t(1) << ni))
    throw std::invalid_argument("check_triple_inequality: incomplete table");
  bool any = false;
  for (const auto& [sub, cnt] : tbl.counts) {
    uint64_t m = sub.mask;
    while (m) {
      uint64_t bit = m & -m;
      m &= m - 1;
      const BigCount& prev = tbl.counts.at({sub.mask & ~bit});
      if (3 * prev < cnt) {
        any = true;
        add(r, "triple inequality violation", false,
            "mask=" + std::to_string(sub.mask) +
                " bit=" + std::to_string(bit));
      }
    }
  }
  if (!any)
    add(r, "triple inequality", true,
        std::to_string(tbl.counts.size()) + " subsets checked");
  return r;
}

VerificationReport check_single_interior_catalan(const PointSet& ps) {
  VerificationReport r{"single-interior catalan: " + ps.label, {}, 0.0};
  if (ps.interior.size() != 1)
    throw std::invalid_argument(
        "check_single_interior_catalan: need exactly one interior point");
  CountTable tbl = stratify(ps);
  const BigCount& tri = tbl.counts.at({0});
  const BigCount& ppt = tbl.counts.at({1});
  BigCount expect = catalan(ps.size() - 2);
  BigCount diff = ppt - tri;
  add(r, "|PPT| - |T| = C_{n-2}, n=" + std::to_string(ps.size()),
      diff == expect,
      diff.get_str() + " vs " + expect.get_str());
  return r;
}

std::string ratio_table_csv(const std::string& family, int max_param) {
  std::ostringstream out;
  out << "family,param,interior,ratio,limit\n";
  auto emit = [&](int param, int interior, const BigCount& num,
                  const BigCount& den, const char* limit) {
    BigRational q(num);
    q /= BigRational(den);
    double val = std::pow(q.get_d(), 1.0 / interior);
    out << family << "," << param << "," << interior << "," << num_str(val)
        << "," << limit << "\n";
  };
  if (family == "double-circle") {
    for (int v = 3; v <= std::max(3, max_param); ++v)
      emit(v, v, ppt_almost_convex(v, v), t_almost_convex(v, v), "2.333333");
  } else if (family == "single-chain") {
    for (int l = 1; l <= std::max(1, max_param); ++l)
      emit(l, l, ppt_single_chain(l), catalan(l), "2.000000");
  } else if (family == "double-chain") {
    for (int l = 1; l <= std::max(1, max_param); ++l)
      emit(l, 2 * l, ppt_double_chain(l, l), triangulations_double_chain(l, l),
           "1.500000");
  } else {
    throw std::invalid_argument("ratio_table_csv: unknown family " + family);
  }
  return out.str();
}

PointSet random_general_position(int n, uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_general_position: n < 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coord(0, 1000);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<std::pair<long long, long long>> seen;
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
      long long x = coord(rng), y = coord(rng);
      if (seen.insert({x, y}).second) pts.push_back({x, y});
    }
    try {
      return make_point_set(std::move(pts), "random n=" + std::to_string(n) +
                                                " seed=" +
                                                std::to_string(seed));
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::runtime_error("random_general_position: sampling failed");
}

namespace {

uint64_t tip_mask_of(const PseudoTriangulation& t, int l) {
  uint64_t mask = 0;
  for (const Edge& e : t.graph.edges) {
    int other = -1;
    if (e.first == l + 2) other = e.second;
    else if (e.second == l + 2) other = e.first;
    else continue;
    if (other >= 1 && other <= l) mask |= uint64_t(1) << (other - 1);
  }
  return mask;
}

bool all_pointed(const PseudoTriangulation& t) {
  for (bool p : t.pointed)
    if (!p) return false;
  return true;
}

// ---- single chain --------------------------------------------------------

void scope_single_chain(VerificationReport& r) {
  for (int l = 0; l <= 6; ++l) {
    const PointSet& ps = canonical_single_chain(l);
    CountTable tips = stratify_by_tip(ps);
    uint64_t full = l == 0 ? 0 : (uint64_t(1) << l) - 1;
    bool cat_ok = tips.counts.at({0}) == catalan(l) &&
                  tips.counts.at({full}) == catalan(l + 1);
    add(r, "endpoint catalans l=" + std::to_string(l), cat_ok);
    if (l > 5) continue;
    bool eq_ok = true;
    std::string wit;
    for (const auto& [sub, cnt] : tips.counts) {
      BigCount formula = count_TW(l, sub.mask);
      long long conv = enumerate_convex_TW(l, sub.mask);
      if (cnt != formula || formula != static_cast<long>(conv)) {
        eq_ok = false;
        wit = "W mask " + std::to_string(sub.mask) + ": oracle " +
              cnt.get_str() + ", recursion " + formula.get_str() +
              ", convex " + std::to_string(conv);
        break;
      }
    }
    add(r, "theorem-6 triple equality l=" + std::to_string(l), eq_ok, wit);
    CountTable strata = stratify(ps);
    bool strat_ok = strata.total == pt_single_chain(l);
    for (const auto& [sub, cnt] : strata.counts)
      strat_ok = strat_ok && cnt == pt_W_single_chain(l, sub.mask);
    add(r, "pt strata vs lemma-5 sums l=" + std::to_string(l), strat_ok);
  }
  add(r, "tip set {1,2} at l=3 counts 9", count_TW(3, 0b11) == 9);
}

// ---- almost convex -------------------------------------------------------

void scope_almost_convex(VerificationReport& r) {
  for (int v = 3; v <= 9; ++v) {
    for (int i = 0; i <= v && v + i <= 9; ++i) {
      std::vector<int> hosts(i);
      for (int k = 0; k < i; ++k) hosts[k] = k;
      PointSet ps = make_almost_convex(v, hosts);
      CountTable strata = stratify(ps);
      uint64_t full = i == 0 ? 0 : (uint64_t(1) << i) - 1;
      bool ok = strata.counts.at({0}) == t_almost_convex(v, i) &&
                strata.counts.at({full}) == ppt_almost_convex(v, i) &&
                strata.total == pt_almost_convex(v, i);
      for (const auto& [sub, cnt] : strata.counts)
        ok = ok && cnt == s_almost_convex(v, i - sub.count(), sub.count());
      add(r,
          "almost-convex counts v=" + std::to_string(v) +
              " i=" + std::to_string(i),
          ok);
    }
  }
  bool motz_ok = true;
  for (int n = 0; n <= 20; ++n)
    motz_ok = motz_ok && t_almost_convex(3, n) == motzkin(n);
  add(r, "t(3,n) = Motzkin, n <= 20", motz_ok);

  PointSet a = make_almost_convex(5, {0, 1});
  PointSet b = make_almost_convex(5, {0, 2});
  CountTable sa = stratify(a), sb = stratify(b);
  std::vector<BigCount> ca, cb;
  for (const auto& [sub, cnt] : sa.counts) ca.push_back(cnt);
  for (const auto& [sub, cnt] : sb.counts) cb.push_back(cnt);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  add(r, "host independence (v=5, i=2)", sa.total == sb.total && ca == cb);
}

// ---- delete/move-point constructions (Lemma 2) ---------------------------

void scope_lemma2(VerificationReport& r) {
  for (int v = 3; v <= 8; ++v) {
    for (int i = 1; i <= v && v + i <= 8; ++i) {
      std::vector<int> hosts(i);
      for (int k = 0; k < i; ++k) hosts[k] = k;
      PointSet a = make_almost_convex(v, hosts);
      // p is the interior point close to hull edge (q, r) = host 0.
      int p = a.interior[0];
      int q = a.hull[0], rr = a.hull[1];
      // B: move p to q + r - p, beyond the host edge (one more hull vertex).
      std::vector<Point> bpts = a.points;
      bpts[p] = {a.points[q].x + a.points[rr].x - a.points[p].x,
                 a.points[q].y + a.points[rr].y - a.points[p].y};
      PointSet bset;
      try {
        bset = make_point_set(std::move(bpts), "moved-point");
      } catch (const std::invalid_argument& e) {
        add(r,
            "lemma-2 move-point degenerate v=" + std::to_string(v) +
                " i=" + std::to_string(i),
            false, e.what());
        continue;
      }
      // C: delete p.
      std::vector<Point> cpts;
      for (int k = 0; k < a.size(); ++k)
        if (k != p) cpts.push_back(a.points[k]);
      PointSet cset = make_point_set(std::move(cpts), "deleted-point");

      bool shape_ok = static_cast<int>(bset.hull.size()) == v + 1 &&
                      static_cast<int>(cset.hull.size()) == v;
      CountTable ta = stratify(a), tb = stratify(bset), tc = stratify(cset);
      auto tri = [](const CountTable& t) { return t.counts.at({0}); };
      auto ppt = [](const CountTable& t) {
        uint64_t full = t.interior.empty()
                            ? 0
                            : (uint64_t(1) << t.interior.size()) - 1;
        return t.counts.at({full});
      };
      bool ok = shape_ok && tri(tb) == tri(ta) + tri(tc) &&
                2 * ppt(tb) == ppt(ta) + ppt(tc) &&
                3 * tb.total == ta.total + 2 * tc.total;
      // B and C are almost-convex instances in their own right.
      ok = ok && tri(tb) == t_almost_convex(v + 1, i - 1) &&
           tri(tc) == t_almost_convex(v, i - 1) &&
           ppt(tb) == ppt_almost_convex(v + 1, i - 1) &&
           tb.total == pt_almost_convex(v + 1, i - 1) &&
           tc.total == pt_almost_convex(v, i - 1);
      add(r,
          "lemma-2 relations v=" + std::to_string(v) +
              " i=" + std::to_string(i),
          ok);
    }
  }
}

// ---- double chain --------------------------------------------------------

void scope_double_chain(VerificationReport& r) {
  for (int l = 0; l <= 2; ++l) {
    for (int m = 0; m <= 2; ++m) {
      const PointSet& ps = canonical_double_chain(l, m);
      CountTable strata = stratify(ps);
      uint64_t full =
          l + m == 0 ? 0 : (uint64_t(1) << (l + m)) - 1;
      bool ok = strata.counts.at({0}) == triangulations_double_chain(l, m) &&
                strata.counts.at({full}) == ppt_double_chain(l, m) &&
                strata.total == pt_double_chain(l, m);
      for (const auto& [sub, cnt] : strata.counts) {
        uint64_t vm = sub.mask & ((uint64_t(1) << l) - 1);
        uint64_t wm = sub.mask >> l;
        ok = ok && cnt == pt_VW_double_chain(l, m, vm, wm);
      }
      add(r,
          "double-chain strata vs theorem-9 l=" + std::to_string(l) +
              " m=" + std::to_string(m),
          ok);

      bool rt_ok = true, transport_ok = true;
      std::string wit;
      enumerate_pt(ps, [&](const PseudoTriangulation& t) {
        DoubleChainDecomposition d = decompose_double_chain(t);
        PseudoTriangulation back =
            compose_double_chain(d.top, d.bottom, d.word);
        if (back.graph.edges != t.graph.edges) {
          rt_ok = false;
          wit = "round trip differs";
        }
        if (all_pointed(t) != (all_pointed(d.top) && all_pointed(d.bottom)))
          transport_ok = false;
        return rt_ok;
      });
      add(r,
          "decompose/compose round trip l=" + std::to_string(l) +
              " m=" + std::to_string(m),
          rt_ok, wit);
      add(r,
          "pointedness transport l=" + std::to_string(l) +
              " m=" + std::to_string(m),
          transport_ok);
    }
  }

  // Shuffle totals at l=m=1: all pairs of chain PTs with all words
  // reconstruct every PT of the double chain exactly once.
  {
    const PointSet& chain = canonical_single_chain(1);
    std::vector<PseudoTriangulation> parts;
    enumerate_pt(chain, [&](const PseudoTriangulation& t) {
      parts.push_back(t);
      return true;
    });
    const PointSet& dc = canonical_double_chain(1, 1);
    long long total = count_pt(dc);
    std::set<std::vector<Edge>> built;
    BigCount weighted = 0;
    for (const auto& top : parts) {
      for (const auto& bottom : parts) {
        int i = 0, j = 0;
        for (const Edge& e : top.graph.edges)
          if ((e.first == 3 || e.second == 3) &&
              std::min(e.first, e.second) == 1)
            ++i;
        for (const Edge& e : bottom.graph.edges)
          if ((e.first == 3 || e.second == 3) &&
              std::min(e.first, e.second) == 1)
            ++j;
        weighted += binomial(i + j + 2, i + 1);
        std::vector<int> word(i + j + 2, 1);
        for (int k = 0; k <= i; ++k) word[k] = 0;
        std::sort(word.begin(), word.end());
        do {
          PseudoTriangulation t =
              compose_double_chain(top, bottom, ShuffleWord{word});
          built.insert(t.graph.edges);
        } while (std::next_permutation(word.begin(), word.end()));
      }
    }
    add(r, "shuffle totals l=m=1",
        weighted == static_cast<long>(total) &&
            static_cast<long long>(built.size()) == total,
        "total " + std::to_string(total));
  }

  // Lemma-11 stratum bound, exact inequality.
  bool bound_ok = true;
  for (int l = 0; l <= 3 && bound_ok; ++l)
    for (int m = 0; m <= 3 && bound_ok; ++m)
      for (uint64_t vm = 0; vm < (uint64_t(1) << l) && bound_ok; ++vm)
        for (uint64_t wm = 0; wm < (uint64_t(1) << m) && bound_ok; ++wm) {
          int v = __builtin_popcountll(vm), w = __builtin_popcountll(wm);
          BigCount lhs = pt_VW_double_chain(l, m, vm, wm);
          BigCount rhs = catalan(l + 1) * catalan(m + 1) *
                         (BigCount(1) << (l + m - v - w + 2));
          for (int k = 0; k < v + w; ++k) rhs *= 3;
          if (lhs > rhs) bound_ok = false;
        }
  add(r, "lemma-11 stratum bound l,m <= 3", bound_ok);
}

// ---- bijections ----------------------------------------------------------

EndPointVector forward_vector(const EndPointVector& x, int v, int l) {
  EndPointVector y;
  int x1 = x.entries[0];
  if (x1 > v) return x;
  y.entries.push_back(x1 == 0 ? l + 1 : x1 - 1);
  for (size_t i = 1; i < x.entries.size(); ++i)
    y.entries.push_back(x.entries[i] == x1 ? v : x.entries[i]);
  return y;
}

void scope_bijection(VerificationReport& r) {
  for (int l = 1; l <= 4; ++l) {
    const PointSet& ps = canonical_single_chain(l);
    std::map<uint64_t, std::vector<PseudoTriangulation>> by_w;
    EnumerateOptions opt;
    opt.pointed_only = true;
    enumerate_pt(
        ps,
        [&](const PseudoTriangulation& t) {
          by_w[tip_mask_of(t, l)].push_back(t);
          return true;
        },
        opt);
    bool ok = true;
    std::string wit;
    for (uint64_t w = 1; w < (uint64_t(1) << l) && ok; ++w) {
      int v = __builtin_ctzll(w) + 1;
      uint64_t wv = w & (w - 1);
      const auto& source = by_w[w];
      const auto& target = by_w[wv];
      std::set<std::vector<Edge>> target_edges, images;
      for (const auto& t : target) target_edges.insert(t.graph.edges);
      std::map<EndPointVector, int> src_classes, dst_classes;
      int eligible = 0;
      for (const auto& t : source) {
        if (t.graph.has_edge(v, l + 1)) continue;
        ++eligible;
        EndPointVector x = end_point_vector(t, EndPointVariant::W);
        ++src_classes[forward_vector(x, v, l)];
        PseudoTriangulation img = bijection_forward(t);
        if (!target_edges.count(img.graph.edges)) {
          ok = false;
          wit = "image outside PPT_{W\\v}, l=" + std::to_string(l) +
                " w=" + std::to_string(w);
          break;
        }
        if (!images.insert(img.graph.edges).second) {
          ok = false;
          wit = "forward not injective, l=" + std::to_string(l);
          break;
        }
        PseudoTriangulation back = bijection_inverse(img, v);
        if (back.graph.edges != t.graph.edges) {
          ok = false;
          wit = "inverse(forward) != id, l=" + std::to_string(l);
          break;
        }
      }
      if (!ok) break;
      if (eligible != static_cast<int>(target.size()) ||
          images.size() != target_edges.size()) {
        ok = false;
        wit = "|PPT_W*| != |PPT_{W\\v}| at l=" + std::to_string(l) +
              " w=" + std::to_string(w);
        break;
      }
      for (const auto& t : target) {
        ++dst_classes[end_point_vector(t, EndPointVariant::WMinusV, v)];
        PseudoTriangulation pre = bijection_inverse(t, v);
        PseudoTriangulation again = bijection_forward(pre);
        if (again.graph.edges != t.graph.edges) {
          ok = false;
          wit = "forward(inverse) != id, l=" + std::to_string(l);
          break;
        }
      }
      if (ok && src_classes != dst_classes) {
        ok = false;
        wit = "end-point class sizes differ, l=" + std::to_string(l) +
              " w=" + std::to_string(w);
      }
    }
    add(r, "lemma-8 bijection suite l=" + std::to_string(l), ok, wit);
  }

  // Subchain product recursion through the convex-triangulation route.
  bool rec_ok = true;
  for (int l = 1; l <= 6 && rec_ok; ++l)
    for (uint64_t w = 1; w < (uint64_t(1) << l) && rec_ok; ++w) {
      int v = __builtin_ctzll(w) + 1;
      long long lhs = enumerate_convex_TW(l, w) -
                      enumerate_convex_TW(l, w & (w - 1));
      long long rhs =
          enumerate_convex_TW(v - 1, 0) * enumerate_convex_TW(l - v, w >> v);
      if (lhs != rhs) rec_ok = false;
    }
  add(r, "subchain product recursion l <= 6", rec_ok);
}

// ---- lemma-7 reconstruction ----------------------------------------------

std::vector<std::vector<Edge>> polygon_triangulations(int i, int j) {
  // Diagonal sets of the convex polygon on vertices i..j.
  if (j - i < 2) return {{}};
  std::vector<std::vector<Edge>> out;
  for (int k = i + 1; k < j; ++k) {
    for (const auto& left : polygon_triangulations(i, k)) {
      for (const auto& right : polygon_triangulations(k, j)) {
        std::vector<Edge> cur = left;
        cur.insert(cur.end(), right.begin(), right.end());
        if (k - i >= 2) cur.push_back({i, k});
        if (j - k >= 2) cur.push_back({k, j});
        out.push_back(std::move(cur));
      }
    }
  }
  return out;
}

void scope_reconstruction(VerificationReport& r) {
  for (int l = 1; l <= 5; ++l) {
    const PointSet& ps = canonical_single_chain(l);
    std::vector<PseudoTriangulation> filtered;
    EnumerateOptions opt;
    opt.pointed_only = true;
    enumerate_pt(
        ps,
        [&](const PseudoTriangulation& t) {
          int diag = 0;
          for (const Edge& e : t.graph.edges)
            if (e.second <= l + 1 && e.second - e.first >= 2 &&
                !(e.first == 0 && e.second == l + 1))
              ++diag;
          if (diag == l - 1) filtered.push_back(t);
          return true;
        },
        opt);

    bool round_ok = true;
    std::vector<long long> have(l + 2, 0);
    std::string wit;
    for (const auto& t : filtered) {
      std::vector<Edge> diag;
      std::vector<int> missing;
      for (const Edge& e : t.graph.edges)
        if (e.second <= l + 1 && e.second - e.first >= 2 &&
            !(e.first == 0 && e.second == l + 1))
          diag.push_back(e);
      for (int k = 0; k <= l; ++k)
        if (!t.graph.has_edge(k, k + 1)) missing.push_back(k);
      ++have[missing.size()];
      try {
        PseudoTriangulation rec = reconstruct_from_choice(l, diag, missing);
        if (rec.graph.edges != t.graph.edges) {
          round_ok = false;
          wit = "reconstruction differs, l=" + std::to_string(l);
        }
      } catch (const std::exception& e) {
        round_ok = false;
        wit = e.what();
      }
    }
    add(r, "lemma-7 round trip l=" + std::to_string(l), round_ok, wit);

    // Every (triangulation, missing-set) choice without a bad ear yields a
    // distinct PPT; bad-eared choices yield none.
    std::vector<long long> got(l + 2, 0);
    long long bad = 0;
    std::set<std::vector<Edge>> seen;
    bool distinct = true;
    for (const auto& diag : polygon_triangulations(0, l + 1)) {
      for (uint64_t mm = 0; mm < (uint64_t(1) << (l + 1)); ++mm) {
        std::vector<int> missing;
        for (int k = 0; k <= l; ++k)
          if ((mm >> k) & 1) missing.push_back(k);
        try {
          PseudoTriangulation rec = reconstruct_from_choice(l, diag, missing);
          ++got[missing.size()];
          distinct = distinct && seen.insert(rec.graph.edges).second;
        } catch (const BadEarError&) {
          ++bad;
        }
      }
    }
    add(r, "lemma-7 counting l=" + std::to_string(l),
        distinct && got == have,
        "bad ears rejected: " + std::to_string(bad));
  }
}

// ---- conjecture sweep ----------------------------------------------------

void scope_random(VerificationReport& r, uint64_t seed) {
  long long mono_fail = 0, triple_fail = 0;
  std::string wit;
  auto sweep = [&](const PointSet& ps) {
    CountTable tbl = stratify(ps);
    VerificationReport m = check_monotonicity(tbl);
    VerificationReport t = check_triple_inequality(tbl);
    if (!m.all_passed()) {
      ++mono_fail;
      if (wit.empty()) wit = "monotonicity: " + ps.label;
    }
    if (!t.all_passed()) {
      ++triple_fail;
      if (wit.empty()) wit = "triple: " + ps.label;
    }
  };

  for (int l = 0; l <= 6; ++l) sweep(canonical_single_chain(l));
  for (int v = 3; v <= 9; ++v)
    for (int i = 0; i <= v && v + i <= 9; ++i) {
      std::vector<int> hosts(i);
      for (int k = 0; k < i; ++k) hosts[k] = k;
      sweep(make_almost_convex(v, hosts));
    }
  for (int l = 0; l <= 5; ++l)
    for (int m = 0; l + m <= 5; ++m) sweep(canonical_double_chain(l, m));
  add(r, "conjecture sweep, families n <= 9",
      mono_fail == 0 && triple_fail == 0, wit);

  mono_fail = triple_fail = 0;
  wit.clear();
  for (int k = 0; k < 50; ++k) {
    int n = 5 + k % 4;
    sweep(random_general_position(n, seed + k));
  }
  add(r, "conjecture sweep, 50 random sets n <= 8",
      mono_fail == 0 && triple_fail == 0, wit);

  for (int n = 5; n <= 7; ++n) {
    VerificationReport a =
        check_single_interior_catalan(make_almost_convex(n - 1, {0}));
    VerificationReport b =
        check_single_interior_catalan(make_almost_convex(n - 1, {2}));
    add(r, "single-interior catalan n=" + std::to_string(n),
        a.all_passed() && b.all_passed());
  }
}

// ---- pure arithmetic identities ------------------------------------------

void scope_identities(VerificationReport& r) {
  bool e_rec = true, e_row = true, e_edge = true;
  for (int l = 0; l + 2 <= 15; ++l)
    for (int m = 0; l + m + 2 <= 15; ++m)
      e_rec = e_rec && E_rook(l + 1, m + 1) == 2 * E_rook(l, m + 1) +
                                                   2 * E_rook(l + 1, m) -
                                                   3 * E_rook(l, m);
  for (int n = 0; n <= 15; ++n) {
    BigCount sum = 0;
    for (int l = 0; l <= n; ++l) sum += E_rook(l, n - l);
    BigCount p3 = 1, p2 = 1;
    for (int k = 0; k <= n; ++k) p3 *= 3, p2 *= 2;
    e_row = e_row && sum == 2 * (p3 - p2);
  }
  for (int l = 1; l <= 15; ++l) {
    BigCount p2 = BigCount(1) << (l - 1);
    e_edge = e_edge && E_rook(l, 0) == (l + 4) * p2;
  }
  add(r, "E recurrence n <= 15", e_rec);
  add(r, "E row sums n <= 15", e_row);
  add(r, "E edge closed form", e_edge && E_rook(0, 0) == 2);

  bool a_ok = true;
  std::vector<BigCount> row_sums;
  for (int l = 0; l <= 10; ++l) {
    BigCount sum = 0;
    for (int i = 0; i <= l; ++i) sum += a_single_chain(l, i);
    row_sums.push_back(sum);
    BigCount alt = 0, p2 = 1;
    for (int j = 0; j <= l; ++j) {
      BigCount term = catalan(j) * p2;
      alt += ((l - j) % 2 == 0) ? term : -term;
      p2 *= 2;
    }
    alt = 2 * alt - ((l % 2 == 0) ? 1 : -1);
    a_ok = a_ok && sum == ppt_single_chain(l) && sum == alt;
    if (l >= 1) {
      BigCount p = BigCount(1) << (l + 1);
      a_ok = a_ok && sum == p * catalan(l) - row_sums[l - 1];
    }
  }
  add(r, "a_l row sums and alternating form l <= 10", a_ok);

  bool b_ok = true;
  for (int l = 0; l <= 6; ++l) {
    BigCount by_masks = 0, by_rows = 0;
    for (uint64_t w = 0; w < (uint64_t(1) << l); ++w) {
      BigCount shifted = count_TW(l, w);
      by_masks += shifted << (l - __builtin_popcountll(w));
    }
    for (int i = 0; i <= l; ++i)
      by_rows += a_single_chain(l, i) << (l - i);
    b_ok = b_ok && by_masks == pt_single_chain(l) &&
           by_rows == pt_single_chain(l);
  }
  add(r, "b_l subset sums l <= 6", b_ok);

  bool mono_ok = true, sandwich_ok = true, cor8_ok = true;
  for (int l = 0; l <= 7; ++l)
    for (uint64_t w = 0; w < (uint64_t(1) << l); ++w) {
      BigCount cur = count_TW(l, w);
      sandwich_ok =
          sandwich_ok && cur >= catalan(l) && cur <= catalan(l + 1);
      int bits = __builtin_popcountll(w);
      BigCount lo = catalan(l) << bits, hi = catalan(l + 1) << bits;
      BigCount ptw = pt_W_single_chain(l, w);
      cor8_ok = cor8_ok && ptw >= lo && ptw <= hi;
      for (int k = 1; k <= l; ++k) {
        uint64_t bit = uint64_t(1) << (k - 1);
        if (w & bit) continue;
        mono_ok = mono_ok && count_TW(l, w | bit) > cur;
      }
    }
  add(r, "corollary-7 strict monotonicity l <= 7", mono_ok);
  add(r, "corollary-7 catalan sandwich l <= 7", sandwich_ok);
  add(r, "corollary-8 pt_W sandwich l <= 7", cor8_ok);

  // Corollary-3 sandwich for the s array, exact rationals.
  bool s_ok = true;
  for (int v = 3; v <= 9 && s_ok; ++v)
    for (int j = 0; j <= 4 && s_ok; ++j)
      for (int k = 0; j + k <= 4 && s_ok; ++k) {
        BigCount den = 1;
        for (int q = 0; q < v; ++q) den *= 4;
        for (int q = 0; q < j; ++q) den *= 3;
        for (int q = 0; q < k; ++q) den *= 7;
        BigRational val(s_almost_convex(v, j, k), den);
        val.canonicalize();
        bool lo_seen = false;
        BigRational lo, hi;
        for (int n = j; n <= v + j + k - 3; ++n) {
          BigCount d3 = 64;
          for (int q = 0; q < n; ++q) d3 *= 3;
          BigRational ref(motzkin(n), d3);
          ref.canonicalize();
          if (!lo_seen || ref < lo) lo = ref;
          if (!lo_seen || ref > hi) hi = ref;
          lo_seen = true;
        }
        s_ok = lo_seen && val >= lo && val <= hi;
      }
  add(r, "corollary-3 sandwich for s(v,j,k)", s_ok);

  bool shuffle_ok = true;
  for (int l = 0; l <= 5; ++l)
    for (int m = 0; m <= 5; ++m)
      for (int v = 0; v < l; ++v)
        for (int w = 0; w <= m; ++w)
          for (int i = 0; i <= v; ++i)
            for (int j = 0; j <= w; ++j)
              shuffle_ok = shuffle_ok &&
                           shuffle_coeff(l, m, v, w, i, j) ==
                               shuffle_coeff(l, m, v + 1, w, i + 1, j);
  add(r, "shuffle coefficient shift identity", shuffle_ok);
}

// ---- asymptotics ---------------------------------------------------------

void scope_asymptotics(VerificationReport& r) {
  auto to_mpf = [](const BigCount& z) { return mpf_class(z, 512); };
  const double pi = 3.14159265358979323846;

  {
    BigCount p3 = 1;
    for (int k = 0; k < 2000; ++k) p3 *= 3;
    mpf_class val = to_mpf(motzkin(2000)) / to_mpf(p3);
    double d = val.get_d() * std::pow(2000.0, 1.5);
    double target = std::sqrt(27.0 / (4.0 * pi));
    add(r, "Motzkin growth constant at n=2000", rel_err(d, target) <= 0.02,
        num_str(d) + " vs " + num_str(target));
  }
  {
    BigCount den = (BigCount(1) << 201) * catalan(200);
    BigRational q(ppt_single_chain(200), den);
    q.canonicalize();
    double d = q.get_d();
    add(r, "a_l ratio 8/9 at l=200", rel_err(d, 8.0 / 9.0) <= 0.005,
        num_str(d));
  }
  {
    BigCount den = catalan(200);
    BigCount p3 = 1;
    for (int k = 0; k < 201; ++k) p3 *= 3;
    BigRational q(2 * pt_single_chain(200), p3 * den);
    q.canonicalize();
    double d = q.get_d();
    add(r, "b_l ratio 24/25 at l=200", rel_err(d, 24.0 / 25.0) <= 0.005,
        num_str(d));
  }
  {
    BigCount p9 = 1;
    for (int k = 0; k < 500; ++k) p9 *= 9;
    mpf_class val = to_mpf(E_rook(500, 500)) / to_mpf(p9);
    double d = val.get_d() * std::sqrt(pi * 500.0);
    // The diagonal generating function (1 + sqrt((1-t)/(1-9t)))/2 carries the
    // sequence shifted by one, so the square-root singularity contributes
    // sqrt(2/9) * 9^(m+1), i.e. a constant of 3*sqrt(2) in this normalization.
    double target = 3.0 * std::sqrt(2.0);
    add(r, "E diagonal growth at m=500", rel_err(d, target) <= 0.02,
        num_str(d) + " vs " + num_str(target));
  }
  {
    BigRational q(ppt_almost_convex(60, 60), t_almost_convex(60, 60));
    q.canonicalize();
    double d = std::pow(q.get_d(), 1.0 / 60);
    add(r, "double-circle ratio 7/3 at v=60", rel_err(d, 7.0 / 3.0) <= 0.01,
        num_str(d));
  }
  {
    BigRational q(ppt_single_chain(60), catalan(60));
    q.canonicalize();
    double d = std::pow(q.get_d(), 1.0 / 60);
    add(r, "single-chain ratio 2 at l=60", rel_err(d, 2.0) <= 0.01,
        num_str(d));
  }
  {
    // Constant factors hidden in the Theta bound decay only like c^(1/n), so
    // estimate the per-point ratio from one diagonal step instead.
    BigRational q40(ppt_double_chain(40, 40), triangulations_double_chain(40, 40));
    BigRational q39(ppt_double_chain(39, 39), triangulations_double_chain(39, 39));
    q40.canonicalize();
    q39.canonicalize();
    BigRational step = q40 / q39;
    double d = std::sqrt(step.get_d());
    add(r, "double-chain ratio 1.5 near l=m=40", rel_err(d, 1.5) <= 0.02,
        num_str(d));
  }
}

}  // namespace

VerificationReport f_identity_offset_report(int max_n) {
  VerificationReport r{"rook-path F identity offsets", {}, 0.0};
  auto t0 = std::chrono::steady_clock::now();

  bool spots = F_rook(0, 0) == 2 && F_rook(1, 0) == 8 && F_rook(2, 0) == 30 &&
               F_rook(3, 0) == 108 && F_rook(1, 1) == 38;
  add(r, "F defining-sum spot values", spots);

  bool rec = true;
  for (int l = 0; l + 2 <= max_n; ++l)
    for (int m = 0; l + m + 2 <= max_n; ++m)
      rec = rec && F_rook(l + 1, m + 1) == 3 * F_rook(l, m + 1) +
                                               3 * F_rook(l + 1, m) -
                                               5 * F_rook(l, m);
  add(r, "F recurrence holds as printed", rec);

  std::string row_holds;
  for (int delta = -2; delta <= 2; ++delta) {
    bool ok = true;
    for (int n = 0; n <= max_n && ok; ++n) {
      int e = n - 1 + delta;
      if (e < 0) {
        ok = false;
        break;
      }
      BigCount sum = 0;
      for (int l = 0; l <= n; ++l) sum += F_rook(l, n - l);
      BigCount p5 = 1, p3 = 1;
      for (int k = 0; k < e; ++k) p5 *= 5, p3 *= 3;
      ok = sum == p5 - p3;
    }
    if (ok) row_holds += (row_holds.empty() ? "" : ",") + std::to_string(delta);
  }
  add(r, "F row-sum identity offset search", row_holds == "2",
      "holds at delta in {" + row_holds + "}");

  std::string edge_holds;
  for (int delta = -2; delta <= 2; ++delta) {
    bool ok = true;
    int tested = 0;
    for (int l = 0; l <= max_n && ok; ++l) {
      int e = l + delta - 1;
      if (e < 0) continue;
      ++tested;
      BigCount p3 = 1;
      for (int k = 0; k < e; ++k) p3 *= 3;
      ok = F_rook(l, 0) == (l + delta + 6) * p3;
    }
    if (ok && tested > 0)
      edge_holds += (edge_holds.empty() ? "" : ",") + std::to_string(delta);
  }
  add(r, "F edge identity offset search", edge_holds.empty(),
      edge_holds.empty() ? "no offset matches (l+6)3^(l-1)"
                         : "holds at delta in {" + edge_holds + "}");

  bool closed = true;
  for (int l = 1; l <= max_n; ++l) {
    BigCount p3 = 1;
    for (int k = 0; k < l - 1; ++k) p3 *= 3;
    closed = closed && F_rook(l, 0) == 2 * (l + 3) * p3;
  }
  add(r, "F edge matches 2(l+3)3^(l-1)", closed);

  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  return r;
}

VerificationReport cross_validate(const std::string& scope, uint64_t seed) {
  VerificationReport r{"cross-validate: " + scope, {}, 0.0};
  auto t0 = std::chrono::steady_clock::now();
  bool known = false;
  auto want = [&](const char* s) {
    bool hit = scope == s || scope == "all";
    known = known || scope == s;
    return hit;
  };
  if (want("single-chain")) scope_single_chain(r);
  if (want("almost-convex")) {
    scope_almost_convex(r);
    scope_lemma2(r);
  }
  if (want("double-chain")) scope_double_chain(r);
  if (want("bijection")) scope_bijection(r);
  if (want("reconstruction")) scope_reconstruction(r);
  if (want("random")) scope_random(r, seed);
  if (want("identities")) {
    scope_identities(r);
    for (auto& c : f_identity_offset_report().checks)
      r.checks.push_back(std::move(c));
  }
  if (want("asymptotics")) scope_asymptotics(r);
  if (!known && scope != "all")
    throw std::invalid_argument("cross_validate: unknown scope " + scope);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  return r;
}

}  // namespace ptri
