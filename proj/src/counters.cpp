#include "ptri/counters.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace ptri {

namespace {

std::mutex memo_mutex;

BigCount binom_ui(unsigned long n, unsigned long k) {
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

BigCount binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  return binom_ui(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

BigCount catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n < 0");
  BigCount c = binom_ui(2 * static_cast<unsigned long>(n), n);
  c /= n + 1;
  return c;
}

BigCount motzkin(int n) {
  if (n < 0) throw std::invalid_argument("motzkin: n < 0");
  static std::vector<BigCount> memo;
  std::lock_guard<std::mutex> lock(memo_mutex);
  if (n < static_cast<int>(memo.size())) return memo[n];
  // M_i = t(3, i); iterate the difference scheme t(v,i) =
  // t(v+1,i-1) - t(v,i-1) on one row, row 0 holding t(v,0) = C_{v-2}
  // for v = 3 .. n+3.
  std::vector<BigCount> row(n + 1);
  for (int v = 3; v <= n + 3; ++v) row[v - 3] = catalan(v - 2);
  memo.assign(1, row[0]);
  for (int i = 1; i <= n; ++i) {
    for (int v = 0; v + i <= n; ++v) row[v] = row[v + 1] - row[v];
    memo.push_back(row[0]);
  }
  return memo[n];
}

BigCount t_almost_convex(int v, int i) {
  if (v < 3 || i < 0) throw std::invalid_argument("t_almost_convex: bad args");
  if (i == 0) return catalan(v - 2);
  static std::map<std::pair<int, int>, BigCount> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({v, i});
    if (it != memo.end()) return it->second;
  }
  BigCount r = t_almost_convex(v + 1, i - 1) - t_almost_convex(v, i - 1);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::pair{v, i}, std::move(r)).first->second;
}

BigCount s_almost_convex(int v, int j, int k) {
  if (v < 3 || j < 0 || k < 0)
    throw std::invalid_argument("s_almost_convex: bad args");
  if (j == 0 && k == 0) return catalan(v - 2);
  static std::map<std::tuple<int, int, int>, BigCount> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({v, j, k});
    if (it != memo.end()) return it->second;
  }
  BigCount r;
  if (k > 0)
    r = 2 * s_almost_convex(v + 1, j, k - 1) - s_almost_convex(v, j, k - 1);
  else
    r = s_almost_convex(v + 1, j - 1, 0) - s_almost_convex(v, j - 1, 0);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::tuple{v, j, k}, std::move(r)).first->second;
}

namespace {

BigCount almost_convex_linear(int v, int i, int c1, int c2,
                              std::map<std::pair<int, int>, BigCount>& memo) {
  // x(v,i) = c1 * x(v+1,i-1) - c2 * x(v,i-1), x(v,0) = C_{v-2}.
  if (i == 0) return catalan(v - 2);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({v, i});
    if (it != memo.end()) return it->second;
  }
  BigCount r = c1 * almost_convex_linear(v + 1, i - 1, c1, c2, memo) -
               c2 * almost_convex_linear(v, i - 1, c1, c2, memo);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::pair{v, i}, std::move(r)).first->second;
}

}  // namespace

BigCount ppt_almost_convex(int v, int i) {
  if (v < 3 || i < 0)
    throw std::invalid_argument("ppt_almost_convex: bad args");
  static std::map<std::pair<int, int>, BigCount> memo;
  return almost_convex_linear(v, i, 2, 1, memo);
}

BigCount pt_almost_convex(int v, int i) {
  if (v < 3 || i < 0) throw std::invalid_argument("pt_almost_convex: bad args");
  static std::map<std::pair<int, int>, BigCount> memo;
  return almost_convex_linear(v, i, 3, 2, memo);
}

BigCount count_TW(int l, uint64_t w_mask) {
  if (l < 0 || (l < 64 && (w_mask >> l)))
    throw std::invalid_argument("count_TW: w not within {1..l}");
  if (w_mask == 0) return catalan(l);
  static std::map<std::pair<int, uint64_t>, BigCount> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({l, w_mask});
    if (it != memo.end()) return it->second;
  }
  // v = min element; triangulations joining q to v split the polygon into
  // the chains {0..v} and {v..l+1}.
  int v = __builtin_ctzll(w_mask) + 1;
  BigCount r = count_TW(l, w_mask & (w_mask - 1)) +
               count_TW(v - 1, w_mask & ((uint64_t(1) << (v - 1)) - 1)) *
                   count_TW(l - v, w_mask >> v);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::pair{l, w_mask}, std::move(r)).first->second;
}

BigCount ppt_W_single_chain(int l, uint64_t w_mask) {
  return count_TW(l, w_mask);
}

BigCount pt_W_single_chain(int l, uint64_t w_mask) {
  BigCount total = 0;
  uint64_t s = w_mask;
  for (;;) {
    total += count_TW(l, s);
    if (s == 0) break;
    s = (s - 1) & w_mask;
  }
  return total;
}

BigCount a_single_chain(int l, int i) {
  if (l < 0 || i < 0 || i > l)
    throw std::invalid_argument("a_single_chain: need 0 <= i <= l");
  if (i == 0) return catalan(l);
  if (i == 1) return (l + 1) * catalan(l);
  static std::map<std::pair<int, int>, BigCount> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({l, i});
    if (it != memo.end()) return it->second;
  }
  BigCount r = binomial(l + 1, i) * catalan(l) - a_single_chain(l - 1, i - 2);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::pair{l, i}, std::move(r)).first->second;
}

BigCount ppt_single_chain(int l) {
  if (l < 0) throw std::invalid_argument("ppt_single_chain: l < 0");
  static std::vector<BigCount> memo{1};
  std::lock_guard<std::mutex> lock(memo_mutex);
  BigCount p2 = BigCount(1) << static_cast<int>(memo.size());
  while (static_cast<int>(memo.size()) <= l) {
    int k = static_cast<int>(memo.size());
    p2 <<= 1;  // 2^{k+1}
    memo.push_back(p2 * catalan(k) - memo[k - 1]);
  }
  return memo[l];
}

BigCount pt_single_chain(int l) {
  if (l < 0) throw std::invalid_argument("pt_single_chain: l < 0");
  static std::vector<BigCount> memo{1};
  std::lock_guard<std::mutex> lock(memo_mutex);
  BigCount p3 = 3;
  for (size_t k = 1; k < memo.size(); ++k) p3 *= 3;
  while (static_cast<int>(memo.size()) <= l) {
    int k = static_cast<int>(memo.size());
    p3 *= 3;  // 3^{k+1}
    BigCount b = p3 * catalan(k) - memo[k - 1];
    b /= 2;
    memo.push_back(b);
  }
  return memo[l];
}

BigCount shuffle_coeff(int l, int m, int v, int w, int i, int j) {
  if (!(0 <= i && i <= v && v <= l && 0 <= j && j <= w && w <= m))
    throw std::invalid_argument("shuffle_coeff: need i <= v <= l, j <= w <= m");
  return binomial(l - v + i + m - w + j + 2, l - v + i + 1);
}

BigCount pt_VW_double_chain(int l, int m, uint64_t v_mask, uint64_t w_mask) {
  if ((l < 64 && (v_mask >> l)) || (m < 64 && (w_mask >> m)))
    throw std::invalid_argument("pt_VW_double_chain: subset out of range");
  int v = __builtin_popcountll(v_mask);
  int w = __builtin_popcountll(w_mask);
  BigCount total = 0;
  uint64_t sv = v_mask;
  for (;;) {
    BigCount top = count_TW(l, sv);
    int i = __builtin_popcountll(sv);
    uint64_t sw = w_mask;
    for (;;) {
      int j = __builtin_popcountll(sw);
      total += shuffle_coeff(l, m, v, w, i, j) * top * count_TW(m, sw);
      if (sw == 0) break;
      sw = (sw - 1) & w_mask;
    }
    if (sv == 0) break;
    sv = (sv - 1) & v_mask;
  }
  return total;
}

BigCount ppt_double_chain(int l, int m) {
  BigCount total = 0;
  for (int i = 0; i <= l; ++i)
    for (int j = 0; j <= m; ++j)
      total += binomial(i + j + 2, i + 1) * a_single_chain(l, i) *
               a_single_chain(m, j);
  return total;
}

BigCount pt_double_chain(int l, int m) {
  // Sum of pt_VW over all V, W, grouped by the cardinalities of V, W and
  // of the tip-joined subsets: a(l,i) collects all subsets of size i.
  BigCount total = 0;
  for (int v = 0; v <= l; ++v)
    for (int w = 0; w <= m; ++w)
      for (int i = 0; i <= v; ++i)
        for (int j = 0; j <= w; ++j)
          total += binomial(l - i, v - i) * binomial(m - j, w - j) *
                   shuffle_coeff(l, m, v, w, i, j) * a_single_chain(l, i) *
                   a_single_chain(m, j);
  return total;
}

BigCount triangulations_double_chain(int l, int m) {
  return catalan(l) * catalan(m) * binomial(l + m + 2, l + 1);
}

BigCount E_rook(int l, int m) {
  if (l < 0 || m < 0) throw std::invalid_argument("E_rook: bad args");
  BigCount total = 0;
  for (int i = 0; i <= l; ++i)
    for (int j = 0; j <= m; ++j)
      total += binomial(l, i) * binomial(m, j) * binomial(i + j + 2, i + 1);
  return total;
}

BigCount F_rook(int l, int m) {
  if (l < 0 || m < 0) throw std::invalid_argument("F_rook: bad args");
  BigCount total = 0;
  for (int v = 0; v <= l; ++v)
    for (int w = 0; w <= m; ++w)
      for (int i = 0; i <= v; ++i)
        for (int j = 0; j <= w; ++j)
          total += binomial(l, v) * binomial(m, w) * binomial(v, i) *
                   binomial(w, j) * binomial(l + m - i - j + 2, l - i + 1);
  return total;
}

}  // namespace ptri
