#ifndef PTRI_COUNTERS_HPP
#define PTRI_COUNTERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace ptri {

using BigCount = mpz_class;
using BigRational = mpq_class;

BigCount catalan(int n);
BigCount motzkin(int n);
BigCount binomial(long long n, long long k);

// Almost-convex families: t(v,i), s(v,j,k), ppt(v,i), pt(v,i).
BigCount t_almost_convex(int v, int i);
BigCount s_almost_convex(int v, int j, int k);
BigCount ppt_almost_convex(int v, int i);
BigCount pt_almost_convex(int v, int i);

// Single chain with l interior vertices; subsets of {1..l} are bitmasks
// with bit k-1 = chain vertex k.
BigCount count_TW(int l, uint64_t w_mask);
BigCount ppt_W_single_chain(int l, uint64_t w_mask);
BigCount pt_W_single_chain(int l, uint64_t w_mask);
BigCount a_single_chain(int l, int i);
BigCount ppt_single_chain(int l);  // a_l
BigCount pt_single_chain(int l);   // b_l

// Double chain (l top, m bottom interior vertices).
BigCount shuffle_coeff(int l, int m, int v, int w, int i, int j);
BigCount pt_VW_double_chain(int l, int m, uint64_t v_mask, uint64_t w_mask);
BigCount ppt_double_chain(int l, int m);
BigCount pt_double_chain(int l, int m);
BigCount triangulations_double_chain(int l, int m);  // C_l C_m binom(l+m+2,l+1)

// Rook-path arrays.
BigCount E_rook(int l, int m);
BigCount F_rook(int l, int m);

}  // namespace ptri

#endif
