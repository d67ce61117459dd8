#ifndef PTRI_ENUMERATOR_HPP
#define PTRI_ENUMERATOR_HPP

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "ptri/counters.hpp"
#include "ptri/ptgraph.hpp"

namespace ptri {

struct CountTable {
  std::string descriptor;
  int n = 0;
  std::vector<int> interior;               // point indices
  std::map<InteriorSubset, BigCount> counts;
  BigCount total = 0;

  std::string to_json() const;
};

struct EnumerationBudgetExceeded : std::runtime_error {
  long long emitted;
  explicit EnumerationBudgetExceeded(long long done)
      : std::runtime_error("enumeration budget exceeded after " +
                           std::to_string(done) + " results"),
        emitted(done) {}
};

struct EnumerateOptions {
  bool pointed_only = false;          // restrict to 2n-3 edges, all pointed
  long long budget = -1;              // max results, -1 = unlimited
  int point_cap = 11;                 // refuse larger inputs
  bool parallel = false;              // deterministic top-level split
};

// Every pseudo-triangulation of ps exactly once, in a fixed deterministic
// order. Callback may return false to stop early.
void enumerate_pt(const PointSet& ps,
                  const std::function<bool(const PseudoTriangulation&)>& visit,
                  const EnumerateOptions& opts = {});

long long count_pt(const PointSet& ps, const EnumerateOptions& opts = {});

// Counts keyed by pointedness signature; all 2^|interior| keys present.
CountTable stratify(const PointSet& ps, const EnumerateOptions& opts = {});

// Pointed pseudo-triangulations of a single chain keyed by tip signature.
CountTable stratify_by_tip(const PointSet& ps, const EnumerateOptions& opts = {});

// Triangulations of the convex (l+3)-gon {0..l+1,q} in which the interior
// neighbors of q form a subset of w (w given as a bitmask over {1..l}:
// bit k-1 = chain vertex k allowed).
long long enumerate_convex_TW(int l, uint64_t w_mask);

}  // namespace ptri

#endif
