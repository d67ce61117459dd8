#ifndef PTRI_HARNESS_HPP
#define PTRI_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ptri/enumerator.hpp"

namespace ptri {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // failing parameter tuple, or informative note
};

struct VerificationReport {
  std::string subject;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Conjecture-1 check: |PT_W| >= |PT_{W\{p}}| for every W and p in W.
VerificationReport check_monotonicity(const CountTable& tbl);

// Eq.-(1) check: 3|PT_{W\{p}}| >= |PT_W| for every W and p in W.
VerificationReport check_triple_inequality(const CountTable& tbl);

// |PPT| - |T| = C_{n-2} for a set with exactly one interior point.
VerificationReport check_single_interior_catalan(const PointSet& ps);

// CSV table of (|PPT|/|T|)^{1/i} per parameter, with the limit constant of
// the family as a reference column. Families: double-circle (i = v),
// single-chain, double-chain (l = m).
std::string ratio_table_csv(const std::string& family, int max_param);

// Runs every oracle-vs-formula cross-identity in the given scope:
// "single-chain" (l <= 5), "almost-convex" (v+i <= 9),
// "double-chain" (l,m <= 2), "bijection" (l <= 4/6), "reconstruction"
// (l <= 5), "random" (seeded sweep), "identities" (pure-arithmetic),
// "asymptotics", or "all".
VerificationReport cross_validate(const std::string& scope, uint64_t seed = 1);

// Offset search for the rook-path F identities (delta in {-2..2}).
VerificationReport f_identity_offset_report(int max_n = 12);

// Uniform integer points in a box, rejection-sampled to general position.
PointSet random_general_position(int n, uint64_t seed);

}  // namespace ptri

#endif
