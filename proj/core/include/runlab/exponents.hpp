#pragma once

#include <string_view>
#include <vector>

#include "runlab/rational.hpp"
#include "runlab/report.hpp"
#include "runlab/runs.hpp"

// Sum-of-exponents analysis: the per-window exponent budget of 8 with its
// two exception mechanisms, the 2.5-pair exclusion, the interval overlap
// bound for distinct-root runs, and the 48n total.

namespace runlab {

/// Exact rational sum of the exponents of all runs.
Rational sum_of_exponents(const RunSet& runs);

/// No two delta-close runs may both have exponent >= 5/2; checked for every
/// bucket delta and every close pair. Violations are failures.
AuditReport check_no_two_fat(std::string_view w, const RunSet& runs);

/// True iff the intervals of a and b overlap by at most period_a + period_b
/// symbols. Callers must only assert this for runs with distinct primitive
/// roots. Throws std::invalid_argument on equal runs.
bool overlap_bound(const Run& a, const Run& b);

struct ExponentWindow {
  int bucket = 0;
  long long window = 0;  // index within the bucket's center partition
  int phase = 0;         // 0 = anchored at position 1, 1 = slid by delta/2
  Rational sum;
  std::vector<int32_t> members;
  std::string explanation;  // empty while unexplained
};

struct ExponentAudit {
  Rational total;
  Rational bound;  // 48n
  bool bound_ok = false;
  std::vector<ExponentWindow> excesses;  // windows with sum >= 8
  AuditReport report;

  bool passed() const { return bound_ok && report.passed(); }
};

/// Partitions each bucket's centers into consecutive windows of length
/// delta_i (anchored at position 1; a second pass slides the phase by
/// delta/2 as a robustness check). Window exponent sums must stay below 8;
/// any excess must be explained by one of the two exception mechanisms:
///   (a) a member with exponent gamma >= 3 whose following
///       floor(2*(gamma - 5/2)) windows contain no center of a bucket-period
///       run (checked literally), or
///   (b) a shared-center family among the members, whose middle exponents
///       must obey alpha_j <= 2 + 1/j (asserted) and whose longest member
///       contributes floor(alpha_h - 2) follow-up families (recorded).
/// Unexplained excesses fail the audit.
ExponentAudit audit_exponent_window(std::string_view w, const RunSet& runs);

struct ExpBound {
  Rational total;
  Rational bound;  // 48n
  bool ok = false;
};

/// sum_of_exponents against 48n.
ExpBound exp_bound(std::string_view w, const RunSet& runs);

}  // namespace runlab
