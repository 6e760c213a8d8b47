#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "runlab/report.hpp"
#include "runlab/runs.hpp"

// Named per-string audits. Everything here is pure; sweeps and the CLI call
// through this registry so both expose the same audit vocabulary.

namespace runlab {

enum class AuditId {
  xcheck,       // oracle/fast enumeration equivalence
  three_close,  // no >3 mutually delta-close runs without a shared center
  buckets,      // run count vs 18n, per-bucket tallies vs 3n/delta caps
  density,      // runs(w) <= n (asserted for alphabets of size <= 2)
  labels,       // every delta-close pair gets exactly one positional label
  case_i,       // forced start of the third run in case-I triples
  families,     // shared-center family structure, exponent and gap claims
  two_fat,      // no delta-close pair with both exponents >= 5/2
  overlap,      // interval overlap bounds for distinct-root and same-root pairs
  exp_window,   // per-window exponent budget of 8 and the 48n total
  fine_wilf,    // gcd period for every applicable period pair of w
  sync,         // primitive w occurs in ww only as prefix and suffix
  three_square, // nested square prefixes: |u| + |v| <= |x|
};

/// All audits, in the order they are reported.
const std::vector<AuditId>& all_audits();

std::string_view audit_name(AuditId id);
std::optional<AuditId> audit_from_name(std::string_view name);

struct AuditOptions {
  /// Soft cap on elementary operations for the quadratic-and-worse audits
  /// (xcheck, fine-wilf, three-square, overlap). When the estimate exceeds
  /// the budget the audit is skipped with a flag entry instead of running
  /// for hours on a large input.
  long long work_budget = 100'000'000;
};

/// Runs one audit over a string and its (already computed) enumeration.
AuditReport run_audit(AuditId id, std::string_view w, const RunSet& runs,
                      const AuditOptions& options = {});

/// Convenience: run several audits in report order.
std::vector<AuditReport> run_audits(const std::vector<AuditId>& ids, std::string_view w,
                                    const RunSet& runs, const AuditOptions& options = {});

}  // namespace runlab
