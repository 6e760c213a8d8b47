#include "runlab/exponents.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "runlab/delta.hpp"

namespace runlab {

Rational sum_of_exponents(const RunSet& runs) {
  std::vector<Rational> exponents;
  exponents.reserve(runs.size());
  for (const Run& run : runs.runs()) exponents.push_back(run.exponent());
  return sum(exponents);
}

AuditReport check_no_two_fat(std::string_view w, const RunSet& runs) {
  AuditReport report;
  report.audit = "two-fat";
  const Rational fat(5, 2);
  for (const Bucket& bucket : assign_buckets(runs)) {
    const auto& members = bucket.members;
    const int m = static_cast<int>(members.size());
    for (int i = 0; i < m; ++i) {
      const Run& a = runs[members[i]];
      if (a.exponent() < fat) continue;
      for (int j = i + 1; j < m; ++j) {
        const Run& b = runs[members[j]];
        if (Rational(b.center() - a.center()) > bucket.delta) break;
        report.bump("close_pairs_with_a_fat_member");
        if (b.exponent() >= fat) {
          report.fail("delta " + bucket.delta.str() + ": runs [" + std::to_string(a.start) +
                      ".." + std::to_string(a.end) + "] and [" + std::to_string(b.start) +
                      ".." + std::to_string(b.end) + "] are close and both have exponent >= 5/2");
        }
      }
    }
  }
  (void)w;
  return report;
}

bool overlap_bound(const Run& a, const Run& b) {
  if (a == b) {
    throw std::invalid_argument("overlap_bound: runs must be distinct");
  }
  const int lo = std::max(a.start, b.start);
  const int hi = std::min(a.end, b.end);
  const int overlap = hi >= lo ? hi - lo + 1 : 0;
  return overlap <= a.period + b.period;
}

namespace {

using i128 = __int128;

// Window index of center c in bucket i: floor((c - 1 + phase_offset) / delta)
// with delta = 3^i / 2^(i+1). phase = 1 shifts by delta/2.
long long window_of_center(int c, int bucket_index, int phase) {
  i128 pow3 = 1;
  for (int t = 0; t < bucket_index; ++t) pow3 *= 3;
  const i128 num = static_cast<i128>(c - 1) * ((i128{1} << (bucket_index + 1)) * 2) +
                   (phase == 1 ? pow3 : 0);
  return static_cast<long long>(num / (pow3 * 2));
}

}  // namespace

ExponentAudit audit_exponent_window(std::string_view w, const RunSet& runs) {
  ExponentAudit audit;
  audit.report.audit = "exp-window";
  audit.total = sum_of_exponents(runs);
  audit.bound = Rational(48) * Rational(static_cast<long long>(w.size()));
  audit.bound_ok = audit.total <= audit.bound;
  if (!audit.bound_ok) {
    audit.report.fail("sum of exponents " + audit.total.str() + " exceeds 48n = " +
                      audit.bound.str());
  }
  if (runs.empty()) return audit;

  const Rational budget(8);
  const auto families = shared_center_families(w, runs);

  for (const Bucket& bucket : assign_buckets(runs)) {
    if (bucket.members.empty()) continue;
    for (int phase = 0; phase <= 1; ++phase) {
      // Group bucket members by window index; members are center-sorted.
      std::map<long long, std::vector<int32_t>> windows;
      for (int32_t idx : bucket.members) {
        windows[window_of_center(runs[idx].center(), bucket.index, phase)].push_back(idx);
      }
      for (const auto& [window_index, members] : windows) {
        std::vector<Rational> exps;
        exps.reserve(members.size());
        for (int32_t idx : members) exps.push_back(runs[idx].exponent());
        const Rational window_sum = sum(exps);
        if (phase == 0) audit.report.bump("windows_nonempty");
        if (window_sum < budget) continue;

        ExponentWindow excess;
        excess.bucket = bucket.index;
        excess.window = window_index;
        excess.phase = phase;
        excess.sum = window_sum;
        excess.members.assign(members.begin(), members.end());

        // Exception (a): a member with exponent gamma >= 3 whose following
        // floor(2 * (gamma - 5/2)) windows hold no bucket-run center.
        for (int32_t idx : members) {
          const Rational gamma = runs[idx].exponent();
          if (gamma < Rational(3)) continue;
          const long long blocked = (Rational(2) * (gamma - Rational(5, 2))).floor_ll();
          bool windows_clear = true;
          for (long long t = 1; t <= blocked && windows_clear; ++t) {
            windows_clear = windows.find(window_index + t) == windows.end();
          }
          if (windows_clear) {
            excess.explanation = "fat-run: member [" + std::to_string(runs[idx].start) + ".." +
                                 std::to_string(runs[idx].end) + "] exponent " + gamma.str() +
                                 " blocks the next " + std::to_string(blocked) + " window(s)";
            audit.report.bump("exception_fat_run");
            break;
          }
        }

        // Exception (b): a shared-center family among the members.
        if (excess.explanation.empty()) {
          int shared_center = 0;
          for (std::size_t t = 0; t + 1 < members.size() && shared_center == 0; ++t) {
            if (runs[members[t]].center() == runs[members[t + 1]].center()) {
              shared_center = runs[members[t]].center();
            }
          }
          if (shared_center != 0) {
            for (const CenterFamily& family : families) {
              if (family.center != shared_center) continue;
              // The alpha_j cap holds for the arithmetic parametrization;
              // coincidental same-center groups fall outside it.
              for (int j = 2; family.arithmetic && j <= family.h - 1; ++j) {
                const Rational alpha = runs[family.members[j - 1]].exponent();
                const Rational cap = Rational(2) + Rational(1, j);
                if (alpha > cap) {
                  audit.report.fail("family at center " + std::to_string(family.center) +
                                    ": alpha_" + std::to_string(j) + " = " + alpha.str() +
                                    " exceeds 2 + 1/" + std::to_string(j));
                }
              }
              const Rational alpha_h = runs[family.members[family.h - 1]].exponent();
              const long long extra = std::max<long long>(0, (alpha_h - Rational(2)).floor_ll());
              excess.explanation = "shared-center family: center " +
                                   std::to_string(family.center) + ", h = " +
                                   std::to_string(family.h) + ", longest exponent " +
                                   alpha_h.str() + " accounted by " + std::to_string(extra) +
                                   " follow-up families" +
                                   (family.arithmetic ? "" : " (non-arithmetic periods)");
              audit.report.bump("exception_shared_center");
              break;
            }
          }
        }

        if (excess.explanation.empty()) {
          audit.report.fail("bucket " + std::to_string(bucket.index) + " phase " +
                            std::to_string(phase) + " window " + std::to_string(window_index) +
                            ": exponent sum " + window_sum.str() +
                            " reaches the budget of 8 with no valid exception");
        }
        audit.report.bump("excess_windows");
        audit.excesses.push_back(std::move(excess));
      }
    }
  }
  return audit;
}

ExpBound exp_bound(std::string_view w, const RunSet& runs) {
  ExpBound result;
  result.total = sum_of_exponents(runs);
  result.bound = Rational(48) * Rational(static_cast<long long>(w.size()));
  result.ok = result.total <= result.bound;
  return result;
}

}  // namespace runlab
