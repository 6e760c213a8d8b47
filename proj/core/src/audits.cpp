#include "runlab/audits.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "runlab/delta.hpp"
#include "runlab/exponents.hpp"
#include "runlab/explorer.hpp"
#include "runlab/periods.hpp"

namespace runlab {

namespace {

constexpr std::array<std::pair<AuditId, std::string_view>, 13> kAuditNames{{
    {AuditId::xcheck, "xcheck"},
    {AuditId::three_close, "three-close"},
    {AuditId::buckets, "buckets"},
    {AuditId::density, "density"},
    {AuditId::labels, "labels"},
    {AuditId::case_i, "case-i"},
    {AuditId::families, "families"},
    {AuditId::two_fat, "two-fat"},
    {AuditId::overlap, "overlap"},
    {AuditId::exp_window, "exp-window"},
    {AuditId::fine_wilf, "fine-wilf"},
    {AuditId::sync, "sync"},
    {AuditId::three_square, "three-square"},
}};

std::string interval_str(const Run& run) {
  return "[" + std::to_string(run.start) + ".." + std::to_string(run.end) + "]";
}

int distinct_symbols(std::string_view w) {
  std::array<bool, 256> seen{};
  int count = 0;
  for (unsigned char c : w) {
    if (!seen[c]) {
      seen[c] = true;
      ++count;
    }
  }
  return count;
}

AuditReport audit_xcheck(std::string_view w, const AuditOptions& options) {
  AuditReport report;
  report.audit = "xcheck";
  const long long n = static_cast<long long>(w.size());
  if (n * n > options.work_budget) {
    report.flag("skipped: quadratic oracle on n = " + std::to_string(n) +
                " exceeds the work budget");
    return report;
  }
  const RunSet oracle = enumerate_runs_oracle(w);
  const RunSet fast = enumerate_runs_fast(w);
  report.counters["oracle_runs"] = oracle.size();
  report.counters["fast_runs"] = fast.size();
  if (oracle == fast) return report;
  // Report the first differing record.
  const auto& a = oracle.runs();
  const auto& b = fast.runs();
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  std::string detail = "enumerations differ at record " + std::to_string(i) + ": oracle has ";
  detail += i < a.size() ? interval_str(a[i]) + " p=" + std::to_string(a[i].period) : "nothing";
  detail += ", fast has ";
  detail += i < b.size() ? interval_str(b[i]) + " p=" + std::to_string(b[i].period) : "nothing";
  report.fail(std::move(detail));
  return report;
}

AuditReport audit_buckets(std::string_view w, const RunSet& runs) {
  AuditReport report;
  report.audit = "buckets";
  const CountBound bound = count_bound(w, runs);
  report.counters["total_runs"] = bound.total;
  report.counters["bound_18n"] = static_cast<long long>(18 * w.size());
  long long in_buckets = 0;
  for (const auto& tally : bound.buckets) {
    if (tally.count == 0) continue;
    in_buckets += tally.count;
    report.counters["bucket_" + std::to_string(tally.index)] = tally.count;
    report.info("bucket " + std::to_string(tally.index) + " (delta " + tally.delta.str() +
                "): " + std::to_string(tally.count) + " runs, cap " + tally.cap.str());
    if (Rational(tally.count) > tally.cap) {
      // The 3n/delta window count is waived exactly where shared-center
      // families take over the accounting, so this is reported, not failed;
      // only the 18n total is asserted.
      report.bump("buckets_over_cap");
      report.flag("bucket " + std::to_string(tally.index) + " holds " +
                  std::to_string(tally.count) + " runs, above the per-window cap " +
                  tally.cap.str() + " (shared-center accounting applies)");
    }
  }
  if (in_buckets != bound.total) {
    report.fail("bucket partition lost runs: " + std::to_string(in_buckets) + " of " +
                std::to_string(bound.total));
  }
  if (!bound.ok) {
    report.fail("run count " + std::to_string(bound.total) + " exceeds 18n = " +
                bound.bound.str());
  }
  return report;
}

AuditReport audit_density(std::string_view w, const RunSet& runs) {
  AuditReport report;
  report.audit = "density";
  const long long n = static_cast<long long>(w.size());
  report.counters["runs"] = runs.size();
  report.counters["n"] = n;
  if (runs.size() > n) {
    if (distinct_symbols(w) <= 2) {
      report.fail("binary string with " + std::to_string(runs.size()) + " runs on length " +
                  std::to_string(n));
    } else {
      report.flag("run count " + std::to_string(runs.size()) + " exceeds n = " +
                  std::to_string(n) + " (alphabet > 2, recorded only)");
    }
  }
  return report;
}

// Calls fn(a_idx, b_idx) for every delta-close pair of the bucket, stopping
// once the shared work budget runs out.
template <typename Fn>
void for_each_close_pair(const RunSet& runs, const Bucket& bucket, long long& budget,
                         Fn&& fn) {
  const auto& members = bucket.members;
  const int m = static_cast<int>(members.size());
  for (int i = 0; i < m && budget > 0; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (Rational(runs[members[j]].center() - runs[members[i]].center()) > bucket.delta) {
        break;
      }
      if (--budget < 0) return;
      fn(members[i], members[j]);
    }
  }
}

AuditReport audit_labels(std::string_view, const RunSet& runs, const AuditOptions& options) {
  AuditReport report;
  report.audit = "labels";
  long long budget = options.work_budget;
  for (const Bucket& bucket : assign_buckets(runs)) {
    for_each_close_pair(runs, bucket, budget, [&](int32_t a, int32_t b) {
      report.bump("close_pairs");
      try {
        report.bump(std::string("case_") + std::string(pair_case_name(
                        classify_pair(runs[a], runs[b]))));
      } catch (const std::exception& e) {
        report.fail(std::string("classification failed for ") + interval_str(runs[a]) +
                    " / " + interval_str(runs[b]) + ": " + e.what());
      }
    });
  }
  if (budget <= 0) report.flag("truncated: close-pair count exceeds the work budget");
  return report;
}

AuditReport audit_case_i(std::string_view, const RunSet& runs, const AuditOptions& options) {
  AuditReport report;
  report.audit = "case-i";
  long long budget = options.work_budget;
  for (const Bucket& bucket : assign_buckets(runs)) {
    const auto& members = bucket.members;
    const int m = static_cast<int>(members.size());
    // Centers sit on a line, so a mutually close triple is any center-sorted
    // (i, j, k) whose outer pair is within delta; every triple arises from
    // exactly one outer pair.
    for (int i = 0; i < m && budget > 0; ++i) {
      for (int k = i + 2; k < m && budget > 0; ++k) {
        if (Rational(runs[members[k]].center() - runs[members[i]].center()) > bucket.delta) {
          break;
        }
        for (int j = i + 1; j < k; ++j) {
          if (--budget < 0) break;
          // Order by (period, start): x smallest, z largest.
          std::array<int32_t, 3> by_period{members[i], members[j], members[k]};
          std::sort(by_period.begin(), by_period.end(), [&](int32_t a, int32_t b) {
            if (runs[a].period != runs[b].period) return runs[a].period < runs[b].period;
            return runs[a].start < runs[b].start;
          });
          const Run& x = runs[by_period[0]];
          const Run& y = runs[by_period[1]];
          const Run& z = runs[by_period[2]];
          report.bump("close_triples");
          const auto verdict = verify_case_i_start(x, y, z);
          if (!verdict.has_value()) continue;
          report.bump("case_i_triples");
          if (!*verdict) {
            report.fail("case-I triple " + interval_str(x) + " " + interval_str(y) + " " +
                        interval_str(z) + ": start of the longest run is not forced to i_x-(q-p)");
          }
        }
      }
    }
  }
  if (budget <= 0) report.flag("truncated: close-triple count exceeds the work budget");
  return report;
}

AuditReport audit_families(std::string_view w, const RunSet& runs,
                           const AuditOptions& options) {
  AuditReport report;
  report.audit = "families";
  const auto families = shared_center_families(w, runs);
  report.counters["families"] = static_cast<long long>(families.size());
  constexpr int kDetailCap = 50;
  int detailed = 0;
  for (const CenterFamily& family : families) {
    report.counters["max_h"] =
        std::max(report.counters["max_h"], static_cast<long long>(family.h));
    if (detailed < kDetailCap) {
      ++detailed;
      report.info("family: center=" + std::to_string(family.center) + " h=" +
                  std::to_string(family.h) + " ell=" + std::to_string(family.ell) +
                  " ell_prime=" + std::to_string(family.ell_prime) + " ell_prime_string=" +
                  std::to_string(family.ell_prime_string) + " J=[" +
                  std::to_string(family.j_begin) + ".." + std::to_string(family.j_end) + "]" +
                  (family.arithmetic ? "" : " non-arithmetic"));
    }
    if (!family.arithmetic) {
      report.bump("non_arithmetic");
      report.flag("family at center " + std::to_string(family.center) +
                  ": member periods are not an arithmetic progression");
      if (family.h >= 10) {
        // A large same-center family without the arithmetic parametrization
        // would contradict the structural claim itself.
        report.fail("family at center " + std::to_string(family.center) + " has h = " +
                    std::to_string(family.h) + " members but no arithmetic period structure");
      }
    }
    if (family.ell_prime_string == family.ell_prime) {
      report.bump("ell_prime_readings_agree");
    } else {
      report.bump("ell_prime_readings_disagree");
    }
    // The middle-member exponent cap is derived from the arithmetic
    // parametrization; coincidental same-center groups are outside it and
    // only counted.
    for (int j = 2; j <= family.h - 1; ++j) {
      const Rational alpha = runs[family.members[j - 1]].exponent();
      if (alpha <= Rational(2) + Rational(1, j)) continue;
      if (family.arithmetic) {
        report.fail("family at center " + std::to_string(family.center) + ": alpha_" +
                    std::to_string(j) + " = " + alpha.str() + " exceeds 2 + 1/" +
                    std::to_string(j));
      } else {
        report.bump("alpha_cap_exceeded_non_arithmetic");
      }
    }
    const bool gap_ok = verify_case_vi_gap(family, runs);
    if (family.h >= 10 && family.arithmetic) {
      report.bump("gap_checked_h10");
      if (!gap_ok) {
        report.fail("family at center " + std::to_string(family.center) + " (h = " +
                    std::to_string(family.h) + "): a run with period in [ell, 9/4 ell] has its "
                    "center inside J");
      }
    } else if (!gap_ok) {
      report.bump("gap_open_below_h10");
      report.flag("family at center " + std::to_string(family.center) + " (h = " +
                  std::to_string(family.h) + " < 10): J contains a center with period in "
                  "[ell, 9/4 ell] (recorded, not asserted)");
    }
  }
  // Distinct families whose longest runs overlap over ell_1 + ell_2
  // positions must have equal ell. Like the J-gap claim this is stated for
  // the h >= 10 regime; smaller families routinely break it (two length-2
  // coincidental families can overlap any way they like), so below that the
  // outcome is only counted.
  long long budget = options.work_budget;
  for (std::size_t i = 0; i < families.size() && budget > 0; ++i) {
    for (std::size_t j = i + 1; j < families.size() && --budget > 0; ++j) {
      const Run& a = runs[families[i].members[families[i].h - 1]];
      const Run& b = runs[families[j].members[families[j].h - 1]];
      const int lo = std::max(a.start, b.start);
      const int hi = std::min(a.end, b.end);
      const int overlap = hi >= lo ? hi - lo + 1 : 0;
      if (overlap >= families[i].ell + families[j].ell) {
        report.bump("family_pairs_overlapping");
        const bool in_regime = families[i].h >= 10 && families[j].h >= 10;
        if (families[i].ell == families[j].ell) {
          report.bump("family_pairs_equal_ell");
        } else if (in_regime) {
          report.fail("families at centers " + std::to_string(families[i].center) + " and " +
                      std::to_string(families[j].center) + " (h >= 10) overlap over ell1+ell2 "
                      "but have ell " + std::to_string(families[i].ell) + " != " +
                      std::to_string(families[j].ell));
        } else {
          report.bump("family_pairs_unequal_ell_below_h10");
        }
      }
    }
  }
  if (budget <= 0) report.flag("truncated: family-pair count exceeds the work budget");
  return report;
}

AuditReport audit_overlap(std::string_view w, const RunSet& runs,
                          const AuditOptions& options) {
  AuditReport report;
  report.audit = "overlap";
  const auto& all = runs.runs();
  const int m = static_cast<int>(all.size());
  long long pairs = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (all[j].start > all[i].end) break;  // sorted by start: no overlap further right
      if (++pairs > options.work_budget) {
        report.flag("truncated after " + std::to_string(pairs - 1) +
                    " overlapping pairs (work budget)");
        return report;
      }
      const Run& a = all[i];
      const Run& b = all[j];
      const int overlap = std::min(a.end, b.end) - b.start + 1;
      const bool same_root = a.period == b.period &&
                             w.substr(a.start - 1, a.period) == w.substr(b.start - 1, b.period);
      if (same_root) {
        report.bump("same_root_pairs");
        if (overlap >= a.period) {
          report.fail("same-root runs " + interval_str(a) + " and " + interval_str(b) +
                      " overlap by " + std::to_string(overlap) + " >= their period");
        }
      } else {
        report.bump("distinct_root_pairs");
        if (!overlap_bound(a, b)) {
          report.fail("distinct-root runs " + interval_str(a) + " and " + interval_str(b) +
                      " overlap by " + std::to_string(overlap) + " > p_a + p_b = " +
                      std::to_string(a.period + b.period));
        }
      }
    }
  }
  return report;
}

AuditReport audit_exp_window_wrap(std::string_view w, const RunSet& runs) {
  ExponentAudit audit = audit_exponent_window(w, runs);
  AuditReport report = std::move(audit.report);
  report.counters["excess_windows"] = static_cast<long long>(audit.excesses.size());
  for (const ExponentWindow& excess : audit.excesses) {
    if (!excess.explanation.empty()) {
      report.info("bucket " + std::to_string(excess.bucket) + " phase " +
                  std::to_string(excess.phase) + " window " + std::to_string(excess.window) +
                  " sum " + excess.sum.str() + " explained by " + excess.explanation);
    }
  }
  report.info("sum of exponents " + audit.total.str() + ", bound 48n = " + audit.bound.str());
  return report;
}

AuditReport audit_fine_wilf(std::string_view w, const AuditOptions& options) {
  AuditReport report;
  report.audit = "fine-wilf";
  const long long n = static_cast<long long>(w.size());
  if (n == 0) return report;
  const auto periods = all_periods(w);
  const long long pair_count =
      static_cast<long long>(periods.size()) * static_cast<long long>(periods.size()) / 2;
  if (pair_count * n > options.work_budget) {
    report.flag("skipped: " + std::to_string(pair_count) + " period pairs on n = " +
                std::to_string(n) + " exceed the work budget");
    return report;
  }
  for (std::size_t i = 0; i < periods.size(); ++i) {
    for (std::size_t j = i + 1; j < periods.size(); ++j) {
      const int p = periods[i];
      const int q = periods[j];
      if (p + q > n) break;  // periods ascend; later q only grow
      report.bump("applicable_pairs");
      if (check_fine_wilf(w, p, q) != LemmaCheck::holds) {
        report.fail("periods " + std::to_string(p) + " and " + std::to_string(q) +
                    " hold but gcd " + std::to_string(std::gcd(p, q)) + " is not a period");
      }
    }
  }
  return report;
}

AuditReport audit_sync(std::string_view w) {
  AuditReport report;
  report.audit = "sync";
  if (w.empty()) return report;
  if (!is_primitive(w)) {
    report.bump("not_primitive");
    report.info("string is not primitive; synchronization says nothing");
    return report;
  }
  report.bump("primitive_checked");
  const auto positions = occurrences_in_square(w);
  const std::vector<int> expected{1, static_cast<int>(w.size()) + 1};
  if (positions != expected) {
    std::string got;
    for (int p : positions) got += (got.empty() ? "" : ",") + std::to_string(p);
    report.fail("occurrences of w in ww are {" + got + "}, expected {1," +
                std::to_string(w.size() + 1) + "}");
  }
  return report;
}

AuditReport audit_three_square_wrap(std::string_view w, const AuditOptions& options) {
  const long long n = static_cast<long long>(w.size());
  if (n * n > options.work_budget) {
    AuditReport report;
    report.audit = "three-square";
    report.flag("skipped: quadratic square scan on n = " + std::to_string(n) +
                " exceeds the work budget");
    return report;
  }
  return three_square_scan(w);
}

}  // namespace

const std::vector<AuditId>& all_audits() {
  static const std::vector<AuditId> ids = [] {
    std::vector<AuditId> v;
    for (const auto& [id, name] : kAuditNames) v.push_back(id);
    return v;
  }();
  return ids;
}

std::string_view audit_name(AuditId id) {
  for (const auto& [known, name] : kAuditNames) {
    if (known == id) return name;
  }
  return "?";
}

std::optional<AuditId> audit_from_name(std::string_view name) {
  for (const auto& [id, known] : kAuditNames) {
    if (known == name) return id;
  }
  return std::nullopt;
}

AuditReport run_audit(AuditId id, std::string_view w, const RunSet& runs,
                      const AuditOptions& options) {
  switch (id) {
    case AuditId::xcheck: return audit_xcheck(w, options);
    case AuditId::three_close: return audit_three_close(w, runs);
    case AuditId::buckets: return audit_buckets(w, runs);
    case AuditId::density: return audit_density(w, runs);
    case AuditId::labels: return audit_labels(w, runs, options);
    case AuditId::case_i: return audit_case_i(w, runs, options);
    case AuditId::families: return audit_families(w, runs, options);
    case AuditId::two_fat: return check_no_two_fat(w, runs);
    case AuditId::overlap: return audit_overlap(w, runs, options);
    case AuditId::exp_window: return audit_exp_window_wrap(w, runs);
    case AuditId::fine_wilf: return audit_fine_wilf(w, options);
    case AuditId::sync: return audit_sync(w);
    case AuditId::three_square: return audit_three_square_wrap(w, options);
  }
  AuditReport report;
  report.audit = "?";
  report.fail("unknown audit id");
  return report;
}

std::vector<AuditReport> run_audits(const std::vector<AuditId>& ids, std::string_view w,
                                    const RunSet& runs, const AuditOptions& options) {
  std::vector<AuditReport> reports;
  reports.reserve(ids.size());
  for (AuditId id : ids) reports.push_back(run_audit(id, w, runs, options));
  return reports;
}

}  // namespace runlab
