#include "runlab/delta.hpp"

#include <algorithm>
#include <stdexcept>

#include "runlab/periods.hpp"

namespace runlab {

namespace {

Rational delta_value(int i) {
  // delta_i = 3^i / 2^(i+1), exact.
  BigInt num = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(i));
  BigInt den = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(i + 1));
  return Rational(std::move(num), std::move(den));
}

}  // namespace

bool are_delta_close(const Run& a, const Run& b, const Rational& delta) {
  if (!delta.is_positive()) {
    throw std::invalid_argument("are_delta_close: delta must be positive");
  }
  const Rational lo = Rational(2) * delta;
  const Rational hi = Rational(3) * delta;
  const Rational pa(a.period), pb(b.period);
  if (pa < lo || pa > hi || pb < lo || pb > hi) return false;
  const int gap = a.center() >= b.center() ? a.center() - b.center() : b.center() - a.center();
  return Rational(gap) <= delta;
}

std::vector<Rational> bucket_deltas(int n) {
  std::vector<Rational> deltas;
  if (n < 2) return deltas;
  const Rational half_n(n, 2);
  for (int i = 0;; ++i) {
    Rational d = delta_value(i);
    if (Rational(2) * d > half_n) break;
    deltas.push_back(std::move(d));
  }
  return deltas;
}

int bucket_index_of_period(int p) {
  if (p < 1) {
    throw std::invalid_argument("bucket_index_of_period: p must be >= 1");
  }
  // Largest i with 2*delta_i <= p, i.e. 3^i <= p * 2^i. The right bucket
  // edge is then automatic because the buckets tile.
  using i128 = __int128;
  i128 pow3 = 1, pow2 = 1;
  int i = 0;
  while (pow3 * 3 <= static_cast<i128>(p) * (pow2 * 2)) {
    pow3 *= 3;
    pow2 *= 2;
    ++i;
  }
  return i;
}

std::vector<Bucket> assign_buckets(const RunSet& runs) {
  const auto deltas = bucket_deltas(runs.n());
  std::vector<Bucket> buckets(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    buckets[i].index = static_cast<int>(i);
    buckets[i].delta = deltas[i];
    buckets[i].period_lo = Rational(2) * deltas[i];
    buckets[i].period_hi = Rational(3) * deltas[i];
  }
  // by_center order keeps each bucket's member list sorted by center.
  for (int32_t idx : runs.by_center()) {
    const int b = bucket_index_of_period(runs[idx].period);
    buckets[b].members.push_back(idx);
  }
  return buckets;
}

std::string_view pair_case_name(PairCase c) {
  switch (c) {
    case PairCase::I: return "I";
    case PairCase::II: return "II";
    case PairCase::III: return "III";
    case PairCase::IV: return "IV";
    case PairCase::V: return "V";
    case PairCase::VI: return "VI";
  }
  return "?";
}

PairCase classify_pair(const Run& a, const Run& b) {
  if (a == b) {
    throw std::invalid_argument("classify_pair: runs must be distinct");
  }
  // Orient so x carries the smaller period; equal periods orient by start.
  const bool a_is_x = a.period != b.period ? a.period < b.period : a.start < b.start;
  const Run& x = a_is_x ? a : b;
  const Run& y = a_is_x ? b : a;

  if (x.center() == y.center()) return PairCase::VI;
  if (x.start == y.start) return PairCase::V;
  if (y.center() < x.center()) {
    return x.square_end() <= y.square_end() ? PairCase::I : PairCase::II;
  }
  return y.start < x.start ? PairCase::III : PairCase::IV;
}

std::optional<bool> verify_case_i_start(const Run& x, const Run& y, const Run& z) {
  if (x == y || x == z || y == z) {
    throw std::invalid_argument("verify_case_i_start: runs must be distinct");
  }
  if (classify_pair(x, y) != PairCase::I) return std::nullopt;
  const Run& small = x.period <= y.period ? x : y;
  const Run& large = x.period <= y.period ? y : x;
  const int p = small.period;
  const int q = large.period;
  const int r = z.period;
  if (r < q) return std::nullopt;
  // In case I the periods are strictly ordered, so q - p >= 1.
  const bool start_forced = z.start == small.start - (q - p);
  const bool period_locked = (r - q) % (q - p) == 0;
  return start_forced && period_locked;
}

namespace {

// Maximal windows of pairwise center distance <= delta among bucket members
// (already sorted by center). Calls fn(lo, hi) for each maximal [lo, hi].
template <typename Fn>
void for_each_maximal_close_group(const RunSet& runs, const std::vector<int32_t>& members,
                                  const Rational& delta, Fn&& fn) {
  const int m = static_cast<int>(members.size());
  int hi = 0, prev_hi = -1;
  for (int lo = 0; lo < m; ++lo) {
    if (hi < lo) hi = lo;
    const int base = runs[members[lo]].center();
    while (hi + 1 < m && Rational(runs[members[hi + 1]].center() - base) <= delta) ++hi;
    // hi is non-decreasing in lo, so the window is maximal exactly when it
    // grew past the previous one.
    if (lo == 0 || hi > prev_hi) fn(lo, hi);
    prev_hi = hi;
  }
}

}  // namespace

AuditReport audit_three_close(std::string_view w, const RunSet& runs) {
  AuditReport report;
  report.audit = "three-close";
  const auto buckets = assign_buckets(runs);
  for (const Bucket& bucket : buckets) {
    for_each_maximal_close_group(
        runs, bucket.members, bucket.delta, [&](int lo, int hi) {
          const int size = hi - lo + 1;
          report.bump("groups");
          report.counters["max_group"] = std::max(report.counters["max_group"],
                                                  static_cast<long long>(size));
          if (size <= 3) return;
          bool shared_center = false;
          for (int t = lo; t < hi && !shared_center; ++t) {
            shared_center = runs[bucket.members[t]].center() ==
                            runs[bucket.members[t + 1]].center();
          }
          if (shared_center) {
            report.bump("groups_gt3_shared_center");
          } else {
            report.fail("bucket " + std::to_string(bucket.index) + " (delta " +
                        bucket.delta.str() + "): " + std::to_string(size) +
                        " mutually close runs with pairwise distinct centers");
          }
        });
  }
  (void)w;
  return report;
}

CountBound count_bound(std::string_view w, const RunSet& runs) {
  CountBound result;
  result.total = runs.size();
  result.bound = Rational(18) * Rational(static_cast<long long>(w.size()));
  result.ok = Rational(result.total) <= result.bound;
  for (const Bucket& bucket : assign_buckets(runs)) {
    CountBound::BucketTally tally;
    tally.index = bucket.index;
    tally.delta = bucket.delta;
    tally.count = static_cast<long long>(bucket.members.size());
    tally.cap = Rational(3 * static_cast<long long>(w.size())) / bucket.delta;
    result.buckets.push_back(std::move(tally));
  }
  return result;
}

std::vector<CenterFamily> shared_center_families(std::string_view w, const RunSet& runs) {
  std::vector<CenterFamily> families;
  const auto& order = runs.by_center();
  const int m = static_cast<int>(order.size());
  int i = 0;
  while (i < m) {
    int j = i;
    while (j + 1 < m && runs[order[j + 1]].center() == runs[order[i]].center()) ++j;
    const int h = j - i + 1;
    if (h >= 2) {
      CenterFamily family;
      family.center = runs[order[i]].center();
      family.members.assign(order.begin() + i, order.begin() + j + 1);
      // by_center breaks center ties by period, so members are period-sorted.
      family.h = h;
      family.ell = runs[family.members[1]].period - runs[family.members[0]].period;
      family.ell_prime = runs[family.members[0]].period;
      family.arithmetic = true;
      for (int t = 1; t + 1 < h; ++t) {
        if (runs[family.members[t + 1]].period - runs[family.members[t]].period !=
            family.ell) {
          family.arithmetic = false;
        }
      }
      // Literal reading of the alternative ell' definition: the longest
      // suffix of the smallest root that is a prefix of the period block
      // w[c-ell .. c-1]. Recorded for cross-checking only.
      family.ell_prime_string = 0;
      const int c0 = family.center - 1;  // 0-based position of the center
      const int limit = std::min(family.ell_prime, family.ell);
      for (int s = limit; s >= 1; --s) {
        if (c0 - family.ell < 0) break;
        if (w.substr(c0 - s, s) == w.substr(c0 - family.ell, s)) {
          family.ell_prime_string = s;
          break;
        }
      }
      family.j_begin = family.center + family.ell + 1;
      family.j_end = family.center + (h - 2) * family.ell + family.ell_prime;
      families.push_back(std::move(family));
    }
    i = j + 1;
  }
  return families;
}

bool verify_case_vi_gap(const CenterFamily& family, const RunSet& runs) {
  if (family.j_empty()) return true;
  for (const Run& run : runs.runs()) {
    // period in [ell, (9/4) ell], center in J
    if (run.period >= family.ell && 4 * run.period <= 9 * family.ell &&
        run.center() >= family.j_begin && run.center() <= family.j_end) {
      return false;
    }
  }
  return true;
}

}  // namespace runlab
