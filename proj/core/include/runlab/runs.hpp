#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "runlab/lce.hpp"
#include "runlab/rational.hpp"

namespace runlab {

/// A run (maximal repetition): the factor w[start..end] has smallest period
/// `period`, its exponent is at least 2, and extending the interval one
/// symbol in either direction strictly increases the smallest period.
/// Positions are 1-based inclusive.
struct Run {
  int32_t start = 0;
  int32_t end = 0;
  int32_t period = 0;

  int length() const { return end - start + 1; }
  /// Center position: start + period.
  int center() const { return start + period; }
  /// End of the run's square, start + 2*period - 1. The square is the only
  /// part of a run guaranteed not to be left-extendable with the same period.
  int square_end() const { return start + 2 * period - 1; }
  Rational exponent() const { return Rational(length(), period); }

  friend bool operator==(const Run&, const Run&) = default;
};

/// All runs of one string, sorted by (start, period), with lookup views
/// by center and by period. Immutable after construction.
class RunSet {
 public:
  RunSet() = default;
  RunSet(int n, std::vector<Run> runs);

  int n() const { return n_; }
  int size() const { return static_cast<int>(runs_.size()); }
  bool empty() const { return runs_.empty(); }
  const std::vector<Run>& runs() const { return runs_; }
  const Run& operator[](int idx) const { return runs_[idx]; }

  /// Indices into runs() ordered by (center, period).
  const std::vector<int32_t>& by_center() const { return by_center_; }
  /// Indices of the runs whose smallest period is p, ordered by start.
  std::vector<int32_t> with_period(int p) const;

  friend bool operator==(const RunSet& a, const RunSet& b) {
    return a.n_ == b.n_ && a.runs_ == b.runs_;
  }

 private:
  int n_ = 0;
  std::vector<Run> runs_;
  std::vector<int32_t> by_center_;
};

/// Definition-faithful enumeration: smallest periods of all substrings via
/// per-suffix failure functions, then a direct test of the run definition
/// on every interval. Quadratic; this is the correctness reference.
RunSet enumerate_runs_oracle(std::string_view w);

/// LCE-anchored enumeration, O(n log n): for each candidate period p,
/// anchors spaced p apart are extended with forward/backward LCEs; emitted
/// intervals are deduplicated keeping the smallest period and re-validated
/// (primitive root, strict one-symbol maximality) against the definition.
RunSet enumerate_runs_fast(std::string_view w);
RunSet enumerate_runs_fast(std::string_view w, const LceIndex& lce);

/// The run's square w[start .. start+2p-1] as an owned string.
std::string square_of(const Run& run, std::string_view w);

/// Checks every Run invariant of `run` against w (smallest period, exponent
/// >= 2, primitive root, strict extension maximality). Used by audits and
/// tests; returns false rather than throwing.
bool is_valid_run(std::string_view w, const Run& run);

}  // namespace runlab
