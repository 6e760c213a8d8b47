#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "runlab/rational.hpp"
#include "runlab/report.hpp"
#include "runlab/runs.hpp"

// Close-center analysis: delta-closeness, the positional classification of
// run pairs, the geometric bucket scheme behind the 18n run-count bound,
// and shared-center run families.

namespace runlab {

/// Two runs are delta-close iff their centers differ by at most delta and
/// both periods lie in [2*delta, 3*delta]. All comparisons are closed and
/// exact.
bool are_delta_close(const Run& a, const Run& b, const Rational& delta);

/// The bucket values delta_i = (1/2)(3/2)^i, listed while 2*delta_i <= n/2
/// (a run's period never exceeds n/2). Empty for n < 2. Consecutive bucket
/// period ranges [2d_i, 3d_i] tile seamlessly: 3*d_i = 2*d_{i+1}.
std::vector<Rational> bucket_deltas(int n);

/// Index i such that 2*delta_i <= p <= 3*delta_i. Every period p >= 1 with
/// 2p <= n has exactly one such bucket (only p = 1 sits on a boundary).
int bucket_index_of_period(int p);

struct Bucket {
  int index = 0;
  Rational delta;
  Rational period_lo;            // 2*delta
  Rational period_hi;            // 3*delta
  std::vector<int32_t> members;  // indices into the RunSet, ordered by center
};

/// All buckets for the string length, with each run placed in the bucket of
/// its period.
std::vector<Bucket> assign_buckets(const RunSet& runs);

/// Positional relation of two distinct runs' squares. The pair is oriented
/// so x has the smaller period (smaller start on ties); exactly one label
/// applies:
///   VI  centers equal
///   V   starts equal, centers differ
///   I   c_y < c_x and e_x <= e_y
///   II  c_y < c_x and e_y < e_x
///   III c_x < c_y and i_y < i_x
///   IV  c_x < c_y and i_x < i_y
enum class PairCase { I, II, III, IV, V, VI };

std::string_view pair_case_name(PairCase c);

/// Classifies two distinct runs; throws std::invalid_argument on equal runs.
/// Purely positional; no delta is involved.
PairCase classify_pair(const Run& a, const Run& b);

/// For a case-I pair (x, y) with periods p < q and a third run z with period
/// r >= q, the start of z is forced: i_z = i_x - (q - p), and r - q must be
/// a nonnegative multiple of q - p. Returns nullopt when the gates do not
/// apply ((x,y) not case I, or r < q).
std::optional<bool> verify_case_i_start(const Run& x, const Run& y, const Run& z);

/// For every bucket delta_i, slides a window over centers (sorted) and finds
/// every maximal group of runs with pairwise center distance <= delta_i and
/// periods in the bucket. Groups larger than three must contain two runs
/// sharing a center; any other >3 group is a failure.
AuditReport audit_three_close(std::string_view w, const RunSet& runs);

struct CountBound {
  long long total = 0;
  Rational bound;  // 18n
  bool ok = false;
  struct BucketTally {
    int index = 0;
    Rational delta;
    long long count = 0;
    Rational cap;  // 3n / delta_i
  };
  std::vector<BucketTally> buckets;
};

/// Run count against the 18n bucket-sum bound, with per-bucket tallies.
CountBound count_bound(std::string_view w, const RunSet& runs);

/// Runs sharing one center, ordered by period. Member periods are expected
/// to form an arithmetic progression with difference ell; non-arithmetic
/// families are flagged (arithmetic = false), never dropped.
struct CenterFamily {
  int center = 0;
  std::vector<int32_t> members;  // indices into the RunSet, by period
  int h = 0;                     // member count
  int ell = 0;                   // common period difference (h >= 2)
  int ell_prime = 0;             // smallest member period
  int ell_prime_string = 0;      // alternative reading: longest suffix of the
                                 // smallest root that is a prefix of the
                                 // period block left of the center
  bool arithmetic = true;
  int j_begin = 0, j_end = 0;    // J = [center+ell+1 .. center+(h-2)ell+ell_prime]

  bool j_empty() const { return j_begin > j_end; }
};

/// Groups runs by center; families have h >= 2 members.
std::vector<CenterFamily> shared_center_families(std::string_view w, const RunSet& runs);

/// True iff no run has period in [ell, (9/4)ell] and center inside J.
/// Trivially true when J is empty. Meaningful for h >= 10 families; callers
/// decide whether to assert or merely record the outcome.
bool verify_case_vi_gap(const CenterFamily& family, const RunSet& runs);

}  // namespace runlab
