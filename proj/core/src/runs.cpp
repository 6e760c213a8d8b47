#include "runlab/runs.hpp"

#include <algorithm>
#include <stdexcept>

#include "runlab/periods.hpp"

namespace runlab {

RunSet::RunSet(int n, std::vector<Run> runs) : n_(n), runs_(std::move(runs)) {
  std::sort(runs_.begin(), runs_.end(), [](const Run& a, const Run& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.period < b.period;
  });
  by_center_.resize(runs_.size());
  for (std::size_t i = 0; i < runs_.size(); ++i) by_center_[i] = static_cast<int32_t>(i);
  std::sort(by_center_.begin(), by_center_.end(), [this](int32_t a, int32_t b) {
    if (runs_[a].center() != runs_[b].center()) return runs_[a].center() < runs_[b].center();
    return runs_[a].period < runs_[b].period;
  });
}

std::vector<int32_t> RunSet::with_period(int p) const {
  std::vector<int32_t> out;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (runs_[i].period == p) out.push_back(static_cast<int32_t>(i));
  }
  return out;
}

RunSet enumerate_runs_oracle(std::string_view w) {
  if (w.empty()) {
    throw std::invalid_argument("enumerate_runs_oracle: empty string");
  }
  const int n = static_cast<int>(w.size());
  std::vector<Run> found;

  // prev_row[j] = smallest period of w[i-1..j], cur_row[j] = of w[i..j]
  // (0-based starts). The failure function of each suffix yields the whole
  // row in amortized linear time.
  std::vector<int32_t> prev_row(n), cur_row(n), border(n);
  for (int i = 0; i < n; ++i) {
    const int m = n - i;
    int k = 0;
    border[0] = 0;
    cur_row[i] = 1;
    for (int t = 1; t < m; ++t) {
      while (k > 0 && w[i + t] != w[i + k]) k = border[k - 1];
      if (w[i + t] == w[i + k]) ++k;
      border[t] = k;
      cur_row[i + t] = t + 1 - k;
    }
    for (int j = i; j < n; ++j) {
      const int p = cur_row[j];
      if (j - i + 1 < 2 * p) continue;            // exponent < 2
      if (i > 0 && prev_row[j] <= p) continue;    // left extension keeps period
      if (j < n - 1 && cur_row[j + 1] <= p) continue;  // right extension keeps period
      found.push_back(Run{i + 1, j + 1, p});
    }
    prev_row.swap(cur_row);
  }
  return RunSet(n, std::move(found));
}

namespace {

// Smallest-prime-factor sieve for the primitivity checks.
std::vector<int32_t> spf_sieve(int limit) {
  std::vector<int32_t> spf(limit + 1, 0);
  for (int i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      for (long long j = i; j <= limit; j += i) {
        if (spf[j] == 0) spf[j] = i;
      }
    }
  }
  return spf;
}

// Root w[s..s+p) is primitive iff it has no period p/r for a prime r | p.
bool root_is_primitive(const LceIndex& lce, const std::vector<int32_t>& spf, int s, int p) {
  int rest = p;
  while (rest > 1) {
    const int prime = spf[rest];
    const int d = p / prime;
    if (lce.forward0(s, s + d) >= p - d) return false;
    while (rest % prime == 0) rest /= prime;
  }
  return true;
}

}  // namespace

RunSet enumerate_runs_fast(std::string_view w) {
  const LceIndex lce(w);
  return enumerate_runs_fast(w, lce);
}

RunSet enumerate_runs_fast(std::string_view w, const LceIndex& lce) {
  if (w.empty()) {
    throw std::invalid_argument("enumerate_runs_fast: empty string");
  }
  const int n = static_cast<int>(w.size());
  if (lce.size() != n) {
    throw std::invalid_argument("enumerate_runs_fast: index built for a different string");
  }

  struct Candidate {
    int32_t start, end, period;
  };
  std::vector<Candidate> candidates;

  for (int p = 1; 2 * p <= n; ++p) {
    int prev_start = -1, prev_end = -1;
    for (int a = p; a + p <= n; a += p) {
      // Cheap reject: if both boundary symbol pairs mismatch, the extensions
      // are empty and cannot cover p.
      if (w[a - 1] != w[a + p - 1] && (a + p == n || w[a] != w[a + p])) continue;
      const int right = a + p < n ? lce.forward0(a, a + p) : 0;
      const int left = lce.backward0(a - 1, a + p - 1);
      if (left + right < p) continue;
      const int start = a - left;
      const int end = a + p + right - 1;
      if (start == prev_start && end == prev_end) continue;  // same as previous anchor
      prev_start = start;
      prev_end = end;
      candidates.push_back(Candidate{start, end, p});
    }
  }

  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.end != b.end) return a.end < b.end;
    return a.period < b.period;
  });

  const auto spf = spf_sieve(n / 2);
  std::vector<Run> found;
  int last_start = -1, last_end = -1;
  for (const Candidate& c : candidates) {
    if (c.start == last_start && c.end == last_end) continue;  // keep minimal period
    last_start = c.start;
    last_end = c.end;
    // Validate against the definition: the recorded period must be the
    // smallest (equivalently, the root is primitive), and both one-symbol
    // extensions must break it.
    if (!root_is_primitive(lce, spf, c.start, c.period)) continue;
    if (c.start > 0 && w[c.start - 1] == w[c.start + c.period - 1]) continue;
    if (c.end < n - 1 && w[c.end + 1] == w[c.end + 1 - c.period]) continue;
    found.push_back(Run{c.start + 1, c.end + 1, c.period});
  }
  return RunSet(n, std::move(found));
}

std::string square_of(const Run& run, std::string_view w) {
  return std::string(w.substr(run.start - 1, 2 * static_cast<std::size_t>(run.period)));
}

bool is_valid_run(std::string_view w, const Run& run) {
  const int n = static_cast<int>(w.size());
  if (run.start < 1 || run.start >= run.end || run.end > n || run.period < 1) return false;
  const auto factor = w.substr(run.start - 1, run.length());
  if (smallest_period(factor) != run.period) return false;
  if (run.length() < 2 * run.period) return false;
  if (!is_primitive(factor.substr(0, run.period))) return false;
  if (run.start > 1 &&
      smallest_period(w.substr(run.start - 2, run.length() + 1)) <= run.period) {
    return false;
  }
  if (run.end < n && smallest_period(w.substr(run.start - 1, run.length() + 1)) <= run.period) {
    return false;
  }
  return true;
}

}  // namespace runlab
