#include "runlab/lce.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace runlab {
namespace detail {

namespace {

// Doubling suffix-array construction with counting sorts; O(n log n).
std::vector<int32_t> build_suffix_array(std::string_view w) {
  const int n = static_cast<int>(w.size());
  std::vector<int32_t> sa(n), rank(n), tmp_sa(n), new_rank(n), count;

  {
    count.assign(256 + 1, 0);
    for (unsigned char c : w) ++count[c + 1];
    for (int i = 0; i < 256; ++i) count[i + 1] += count[i];
    for (int i = 0; i < n; ++i) sa[count[static_cast<unsigned char>(w[i])]++] = i;
    int r = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && w[sa[i]] != w[sa[i - 1]]) ++r;
      rank[sa[i]] = r;
    }
  }

  for (int k = 1; k < n; k <<= 1) {
    // Sort by second key: suffixes i >= n - k have an empty second half and
    // come first; the rest follow the current order of sa shifted by k.
    int idx = 0;
    for (int i = n - k; i < n; ++i) tmp_sa[idx++] = i;
    for (int i = 0; i < n; ++i) {
      if (sa[i] >= k) tmp_sa[idx++] = sa[i] - k;
    }
    // Stable counting sort by first key.
    count.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) ++count[rank[i] + 1];
    for (int i = 0; i < n; ++i) count[i + 1] += count[i];
    for (int i = 0; i < n; ++i) sa[count[rank[tmp_sa[i]]]++] = tmp_sa[i];

    auto pair_at = [&](int i) {
      return std::pair<int32_t, int32_t>(rank[i], i + k < n ? rank[i + k] : -1);
    };
    int r = 0;
    new_rank[sa[0]] = 0;
    for (int i = 1; i < n; ++i) {
      if (pair_at(sa[i]) != pair_at(sa[i - 1])) ++r;
      new_rank[sa[i]] = r;
    }
    rank.swap(new_rank);
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

// Kasai's LCP construction; lcp[r] = lcp(sa[r-1], sa[r]).
std::vector<int32_t> build_lcp(std::string_view w, const std::vector<int32_t>& sa,
                               const std::vector<int32_t>& rank) {
  const int n = static_cast<int>(w.size());
  std::vector<int32_t> lcp(n, 0);
  int h = 0;
  for (int i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const int j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace

SuffixLcpIndex::SuffixLcpIndex(std::string_view w) : n_(static_cast<int>(w.size())) {
  if (n_ == 0) return;
  auto sa = build_suffix_array(w);
  rank_.resize(n_);
  for (int r = 0; r < n_; ++r) rank_[sa[r]] = r;
  lcp_ = build_lcp(w, sa, rank_);

  log2_.resize(n_ + 1, 0);
  for (int i = 2; i <= n_; ++i) log2_[i] = log2_[i / 2] + 1;
  levels_ = log2_[n_] + 1;
  table_.assign(static_cast<std::size_t>(levels_) * n_, 0);
  std::copy(lcp_.begin(), lcp_.end(), table_.begin());
  for (int lev = 1; lev < levels_; ++lev) {
    const int span = 1 << lev;
    int32_t* dst = table_.data() + static_cast<std::size_t>(lev) * n_;
    const int32_t* src = table_.data() + static_cast<std::size_t>(lev - 1) * n_;
    for (int i = 0; i + span <= n_; ++i) {
      dst[i] = std::min(src[i], src[i + span / 2]);
    }
  }
}

int SuffixLcpIndex::lcp(int i, int j) const {
  if (i == j) return n_ - i;
  int a = rank_[i], b = rank_[j];
  if (a > b) std::swap(a, b);
  // min of lcp_[a+1 .. b]
  const int len = b - a;
  const int lev = log2_[len];
  const int32_t* row = table_.data() + static_cast<std::size_t>(lev) * n_;
  return std::min(row[a + 1], row[b - (1 << lev) + 1]);
}

}  // namespace detail

LceIndex::LceIndex(std::string_view w)
    : n_(static_cast<int>(w.size())),
      fwd_(w),
      rev_(std::string(w.rbegin(), w.rend())) {
  if (n_ == 0) {
    throw std::invalid_argument("LceIndex: empty string");
  }
}

int LceIndex::forward0(int i, int j) const { return fwd_.lcp(i, j); }

int LceIndex::backward0(int i, int j) const {
  // Prefix ending at i (0-based, inclusive) maps to the reversed suffix
  // starting at n-1-i.
  return rev_.lcp(n_ - 1 - i, n_ - 1 - j);
}

int LceIndex::forward(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw std::invalid_argument("LceIndex::forward: position out of range");
  }
  return forward0(i - 1, j - 1);
}

int LceIndex::backward(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw std::invalid_argument("LceIndex::backward: position out of range");
  }
  return backward0(i - 1, j - 1);
}

}  // namespace runlab
