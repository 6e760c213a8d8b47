#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace runlab {

namespace detail {

/// Suffix array + LCP + sparse-table minimum for one fixed string.
/// Answers lcp(i, j) of two suffixes in constant time after O(n log n)
/// construction.
class SuffixLcpIndex {
 public:
  SuffixLcpIndex() = default;
  explicit SuffixLcpIndex(std::string_view w);

  int lcp(int i, int j) const;  // 0-based suffix starts
  int size() const { return n_; }

 private:
  int n_ = 0;
  std::vector<int32_t> rank_;
  std::vector<int32_t> lcp_;    // lcp_[r] = lcp(sa[r-1], sa[r])
  std::vector<int32_t> table_;  // sparse min table over lcp_, level-major
  std::vector<int32_t> log2_;
  int levels_ = 0;
};

}  // namespace detail

/// Longest-common-extension queries in both directions. Positions are
/// 1-based. Immutable and safe to share across threads after construction.
class LceIndex {
 public:
  explicit LceIndex(std::string_view w);

  /// Length of the longest common prefix of the suffixes starting at i and j.
  int forward(int i, int j) const;
  /// Length of the longest common suffix of the prefixes ending at i and j.
  int backward(int i, int j) const;

  int size() const { return n_; }

  /// 0-based variants used by the enumerator's inner loop.
  int forward0(int i, int j) const;
  int backward0(int i, int j) const;

 private:
  int n_ = 0;
  detail::SuffixLcpIndex fwd_;
  detail::SuffixLcpIndex rev_;
};

}  // namespace runlab
