#include "runlab/periods.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace runlab {

namespace {

void require_nonempty(std::string_view w, const char* who) {
  if (w.empty()) {
    throw std::invalid_argument(std::string(who) + ": empty string");
  }
}

}  // namespace

std::vector<int> border_array(std::string_view w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> border(n, 0);
  int k = 0;
  for (int i = 1; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  return border;
}

std::vector<int> z_array(std::string_view w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  int l = 0, r = 0;  // rightmost match window [l, r)
  for (int i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && w[z[i]] == w[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

bool has_period(std::string_view w, int p) {
  const int n = static_cast<int>(w.size());
  if (p < 1 || p > n) {
    throw std::invalid_argument("has_period: p out of range");
  }
  for (int i = 0; i + p < n; ++i) {
    if (w[i] != w[i + p]) return false;
  }
  return true;
}

int smallest_period(std::string_view w) {
  require_nonempty(w, "smallest_period");
  const auto border = border_array(w);
  return static_cast<int>(w.size()) - border.back();
}

bool is_primitive(std::string_view w) {
  require_nonempty(w, "is_primitive");
  const int n = static_cast<int>(w.size());
  const int p = smallest_period(w);
  return !(p < n && n % p == 0);
}

PrimitiveRoot primitive_root(std::string_view w) {
  require_nonempty(w, "primitive_root");
  const int n = static_cast<int>(w.size());
  const int p = smallest_period(w);
  if (p < n && n % p == 0) {
    return PrimitiveRoot{w.substr(0, p), n / p};
  }
  return PrimitiveRoot{w, 1};
}

Rational exponent_of(std::string_view w) {
  require_nonempty(w, "exponent_of");
  return Rational(static_cast<long long>(w.size()), smallest_period(w));
}

std::vector<int> occurrences_in_square(std::string_view w) {
  require_nonempty(w, "occurrences_in_square");
  if (!is_primitive(w)) {
    throw std::invalid_argument("occurrences_in_square: w is not primitive");
  }
  const int n = static_cast<int>(w.size());
  // Z over w.ww finds the matches without a sentinel: an occurrence at
  // offset k of ww is any z value >= n (z may exceed n, which still means
  // the full pattern matched).
  std::string text;
  text.reserve(3 * static_cast<std::size_t>(n));
  text.append(w);
  text.append(w);
  text.append(w);
  const auto z = z_array(text);
  std::vector<int> positions;
  for (int k = 0; k + n <= 2 * n; ++k) {
    if (z[n + k] >= n) {
      positions.push_back(k + 1);
    }
  }
  return positions;
}

LemmaCheck check_fine_wilf(std::string_view w, int p, int q) {
  require_nonempty(w, "check_fine_wilf");
  if (!has_period(w, p) || !has_period(w, q)) {
    throw std::invalid_argument("check_fine_wilf: p and q must both be periods of w");
  }
  const int n = static_cast<int>(w.size());
  if (n < p + q) return LemmaCheck::not_applicable;
  return has_period(w, std::gcd(p, q)) ? LemmaCheck::holds : LemmaCheck::violated;
}

std::vector<int> all_periods(std::string_view w) {
  require_nonempty(w, "all_periods");
  const int n = static_cast<int>(w.size());
  const auto border = border_array(w);
  // Periods of w are n minus the border cascade lengths.
  std::vector<int> periods;
  for (int b = border[n - 1]; b > 0; b = border[b - 1]) {
    periods.push_back(n - b);
  }
  periods.push_back(n);
  std::sort(periods.begin(), periods.end());
  return periods;
}

}  // namespace runlab
