#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "runlab/rational.hpp"

// Period and primitivity primitives over raw byte strings.
//
// Strings are plain byte sequences; no alphabet normalization happens here.
// All positions reported or accepted by this library are 1-based and
// intervals are inclusive, so w[i..j] means symbols i through j of w with
// w[1] the first symbol. Internal scans are 0-based; the convention only
// matters at the API boundary.

namespace runlab {

/// Failure function over w: border[i] = length of the longest proper border
/// of the prefix w[1..i+1] (0-based array, one entry per prefix).
std::vector<int> border_array(std::string_view w);

/// z[i] = length of the longest common prefix of w and w[i..]. z[0] = |w|.
std::vector<int> z_array(std::string_view w);

/// True iff w[i] = w[i+p] for every valid i. p must be in [1, |w|];
/// p = |w| holds vacuously.
bool has_period(std::string_view w, int p);

/// The least p >= 1 that is a period of w. Throws std::invalid_argument on
/// the empty string. Linear time via the border array.
int smallest_period(std::string_view w);

/// True iff w is not u^m for any m >= 2.
bool is_primitive(std::string_view w);

struct PrimitiveRoot {
  std::string_view root;  // view into the argument string
  int power = 0;          // root repeated `power` times reproduces w
};

/// The unique primitive root decomposition w = root^power.
PrimitiveRoot primitive_root(std::string_view w);

/// |w| / smallest_period(w) as an exact rational.
Rational exponent_of(std::string_view w);

/// All 1-based start positions of w inside ww. Requires w primitive (throws
/// otherwise); the synchronization property says the result is {1, |w|+1},
/// which callers assert rather than assume.
std::vector<int> occurrences_in_square(std::string_view w);

enum class LemmaCheck {
  holds,
  violated,        // the lemma's conclusion failed; indicates a bug
  not_applicable,  // |w| < p + q, the lemma is silent
};

/// Fine and Wilf periodicity check: given that p and q are periods of w and
/// |w| >= p + q, gcd(p, q) must also be a period. Throws
/// std::invalid_argument when p or q is not an actual period of w.
LemmaCheck check_fine_wilf(std::string_view w, int p, int q);

/// Every period of w in increasing order (always ends with |w|).
std::vector<int> all_periods(std::string_view w);

}  // namespace runlab
