#pragma once

#include <optional>
#include <vector>

#include "gappedrep/rational.hpp"
#include "gappedrep/word.hpp"

namespace gappedrep {

// Periodicity primitives. The string_view overloads run on any factor
// without copying; the Word overloads are the 1-indexed public face.

// Entry k-1 is the length of the longest proper border of the prefix of
// length k. Empty input gives an empty table.
std::vector<int> border_table(std::string_view s);
inline std::vector<int> border_table(const Word& w) { return border_table(w.view()); }

// Smallest p >= 1 with s[k] == s[k+p] for all valid k. Requires |s| >= 1.
int minimal_period(std::string_view s);
inline int minimal_period(const Word& w) { return minimal_period(w.view()); }

// |s| / p(s), exact.
Rational exponent(std::string_view s);
inline Rational exponent(const Word& w) { return exponent(w.view()); }

// Primitive: exponent is not an integer >= 2. Periodic: exponent >= 2.
bool is_primitive(std::string_view s);
bool is_repetition(std::string_view s);
inline bool is_primitive(const Word& w) { return is_primitive(w.view()); }
inline bool is_repetition(const Word& w) { return is_repetition(w.view()); }

// Longest k with exponent(s[0..k-1]) >= 2, if any periodic prefix exists.
std::optional<int> longest_periodic_prefix(std::string_view s);
std::optional<int> longest_periodic_suffix(std::string_view s);
inline std::optional<int> longest_periodic_prefix(const Word& w) {
  return longest_periodic_prefix(w.view());
}
inline std::optional<int> longest_periodic_suffix(const Word& w) {
  return longest_periodic_suffix(w.view());
}

// Longest common extension to the right (left) of two 1-indexed positions.
int lce_right(const Word& w, int i, int j);
int lce_left(const Word& w, int i, int j);

}  // namespace gappedrep
