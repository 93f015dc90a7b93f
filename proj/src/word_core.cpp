#include "gappedrep/word_core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gappedrep {

std::vector<int> border_table(std::string_view s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> border(n);
  int k = 0;
  for (int i = 1; i < n; ++i) {
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return border;
}

int minimal_period(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("minimal_period of empty word");
  return static_cast<int>(s.size()) - border_table(s).back();
}

Rational exponent(std::string_view s) {
  return Rational(static_cast<long long>(s.size())) / Rational(minimal_period(s));
}

bool is_primitive(std::string_view s) {
  const int n = static_cast<int>(s.size());
  const int p = minimal_period(s);
  return !(n % p == 0 && n >= 2 * p);
}

bool is_repetition(std::string_view s) {
  return static_cast<int>(s.size()) >= 2 * minimal_period(s);
}

std::optional<int> longest_periodic_prefix(std::string_view s) {
  const auto border = border_table(s);
  for (int k = static_cast<int>(s.size()); k >= 2; --k) {
    // Prefix of length k is periodic iff k >= 2 * (k - border).
    if (2 * border[k - 1] >= k) return k;
  }
  return std::nullopt;
}

std::optional<int> longest_periodic_suffix(std::string_view s) {
  std::string rev(s.rbegin(), s.rend());
  return longest_periodic_prefix(std::string_view(rev));
}

int lce_right(const Word& w, int i, int j) {
  const int n = w.size();
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("lce position out of bounds");
  int len = 0;
  while (i + len <= n && j + len <= n && w.at(i + len) == w.at(j + len)) ++len;
  return len;
}

int lce_left(const Word& w, int i, int j) {
  const int n = w.size();
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("lce position out of bounds");
  int len = 0;
  while (i - len >= 1 && j - len >= 1 && w.at(i - len) == w.at(j - len)) ++len;
  return len;
}

}  // namespace gappedrep
