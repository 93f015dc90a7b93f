#include "gappedrep/runs.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "gappedrep/word_core.hpp"

namespace gappedrep {

// A run with minimal period p is exactly a maximal block [a, b] of
// {k : w[k] == w[k+p]} of length >= p whose factor w[a..b+p] has minimal
// period p (blocks whose factor has a smaller minimal period reappear at
// that smaller period and are rejected here).
std::vector<Run> enumerate_runs(const Word& w) {
  const int n = w.size();
  std::vector<Run> runs;
  for (int p = 1; 2 * p <= n; ++p) {
    int block_start = 0;
    for (int k = 1; k <= n - p + 1; ++k) {
      const bool match = k <= n - p && w.at(k) == w.at(k + p);
      if (match && block_start == 0) block_start = k;
      if (!match && block_start != 0) {
        const int a = block_start, b = k - 1;
        block_start = 0;
        if (b - a + 1 >= p && minimal_period(w.factor(a, b + p)) == p)
          runs.push_back(Run{a, b + p, p});
      }
    }
  }
  std::sort(runs.begin(), runs.end());
  assert(std::adjacent_find(runs.begin(), runs.end()) == runs.end());
  return runs;
}

Rational sum_of_exponents(const Word& w) {
  Rational total;
  for (const Run& r : enumerate_runs(w)) total += r.exponent();
  return total;
}

Run extend_to_run(const Word& w, int beg, int end, int q) {
  const int n = w.size();
  if (beg < 1 || end > n || beg > end) throw std::invalid_argument("extend_to_run: bad interval");
  if (q < 1 || end - beg + 1 < 2 * q || minimal_period(w.factor(beg, end)) != q)
    throw std::invalid_argument("extend_to_run: interval is not a repetition with minimal period q");
  while (beg > 1 && w.at(beg - 1) == w.at(beg - 1 + q)) --beg;
  while (end < n && w.at(end + 1) == w.at(end + 1 - q)) ++end;
  if (minimal_period(w.factor(beg, end)) != q)
    throw std::logic_error("extend_to_run: extension changed the minimal period");
  return Run{beg, end, q};
}

}  // namespace gappedrep
