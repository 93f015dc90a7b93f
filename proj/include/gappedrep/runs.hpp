#pragma once

#include <tuple>
#include <vector>

#include "gappedrep/rational.hpp"
#include "gappedrep/word.hpp"

namespace gappedrep {

// A maximal repetition: the factor w[beg..end] has minimal period
// `period`, length >= 2 * period, and cannot be extended by one letter in
// either direction without breaking that period.
struct Run {
  int beg = 0;
  int end = 0;
  int period = 0;

  int length() const { return end - beg + 1; }
  Rational exponent() const { return Rational(length()) / Rational(period); }

  friend bool operator==(const Run& a, const Run& b) {
    return a.beg == b.beg && a.end == b.end && a.period == b.period;
  }
  friend bool operator<(const Run& a, const Run& b) {
    return std::tie(a.beg, a.period, a.end) < std::tie(b.beg, b.period, b.end);
  }
};

// All runs of w, sorted by (beg, period), no duplicates.
std::vector<Run> enumerate_runs(const Word& w);

// Sum of run exponents; 0 when w has no runs.
Rational sum_of_exponents(const Word& w);

// The unique run with minimal period q containing the repetition
// w[beg..end]. Throws std::invalid_argument if w[beg..end] is not a
// repetition with minimal period exactly q.
Run extend_to_run(const Word& w, int beg, int end, int q);

}  // namespace gappedrep
