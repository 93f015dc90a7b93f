#pragma once

#include <functional>
#include <tuple>
#include <vector>

#include "gappedrep/gap_constraints.hpp"
#include "gappedrep/word.hpp"

namespace gappedrep {

// A maximal gapped repeat: two equal copies of length copy_len starting at
// beg1 and beg1 + period, separated by a nonempty gap. Identity is the
// triple (beg1, copy_len, period); repeats occupying the same segment with
// different periods are distinct.
struct GappedRepeat {
  int beg1 = 0;
  int copy_len = 0;
  int period = 0;

  int end1() const { return beg1 + copy_len - 1; }
  int beg2() const { return beg1 + period; }
  int end2() const { return beg1 + period + copy_len - 1; }
  int gap_len() const { return period - copy_len; }

  friend bool operator==(const GappedRepeat& a, const GappedRepeat& b) {
    return a.beg1 == b.beg1 && a.copy_len == b.copy_len && a.period == b.period;
  }
  friend bool operator<(const GappedRepeat& a, const GappedRepeat& b) {
    return std::tie(a.beg1, a.period, a.copy_len) < std::tie(b.beg1, b.period, b.copy_len);
  }
};

// Maximal intervals [a, b] within [1, n-p] where w[k] == w[k+p], in
// increasing order. Requires 1 <= p <= n-1.
std::vector<std::pair<int, int>> match_blocks(const Word& w, int p);

// Every maximal gapped repeat of w, sorted by (beg1, period, copy_len).
std::vector<GappedRepeat> enumerate_maximal_gapped_repeats(const Word& w);

// Streaming variant: invokes fn once per maximal gapped repeat without
// materializing the full set (which can be quadratic in |w|). Order is
// by (period, beg1), not the canonical sort.
void for_each_maximal_gapped_repeat(const Word& w,
                                    const std::function<void(const GappedRepeat&)>& fn);

// Subset admitted by the constraint, input order preserved.
std::vector<GappedRepeat> filter_repeats(const std::vector<GappedRepeat>& reps,
                                         const GapConstraint& con);

// Streaming count of admitted repeats; never materializes the repeat set.
long long count_admitted_repeats(const Word& w, const GapConstraint& con);

}  // namespace gappedrep
