#include "gappedrep/repeats.hpp"

#include <algorithm>
#include <stdexcept>

namespace gappedrep {

std::vector<std::pair<int, int>> match_blocks(const Word& w, int p) {
  const int n = w.size();
  if (p < 1 || p > n - 1) throw std::domain_error("match_blocks: period out of range");
  std::vector<std::pair<int, int>> blocks;
  int block_start = 0;
  for (int k = 1; k <= n - p + 1; ++k) {
    const bool match = k <= n - p && w.at(k) == w.at(k + p);
    if (match && block_start == 0) block_start = k;
    if (!match && block_start != 0) {
      blocks.emplace_back(block_start, k - 1);
      block_start = 0;
    }
  }
  return blocks;
}

// A maximal gapped repeat with period p is exactly a maximal match block
// [a, b] of length at most p-1: the copies are w[a..b] and w[a+p..b+p],
// and the block boundaries are the two maximality conditions. Blocks of
// length >= p would make the copies overlap (that structure is a run).
void for_each_maximal_gapped_repeat(const Word& w,
                                    const std::function<void(const GappedRepeat&)>& fn) {
  const int n = w.size();
  for (int p = 1; p <= n - 1; ++p) {
    for (const auto& [a, b] : match_blocks(w, p)) {
      const int len = b - a + 1;
      if (len <= p - 1) fn(GappedRepeat{a, len, p});
    }
  }
}

std::vector<GappedRepeat> enumerate_maximal_gapped_repeats(const Word& w) {
  std::vector<GappedRepeat> reps;
  if (w.size() >= 3)
    for_each_maximal_gapped_repeat(w, [&](const GappedRepeat& r) { reps.push_back(r); });
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::vector<GappedRepeat> filter_repeats(const std::vector<GappedRepeat>& reps,
                                         const GapConstraint& con) {
  std::vector<GappedRepeat> kept;
  for (const GappedRepeat& r : reps)
    if (con.admits(r.copy_len, r.gap_len())) kept.push_back(r);
  return kept;
}

long long count_admitted_repeats(const Word& w, const GapConstraint& con) {
  const int max_copy = std::max(0, (w.size() - 1) / 2);
  if (max_copy == 0) return 0;
  const AdmissionTester admits(con, max_copy);
  long long count = 0;
  for_each_maximal_gapped_repeat(w, [&](const GappedRepeat& r) {
    if (admits(r.copy_len, r.gap_len())) ++count;
  });
  return count;
}

}  // namespace gappedrep
