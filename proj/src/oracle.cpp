#include "gappedrep/oracle.hpp"

#include <algorithm>

namespace gappedrep::oracle {

namespace {

bool factors_equal(const Word& w, int i, int j, int len) {
  for (int k = 0; k < len; ++k)
    if (w.at(i + k) != w.at(j + k)) return false;
  return true;
}

// Smallest period of w[i..j] found by trying every candidate.
int naive_period_of(const Word& w, int i, int j) {
  const int m = j - i + 1;
  for (int p = 1; p < m; ++p) {
    bool ok = true;
    for (int k = i; k + p <= j; ++k) {
      if (w.at(k) != w.at(k + p)) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  return m;
}

}  // namespace

std::vector<GappedRepeat> naive_maximal_gapped_repeats(const Word& w) {
  const int n = w.size();
  std::vector<GappedRepeat> reps;
  for (int beg1 = 1; beg1 <= n; ++beg1) {
    for (int c = 1; beg1 + c - 1 <= n; ++c) {
      for (int p = c + 1; beg1 + p + c - 1 <= n; ++p) {
        const int beg2 = beg1 + p;
        if (!factors_equal(w, beg1, beg2, c)) continue;
        if (beg1 > 1 && w.at(beg1 - 1) == w.at(beg2 - 1)) continue;
        const int end2 = beg2 + c - 1;
        if (end2 < n && w.at(beg1 + c) == w.at(end2 + 1)) continue;
        reps.push_back(GappedRepeat{beg1, c, p});
      }
    }
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::vector<Run> naive_runs(const Word& w) {
  const int n = w.size();
  std::vector<Run> runs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int p = naive_period_of(w, i, j);
      if (j - i + 1 < 2 * p) continue;
      if (i > 1 && w.at(i - 1) == w.at(i - 1 + p)) continue;
      if (j < n && w.at(j + 1 - p) == w.at(j + 1)) continue;
      runs.push_back(Run{i, j, p});
    }
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

int naive_minimal_period(const Word& w) {
  if (w.empty()) throw std::invalid_argument("naive_minimal_period of empty word");
  return naive_period_of(w, 1, w.size());
}

}  // namespace gappedrep::oracle
