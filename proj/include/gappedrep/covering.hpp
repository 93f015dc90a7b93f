#pragma once

#include <vector>

#include "gappedrep/rational.hpp"
#include "gappedrep/repeats.hpp"

namespace gappedrep {

// Integer triple (i, j, c); repeats map to points via to_point and the
// cover predicates compare against boxes of side c'/6 around a repeat's
// point with the height band [2c'/3, c'] (above) or [c', 3c'/2] (below).
struct Point {
  int i = 0;
  int j = 0;
  int c = 0;

  friend bool operator==(const Point& a, const Point& b) {
    return a.i == b.i && a.j == b.j && a.c == b.c;
  }
};

enum class CoverMode { above, below };

struct CoverBox {
  Point origin;
  CoverMode mode = CoverMode::above;
};

// (beg1, beg2, copy_len); injective on maximal gapped repeats.
Point to_point(const GappedRepeat& rep);

// Exact membership: above means origin.i <= q.i <= origin.i + c'/6,
// same for j, and 2c'/3 <= q.c <= c'; below swaps the height band to
// c' <= q.c <= 3c'/2. Fractional bounds are compared as exact rationals.
bool covers(const CoverBox& box, const Point& q);

// rho(i, j, c) = 1 / c^3.
Rational weight(const Point& q);
Rational weight_sum(const std::vector<Point>& points);

// Every integer point covered from above by the repeat's point.
std::vector<Point> points_covered_from_above(const Point& origin);

// Whether sum_{2c'/3 <= c <= c'} 1/c^3 >= (5/32) / c'^2 for every
// c' in 1..cmax. Decided exactly: the sum is bracketed by scaled integer
// floor sums whose resolution (count / 2^64) is far below the inequality's
// margin, so neither bracket ever straddles the threshold; if one did,
// this throws instead of guessing.
bool tail_weight_lower_bound_check(int cmax);

}  // namespace gappedrep
