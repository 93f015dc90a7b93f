#include "gappedrep/covering.hpp"

#include <stdexcept>

namespace gappedrep {

Point to_point(const GappedRepeat& rep) { return Point{rep.beg1, rep.beg2(), rep.copy_len}; }

bool covers(const CoverBox& box, const Point& q) {
  const Rational i0(box.origin.i), j0(box.origin.j), c0(box.origin.c);
  const Rational sixth = c0 / Rational(6);
  const Rational qi(q.i), qj(q.j), qc(q.c);
  if (!(i0 <= qi && qi <= i0 + sixth)) return false;
  if (!(j0 <= qj && qj <= j0 + sixth)) return false;
  if (box.mode == CoverMode::above)
    return c0 * Rational(2, 3) <= qc && qc <= c0;
  return c0 <= qc && qc <= c0 * Rational(3, 2);
}

Rational weight(const Point& q) {
  const Rational c(q.c);
  return Rational(1) / (c * c * c);
}

Rational weight_sum(const std::vector<Point>& points) {
  Rational total;
  for (const Point& q : points) total += weight(q);
  return total;
}

std::vector<Point> points_covered_from_above(const Point& origin) {
  std::vector<Point> pts;
  const int reach = origin.c / 6;  // floor(c'/6): integer i, j within side c'/6
  const int c_lo = (2 * origin.c + 2) / 3;  // ceil(2c'/3)
  for (int i = origin.i; i <= origin.i + reach; ++i)
    for (int j = origin.j; j <= origin.j + reach; ++j)
      for (int c = c_lo; c <= origin.c; ++c) pts.push_back(Point{i, j, c});
  return pts;
}

namespace {

using u128 = unsigned __int128;

// Decides sum_{c=a..b} 1/c^3 >= num/den with integer arithmetic only.
// Q = sum floor(2^64 / c^3) brackets the sum within (b-a+1)/2^64.
bool sum_inv_cubes_ge(int a, int b, u128 num, u128 den) {
  u128 q_lo = 0;
  const u128 one = u128(1) << 64;
  for (int c = a; c <= b; ++c) {
    const u128 c3 = u128(c) * u128(c) * u128(c);
    q_lo += one / c3;
  }
  const u128 count = u128(b - a + 1);
  // q_lo/2^64 <= sum < (q_lo + count)/2^64
  if (q_lo * den >= num * one) return true;
  if ((q_lo + count) * den < num * one) return false;
  throw std::logic_error("tail weight comparison fell inside the bracket resolution");
}

}  // namespace

bool tail_weight_lower_bound_check(int cmax) {
  if (cmax < 1) throw std::invalid_argument("tail_weight_lower_bound_check: cmax >= 1 required");
  for (int cp = 1; cp <= cmax; ++cp) {
    const int a = (2 * cp + 2) / 3;  // ceil(2c'/3)
    if (!sum_inv_cubes_ge(a, cp, 5, u128(32) * u128(cp) * u128(cp))) return false;
  }
  return true;
}

}  // namespace gappedrep
