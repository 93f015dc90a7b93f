#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "gappedrep/covering.hpp"
#include "gappedrep/repeats.hpp"

using namespace gappedrep;

TEST_CASE("to_point") {
  CHECK(to_point(GappedRepeat{1, 2, 3}) == Point{1, 4, 2});
  CHECK(to_point(GappedRepeat{2, 1, 2}) == Point{2, 4, 1});
}

TEST_CASE("to_point is injective on each word's repeats") {
  testutil::each_word(2, 10, [](const Word& w) {
    const auto reps = enumerate_maximal_gapped_repeats(w);
    std::set<std::tuple<int, int, int>> points;
    for (const GappedRepeat& r : reps) {
      const Point q = to_point(r);
      CHECK(points.insert({q.i, q.j, q.c}).second);
    }
  });
}

TEST_CASE("covers") {
  const CoverBox above{Point{1, 10, 6}, CoverMode::above};
  CHECK(covers(above, Point{2, 11, 4}));
  CHECK(!covers(above, Point{3, 10, 6}));
  CHECK(covers(above, Point{1, 10, 6}));  // self-coverage at c = c'
  CHECK(!covers(above, Point{1, 10, 3}));

  const CoverBox below{Point{1, 10, 6}, CoverMode::below};
  CHECK(covers(below, Point{1, 10, 9}));
  CHECK(!covers(below, Point{1, 10, 10}));
  CHECK(covers(below, Point{2, 11, 6}));
}

TEST_CASE("weights") {
  CHECK(weight(Point{5, 9, 2}) == Rational::of(1, 8));
  CHECK(weight_sum({Point{1, 2, 1}, Point{1, 3, 2}}) == Rational::of(9, 8));
}

TEST_CASE("box of a unit copy holds a single height") {
  const auto pts = points_covered_from_above(Point{3, 7, 1});
  CHECK(pts == std::vector<Point>{Point{3, 7, 1}});
  CHECK(weight_sum(pts) == Rational(1));
}

TEST_CASE("box enumeration matches the predicate") {
  for (const Point origin : {Point{1, 10, 6}, Point{2, 9, 7}, Point{5, 30, 12}}) {
    const auto pts = points_covered_from_above(origin);
    std::set<std::tuple<int, int, int>> enumerated;
    for (const Point& q : pts) enumerated.insert({q.i, q.j, q.c});
    const CoverBox box{origin, CoverMode::above};
    for (int i = origin.i - 1; i <= origin.i + origin.c; ++i)
      for (int j = origin.j - 1; j <= origin.j + origin.c; ++j)
        for (int c = 1; c <= 2 * origin.c; ++c)
          CHECK(covers(box, Point{i, j, c}) == enumerated.contains({i, j, c}));
  }
}

TEST_CASE("above-box weight exceeds 5/1152") {
  // Constant from bracketing the box weight from below; checked on every
  // copy length small enough for exact 128-bit summation.
  const Rational floor_weight = Rational::of(5, 1152);
  for (int c = 1; c <= 30; ++c) {
    const auto pts = points_covered_from_above(Point{1, 1, c});
    CHECK(weight_sum(pts) > floor_weight);
  }
}

TEST_CASE("repeats sharing a covered point have close copies and strong overlap") {
  auto strongly_overlapped = [](int b1, int l1, int b2, int l2) {
    return (b1 <= b2 && 6 * (b2 - b1) <= l1) || (b2 <= b1 && 6 * (b1 - b2) <= l2);
  };
  testutil::each_word(2, 9, [&](const Word& w) {
    const auto reps = enumerate_maximal_gapped_repeats(w);
    for (size_t x = 0; x < reps.size(); ++x) {
      for (size_t y = x + 1; y < reps.size(); ++y) {
        const CoverBox box{to_point(reps[x]), CoverMode::above};
        bool shared = false;
        for (const Point& q : points_covered_from_above(to_point(reps[y])))
          if (covers(box, q)) shared = true;
        if (!shared) continue;
        const int c1 = std::min(reps[x].copy_len, reps[y].copy_len);
        const int c2 = std::max(reps[x].copy_len, reps[y].copy_len);
        CHECK(2 * c2 <= 3 * c1);
        CHECK(strongly_overlapped(reps[x].beg1, reps[x].copy_len, reps[y].beg1,
                                  reps[y].copy_len));
        CHECK(strongly_overlapped(reps[x].beg2(), reps[x].copy_len, reps[y].beg2(),
                                  reps[y].copy_len));
      }
    }
  });
}

TEST_CASE("tail weight lower bound") {
  CHECK(tail_weight_lower_bound_check(1));
  CHECK(tail_weight_lower_bound_check(3));
  CHECK(tail_weight_lower_bound_check(200));
  CHECK_THROWS_AS(tail_weight_lower_bound_check(0), std::invalid_argument);
}

TEST_CASE("tail weight decision agrees with exact rationals") {
  for (int cp = 1; cp <= 30; ++cp) {
    Rational sum;
    const int lo = (2 * cp + 2) / 3;
    for (int c = lo; c <= cp; ++c) sum += Rational(1) / Rational(1LL * c * c * c);
    const bool exact = sum >= Rational::of(5, 32) / Rational(1LL * cp * cp);
    CHECK(tail_weight_lower_bound_check(cp) == exact);
    CHECK(exact);
  }
}
