#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "gappedrep/oracle.hpp"
#include "gappedrep/repeats.hpp"

using namespace gappedrep;

TEST_CASE("match blocks") {
  CHECK(match_blocks(Word("aabaa"), 3) == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(match_blocks(Word("aabaa"), 2) == std::vector<std::pair<int, int>>{{2, 2}});
  CHECK(match_blocks(Word("ab"), 1).empty());
  CHECK_THROWS_AS(match_blocks(Word("ab"), 2), std::domain_error);
  CHECK_THROWS_AS(match_blocks(Word("ab"), 0), std::domain_error);
}

TEST_CASE("repeats of small words") {
  CHECK(enumerate_maximal_gapped_repeats(Word("aabaa")) ==
        std::vector<GappedRepeat>{{1, 2, 3}, {1, 1, 4}, {2, 1, 2}});
  CHECK(enumerate_maximal_gapped_repeats(Word("abaab")) ==
        std::vector<GappedRepeat>{{1, 1, 2}, {1, 2, 3}});
  CHECK(enumerate_maximal_gapped_repeats(Word("aaaa")) ==
        std::vector<GappedRepeat>{{1, 1, 3}});
  CHECK(enumerate_maximal_gapped_repeats(Word("ab")).empty());
  CHECK(enumerate_maximal_gapped_repeats(Word("")).empty());
}

TEST_CASE("filtering by constraint") {
  const auto reps = enumerate_maximal_gapped_repeats(Word("aabaa"));
  const auto spec_alpha = ConstraintSpec::parse("alpha:2");
  const auto kept = filter_repeats(reps, spec_alpha.bind(10));
  CHECK(kept == std::vector<GappedRepeat>{{1, 2, 3}, {2, 1, 2}});

  const auto spec_band = ConstraintSpec::parse("band:3:3");
  CHECK(filter_repeats(reps, spec_band.bind(10)) == std::vector<GappedRepeat>{{1, 1, 4}});

  CHECK(filter_repeats({}, spec_alpha.bind(10)).empty());
}

TEST_CASE("oracle equivalence on exhaustive and random corpora") {
  testutil::each_word(2, 11, [](const Word& w) {
    CHECK(enumerate_maximal_gapped_repeats(w) == oracle::naive_maximal_gapped_repeats(w));
  });
  testutil::each_word(3, 7, [](const Word& w) {
    CHECK(enumerate_maximal_gapped_repeats(w) == oracle::naive_maximal_gapped_repeats(w));
  });
  for (const Word& w : testutil::random_words(60, 48, 4, 2024))
    CHECK(enumerate_maximal_gapped_repeats(w) == oracle::naive_maximal_gapped_repeats(w));
}

TEST_CASE("streaming enumeration agrees with the materialized list") {
  for (const Word& w : testutil::random_words(20, 64, 3, 17)) {
    std::vector<GappedRepeat> streamed;
    for_each_maximal_gapped_repeat(w, [&](const GappedRepeat& r) { streamed.push_back(r); });
    std::sort(streamed.begin(), streamed.end());
    CHECK(streamed == enumerate_maximal_gapped_repeats(w));
  }
}

TEST_CASE("emitted repeats satisfy every invariant") {
  for (const Word& w : testutil::random_words(40, 56, 2, 808)) {
    for (const GappedRepeat& r : enumerate_maximal_gapped_repeats(w)) {
      CHECK(r.copy_len >= 1);
      CHECK(r.period >= r.copy_len + 1);
      CHECK(r.end2() <= w.size());
      CHECK(w.factor(r.beg1, r.end1()) == w.factor(r.beg2(), r.end2()));
      if (r.beg1 > 1) CHECK(w.at(r.beg1 - 1) != w.at(r.beg2() - 1));
      if (r.end2() < w.size()) CHECK(w.at(r.end1() + 1) != w.at(r.end2() + 1));
    }
  }
}

TEST_CASE("same segment, different periods are distinct repeats") {
  bool found = false;
  testutil::each_word(2, 9, [&](const Word& w) {
    if (found) return;
    const auto reps = enumerate_maximal_gapped_repeats(w);
    std::set<std::pair<int, int>> segments;
    for (const GappedRepeat& r : reps)
      if (!segments.insert({r.beg1, r.end2()}).second) found = true;
  });
  CHECK(found);
}
