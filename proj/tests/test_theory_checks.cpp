#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "gappedrep/classification.hpp"
#include "gappedrep/repeats.hpp"
#include "gappedrep/theory_checks.hpp"
#include "gappedrep/word_core.hpp"
#include "gappedrep/wordgen.hpp"

using namespace gappedrep;

namespace {

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status != CheckReport::Status::pass) return false;
  return true;
}

GapConstraint bind_for(const char* text, const Word& w) {
  return ConstraintSpec::parse(text).bind(std::max(2, 2 * w.size()));
}

}  // namespace

TEST_CASE("catalogue covers C1..C22") {
  CHECK(all_check_ids().size() == 22);
  CHECK(all_check_ids().front() == "C1");
  CHECK(all_check_ids().back() == "C22");
}

TEST_CASE("small word passes every check") {
  const Word w("aabaa");
  const auto reports = check_word(w, bind_for("alpha:2", w));
  CHECK(reports.size() == 22);
  CHECK(all_pass(reports));
}

TEST_CASE("thue-morse prefix passes every check") {
  const Word w = generate(GeneratorSpec::thue_morse(64));
  for (const char* con : {"alpha:3/2", "alpha:2", "band:1:10"})
    CHECK(all_pass(check_word(w, bind_for(con, w))));
}

TEST_CASE("fibonacci prefix passes every check") {
  const Word w = generate(GeneratorSpec::fibonacci(89));
  for (const char* con : {"alpha:2", "alpha:4"})
    CHECK(all_pass(check_word(w, bind_for(con, w))));
}

TEST_CASE("semiperiodic window check is tight on its extremal word") {
  // The second copy of the length-4 gapped repeat starts exactly at the
  // upper end of the semiperiodic generation window.
  const Word w("aababbaaba");
  const auto con = bind_for("alpha:3/2", w);
  const auto reports = check_word(w, con, {"C10", "C11", "C12"});
  CHECK(reports.size() == 3);
  CHECK(all_pass(reports));

  // Regression guard for the window anchoring: the repeat (1, c=4, p=6)
  // is prefix-semiperiodic, generated from the left by the run [1,2], and
  // its second copy starts at position 7 == up_f exactly. Anchoring the
  // window at beg(r) instead of end(r) would shrink up_f to 6 and fail.
  const auto win = generation_windows(Run{1, 2, 1}, con);
  CHECK(win.up_f == Rational(7));
  CHECK(win.lp_g == Rational::of(9, 2));
  CHECK(GappedRepeat{1, 4, 6}.beg2() == 7);
}

TEST_CASE("random words pass every check") {
  for (const Word& w : testutil::random_words(25, 48, 3, 11011)) {
    for (const char* con : {"alpha:3/2", "alpha:2", "alpha:4", "band:1:10"}) {
      const auto reports = check_word(w, bind_for(con, w));
      for (const auto& rep : reports) {
        INFO("word=", w.str(), " constraint=", con, " check=", rep.id);
        CHECK(rep.status == CheckReport::Status::pass);
      }
    }
  }
}

TEST_CASE("check filter and unknown ids") {
  const Word w("aabaa");
  const auto con = bind_for("alpha:2", w);
  const auto only = check_word(w, con, {"C19", "C1"});
  CHECK(only.size() == 2);
  CHECK(only[0].id == "C1");  // catalogue order, not request order
  CHECK(only[1].id == "C19");
  CHECK_THROWS_AS(check_word(w, con, {"C23"}), std::invalid_argument);
  CHECK_THROWS_AS(check_word(w, con, {"c1"}), std::invalid_argument);
}

TEST_CASE("quadratic checks skip above the size limit") {
  const Word w = generate(GeneratorSpec::random(64, 2, 5));
  CheckOptions opts;
  opts.max_quadratic_n = 32;
  const auto reports = check_word(w, bind_for("alpha:2", w), {"C2", "C3", "C14"}, opts);
  for (const auto& rep : reports) CHECK(rep.status == CheckReport::Status::skipped);
}

TEST_CASE("metric-only checks always pass and report their numbers") {
  const Word w("abaababaabaab");
  const auto reports = check_word(w, bind_for("alpha:2", w), {"C20", "C21"});
  CHECK(reports.size() == 2);
  for (const auto& rep : reports) {
    CHECK(rep.status == CheckReport::Status::pass);
    CHECK(!rep.metrics.empty());
  }
}

TEST_CASE("strong-overlap pair scan finds exactly the qualifying pairs") {
  auto strongly_overlapped = [](int b1, int l1, int b2, int l2) {
    return (b1 <= b2 && 6 * (b2 - b1) <= l1) || (b2 <= b1 && 6 * (b1 - b2) <= l2);
  };
  auto brute_count = [&](const Word& w) {
    const auto reps = enumerate_maximal_gapped_repeats(w);
    long long pairs = 0;
    for (size_t x = 0; x < reps.size(); ++x)
      for (size_t y = x + 1; y < reps.size(); ++y) {
        const int c1 = std::min(reps[x].copy_len, reps[y].copy_len);
        const int c2 = std::max(reps[x].copy_len, reps[y].copy_len);
        if (2 * c2 > 3 * c1) continue;
        if (!strongly_overlapped(reps[x].beg1, reps[x].copy_len, reps[y].beg1,
                                 reps[y].copy_len))
          continue;
        if (!strongly_overlapped(reps[x].beg2(), reps[x].copy_len, reps[y].beg2(),
                                 reps[y].copy_len))
          continue;
        ++pairs;
      }
    return pairs;
  };
  long long total = 0;
  auto check_one = [&](const Word& w) {
    const auto reports = check_word(w, bind_for("band:1:64", w), {"C14"});
    REQUIRE(reports.size() == 1);
    REQUIRE(reports[0].status == CheckReport::Status::pass);
    REQUIRE(reports[0].metrics.size() == 1);
    const long long expected = brute_count(w);
    CHECK(reports[0].metrics[0].second == Rational(expected));
    total += expected;
  };
  check_one(generate(GeneratorSpec::power("a", 24)));
  check_one(generate(GeneratorSpec::power("aab", 10)));
  check_one(generate(GeneratorSpec::fibonacci(80)));
  for (const Word& w : testutil::random_words(30, 48, 2, 404)) check_one(w);
  CHECK(total > 0);  // the preconditions do fire somewhere in this corpus
}

TEST_CASE("power words with heavy periodicity pass every check") {
  const Word w = generate(GeneratorSpec::power("aab", 12));
  for (const char* con : {"alpha:2", "band:1:10"})
    CHECK(all_pass(check_word(w, bind_for(con, w))));
}

namespace {

// Definition-level scans used to validate the occurrence counts that the
// spacing checks report.
long long brute_primitive_square_occurrences(const Word& w) {
  long long count = 0;
  for (int half = 1; 2 * half <= w.size(); ++half)
    for (int i = 1; i + 2 * half - 1 <= w.size(); ++i) {
      if (w.factor(i, i + half - 1) != w.factor(i + half, i + 2 * half - 1)) continue;
      if (is_primitive(w.factor(i, i + half - 1))) ++count;
    }
  return count;
}

long long brute_periodic_factor_occurrences(const Word& w) {
  long long count = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (is_repetition(w.factor(i, j))) ++count;
  return count;
}

}  // namespace

TEST_CASE("spacing checks enumerate every occurrence") {
  auto metric = [](const CheckReport& rep) {
    REQUIRE(rep.metrics.size() == 1);
    return rep.metrics[0].second;
  };
  auto check_one = [&](const Word& w) {
    const auto reports = check_word(w, bind_for("alpha:2", w), {"C2", "C3"});
    REQUIRE(reports.size() == 2);
    CHECK(metric(reports[0]) == Rational(brute_primitive_square_occurrences(w)));
    CHECK(metric(reports[1]) == Rational(brute_periodic_factor_occurrences(w)));
  };
  check_one(generate(GeneratorSpec::power("a", 20)));
  check_one(generate(GeneratorSpec::power("ab", 12)));
  check_one(generate(GeneratorSpec::fibonacci(60)));
  check_one(generate(GeneratorSpec::thue_morse(48)));
  for (const Word& w : testutil::random_words(25, 32, 3, 27182)) check_one(w);
}

TEST_CASE("check_word needs the windows' domain") {
  const Word w("aabaab");
  const auto too_small = ConstraintSpec::parse("alpha:2").bind(w.size());
  CHECK_THROWS_AS(check_word(w, too_small, {"C12"}), std::domain_error);
}
