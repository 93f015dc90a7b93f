#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gappedrep/wordgen.hpp"

using namespace gappedrep;

TEST_CASE("fibonacci words") {
  CHECK(generate(GeneratorSpec::fibonacci(10)).str() == "abaababaab");
  CHECK(generate(GeneratorSpec::fibonacci(1)).str() == "a");
  CHECK(generate(GeneratorSpec::fibonacci(2)).str() == "ab");
  CHECK(generate(GeneratorSpec::fibonacci(0)).str().empty());
  // The defining recurrence: the limit word is a fixed point of removing
  // the last two letters of F(k) = F(k-1) F(k-2).
  const std::string f12 = generate(GeneratorSpec::fibonacci(233)).str();
  const std::string f11 = generate(GeneratorSpec::fibonacci(144)).str();
  const std::string f10 = generate(GeneratorSpec::fibonacci(89)).str();
  CHECK(f12 == f11 + f10);
}

TEST_CASE("thue-morse words") {
  CHECK(generate(GeneratorSpec::thue_morse(8)).str() == "abbabaab");
  const Word w = generate(GeneratorSpec::thue_morse(512));
  for (int k = 1; k <= 512; ++k) {
    int ones = 0;
    for (int v = k - 1; v > 0; v >>= 1) ones += v & 1;
    CHECK(w.at(k) == (ones % 2 == 0 ? 'a' : 'b'));
  }
  // Doubling recurrence: t(2k) = t(k), t(2k+1) = flip(t(k)), 0-indexed.
  for (int k = 1; 2 * k + 2 <= 512; ++k) {
    CHECK(w.at(2 * k + 1) == w.at(k + 1));
    CHECK(w.at(2 * k + 2) != w.at(k + 1));
  }
}

TEST_CASE("power words") {
  CHECK(generate(GeneratorSpec::power("ab", 3)).str() == "ababab");
  CHECK(generate(GeneratorSpec::power("ab", 0)).str().empty());
  CHECK_THROWS_AS(generate(GeneratorSpec::power("", 2)), std::invalid_argument);
}

TEST_CASE("random words are deterministic") {
  const Word a = generate(GeneratorSpec::random(64, 3, 12345));
  const Word b = generate(GeneratorSpec::random(64, 3, 12345));
  CHECK(a == b);
  const Word c = generate(GeneratorSpec::random(64, 3, 12346));
  CHECK(!(a == c));
  for (int k = 1; k <= 64; ++k) {
    CHECK(a.at(k) >= 'a');
    CHECK(a.at(k) < 'a' + 3);
  }
}

TEST_CASE("random generator matches the pinned recurrence") {
  std::uint64_t x = 42;
  std::string expected;
  for (int k = 0; k < 16; ++k) {
    x = 6364136223846793005ULL * x + 1442695040888963407ULL;
    expected.push_back(static_cast<char>('a' + (x >> 33) % 2));
  }
  CHECK(generate(GeneratorSpec::random(16, 2, 42)).str() == expected);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(generate(GeneratorSpec::random(8, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(generate(GeneratorSpec::random(8, 27, 1)), std::invalid_argument);
  CHECK_THROWS_AS(generate(GeneratorSpec::random(-1, 2, 1)), std::invalid_argument);
}
