#pragma once

#include <cstdint>
#include <string>

#include "gappedrep/word.hpp"

namespace gappedrep {

// Deterministic corpus generators. The same spec yields the same word on
// every platform; the random kind is pinned to a fixed 64-bit linear
// congruential step so seeds reproduce bit-exactly everywhere.
struct GeneratorSpec {
  enum class Kind { random, fibonacci, thue_morse, power };

  Kind kind = Kind::random;
  long long length = 0;   // random / fibonacci / thue_morse
  int alphabet = 2;       // random: 1..26, letters from 'a'
  std::uint64_t seed = 0; // random
  std::string block;      // power
  long long count = 0;    // power

  static GeneratorSpec random(long long n, int sigma, std::uint64_t seed);
  static GeneratorSpec fibonacci(long long n);
  static GeneratorSpec thue_morse(long long n);
  static GeneratorSpec power(std::string block, long long count);
};

// Throws std::invalid_argument on a bad spec (negative length, alphabet
// outside 1..26, empty power block with positive count).
Word generate(const GeneratorSpec& spec);

}  // namespace gappedrep
