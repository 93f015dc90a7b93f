#include "gappedrep/wordgen.hpp"

#include <bit>
#include <stdexcept>

namespace gappedrep {

GeneratorSpec GeneratorSpec::random(long long n, int sigma, std::uint64_t seed) {
  GeneratorSpec s;
  s.kind = Kind::random;
  s.length = n;
  s.alphabet = sigma;
  s.seed = seed;
  return s;
}

GeneratorSpec GeneratorSpec::fibonacci(long long n) {
  GeneratorSpec s;
  s.kind = Kind::fibonacci;
  s.length = n;
  return s;
}

GeneratorSpec GeneratorSpec::thue_morse(long long n) {
  GeneratorSpec s;
  s.kind = Kind::thue_morse;
  s.length = n;
  return s;
}

GeneratorSpec GeneratorSpec::power(std::string block, long long count) {
  GeneratorSpec s;
  s.kind = Kind::power;
  s.block = std::move(block);
  s.count = count;
  return s;
}

namespace {

std::string gen_random(long long n, int sigma, std::uint64_t seed) {
  if (sigma < 1 || sigma > 26) throw std::invalid_argument("alphabet size must be in 1..26");
  std::string out;
  out.reserve(n);
  std::uint64_t x = seed;
  for (long long k = 0; k < n; ++k) {
    x = 6364136223846793005ULL * x + 1442695040888963407ULL;
    out.push_back(static_cast<char>('a' + (x >> 33) % static_cast<std::uint64_t>(sigma)));
  }
  return out;
}

// F1 = "a", F2 = "ab", Fk = F(k-1) F(k-2); prefix of the limit "abaab...".
std::string gen_fibonacci(long long n) {
  if (n == 0) return {};
  std::string prev = "a", cur = "ab";
  if (n == 1) return prev;
  while (static_cast<long long>(cur.size()) < n) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.substr(0, n);
}

// Letter at position k is the parity of ones in the binary form of k-1.
std::string gen_thue_morse(long long n) {
  std::string out;
  out.reserve(n);
  for (long long k = 0; k < n; ++k)
    out.push_back(std::popcount(static_cast<std::uint64_t>(k)) % 2 == 0 ? 'a' : 'b');
  return out;
}

std::string gen_power(const std::string& block, long long count) {
  if (count > 0 && block.empty()) throw std::invalid_argument("power block must be nonempty");
  std::string out;
  out.reserve(block.size() * count);
  for (long long k = 0; k < count; ++k) out += block;
  return out;
}

}  // namespace

Word generate(const GeneratorSpec& spec) {
  if (spec.kind != GeneratorSpec::Kind::power && spec.length < 0)
    throw std::invalid_argument("length must be nonnegative");
  if (spec.kind == GeneratorSpec::Kind::power && spec.count < 0)
    throw std::invalid_argument("count must be nonnegative");
  switch (spec.kind) {
    case GeneratorSpec::Kind::random:
      return Word(gen_random(spec.length, spec.alphabet, spec.seed));
    case GeneratorSpec::Kind::fibonacci: return Word(gen_fibonacci(spec.length));
    case GeneratorSpec::Kind::thue_morse: return Word(gen_thue_morse(spec.length));
    case GeneratorSpec::Kind::power: return Word(gen_power(spec.block, spec.count));
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace gappedrep
