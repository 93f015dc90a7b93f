// Acceptance suite: exercises the full pipeline against its brute-force
// oracles and structural checks on fixed corpora, printing one line per
// criterion. Exits nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "../corpus.hpp"
#include "gappedrep/classification.hpp"
#include "gappedrep/covering.hpp"
#include "gappedrep/gap_constraints.hpp"
#include "gappedrep/oracle.hpp"
#include "gappedrep/repeats.hpp"
#include "gappedrep/runs.hpp"
#include "gappedrep/theory_checks.hpp"
#include "gappedrep/wordgen.hpp"

using namespace gappedrep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Suite {
  int failures = 0;

  void report(int id, bool ok, const std::string& note) {
    if (!ok) ++failures;
    std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", id, note.c_str());
    std::fflush(stdout);
  }
};

// Exhaustive binary words up to length 13, ternary up to 9, and 500
// seeded random words (n <= 64, alphabets 2..4).
std::vector<Word> oracle_corpus() {
  std::vector<Word> words;
  testutil::each_word(2, 13, [&](const Word& w) { words.push_back(w); });
  testutil::each_word(3, 9, [&](const Word& w) { words.push_back(w); });
  for (const Word& w : testutil::random_words(500, 64, 4, 10000)) words.push_back(w);
  return words;
}

std::vector<Word> lemma_extra_corpus() {
  std::vector<Word> words;
  words.push_back(generate(GeneratorSpec::fibonacci(1000)));
  words.push_back(generate(GeneratorSpec::thue_morse(1024)));
  for (int k = 0; k < 100; ++k)
    words.push_back(generate(GeneratorSpec::random(512, 2, 20000 + k)));
  return words;
}

const std::array<const char*, 4> kConstraints = {"alpha:3/2", "alpha:2", "alpha:4", "band:1:10"};

GapConstraint bind_for(const ConstraintSpec& spec, const Word& w) {
  return spec.bind(std::max(2, 2 * w.size()));
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  const std::string command = std::string(GAPPEDREP_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string output;
  std::array<char, 4096> buf{};
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    if (exit_code != nullptr) *exit_code = -1;
    return output;
  }
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  const int status = pclose(pipe);
  if (exit_code != nullptr) *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

}  // namespace

int main() {
  Suite suite;
  const auto corpus = oracle_corpus();
  const auto extras = lemma_extra_corpus();

  // 1. Repeat enumeration equals the brute-force oracle.
  {
    const auto start = Clock::now();
    long long mismatches = 0;
    for (const Word& w : corpus)
      if (enumerate_maximal_gapped_repeats(w) != oracle::naive_maximal_gapped_repeats(w))
        ++mismatches;
    const double elapsed = seconds_since(start);
    const bool ok = mismatches == 0 && elapsed <= 300.0;
    suite.report(1, ok,
                 "repeat oracle equivalence on " + std::to_string(corpus.size()) + " words, " +
                     std::to_string(mismatches) + " mismatches, " + std::to_string(elapsed) + "s");
  }

  // 2. Run enumeration and exponent sums equal the oracle.
  {
    long long mismatches = 0;
    for (const Word& w : corpus) {
      const auto runs = enumerate_runs(w);
      const auto naive = oracle::naive_runs(w);
      Rational naive_sum;
      for (const Run& r : naive) naive_sum += r.exponent();
      if (runs != naive || sum_of_exponents(w) != naive_sum) ++mismatches;
    }
    suite.report(2, mismatches == 0,
                 "run oracle equivalence and exponent sums, " + std::to_string(mismatches) +
                     " mismatches");
  }

  // 3. Classification never raises and censuses reconcile.
  {
    long long words_checked = 0, bad = 0;
    std::string first_error;
    for (const char* text : kConstraints) {
      const auto spec = ConstraintSpec::parse(text);
      for (const Word& w : corpus) {
        ++words_checked;
        try {
          const auto census = class_census(w, bind_for(spec, w));
          const bool partitioned =
              census.periodic + census.semiperiodic + census.ordinary == census.total &&
              census.periodic_private + census.periodic_prefix + census.periodic_suffix +
                      census.periodic_total ==
                  census.periodic;
          if (!partitioned) {
            ++bad;
            if (first_error.empty()) first_error = "census mismatch on \"" + w.str() + "\"";
          }
        } catch (const std::exception& e) {
          ++bad;
          if (first_error.empty())
            first_error = std::string("exception on \"") + w.str() + "\": " + e.what();
        }
      }
    }
    suite.report(3, bad == 0,
                 "taxonomy sound on " + std::to_string(words_checked) + " word/constraint pairs" +
                     (first_error.empty() ? "" : "; first: " + first_error));
  }

  // 4. Structural checks C1..C19, C22 never fail; remember C9/C22 for
  // criterion 5.
  bool c9_c22_clean = true;
  {
    long long reports_seen = 0, failures = 0;
    std::string first_failure;
    auto run_checks = [&](const Word& w, const ConstraintSpec& spec, const char* text) {
      for (const CheckReport& rep : check_word(w, bind_for(spec, w))) {
        ++reports_seen;
        if (rep.status != CheckReport::Status::fail) continue;
        if (rep.id == "C20" || rep.id == "C21") continue;
        ++failures;
        if (rep.id == "C9" || rep.id == "C22") c9_c22_clean = false;
        if (first_failure.empty())
          first_failure = rep.id + std::string(" on \"") +
                          (w.size() <= 80 ? w.str() : w.str().substr(0, 80) + "...") + "\" under " +
                          text + ": " + rep.witness.dump();
      }
    };
    for (const char* text : kConstraints) {
      const auto spec = ConstraintSpec::parse(text);
      for (const Word& w : corpus) run_checks(w, spec, text);
      for (const Word& w : extras) run_checks(w, spec, text);
    }
    suite.report(4, failures == 0,
                 "lemma suite, " + std::to_string(reports_seen) + " reports, " +
                     std::to_string(failures) + " failures" +
                     (first_failure.empty() ? "" : "; first: " + first_failure));
  }

  // 5. Explicit proof constants: C9/C22 above plus the tail-weight
  // inequality for every c' up to 10^4.
  {
    const bool tail_ok = tail_weight_lower_bound_check(10000);
    suite.report(5, c9_c22_clean && tail_ok,
                 std::string("explicit constants: per-run counts ") +
                     (c9_c22_clean ? "ok" : "violated") + ", tail weight up to 10^4 " +
                     (tail_ok ? "ok" : "violated"));
  }

  // 6. The alpha preset admits exactly the repeats with p <= alpha * c.
  {
    long long mismatches = 0;
    for (const char* alpha : {"3/2", "2", "3"}) {
      const Rational a = Rational::parse(alpha);
      const auto spec = ConstraintSpec::parse(std::string("alpha:") + alpha);
      for (const Word& w : corpus) {
        const auto all = enumerate_maximal_gapped_repeats(w);
        const auto filtered = filter_repeats(all, bind_for(spec, w));
        std::vector<GappedRepeat> direct;
        for (const GappedRepeat& r : all)
          if (Rational(r.period) <= a * Rational(r.copy_len)) direct.push_back(r);
        if (filtered != direct) ++mismatches;
      }
    }
    suite.report(6, mismatches == 0,
                 "alpha-gapped correspondence, " + std::to_string(mismatches) + " mismatches");
  }

  // 7. Admitted counts grow linearly under alpha:2; runs stay below n and
  // exponent sums below 3n.
  {
    const auto start = Clock::now();
    const auto spec = ConstraintSpec::parse("alpha:2");
    std::map<int, Rational> ratio;
    bool runs_ok = true;
    for (const int n : {1 << 10, 1 << 12, 1 << 14}) {
      const Word w = generate(GeneratorSpec::random(n, 2, 5000 + n));
      const auto con = bind_for(spec, w);
      const long long count = count_admitted_repeats(w, con);
      ratio[n] = Rational(count) / bound_value(n, stats(con));
      const auto runs = enumerate_runs(w);
      if (static_cast<int>(runs.size()) > n || sum_of_exponents(w) > Rational(3LL * n))
        runs_ok = false;
    }
    const double elapsed = seconds_since(start);
    const bool linear = ratio[1 << 14] <= Rational::of(3, 2) * ratio[1 << 10];
    const bool ok = linear && runs_ok && elapsed <= 120.0;
    suite.report(7, ok,
                 "empirical linearity: ratio(2^10)=" + ratio[1 << 10].str() +
                     ", ratio(2^14)=" + ratio[1 << 14].str() + ", runs/exponents " +
                     (runs_ok ? "ok" : "violated") + ", " + std::to_string(elapsed) + "s");
  }

  // 8. Determinism: repeated CLI invocations are byte-identical and the
  // pinned generator reproduces its golden word.
  {
    const std::string golden = "aaabaabaabaaaaab";
    const Word w = generate(GeneratorSpec::random(16, 2, 42));
    const bool golden_ok = w.str() == golden;

    int code1 = 0, code2 = 0;
    const std::string gen1 = run_cli("gen --kind random --length 200 --alphabet 2 --seed 9", &code1);
    const std::string gen2 = run_cli("gen --kind random --length 200 --alphabet 2 --seed 9", &code2);
    const std::string word = gen1.substr(0, gen1.size() - 1);

    const std::string in_path = "acceptance_word.txt";
    {
      std::ofstream out(in_path, std::ios::binary);
      out << word << "\n";
    }
    int vcode1 = 0, vcode2 = 0;
    const std::string v1 = run_cli("verify --constraint alpha:2 --input " + in_path, &vcode1);
    const std::string v2 = run_cli("verify --constraint alpha:2 --input " + in_path, &vcode2);
    std::remove(in_path.c_str());

    const bool ok = golden_ok && code1 == 0 && code2 == 0 && gen1 == gen2 && vcode1 == 0 &&
                    vcode2 == 0 && v1 == v2 && !v1.empty();
    suite.report(8, ok,
                 std::string("determinism: golden ") + (golden_ok ? "ok" : "mismatch") +
                     ", CLI outputs " + (gen1 == gen2 && v1 == v2 ? "byte-identical" : "diverged"));
  }

  if (suite.failures == 0) std::printf("acceptance: all criteria passed\n");
  else std::printf("acceptance: %d criterion(s) failed\n", suite.failures);
  return suite.failures == 0 ? 0 : 1;
}
