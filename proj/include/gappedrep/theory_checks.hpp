#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gappedrep/gap_constraints.hpp"
#include "gappedrep/rational.hpp"
#include "gappedrep/word.hpp"

namespace gappedrep {

// Instance checks over a word and a gap constraint. Each check scans the
// word's runs and repeats and asserts a structural property; a failing
// check carries a witness that can be re-verified from the word alone.
//
//   C1  two distinct runs with equal minimal period p overlap in < p positions
//   C2  occurrences of a primitive square uu start >= |u| apart
//   C3  occurrences of the same periodic factor start >= its period apart
//   C4  every non-private periodic repeat's generator matches exactly one
//       alignment case (start, end, or both)
//   C5  a run r prefix-generates, with a fixed partner run, < e(r) repeats
//   C6  prefix-generated periodic repeats from the left by r start their
//       second copy inside [lb_g(r), ub_f(r)]
//   C7  all partner runs of prefix generation, except at most one, begin
//       inside [lb_g(r), ub_f(r)]
//   C8  ub_f(r) - lb_g(r) < |r| (1 + delta + d)
//   C9  a run r totally generates at most 2 (1 + e(r) delta) repeats
//   C10 prefix-semiperiodic repeats from the left by r start their second
//       copy inside [lp_g(r), up_f(r)]
//   C11 all partner runs of semiperiodic generation, except at most one,
//       begin inside [lp_g(r), up_f(r)]
//   C12 up_f(r) - lp_g(r) < |r| (1 + 2 delta + 2 d)
//   C13 a pair of runs generates at most one prefix-semiperiodic repeat
//       from the left
//   C14 two repeats with close copy lengths and strongly overlapped copy
//       pairs are never both ordinary
//   C15 no point is covered from above by two distinct ordinary repeats
//   C16 no point is covered from below by two distinct ordinary repeats
//   C17 points covered from above satisfy the admissibility band around j
//   C18 points covered from below satisfy the admissibility band around j
//   C19 sum of 1/c^3 over 2c'/3 <= c <= c' is at least (5/32)/c'^2
//   C20 metric only: admitted count / (n (1 + max(d, delta)))
//   C21 metric only: private repeat count / n
//   C22 at most 2 + 2 (1 + delta + d) partner runs per generator
struct CheckReport {
  enum class Status { pass, fail, skipped };

  std::string id;
  Status status = Status::pass;
  nlohmann::ordered_json witness;  // null unless status == fail
  std::vector<std::pair<std::string, Rational>> metrics;
};

struct CheckOptions {
  // C2/C3 build an O(n^2) factor-period table and C14 materializes the
  // unfiltered repeat set; those checks report skipped above this length.
  int max_quadratic_n = 4096;
};

const std::vector<std::string>& all_check_ids();

// Runs the requested checks (all of them when ids is empty) in catalogue
// order. Throws std::invalid_argument for an unknown id. The constraint
// domain must cover 2n (generation windows range over x <= 2|r|).
std::vector<CheckReport> check_word(const Word& w, const GapConstraint& con,
                                    const std::vector<std::string>& ids = {},
                                    const CheckOptions& opts = {});

}  // namespace gappedrep
