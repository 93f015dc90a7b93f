#pragma once

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gappedrep/gap_constraints.hpp"
#include "gappedrep/rational.hpp"
#include "gappedrep/repeats.hpp"
#include "gappedrep/runs.hpp"
#include "gappedrep/word.hpp"

namespace gappedrep {

enum class MajorClass { periodic, semiperiodic, ordinary };

// Subclasses of periodic repeats: both copies extend to the same run
// (private_run) or the shorter extending run matches its copy at the
// start (prefix_generated), at the end (suffix_generated), or exactly
// (totally_generated).
enum class PeriodicKind { private_run, prefix_generated, suffix_generated, totally_generated };

enum class Side { left, right };

struct RepeatClass {
  MajorClass major = MajorClass::ordinary;
  std::optional<PeriodicKind> periodic_sub;  // set iff major == periodic
  bool semi_prefix = false;                  // set iff major == semiperiodic
  bool semi_suffix = false;
};

// Thrown when a non-private periodic repeat's generator run matches its
// copy at neither end. The classification never produces this for a
// correct run set; it guards against inconsistent inputs.
class taxonomy_violation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Runs extending the two copies (periodic repeats) or the two periodic
// prefixes/suffixes (semiperiodic repeats). The generator is the shorter
// run; ties pick the left one.
struct GenerationPair {
  Run run_left;
  Run run_right;
  Side generator_side = Side::left;
};

struct GenerationInfo {
  std::optional<GenerationPair> periodic;  // periodic repeats, including private
  std::optional<GenerationPair> prefix;    // prefix-semiperiodic repeats
  std::optional<GenerationPair> suffix;    // suffix-semiperiodic repeats
};

struct ClassifiedRepeat {
  GappedRepeat rep;
  RepeatClass cls;
  GenerationInfo gen;
};

// Period-keyed lookup of the unique run containing a given repetition.
class RunIndex {
public:
  RunIndex() = default;
  explicit RunIndex(const std::vector<Run>& runs);

  // The run with minimal period q containing [beg, end]; nullptr if none.
  // Unique because two runs with equal period overlap in fewer than q
  // positions while a repetition spans at least 2q.
  const Run* find(int q, int beg, int end) const;

private:
  std::unordered_map<int, std::vector<Run>> by_period_;
};

ClassifiedRepeat classify_repeat(const Word& w, const GappedRepeat& rep, const RunIndex& runs);

struct ClassCensus {
  long long total = 0;
  long long periodic = 0;
  long long semiperiodic = 0;
  long long ordinary = 0;
  long long periodic_private = 0;
  long long periodic_prefix = 0;
  long long periodic_suffix = 0;
  long long periodic_total = 0;
  long long semi_prefix = 0;  // prefix flag set (overlaps suffix flag)
  long long semi_suffix = 0;
  long long semi_both = 0;
};

// Counts over the constraint-admitted maximal gapped repeats of w.
ClassCensus class_census(const Word& w, const GapConstraint& con);

// Partner runs with which r generates at least one admitted repeat from
// the left: gpr pairs r with runs receiving prefix-generated periodic
// repeats, gsr with runs receiving prefix-semiperiodic repeats.
struct GeneratedSets {
  std::vector<Run> gpr;
  std::vector<Run> gsr;
  std::vector<GappedRepeat> gpr_repeats;
  std::vector<GappedRepeat> gsr_repeats;
};

GeneratedSets generated_sets(const Word& w, const Run& r, const GapConstraint& con);
GeneratedSets generated_sets(const Word& w, const Run& r,
                             const std::vector<ClassifiedRepeat>& classified);

// Window endpoints for where the second copy of a repeat generated from
// the left by r can start.
//   lb_g = beg(r) + min{x + g(x)}, ub_f = beg(r) + max{x + f(x)}
//     over 2 p(r) <= x < |r| (absent when that range is empty);
//   lp_g = end(r) + 2 + min g(x), up_f = end(r) + 1 + |r| + max f(x)
//     over 1 < x <= 2|r|.
struct GenerationWindows {
  std::optional<Rational> lb_g;
  std::optional<Rational> ub_f;
  Rational lp_g;
  Rational up_f;
};

// Throws std::domain_error when the constraint domain does not cover the
// needed x range (up to 2|r|).
GenerationWindows generation_windows(const Run& r, const GapConstraint& con);

}  // namespace gappedrep
