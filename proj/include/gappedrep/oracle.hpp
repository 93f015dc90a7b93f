#pragma once

#include <vector>

#include "gappedrep/repeats.hpp"
#include "gappedrep/runs.hpp"
#include "gappedrep/word.hpp"

namespace gappedrep::oracle {

// Brute-force reference enumerators for differential testing. They work
// straight from the definitions with symbol-by-symbol comparisons and
// deliberately avoid every data structure the main pipeline uses (no
// border tables, no match blocks). Quartic cost; keep |w| small.

std::vector<GappedRepeat> naive_maximal_gapped_repeats(const Word& w);

std::vector<Run> naive_runs(const Word& w);

int naive_minimal_period(const Word& w);

}  // namespace gappedrep::oracle
