#pragma once

#include <string>

#include <json.hpp>

#include "gappedrep/classification.hpp"
#include "gappedrep/gap_constraints.hpp"
#include "gappedrep/repeats.hpp"
#include "gappedrep/runs.hpp"
#include "gappedrep/theory_checks.hpp"

namespace gappedrep {

// Machine-readable records shared by the CLI and the tests. Positions are
// 1-indexed inclusive and rationals never degrade to floats: they appear
// either as split _num/_den integer fields or as exact "p/q" strings.

nlohmann::ordered_json run_record(const Run& r);
nlohmann::ordered_json repeat_record(const GappedRepeat& r);
nlohmann::ordered_json classified_record(const ClassifiedRepeat& cr);
nlohmann::ordered_json check_record(const CheckReport& report);
nlohmann::ordered_json bound_record(long long n, const ConstraintStats& st, long long count);

// Tab-separated rendering of a flat record: scalars verbatim, booleans as
// true/false, null as the empty string, nested objects as compact JSON.
std::string tsv_header(const nlohmann::ordered_json& record);
std::string tsv_row(const nlohmann::ordered_json& record);

}  // namespace gappedrep
