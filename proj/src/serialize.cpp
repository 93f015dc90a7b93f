#include "gappedrep/serialize.hpp"

namespace gappedrep {

using json = nlohmann::ordered_json;

json run_record(const Run& r) {
  const Rational e = r.exponent();
  return json{{"beg", r.beg},
              {"end", r.end},
              {"period", r.period},
              {"exp_num", e.num_ll()},
              {"exp_den", e.den_ll()}};
}

json repeat_record(const GappedRepeat& r) {
  return json{{"beg1", r.beg1},   {"end1", r.end1()},       {"beg2", r.beg2()},
              {"end2", r.end2()}, {"period", r.period},     {"copy_len", r.copy_len},
              {"gap_len", r.gap_len()}};
}

namespace {

json side_json(Side s) { return s == Side::left ? json("left") : json("right"); }

}  // namespace

json classified_record(const ClassifiedRepeat& cr) {
  json rec = repeat_record(cr.rep);
  switch (cr.cls.major) {
    case MajorClass::periodic: rec["class"] = "periodic"; break;
    case MajorClass::semiperiodic: rec["class"] = "semiperiodic"; break;
    case MajorClass::ordinary: rec["class"] = "ordinary"; break;
  }
  rec["subclass"] = nullptr;
  if (cr.cls.periodic_sub) {
    switch (*cr.cls.periodic_sub) {
      case PeriodicKind::private_run: rec["subclass"] = "private"; break;
      case PeriodicKind::prefix_generated: rec["subclass"] = "PPP"; break;
      case PeriodicKind::suffix_generated: rec["subclass"] = "SPP"; break;
      case PeriodicKind::totally_generated: rec["subclass"] = "TPP"; break;
    }
  }
  rec["semi_prefix"] = cr.cls.semi_prefix;
  rec["semi_suffix"] = cr.cls.semi_suffix;
  rec["gen_side"] = nullptr;
  if (cr.gen.periodic && cr.cls.periodic_sub != PeriodicKind::private_run)
    rec["gen_side"] = side_json(cr.gen.periodic->generator_side);
  else if (cr.gen.prefix)
    rec["gen_side"] = side_json(cr.gen.prefix->generator_side);
  else if (cr.gen.suffix)
    rec["gen_side"] = side_json(cr.gen.suffix->generator_side);
  return rec;
}

json check_record(const CheckReport& report) {
  json rec;
  rec["check"] = report.id;
  switch (report.status) {
    case CheckReport::Status::pass: rec["status"] = "pass"; break;
    case CheckReport::Status::fail: rec["status"] = "fail"; break;
    case CheckReport::Status::skipped: rec["status"] = "skipped"; break;
  }
  rec["witness"] = report.witness;
  json metrics = json::object();
  for (const auto& [name, value] : report.metrics) metrics[name] = value.str();
  rec["metrics"] = metrics;
  return rec;
}

json bound_record(long long n, const ConstraintStats& st, long long count) {
  const Rational bound = bound_value(n, st);
  const Rational ratio = bound.is_zero() ? Rational(0) : Rational(count) / bound;
  return json{{"n", n},
              {"d", st.d.str()},
              {"delta", st.delta.str()},
              {"bound_num", bound.num_ll()},
              {"bound_den", bound.den_ll()},
              {"count", count},
              {"ratio", ratio.str()}};
}

namespace {

std::string tsv_cell(const json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  return value.dump();
}

}  // namespace

std::string tsv_header(const json& record) {
  std::string out;
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (!out.empty()) out.push_back('\t');
    out += it.key();
  }
  return out;
}

std::string tsv_row(const json& record) {
  std::string out;
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (!out.empty()) out.push_back('\t');
    out += tsv_cell(it.value());
  }
  return out;
}

}  // namespace gappedrep
