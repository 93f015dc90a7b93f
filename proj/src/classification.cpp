#include "gappedrep/classification.hpp"

#include <algorithm>
#include <string>

#include "gappedrep/word_core.hpp"

namespace gappedrep {

namespace {

std::string pos_str(int beg, int end) {
  return "[" + std::to_string(beg) + "," + std::to_string(end) + "]";
}

Side shorter_side(const Run& left, const Run& right) {
  return left.length() <= right.length() ? Side::left : Side::right;
}

const Run& require_run(const RunIndex& runs, int q, int beg, int end) {
  const Run* r = runs.find(q, beg, end);
  if (r == nullptr)
    throw std::logic_error("run index is missing the run with period " + std::to_string(q) +
                           " containing " + pos_str(beg, end));
  return *r;
}

// Longest periodic prefix length and its minimal period, from a border
// table of the factor; nullopt when no prefix is periodic.
std::optional<std::pair<int, int>> periodic_prefix_of(const std::vector<int>& border) {
  for (int k = static_cast<int>(border.size()); k >= 2; --k)
    if (2 * border[k - 1] >= k) return std::make_pair(k, k - border[k - 1]);
  return std::nullopt;
}

}  // namespace

RunIndex::RunIndex(const std::vector<Run>& runs) {
  for (const Run& r : runs) by_period_[r.period].push_back(r);
  for (auto& [p, list] : by_period_)
    std::sort(list.begin(), list.end(), [](const Run& a, const Run& b) { return a.beg < b.beg; });
}

const Run* RunIndex::find(int q, int beg, int end) const {
  auto it = by_period_.find(q);
  if (it == by_period_.end()) return nullptr;
  const auto& list = it->second;
  // Only the last run starting at or before beg can contain [beg, end]:
  // an earlier container would overlap that run in >= 2q positions, which
  // equal-period runs cannot do.
  auto pos = std::upper_bound(list.begin(), list.end(), beg,
                              [](int value, const Run& r) { return value < r.beg; });
  if (pos == list.begin()) return nullptr;
  --pos;
  return pos->end >= end ? &*pos : nullptr;
}

ClassifiedRepeat classify_repeat(const Word& w, const GappedRepeat& rep, const RunIndex& runs) {
  ClassifiedRepeat out;
  out.rep = rep;
  const int c = rep.copy_len;
  const auto copy = w.factor(rep.beg1, rep.end1());
  const auto border = border_table(copy);
  const int copy_period = c - border[c - 1];

  if (c >= 2 * copy_period) {
    out.cls.major = MajorClass::periodic;
    GenerationPair pair;
    pair.run_left = require_run(runs, copy_period, rep.beg1, rep.end1());
    pair.run_right = require_run(runs, copy_period, rep.beg2(), rep.end2());
    if (pair.run_left == pair.run_right) {
      out.cls.periodic_sub = PeriodicKind::private_run;
    } else {
      pair.generator_side = shorter_side(pair.run_left, pair.run_right);
      const Run& gen = pair.generator_side == Side::left ? pair.run_left : pair.run_right;
      const int u_beg = pair.generator_side == Side::left ? rep.beg1 : rep.beg2();
      const int u_end = pair.generator_side == Side::left ? rep.end1() : rep.end2();
      const bool beg_eq = gen.beg == u_beg;
      const bool end_eq = gen.end == u_end;
      if (beg_eq && end_eq)
        out.cls.periodic_sub = PeriodicKind::totally_generated;
      else if (beg_eq)
        out.cls.periodic_sub = PeriodicKind::prefix_generated;
      else if (end_eq)
        out.cls.periodic_sub = PeriodicKind::suffix_generated;
      else
        throw taxonomy_violation("generator run " + pos_str(gen.beg, gen.end) +
                                 " strictly contains its copy " + pos_str(u_beg, u_end));
    }
    out.gen.periodic = pair;
    return out;
  }

  // Not periodic; look for a periodic prefix or suffix spanning at least
  // half of the copy.
  if (const auto pp = periodic_prefix_of(border); pp && 2 * pp->first >= c) {
    const auto [len, q] = *pp;
    GenerationPair pair;
    pair.run_left = require_run(runs, q, rep.beg1, rep.beg1 + len - 1);
    pair.run_right = require_run(runs, q, rep.beg2(), rep.beg2() + len - 1);
    pair.generator_side = shorter_side(pair.run_left, pair.run_right);
    out.gen.prefix = pair;
    out.cls.semi_prefix = true;
  }
  const std::string reversed(copy.rbegin(), copy.rend());
  if (const auto sp = periodic_prefix_of(border_table(reversed)); sp && 2 * sp->first >= c) {
    const auto [len, q] = *sp;
    GenerationPair pair;
    pair.run_left = require_run(runs, q, rep.end1() - len + 1, rep.end1());
    pair.run_right = require_run(runs, q, rep.end2() - len + 1, rep.end2());
    pair.generator_side = shorter_side(pair.run_left, pair.run_right);
    out.gen.suffix = pair;
    out.cls.semi_suffix = true;
  }
  out.cls.major = (out.cls.semi_prefix || out.cls.semi_suffix) ? MajorClass::semiperiodic
                                                               : MajorClass::ordinary;
  return out;
}

ClassCensus class_census(const Word& w, const GapConstraint& con) {
  ClassCensus census;
  if (w.size() < 3) return census;
  const RunIndex index(enumerate_runs(w));
  const AdmissionTester admits(con, (w.size() - 1) / 2);
  for_each_maximal_gapped_repeat(w, [&](const GappedRepeat& rep) {
    if (!admits(rep.copy_len, rep.gap_len())) return;
    const ClassifiedRepeat cr = classify_repeat(w, rep, index);
    ++census.total;
    switch (cr.cls.major) {
      case MajorClass::periodic: {
        ++census.periodic;
        switch (*cr.cls.periodic_sub) {
          case PeriodicKind::private_run: ++census.periodic_private; break;
          case PeriodicKind::prefix_generated: ++census.periodic_prefix; break;
          case PeriodicKind::suffix_generated: ++census.periodic_suffix; break;
          case PeriodicKind::totally_generated: ++census.periodic_total; break;
        }
        break;
      }
      case MajorClass::semiperiodic:
        ++census.semiperiodic;
        if (cr.cls.semi_prefix) ++census.semi_prefix;
        if (cr.cls.semi_suffix) ++census.semi_suffix;
        if (cr.cls.semi_prefix && cr.cls.semi_suffix) ++census.semi_both;
        break;
      case MajorClass::ordinary: ++census.ordinary; break;
    }
  });
  return census;
}

GeneratedSets generated_sets(const Word& w, const Run& r,
                             const std::vector<ClassifiedRepeat>& classified) {
  (void)w;
  GeneratedSets sets;
  std::vector<Run> gpr_partners, gsr_partners;
  for (const ClassifiedRepeat& cr : classified) {
    if (cr.gen.periodic && cr.cls.periodic_sub == PeriodicKind::prefix_generated &&
        cr.gen.periodic->generator_side == Side::left && cr.gen.periodic->run_left == r) {
      gpr_partners.push_back(cr.gen.periodic->run_right);
      sets.gpr_repeats.push_back(cr.rep);
    }
    if (cr.gen.prefix && cr.gen.prefix->generator_side == Side::left &&
        cr.gen.prefix->run_left == r) {
      gsr_partners.push_back(cr.gen.prefix->run_right);
      sets.gsr_repeats.push_back(cr.rep);
    }
  }
  auto unique_sorted = [](std::vector<Run>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  unique_sorted(gpr_partners);
  unique_sorted(gsr_partners);
  sets.gpr = std::move(gpr_partners);
  sets.gsr = std::move(gsr_partners);
  return sets;
}

GeneratedSets generated_sets(const Word& w, const Run& r, const GapConstraint& con) {
  std::vector<ClassifiedRepeat> classified;
  if (w.size() >= 3) {
    const RunIndex index(enumerate_runs(w));
    const AdmissionTester admits(con, (w.size() - 1) / 2);
    for_each_maximal_gapped_repeat(w, [&](const GappedRepeat& rep) {
      if (admits(rep.copy_len, rep.gap_len())) classified.push_back(classify_repeat(w, rep, index));
    });
  }
  return generated_sets(w, r, classified);
}

GenerationWindows generation_windows(const Run& r, const GapConstraint& con) {
  const int len = r.length();
  if (2 * len > con.domain_max())
    throw std::domain_error("constraint domain too small for generation windows");
  GenerationWindows win;

  if (2 * r.period < len) {
    Rational lo = Rational(2 * r.period) + con.eval_g(2 * r.period);
    Rational hi = Rational(2 * r.period) + con.eval_f(2 * r.period);
    for (int x = 2 * r.period + 1; x < len; ++x) {
      lo = std::min(lo, Rational(x) + con.eval_g(x));
      hi = std::max(hi, Rational(x) + con.eval_f(x));
    }
    win.lb_g = Rational(r.beg) + lo;
    win.ub_f = Rational(r.beg) + hi;
  }

  Rational gmin = con.eval_g(2);
  Rational fmax = con.eval_f(2);
  for (int x = 3; x <= 2 * len; ++x) {
    gmin = std::min(gmin, con.eval_g(x));
    fmax = std::max(fmax, con.eval_f(x));
  }
  win.lp_g = Rational(r.end) + Rational(2) + gmin;
  win.up_f = Rational(r.end) + Rational(1) + Rational(len) + fmax;
  return win;
}

}  // namespace gappedrep
