#include "gappedrep/theory_checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <unordered_map>

#include "gappedrep/classification.hpp"
#include "gappedrep/covering.hpp"
#include "gappedrep/repeats.hpp"
#include "gappedrep/runs.hpp"
#include "gappedrep/word_core.hpp"

namespace gappedrep {

namespace {

using json = nlohmann::ordered_json;

json run_json(const Run& r) {
  return json{{"beg", r.beg}, {"end", r.end}, {"period", r.period}};
}

json repeat_json(const GappedRepeat& r) {
  return json{{"beg1", r.beg1}, {"end1", r.end1()}, {"beg2", r.beg2()},
              {"end2", r.end2()}, {"period", r.period}, {"copy_len", r.copy_len},
              {"gap_len", r.gap_len()}};
}

int ceil_two_thirds(int c) { return (2 * c + 2) / 3; }

// O(1) factor hashing for grouping equal factors; candidate groups are
// re-verified by direct comparison before any failure is reported.
class FactorHasher {
public:
  explicit FactorHasher(const Word& w) {
    const int n = w.size();
    h1_.resize(n + 1, 0);
    h2_.resize(n + 1, 0);
    p1_.resize(n + 1, 1);
    p2_.resize(n + 1, 1);
    for (int i = 1; i <= n; ++i) {
      const std::uint64_t ch = static_cast<unsigned char>(w.at(i)) + 1;
      h1_[i] = mod_mul_add(h1_[i - 1], kBase1, ch);
      h2_[i] = mod_mul_add(h2_[i - 1], kBase2, ch);
      p1_[i] = mod_mul_add(p1_[i - 1], kBase1, 0);
      p2_[i] = mod_mul_add(p2_[i - 1], kBase2, 0);
    }
  }

  std::pair<std::uint64_t, std::uint64_t> hash(int beg, int len) const {
    const int end = beg + len - 1;
    return {sub(h1_[end], mod_mul_add(h1_[beg - 1], p1_[len], 0)),
            sub(h2_[end], mod_mul_add(h2_[beg - 1], p2_[len], 0))};
  }

private:
  static constexpr std::uint64_t kMod = (std::uint64_t(1) << 61) - 1;
  static constexpr std::uint64_t kBase1 = 1794967153;
  static constexpr std::uint64_t kBase2 = 269614583;

  static std::uint64_t mod_mul_add(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b + c) % kMod);
  }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + kMod - b) % kMod; }

  std::vector<std::uint64_t> h1_, h2_, p1_, p2_;
};

struct Analysis {
  const Word& w;
  const GapConstraint& con;
  const CheckOptions& opts;

  ConstraintStats st;
  std::vector<Run> runs;
  RunIndex index;

  std::vector<GappedRepeat> admitted;
  std::vector<ClassifiedRepeat> classified;  // parallel to admitted when taxonomy holds
  bool taxonomy_failed = false;
  json taxonomy_witness;

  Analysis(const Word& word, const GapConstraint& constraint, const CheckOptions& options)
      : w(word), con(constraint), opts(options) {
    st = stats(con);
    runs = enumerate_runs(w);
    index = RunIndex(runs);
    if (w.size() >= 3) {
      const AdmissionTester admits(con, (w.size() - 1) / 2);
      for_each_maximal_gapped_repeat(w, [&](const GappedRepeat& r) {
        if (admits(r.copy_len, r.gap_len())) admitted.push_back(r);
      });
    }
    std::sort(admitted.begin(), admitted.end());
    try {
      classified.reserve(admitted.size());
      for (const GappedRepeat& r : admitted) classified.push_back(classify_repeat(w, r, index));
    } catch (const taxonomy_violation& e) {
      taxonomy_failed = true;
      taxonomy_witness = json{{"error", e.what()}};
      classified.clear();
    }
  }

  int run_idx(const Run& r) const {
    auto it = std::lower_bound(runs.begin(), runs.end(), r);
    return static_cast<int>(it - runs.begin());
  }

  // --- lazy pieces ---

  const std::vector<std::optional<GenerationWindows>>& windows() {
    if (!windows_) {
      windows_.emplace(runs.size());
      for (size_t k = 0; k < runs.size(); ++k) (*windows_)[k] = generation_windows(runs[k], con);
    }
    return *windows_;
  }

  bool quadratic_ok() const { return w.size() <= opts.max_quadratic_n; }

  const std::vector<GappedRepeat>& all_repeats() {
    if (!all_reps_) all_reps_.emplace(enumerate_maximal_gapped_repeats(w));
    return *all_reps_;
  }

  // period_of(i, m): minimal period of w[i..i+m-1], precomputed per suffix.
  int period_of(int i, int m) const { return (*period_table_)[i - 1][m - 1]; }
  void build_period_table() {
    if (period_table_) return;
    const int n = w.size();
    period_table_.emplace(n);
    for (int i = 1; i <= n; ++i) {
      const auto border = border_table(w.view().substr(i - 1));
      auto& row = (*period_table_)[i - 1];
      row.resize(border.size());
      for (size_t m = 1; m <= border.size(); ++m) row[m - 1] = static_cast<int>(m) - border[m - 1];
    }
  }

  MajorClass copy_class(int beg, int len) {
    const long long key = (static_cast<long long>(beg) << 32) | len;
    if (auto it = copy_class_memo_.find(key); it != copy_class_memo_.end()) return it->second;
    const auto copy = w.factor(beg, beg + len - 1);
    MajorClass cls = MajorClass::ordinary;
    if (is_repetition(copy)) {
      cls = MajorClass::periodic;
    } else {
      const auto pre = longest_periodic_prefix(copy);
      const auto suf = longest_periodic_suffix(copy);
      if ((pre && 2 * *pre >= len) || (suf && 2 * *suf >= len)) cls = MajorClass::semiperiodic;
    }
    copy_class_memo_[key] = cls;
    return cls;
  }

private:
  std::optional<std::vector<std::optional<GenerationWindows>>> windows_;
  std::optional<std::vector<GappedRepeat>> all_reps_;
  std::optional<std::vector<std::vector<int>>> period_table_;
  std::unordered_map<long long, MajorClass> copy_class_memo_;
};

CheckReport pass_report(std::string id) {
  CheckReport rep;
  rep.id = std::move(id);
  rep.status = CheckReport::Status::pass;
  return rep;
}

CheckReport fail_report(std::string id, json witness) {
  CheckReport rep;
  rep.id = std::move(id);
  rep.status = CheckReport::Status::fail;
  rep.witness = std::move(witness);
  return rep;
}

CheckReport skip_report(std::string id) {
  CheckReport rep;
  rep.id = std::move(id);
  rep.status = CheckReport::Status::skipped;
  return rep;
}

// ---- C1: equal-period runs overlap in fewer than p positions ----

CheckReport check_run_overlap(Analysis& a) {
  std::map<int, std::vector<Run>> by_period;
  for (const Run& r : a.runs) by_period[r.period].push_back(r);
  long long pairs = 0;
  for (const auto& [p, group] : by_period) {
    for (size_t x = 0; x < group.size(); ++x) {
      for (size_t y = x + 1; y < group.size(); ++y) {
        const int overlap = std::min(group[x].end, group[y].end) - group[y].beg + 1;
        if (overlap <= 0) break;  // sorted by beg; later runs start even further right
        ++pairs;
        if (overlap >= p)
          return fail_report("C1", json{{"run1", run_json(group[x])},
                                        {"run2", run_json(group[y])},
                                        {"overlap", overlap}});
      }
    }
  }
  CheckReport rep = pass_report("C1");
  rep.metrics.emplace_back("overlapping_pairs", Rational(pairs));
  return rep;
}

// ---- C2: occurrences of a primitive square start >= |u| apart ----

CheckReport check_primitive_square_spacing(Analysis& a) {
  if (!a.quadratic_ok()) return skip_report("C2");
  const int n = a.w.size();
  a.build_period_table();
  const FactorHasher hasher(a.w);
  long long squares = 0;
  for (int half = 1; 2 * half <= n; ++half) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> last_start;
    for (const auto& [blk_beg, blk_end] : match_blocks(a.w, half)) {
      for (int i = blk_beg; i + half - 1 <= blk_end; ++i) {
        const int p = a.period_of(i, half);
        const bool primitive = !(half % p == 0 && half >= 2 * p);
        if (!primitive) continue;
        ++squares;
        const auto key = hasher.hash(i, 2 * half);
        auto [it, inserted] = last_start.try_emplace(key, i);
        if (!inserted) {
          const int prev = it->second;
          if (i - prev < half && a.w.factor(prev, prev + 2 * half - 1) ==
                                     a.w.factor(i, i + 2 * half - 1))
            return fail_report("C2", json{{"square_beg1", prev},
                                          {"square_beg2", i},
                                          {"half_len", half},
                                          {"distance", i - prev}});
          it->second = i;
        }
      }
    }
  }
  CheckReport rep = pass_report("C2");
  rep.metrics.emplace_back("primitive_squares", Rational(squares));
  return rep;
}

// ---- C3: occurrences of the same periodic factor start >= its period apart ----

CheckReport check_repetition_spacing(Analysis& a) {
  if (!a.quadratic_ok()) return skip_report("C3");
  const int n = a.w.size();
  a.build_period_table();
  const FactorHasher hasher(a.w);
  long long occurrences = 0;
  for (int m = 2; m <= n; ++m) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> last_start;
    for (int i = 1; i + m - 1 <= n; ++i) {
      const int p = a.period_of(i, m);
      if (m < 2 * p) continue;
      ++occurrences;
      const auto key = hasher.hash(i, m);
      auto [it, inserted] = last_start.try_emplace(key, i);
      if (!inserted) {
        const int prev = it->second;
        if (i - prev < p && a.w.factor(prev, prev + m - 1) == a.w.factor(i, i + m - 1))
          return fail_report("C3", json{{"occ_beg1", prev},
                                        {"occ_beg2", i},
                                        {"len", m},
                                        {"period", p},
                                        {"distance", i - prev}});
        it->second = i;
      }
    }
  }
  CheckReport rep = pass_report("C3");
  rep.metrics.emplace_back("periodic_occurrences", Rational(occurrences));
  return rep;
}

// ---- C4: generator alignment trichotomy ----

CheckReport check_generation_trichotomy(Analysis& a) {
  if (a.taxonomy_failed) return fail_report("C4", a.taxonomy_witness);
  long long prefix = 0, suffix = 0, total = 0;
  for (const ClassifiedRepeat& cr : a.classified) {
    if (cr.cls.major != MajorClass::periodic) continue;
    switch (*cr.cls.periodic_sub) {
      case PeriodicKind::prefix_generated: ++prefix; break;
      case PeriodicKind::suffix_generated: ++suffix; break;
      case PeriodicKind::totally_generated: ++total; break;
      case PeriodicKind::private_run: break;
    }
  }
  CheckReport rep = pass_report("C4");
  rep.metrics.emplace_back("prefix_generated", Rational(prefix));
  rep.metrics.emplace_back("suffix_generated", Rational(suffix));
  rep.metrics.emplace_back("totally_generated", Rational(total));
  return rep;
}

// ---- shared groupings over classified repeats ----

struct Groupings {
  // periodic prefix-generated, keyed by (generator run, partner run)
  std::map<std::pair<int, int>, std::vector<int>> ppp_by_pair;
  // periodic prefix-generated from the left, keyed by generator run
  std::map<int, std::vector<int>> ppp_left_by_gen;
  // totally generated, keyed by generator run
  std::map<int, std::vector<int>> tpp_by_gen;
  // prefix-semiperiodic from the left, keyed by generator and by pair
  std::map<int, std::vector<int>> psp_left_by_gen;
  std::map<std::pair<int, int>, std::vector<int>> psp_left_by_pair;
};

Groupings group_classified(Analysis& a) {
  Groupings g;
  for (size_t k = 0; k < a.classified.size(); ++k) {
    const ClassifiedRepeat& cr = a.classified[k];
    if (cr.cls.major == MajorClass::periodic &&
        cr.cls.periodic_sub != PeriodicKind::private_run) {
      const GenerationPair& pair = *cr.gen.periodic;
      const bool left = pair.generator_side == Side::left;
      const int gen = a.run_idx(left ? pair.run_left : pair.run_right);
      const int partner = a.run_idx(left ? pair.run_right : pair.run_left);
      if (cr.cls.periodic_sub == PeriodicKind::prefix_generated) {
        g.ppp_by_pair[{gen, partner}].push_back(static_cast<int>(k));
        if (left) g.ppp_left_by_gen[gen].push_back(static_cast<int>(k));
      } else if (cr.cls.periodic_sub == PeriodicKind::totally_generated) {
        g.tpp_by_gen[gen].push_back(static_cast<int>(k));
      }
    }
    if (cr.cls.semi_prefix && cr.gen.prefix->generator_side == Side::left) {
      const int gen = a.run_idx(cr.gen.prefix->run_left);
      const int partner = a.run_idx(cr.gen.prefix->run_right);
      g.psp_left_by_gen[gen].push_back(static_cast<int>(k));
      g.psp_left_by_pair[{gen, partner}].push_back(static_cast<int>(k));
    }
  }
  return g;
}

// ---- C5: per (generator, partner), fewer than e(generator) repeats ----

CheckReport check_prefix_generation_count(Analysis& a, const Groupings& g) {
  for (const auto& [key, members] : g.ppp_by_pair) {
    const Run& gen = a.runs[key.first];
    if (!(Rational(static_cast<long long>(members.size())) < gen.exponent()))
      return fail_report("C5", json{{"generator", run_json(gen)},
                                    {"partner", run_json(a.runs[key.second])},
                                    {"count", members.size()},
                                    {"exponent", gen.exponent().str()}});
  }
  CheckReport rep = pass_report("C5");
  rep.metrics.emplace_back("generator_pairs", Rational(static_cast<long long>(g.ppp_by_pair.size())));
  return rep;
}

// ---- C6: second copies of left prefix-generated repeats inside [lb_g, ub_f] ----

CheckReport check_ppp_begin_window(Analysis& a, const Groupings& g) {
  long long checked = 0;
  for (const auto& [gen_idx, members] : g.ppp_left_by_gen) {
    const auto& win = a.windows()[gen_idx];
    for (int k : members) {
      const GappedRepeat& rep = a.classified[k].rep;
      ++checked;
      if (!win || !win->lb_g || !(*win->lb_g <= Rational(rep.beg2()) && Rational(rep.beg2()) <= *win->ub_f))
        return fail_report("C6", json{{"generator", run_json(a.runs[gen_idx])},
                                      {"repeat", repeat_json(rep)},
                                      {"lb_g", win && win->lb_g ? win->lb_g->str() : "absent"},
                                      {"ub_f", win && win->ub_f ? win->ub_f->str() : "absent"}});
    }
  }
  CheckReport rep = pass_report("C6");
  rep.metrics.emplace_back("repeats_checked", Rational(checked));
  return rep;
}

// ---- C7 / C22: partner runs of prefix generation vs the window ----

CheckReport check_gpr_window(Analysis& a, const Groupings& g) {
  for (const auto& [gen_idx, members] : g.ppp_left_by_gen) {
    std::vector<int> partners;
    for (int k : members) partners.push_back(a.run_idx(a.classified[k].gen.periodic->run_right));
    std::sort(partners.begin(), partners.end());
    partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
    const auto& win = a.windows()[gen_idx];
    int violators = 0;
    for (int pr : partners) {
      const Rational beg(a.runs[pr].beg);
      if (!win || !win->lb_g || !(*win->lb_g <= beg && beg <= *win->ub_f)) ++violators;
    }
    if (violators > 1)
      return fail_report("C7", json{{"generator", run_json(a.runs[gen_idx])},
                                    {"partners", partners.size()},
                                    {"outside_window", violators}});
  }
  CheckReport rep = pass_report("C7");
  rep.metrics.emplace_back("generators", Rational(static_cast<long long>(g.ppp_left_by_gen.size())));
  return rep;
}

CheckReport check_gpr_cardinality(Analysis& a, const Groupings& g) {
  const Rational limit = Rational(2) + Rational(2) * (Rational(1) + a.st.delta + a.st.d);
  long long max_size = 0;
  for (const auto& [gen_idx, members] : g.ppp_left_by_gen) {
    std::vector<int> partners;
    for (int k : members) partners.push_back(a.run_idx(a.classified[k].gen.periodic->run_right));
    std::sort(partners.begin(), partners.end());
    partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
    max_size = std::max<long long>(max_size, static_cast<long long>(partners.size()));
    if (!(Rational(static_cast<long long>(partners.size())) <= limit))
      return fail_report("C22", json{{"generator", run_json(a.runs[gen_idx])},
                                     {"partners", partners.size()},
                                     {"limit", limit.str()}});
  }
  CheckReport rep = pass_report("C22");
  rep.metrics.emplace_back("limit", limit);
  rep.metrics.emplace_back("max_partner_count", Rational(max_size));
  return rep;
}

// ---- C8 / C12: window widths ----

CheckReport check_ppp_window_width(Analysis& a) {
  long long checked = 0, vacuous = 0;
  for (size_t k = 0; k < a.runs.size(); ++k) {
    const auto& win = a.windows()[k];
    if (!win || !win->lb_g) {
      ++vacuous;
      continue;
    }
    ++checked;
    const Rational width = *win->ub_f - *win->lb_g;
    const Rational bound =
        Rational(a.runs[k].length()) * (Rational(1) + a.st.delta + a.st.d);
    if (!(width < bound))
      return fail_report("C8", json{{"run", run_json(a.runs[k])},
                                    {"width", width.str()},
                                    {"bound", bound.str()}});
  }
  CheckReport rep = pass_report("C8");
  rep.metrics.emplace_back("windows_checked", Rational(checked));
  rep.metrics.emplace_back("vacuous", Rational(vacuous));
  return rep;
}

CheckReport check_psp_window_width(Analysis& a) {
  for (size_t k = 0; k < a.runs.size(); ++k) {
    const auto& win = a.windows()[k];
    const Rational width = win->up_f - win->lp_g;
    const Rational bound = Rational(a.runs[k].length()) *
                           (Rational(1) + Rational(2) * a.st.delta + Rational(2) * a.st.d);
    if (!(width < bound))
      return fail_report("C12", json{{"run", run_json(a.runs[k])},
                                     {"width", width.str()},
                                     {"bound", bound.str()}});
  }
  CheckReport rep = pass_report("C12");
  rep.metrics.emplace_back("runs_checked", Rational(static_cast<long long>(a.runs.size())));
  return rep;
}

// ---- C9: totally generated repeats per run ----

CheckReport check_tpp_count(Analysis& a, const Groupings& g) {
  for (const auto& [gen_idx, members] : g.tpp_by_gen) {
    const Run& r = a.runs[gen_idx];
    const Rational limit = Rational(2) * (Rational(1) + r.exponent() * a.st.delta);
    if (!(Rational(static_cast<long long>(members.size())) <= limit))
      return fail_report("C9", json{{"run", run_json(r)},
                                    {"count", members.size()},
                                    {"limit", limit.str()}});
  }
  CheckReport rep = pass_report("C9");
  rep.metrics.emplace_back("generators", Rational(static_cast<long long>(g.tpp_by_gen.size())));
  return rep;
}

// ---- C10 / C11 / C13: semiperiodic windows and uniqueness ----

CheckReport check_psp_begin_window(Analysis& a, const Groupings& g) {
  long long checked = 0;
  for (const auto& [gen_idx, members] : g.psp_left_by_gen) {
    const auto& win = a.windows()[gen_idx];
    for (int k : members) {
      const GappedRepeat& rep = a.classified[k].rep;
      ++checked;
      if (!win || !(win->lp_g <= Rational(rep.beg2()) && Rational(rep.beg2()) <= win->up_f))
        return fail_report("C10", json{{"generator", run_json(a.runs[gen_idx])},
                                       {"repeat", repeat_json(rep)},
                                       {"lp_g", win ? win->lp_g.str() : "absent"},
                                       {"up_f", win ? win->up_f.str() : "absent"}});
    }
  }
  CheckReport rep = pass_report("C10");
  rep.metrics.emplace_back("repeats_checked", Rational(checked));
  return rep;
}

CheckReport check_gsr_window(Analysis& a, const Groupings& g) {
  for (const auto& [gen_idx, members] : g.psp_left_by_gen) {
    std::vector<int> partners;
    for (int k : members) partners.push_back(a.run_idx(a.classified[k].gen.prefix->run_right));
    std::sort(partners.begin(), partners.end());
    partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
    const auto& win = a.windows()[gen_idx];
    int violators = 0;
    for (int pr : partners) {
      const Rational beg(a.runs[pr].beg);
      if (!win || !(win->lp_g <= beg && beg <= win->up_f)) ++violators;
    }
    if (violators > 1)
      return fail_report("C11", json{{"generator", run_json(a.runs[gen_idx])},
                                     {"partners", partners.size()},
                                     {"outside_window", violators}});
  }
  CheckReport rep = pass_report("C11");
  rep.metrics.emplace_back("generators", Rational(static_cast<long long>(g.psp_left_by_gen.size())));
  return rep;
}

CheckReport check_psp_uniqueness(Analysis& a, const Groupings& g) {
  for (const auto& [key, members] : g.psp_left_by_pair) {
    if (members.size() > 1)
      return fail_report("C13", json{{"generator", run_json(a.runs[key.first])},
                                     {"partner", run_json(a.runs[key.second])},
                                     {"repeat1", repeat_json(a.classified[members[0]].rep)},
                                     {"repeat2", repeat_json(a.classified[members[1]].rep)}});
  }
  CheckReport rep = pass_report("C13");
  rep.metrics.emplace_back("pairs", Rational(static_cast<long long>(g.psp_left_by_pair.size())));
  return rep;
}

// ---- C14: strongly overlapped close repeats are not both ordinary ----

bool strongly_overlapped(int beg_a, int len_a, int beg_b, int len_b) {
  if (beg_a <= beg_b) {
    if (6 * (beg_b - beg_a) <= len_a) return true;
  }
  if (beg_b <= beg_a) {
    if (6 * (beg_a - beg_b) <= len_b) return true;
  }
  return false;
}

CheckReport check_strong_overlap_exclusion(Analysis& a) {
  if (!a.quadratic_ok()) return skip_report("C14");
  const auto& reps = a.all_repeats();
  const int n = a.w.size();
  std::vector<std::vector<int>> by_beg(n + 1);
  for (size_t k = 0; k < reps.size(); ++k) by_beg[reps[k].beg1].push_back(static_cast<int>(k));
  long long pairs = 0;
  for (size_t s1 = 0; s1 < reps.size(); ++s1) {
    const GappedRepeat& ra = reps[s1];
    const int reach = ra.copy_len / 4 + 1;
    for (int b = std::max(1, ra.beg1 - reach); b <= std::min(n, ra.beg1 + reach); ++b) {
      for (int s2 : by_beg[b]) {
        if (s2 <= static_cast<int>(s1)) continue;
        const GappedRepeat& rb = reps[s2];
        const GappedRepeat& small = ra.copy_len <= rb.copy_len ? ra : rb;
        const GappedRepeat& large = ra.copy_len <= rb.copy_len ? rb : ra;
        if (2 * large.copy_len > 3 * small.copy_len) continue;
        if (!strongly_overlapped(ra.beg1, ra.copy_len, rb.beg1, rb.copy_len)) continue;
        if (!strongly_overlapped(ra.beg2(), ra.copy_len, rb.beg2(), rb.copy_len)) continue;
        ++pairs;
        if (a.copy_class(ra.beg1, ra.copy_len) == MajorClass::ordinary &&
            a.copy_class(rb.beg1, rb.copy_len) == MajorClass::ordinary)
          return fail_report("C14", json{{"repeat1", repeat_json(ra)},
                                         {"repeat2", repeat_json(rb)}});
      }
    }
  }
  CheckReport rep = pass_report("C14");
  rep.metrics.emplace_back("qualifying_pairs", Rational(pairs));
  return rep;
}

// ---- C15 / C16: cover uniqueness for ordinary repeats ----

bool boxes_intersect(const Point& p1, const Point& p2, CoverMode mode) {
  const int ilo = std::max(p1.i, p2.i);
  const int ihi = std::min(p1.i + p1.c / 6, p2.i + p2.c / 6);
  if (ilo > ihi) return false;
  const int jlo = std::max(p1.j, p2.j);
  const int jhi = std::min(p1.j + p1.c / 6, p2.j + p2.c / 6);
  if (jlo > jhi) return false;
  int clo, chi;
  if (mode == CoverMode::above) {
    clo = std::max(ceil_two_thirds(p1.c), ceil_two_thirds(p2.c));
    chi = std::min(p1.c, p2.c);
  } else {
    clo = std::max(p1.c, p2.c);
    chi = std::min(3 * p1.c / 2, 3 * p2.c / 2);
  }
  return clo <= chi;
}

CheckReport check_cover_uniqueness(Analysis& a, CoverMode mode) {
  const std::string id = mode == CoverMode::above ? "C15" : "C16";
  std::vector<int> ordinary;
  for (size_t k = 0; k < a.classified.size(); ++k)
    if (a.classified[k].cls.major == MajorClass::ordinary) ordinary.push_back(static_cast<int>(k));
  const int n = a.w.size();
  std::vector<std::vector<int>> by_beg(n + 1);
  for (int idx : ordinary) by_beg[a.classified[idx].rep.beg1].push_back(idx);
  long long tested = 0;
  for (size_t x = 0; x < ordinary.size(); ++x) {
    const GappedRepeat& ra = a.classified[ordinary[x]].rep;
    const Point pa = to_point(ra);
    const int reach = ra.copy_len / 4 + 1;
    for (int b = std::max(1, ra.beg1 - reach); b <= std::min(n, ra.beg1 + reach); ++b) {
      for (int idx : by_beg[b]) {
        if (idx <= ordinary[x]) continue;
        const GappedRepeat& rb = a.classified[idx].rep;
        ++tested;
        if (boxes_intersect(pa, to_point(rb), mode))
          return fail_report(id, json{{"repeat1", repeat_json(ra)},
                                      {"repeat2", repeat_json(rb)}});
      }
    }
  }
  CheckReport rep = pass_report(id);
  rep.metrics.emplace_back("ordinary_repeats", Rational(static_cast<long long>(ordinary.size())));
  rep.metrics.emplace_back("pairs_tested", Rational(tested));
  return rep;
}

// ---- C17 / C18: covered points stay inside the admissibility band ----

CheckReport check_cover_band(Analysis& a, CoverMode mode) {
  const std::string id = mode == CoverMode::above ? "C17" : "C18";
  long long points = 0;
  for (const GappedRepeat& r : a.admitted) {
    const Point origin = to_point(r);
    const int side = origin.c / 6;
    const int c_lo = mode == CoverMode::above ? ceil_two_thirds(origin.c) : origin.c;
    const int c_hi = mode == CoverMode::above ? origin.c : 3 * origin.c / 2;
    for (int c = c_lo; c <= c_hi; ++c) {
      const Rational rc(c);
      Rational low, high;
      if (mode == CoverMode::above) {
        low = rc * Rational(5, 6) + a.con.eval_g(c) - rc / Rational(2) * a.st.dminus_g;
        high = rc * Rational(7, 4) + a.con.eval_f(c) + rc / Rational(2) * a.st.dplus_f;
      } else {
        low = rc * Rational(5, 9) + a.con.eval_g(c) - rc / Rational(3) * a.st.dplus_g;
        high = rc * Rational(7, 6) + a.con.eval_f(c) + rc / Rational(3) * a.st.dminus_f;
      }
      points += static_cast<long long>(side + 1) * (side + 1);
      // The box corners extremize j - i, so checking them covers every
      // integer point of the box at this height.
      const Rational worst_low = Rational(origin.j) - Rational(origin.i + side);
      const Rational worst_high = Rational(origin.j + side) - Rational(origin.i);
      if (!(low <= worst_low))
        return fail_report(id, json{{"repeat", repeat_json(r)},
                                    {"point", json{{"i", origin.i + side}, {"j", origin.j}, {"c", c}}},
                                    {"required_min_span", low.str()}});
      if (!(worst_high <= high))
        return fail_report(id, json{{"repeat", repeat_json(r)},
                                    {"point", json{{"i", origin.i}, {"j", origin.j + side}, {"c", c}}},
                                    {"allowed_max_span", high.str()}});
    }
  }
  CheckReport rep = pass_report(id);
  rep.metrics.emplace_back("points_covered", Rational(points));
  return rep;
}

// ---- C19: tail weight lower bound ----

CheckReport check_tail_weight(Analysis& a) {
  const int cmax = std::max(1, a.w.size());
  if (!tail_weight_lower_bound_check(cmax))
    return fail_report("C19", json{{"cmax", cmax}});
  CheckReport rep = pass_report("C19");
  rep.metrics.emplace_back("cmax", Rational(cmax));
  return rep;
}

// ---- C20 / C21: report-only metrics ----

CheckReport check_theorem_ratio(Analysis& a) {
  CheckReport rep = pass_report("C20");
  const long long n = a.w.size();
  const Rational bound = bound_value(n, a.st);
  const Rational count(static_cast<long long>(a.admitted.size()));
  rep.metrics.emplace_back("count", count);
  rep.metrics.emplace_back("bound", bound);
  rep.metrics.emplace_back("ratio", bound.is_zero() ? Rational(0) : count / bound);
  rep.metrics.emplace_back("d", a.st.d);
  rep.metrics.emplace_back("delta", a.st.delta);
  rep.metrics.emplace_back("d_growing", Rational(a.st.d_growing ? 1 : 0));
  rep.metrics.emplace_back("delta_growing", Rational(a.st.delta_growing ? 1 : 0));
  return rep;
}

CheckReport check_private_ratio(Analysis& a) {
  CheckReport rep = pass_report("C21");
  long long privates = 0;
  for (const ClassifiedRepeat& cr : a.classified)
    if (cr.cls.periodic_sub == PeriodicKind::private_run) ++privates;
  rep.metrics.emplace_back("private_count", Rational(privates));
  const long long n = a.w.size();
  rep.metrics.emplace_back("per_n", n == 0 ? Rational(0) : Rational(privates) / Rational(n));
  return rep;
}

}  // namespace

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = {
      "C1",  "C2",  "C3",  "C4",  "C5",  "C6",  "C7",  "C8",  "C9",  "C10", "C11",
      "C12", "C13", "C14", "C15", "C16", "C17", "C18", "C19", "C20", "C21", "C22"};
  return ids;
}

std::vector<CheckReport> check_word(const Word& w, const GapConstraint& con,
                                    const std::vector<std::string>& ids,
                                    const CheckOptions& opts) {
  std::vector<std::string> wanted = ids.empty() ? all_check_ids() : ids;
  for (const std::string& id : wanted)
    if (std::find(all_check_ids().begin(), all_check_ids().end(), id) == all_check_ids().end())
      throw std::invalid_argument("unknown check id: " + id);

  Analysis a(w, con, opts);

  // Checks that rely on per-repeat classification report skipped when the
  // classification itself failed; C4 carries the failure.
  const bool classes_ok = !a.taxonomy_failed;
  std::optional<Groupings> groups;
  auto grouped = [&]() -> const Groupings& {
    if (!groups) groups = group_classified(a);
    return *groups;
  };

  std::vector<CheckReport> out;
  for (const std::string& id : all_check_ids()) {
    if (std::find(wanted.begin(), wanted.end(), id) == wanted.end()) continue;
    const bool needs_classes = id != "C1" && id != "C2" && id != "C3" && id != "C4" &&
                               id != "C14" && id != "C17" && id != "C18" && id != "C19" &&
                               id != "C20";
    if (!classes_ok && needs_classes) {
      out.push_back(skip_report(id));
      continue;
    }
    if (id == "C1") out.push_back(check_run_overlap(a));
    else if (id == "C2") out.push_back(check_primitive_square_spacing(a));
    else if (id == "C3") out.push_back(check_repetition_spacing(a));
    else if (id == "C4") out.push_back(check_generation_trichotomy(a));
    else if (id == "C5") out.push_back(check_prefix_generation_count(a, grouped()));
    else if (id == "C6") out.push_back(check_ppp_begin_window(a, grouped()));
    else if (id == "C7") out.push_back(check_gpr_window(a, grouped()));
    else if (id == "C8") out.push_back(check_ppp_window_width(a));
    else if (id == "C9") out.push_back(check_tpp_count(a, grouped()));
    else if (id == "C10") out.push_back(check_psp_begin_window(a, grouped()));
    else if (id == "C11") out.push_back(check_gsr_window(a, grouped()));
    else if (id == "C12") out.push_back(check_psp_window_width(a));
    else if (id == "C13") out.push_back(check_psp_uniqueness(a, grouped()));
    else if (id == "C14") out.push_back(check_strong_overlap_exclusion(a));
    else if (id == "C15") out.push_back(check_cover_uniqueness(a, CoverMode::above));
    else if (id == "C16") out.push_back(check_cover_uniqueness(a, CoverMode::below));
    else if (id == "C17") out.push_back(check_cover_band(a, CoverMode::above));
    else if (id == "C18") out.push_back(check_cover_band(a, CoverMode::below));
    else if (id == "C19") out.push_back(check_tail_weight(a));
    else if (id == "C20") out.push_back(check_theorem_ratio(a));
    else if (id == "C21") out.push_back(check_private_ratio(a));
    else if (id == "C22") out.push_back(check_gpr_cardinality(a, grouped()));
  }
  return out;
}

}  // namespace gappedrep
