#include "gappedrep/gap_constraints.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gappedrep {

namespace {

Rational positive_part(const Rational& x) { return x > Rational(0) ? x : Rational(0); }
Rational negative_part(const Rational& x) { return x < Rational(0) ? -x : Rational(0); }

struct Evaluator {
  const GapConstraint::Kind& kind;

  Rational f(int x) const {
    if (const auto* a = std::get_if<GapConstraint::Alpha>(&kind))
      return (a->alpha - Rational(1)) * Rational(x);
    if (const auto* b = std::get_if<GapConstraint::Band>(&kind)) return b->gmax;
    if (const auto* af = std::get_if<GapConstraint::Affine>(&kind))
      return af->a * Rational(x) + af->b;
    return std::get<GapConstraint::Table>(kind).rows[x - 1].first;
  }

  Rational g(int x) const {
    if (const auto* a = std::get_if<GapConstraint::Alpha>(&kind))
      return std::min(Rational(1), a->alpha - Rational(1));
    if (const auto* b = std::get_if<GapConstraint::Band>(&kind)) return b->gmin;
    if (const auto* af = std::get_if<GapConstraint::Affine>(&kind))
      return af->c * Rational(x) + af->d;
    return std::get<GapConstraint::Table>(kind).rows[x - 1].second;
  }
};

// Suprema over 1..x_max; requires x_max >= 2.
ConstraintStats stats_over(const GapConstraint& con, int x_max) {
  Evaluator ev{con.kind()};
  ConstraintStats s;
  for (int x = 1; x < x_max; ++x) {
    const Rational df = ev.f(x + 1) - ev.f(x);
    const Rational dg = ev.g(x + 1) - ev.g(x);
    s.dplus_f = std::max(s.dplus_f, positive_part(df));
    s.dminus_f = std::max(s.dminus_f, negative_part(df));
    s.dplus_g = std::max(s.dplus_g, positive_part(dg));
    s.dminus_g = std::max(s.dminus_g, negative_part(dg));
  }
  for (int x = 1; x <= x_max; ++x)
    s.delta = std::max(s.delta, (ev.f(x) - ev.g(x)) / Rational(x));
  s.da = std::max(s.dplus_f, s.dminus_g);
  s.db = std::max(s.dminus_f, s.dplus_g);
  s.d = std::min(s.da, s.db);
  return s;
}

}  // namespace

GapConstraint::GapConstraint(Kind kind, int domain_max)
    : kind_(std::move(kind)), domain_max_(domain_max) {
  if (domain_max_ < 1) throw std::invalid_argument("constraint domain must be >= 1");
  validate();
}

void GapConstraint::validate() const {
  if (const auto* a = std::get_if<Alpha>(&kind_)) {
    if (!(a->alpha > Rational(1))) throw std::invalid_argument("alpha constraint requires alpha > 1");
    return;  // 0 < g <= f holds for every x once alpha > 1
  }
  if (const auto* t = std::get_if<Table>(&kind_)) {
    if (static_cast<int>(t->rows.size()) < domain_max_)
      throw std::invalid_argument("constraint table does not cover the domain");
  }
  Evaluator ev{kind_};
  for (int x = 1; x <= domain_max_; ++x) {
    const Rational fx = ev.f(x), gx = ev.g(x);
    if (!(gx > Rational(0)) || fx < gx)
      throw std::invalid_argument("constraint must satisfy 0 < g(x) <= f(x) on its domain");
  }
}

Rational GapConstraint::eval_f(int x) const {
  if (x < 1 || x > domain_max_) throw std::domain_error("constraint argument out of domain");
  return Evaluator{kind_}.f(x);
}

Rational GapConstraint::eval_g(int x) const {
  if (x < 1 || x > domain_max_) throw std::domain_error("constraint argument out of domain");
  return Evaluator{kind_}.g(x);
}

bool GapConstraint::admits(int c, long long gap) const {
  if (c < 1 || c > domain_max_) throw std::domain_error("copy length out of constraint domain");
  const Rational v(gap);
  return eval_g(c) <= v && v <= eval_f(c);
}

ConstraintStats stats(const GapConstraint& con) {
  const int x_max = con.domain_max();
  if (x_max < 2) throw std::invalid_argument("stats requires a domain of at least 2");
  ConstraintStats s = stats_over(con, x_max);
  if (x_max >= 4) {
    const ConstraintStats half = stats_over(con, x_max / 2);
    s.d_growing = half.d < s.d;
    s.delta_growing = half.delta < s.delta;
  }
  return s;
}

Rational bound_value(long long n, const ConstraintStats& s) {
  return Rational(n) * (Rational(1) + std::max(s.d, s.delta));
}

AdmissionTester::AdmissionTester(const GapConstraint& con, int max_copy_len) {
  if (max_copy_len > con.domain_max())
    throw std::domain_error("admission range exceeds the constraint domain");
  fg_.resize(std::max(1, max_copy_len + 1));
  for (int c = 1; c <= max_copy_len; ++c) fg_[c] = {con.eval_f(c), con.eval_g(c)};
}

ConstraintSpec ConstraintSpec::parse(std::string_view text) {
  auto split = [](std::string_view s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
      size_t pos = s.find(sep, start);
      parts.emplace_back(s.substr(start, pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return parts;
  };

  ConstraintSpec spec;
  spec.source_ = std::string(text);
  const auto parts = split(text, ':');
  const std::string& head = parts[0];
  try {
    if (head == "alpha" && parts.size() == 2) {
      spec.kind_ = GapConstraint::Alpha{Rational::parse(parts[1])};
    } else if (head == "band" && parts.size() == 3) {
      spec.kind_ = GapConstraint::Band{Rational::parse(parts[1]), Rational::parse(parts[2])};
    } else if (head == "affine" && parts.size() == 5) {
      spec.kind_ = GapConstraint::Affine{Rational::parse(parts[1]), Rational::parse(parts[2]),
                                         Rational::parse(parts[3]), Rational::parse(parts[4])};
    } else if (head == "table" && parts.size() == 2) {
      std::ifstream in(parts[1]);
      if (!in) throw std::invalid_argument("cannot open constraint table: " + parts[1]);
      GapConstraint::Table table;
      std::string line;
      int expected_x = 1;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string xs, fs, gs;
        if (!std::getline(row, xs, '\t') || !std::getline(row, fs, '\t') ||
            !std::getline(row, gs, '\t'))
          throw std::invalid_argument("constraint table row needs x<TAB>f<TAB>g");
        if (Rational::parse(xs) != Rational(expected_x))
          throw std::invalid_argument("constraint table must cover x = 1..X in order");
        table.rows.emplace_back(Rational::parse(fs), Rational::parse(gs));
        ++expected_x;
      }
      spec.table_rows_ = static_cast<int>(table.rows.size());
      spec.kind_ = std::move(table);
    } else {
      throw std::invalid_argument("unknown constraint form");
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad constraint: ") + e.what());
  }
  return spec;
}

GapConstraint ConstraintSpec::bind(int domain_max) const {
  if (std::holds_alternative<GapConstraint::Table>(kind_) && domain_max > table_rows_)
    throw std::invalid_argument("constraint table too small for requested domain");
  return GapConstraint(kind_, domain_max);
}

}  // namespace gappedrep
