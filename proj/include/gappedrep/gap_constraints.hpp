#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gappedrep/rational.hpp"

namespace gappedrep {

// The admissibility pair (f, g) evaluated over the finite domain 1..X.
// A gapped repeat with copy length c and gap length v is admitted when
// g(c) <= v <= f(c), all comparisons exact.
class GapConstraint {
public:
  struct Alpha {
    Rational alpha;  // f(x) = (alpha-1)x, g(x) = min(1, alpha-1); alpha > 1
  };
  struct Band {
    Rational gmin, gmax;  // g(x) = gmin, f(x) = gmax
  };
  struct Affine {
    Rational a, b, c, d;  // f(x) = a*x + b, g(x) = c*x + d
  };
  struct Table {
    std::vector<std::pair<Rational, Rational>> rows;  // rows[x-1] = (f(x), g(x))
  };
  using Kind = std::variant<Alpha, Band, Affine, Table>;

  // Validates 0 < g(x) <= f(x) over 1..domain_max; throws
  // std::invalid_argument on violation (alpha <= 1 included).
  GapConstraint(Kind kind, int domain_max);

  int domain_max() const { return domain_max_; }

  // Exact f(x) / g(x); throws std::domain_error when x is outside 1..X.
  Rational eval_f(int x) const;
  Rational eval_g(int x) const;

  // g(c) <= gap <= f(c). Requires c in domain.
  bool admits(int c, long long gap) const;

  const Kind& kind() const { return kind_; }

private:
  void validate() const;

  Kind kind_;
  int domain_max_;
};

// One-step increment/decrement suprema and the gap spread, all over the
// constraint's finite domain.
struct ConstraintStats {
  Rational dplus_f;   // sup |f(x+1)-f(x)|+
  Rational dminus_f;  // sup |f(x+1)-f(x)|-
  Rational dplus_g;
  Rational dminus_g;
  Rational da;     // max(dplus_f, dminus_g)
  Rational db;     // max(dminus_f, dplus_g)
  Rational d;      // min(da, db)
  Rational delta;  // sup (f(x)-g(x))/x
  // True when the half-domain value is strictly below the full-domain
  // value, hinting that the supremum keeps growing with the domain.
  bool d_growing = false;
  bool delta_growing = false;
};

// Requires X >= 2.
ConstraintStats stats(const GapConstraint& con);

// n * (1 + max(d, delta)).
Rational bound_value(long long n, const ConstraintStats& s);

// Precomputed f/g values for tight admission loops over many repeats of
// one word (copy lengths never exceed (n-1)/2).
class AdmissionTester {
public:
  AdmissionTester(const GapConstraint& con, int max_copy_len);

  bool operator()(int c, long long gap) const {
    if (c < 1 || c >= static_cast<int>(fg_.size()))
      throw std::domain_error("copy length out of cached admission range");
    const Rational v(gap);
    return fg_[c].second <= v && v <= fg_[c].first;
  }

private:
  std::vector<std::pair<Rational, Rational>> fg_;  // [c] = (f(c), g(c))
};

// CLI-facing constraint grammar:
//   alpha:<rat> | band:<rat>:<rat> | affine:<a>:<b>:<c>:<d> | table:<path>
// where <rat> is "p/q", an integer, or a finite decimal. A table file has
// TSV lines "x<TAB>f(x)<TAB>g(x)" covering x = 1..X in order.
class ConstraintSpec {
public:
  static ConstraintSpec parse(std::string_view text);

  // Instantiates the constraint over 1..domain_max. A table spec requires
  // domain_max <= number of rows.
  GapConstraint bind(int domain_max) const;

  const std::string& source() const { return source_; }

private:
  ConstraintSpec() = default;

  std::string source_;
  GapConstraint::Kind kind_;
  int table_rows_ = 0;
};

}  // namespace gappedrep
