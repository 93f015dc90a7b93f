#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gappedrep {

// Exact rational number on 128-bit integers. Always kept in canonical
// reduced form with a positive denominator. Arithmetic throws
// std::overflow_error instead of silently wrapping; comparisons never
// overflow (they fall back to a continued-fraction walk when the cross
// products would not fit).
class Rational {
public:
  using Int = __int128;

  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n, Int d) : num_(n), den_(d) { normalize(); }

  static Rational of(long long n, long long d) { return Rational(Int(n), Int(d)); }

  Int num() const { return num_; }
  Int den() const { return den_; }

  long long num_ll() const { return to_ll(num_); }
  long long den_ll() const { return to_ll(den_); }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    // Knuth-style addition through gcd(d1, d2) keeps intermediates small.
    Int g = gcd(a.den_, b.den_);
    Int da = a.den_ / g;
    Int db = b.den_ / g;
    Int n = checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da));
    Int d = checked_mul(a.den_, db);
    return Rational(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = gcd(abs_i(a.num_), b.den_);
    Int g2 = gcd(abs_i(b.num_), a.den_);
    Int n = checked_mul(a.num_ / g1, b.num_ / g2);
    Int d = checked_mul(a.den_ / g2, b.den_ / g1);
    return Rational(n, d, already_reduced{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

  // Largest integer <= value.
  Int floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  Int ceil() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  std::string str() const {
    if (den_ == 1) return int_str(num_);
    return int_str(num_) + "/" + int_str(den_);
  }

  // Accepts "p/q", plain integers, and finite decimals ("1.5" -> 3/2).
  static Rational parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
      Int n = parse_int(text.substr(0, slash));
      Int d = parse_int(text.substr(slash + 1));
      return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_int(text), 1);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw std::invalid_argument("bad rational literal");
    bool neg = text.front() == '-';
    std::string_view whole = text.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
    Int n = whole.empty() ? 0 : parse_int(whole);
    Int d = 1;
    for (char ch : frac) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad rational literal");
      n = checked_add(checked_mul(n, 10), ch - '0');
      d = checked_mul(d, 10);
    }
    if (neg) n = -n;
    return Rational(n, d);
  }

  static std::string int_str(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string out;
    while (u != 0) {
      out.push_back(char('0' + int(u % 10)));
      u /= 10;
    }
    if (neg) out.push_back('-');
    return std::string(out.rbegin(), out.rend());
  }

private:
  struct already_reduced {};
  Rational(Int n, Int d, already_reduced) : num_(n), den_(d) {}

  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(abs_i(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Int abs_i(Int v) { return v < 0 ? -v : v; }

  static Int gcd(Int a, Int b) {
    while (b != 0) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  static Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational add overflow");
    return r;
  }
  static Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational mul overflow");
    return r;
  }

  static long long to_ll(Int v) {
    if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
      throw std::overflow_error("rational component exceeds 64 bits");
    return static_cast<long long>(v);
  }

  static Int parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer literal");
    Int v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal");
      v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
  }

  // Sign of a - b. Cross multiplication when it fits, otherwise an exact
  // continued-fraction comparison that only ever divides.
  static int cmp(const Rational& a, const Rational& b) {
    if (a.num_ == b.num_ && a.den_ == b.den_) return 0;
    bool a_neg = a.num_ < 0;
    bool b_neg = b.num_ < 0;
    if (a_neg != b_neg) return a_neg ? -1 : 1;
    Int lhs, rhs;
    if (!__builtin_mul_overflow(a.num_, b.den_, &lhs) &&
        !__builtin_mul_overflow(b.num_, a.den_, &rhs)) {
      return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    int sign = a_neg ? -1 : 1;
    return sign * cmp_frac(abs_i(a.num_), a.den_, abs_i(b.num_), b.den_);
  }

  // Compare p1/q1 with p2/q2 for nonnegative p, positive q.
  static int cmp_frac(Int p1, Int q1, Int p2, Int q2) {
    for (;;) {
      Int w1 = p1 / q1, w2 = p2 / q2;
      if (w1 != w2) return w1 < w2 ? -1 : 1;
      p1 -= w1 * q1;
      p2 -= w2 * q2;
      if (p1 == 0 || p2 == 0) {
        if (p1 == p2) return 0;
        return p1 == 0 ? -1 : 1;
      }
      // p1/q1 vs p2/q2 (proper fractions)  <=>  q2/p2 vs q1/p1.
      std::swap(p1, q2);
      std::swap(p2, q1);
    }
  }

  Int num_;
  Int den_;
};

}  // namespace gappedrep
