#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gappedrep {

// Immutable sequence of byte letters. All positions in the public API are
// 1-indexed and ranges are inclusive, so w.factor(i, j) is w[i]...w[j].
class Word {
public:
  Word() = default;
  explicit Word(std::string symbols) : data_(std::move(symbols)) {}

  int size() const { return static_cast<int>(data_.size()); }
  bool empty() const { return data_.empty(); }

  char at(int pos) const {
    check_pos(pos);
    return data_[pos - 1];
  }

  // View of w[i..j]; defined iff 1 <= i <= j <= n.
  std::string_view factor(int i, int j) const {
    if (i < 1 || j > size() || i > j) throw std::invalid_argument("factor range out of bounds");
    return std::string_view(data_).substr(i - 1, j - i + 1);
  }

  std::string_view view() const { return data_; }
  const std::string& str() const { return data_; }

  friend bool operator==(const Word& a, const Word& b) { return a.data_ == b.data_; }

private:
  void check_pos(int pos) const {
    if (pos < 1 || pos > size()) throw std::invalid_argument("position out of bounds");
  }

  std::string data_;
};

}  // namespace gappedrep
