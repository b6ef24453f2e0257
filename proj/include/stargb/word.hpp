#pragma once

// Letters and words of the free *-semigroup, and the deglex word order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stargb {

/// A generator x_i or its involution x_i*. The involution flips the low bit.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::size_t generator, bool starred)
      : code_(static_cast<std::uint16_t>(generator * 2 + (starred ? 1 : 0))) {}
  static constexpr Letter from_code(std::uint16_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::size_t generator() const { return code_ >> 1; }
  constexpr bool starred() const { return (code_ & 1) != 0; }
  constexpr std::uint16_t code() const { return code_; }
  constexpr Letter star() const { return from_code(static_cast<std::uint16_t>(code_ ^ 1)); }

  friend constexpr bool operator==(Letter a, Letter b) = default;

 private:
  std::uint16_t code_ = 0;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word& operator*=(const Word& o) {
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  void push_back(Letter l) { letters_.push_back(l); }

  /// Letters [pos, pos + len).
  Word sub(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return sub(0, len); }
  Word suffix(std::size_t len) const { return sub(size() - len, len); }
  bool starts_with(const Word& p) const;
  bool ends_with(const Word& s) const;
  /// Position of the leftmost occurrence of `w` at or after `from`.
  std::optional<std::size_t> find(const Word& w, std::size_t from = 0) const;
  bool contains(const Word& w) const { return find(w).has_value(); }
  /// All start positions of `w` inside this word.
  std::vector<std::size_t> occurrences(const Word& w) const;
  /// Word made only of unstarred letters (the empty word qualifies).
  bool all_unstarred() const;
  bool all_starred() const;

  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  std::vector<Letter> letters_;
};

/// (x1 ... xk)* = xk* ... x1*.
Word star_word(const Word& w);

/// Positive word: w = h h* for some h. Returns h.
std::optional<Word> half_word(const Word& w);
inline bool is_positive(const Word& w) { return half_word(w).has_value(); }

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Strict total order on the 2n letters, stored as a rank per letter code
/// (larger rank = greater letter), together with the way words are compared.
///
/// Deglex compares equal-length words letter by letter from the left.
/// StarDouble compares, in turn: length, the subword of unstarred letters
/// (deglex), the subword of starred letters (deglex read from the right),
/// and finally the starred/unstarred pattern (starred greater). It agrees with
/// deglex on unstarred words, and on words in one half the involution is
/// order preserving as long as x_i > x_j iff x_i* > x_j*.
class GenOrder {
 public:
  enum class Kind { Deglex, StarDouble };

  GenOrder() = default;
  /// Default order x1* > ... > xn* > x1 > ... > xn.
  static GenOrder starred_first(std::size_t generators);
  /// `descending` lists every letter exactly once, greatest first.
  static GenOrder from_descending(std::size_t generators, std::span<const Letter> descending);

  std::size_t generators() const { return rank_.size() / 2; }
  int rank(Letter l) const { return rank_[l.code()]; }
  /// Letters sorted greatest first.
  std::vector<Letter> descending() const;

  Kind kind() const { return kind_; }
  GenOrder with_kind(Kind k) const {
    GenOrder o = *this;
    o.kind_ = k;
    return o;
  }

  friend bool operator==(const GenOrder& a, const GenOrder& b) = default;

 private:
  std::vector<int> rank_;
  Kind kind_ = Kind::Deglex;
};

std::string to_string(GenOrder::Kind k);
GenOrder::Kind parse_order_kind(std::string_view text);

/// Longer words are greater; equal lengths are compared according to ord.kind().
std::strong_ordering word_compare(const Word& u, const Word& v, const GenOrder& ord);

/// Shareable comparator usable as a std::map ordering.
class WordOrder {
 public:
  WordOrder() = default;
  explicit WordOrder(GenOrder ord) : ord_(std::make_shared<const GenOrder>(std::move(ord))) {}

  const GenOrder& gen_order() const { return *ord_; }
  bool operator()(const Word& u, const Word& v) const { return word_compare(u, v, *ord_) < 0; }
  std::strong_ordering compare(const Word& u, const Word& v) const { return word_compare(u, v, *ord_); }
  const Word& max(const Word& u, const Word& v) const { return (*this)(u, v) ? v : u; }

  friend bool operator==(const WordOrder& a, const WordOrder& b) {
    return a.ord_ == b.ord_ || *a.ord_ == *b.ord_;
  }

 private:
  std::shared_ptr<const GenOrder> ord_;
};

}  // namespace stargb
