#pragma once

// Elements of the free *-algebra over Q(i)[a]: finitely supported maps from
// words to nonzero scalars.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stargb/scalar.hpp"
#include "stargb/word.hpp"

namespace stargb {

class Poly {
 public:
  using Terms = std::map<Word, Scalar, WordOrder>;

  Poly() = default;
  explicit Poly(WordOrder order) : terms_(std::move(order)) {}
  Poly(WordOrder order, const Word& w, Scalar c = 1);

  static Poly constant(WordOrder order, Scalar c) { return Poly(std::move(order), Word{}, std::move(c)); }

  WordOrder order() const { return terms_.key_comp(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of w (zero when w is not in the support).
  Scalar coefficient(const Word& w) const;
  bool contains(const Word& w) const { return terms_.count(w) != 0; }

  /// Adds c*w, dropping the term if it cancels.
  void add_term(const Word& w, const Scalar& c);
  /// this += c * p * f * q.
  void add_scaled(const Scalar& c, const Word& p, const Poly& f, const Word& q);

  /// Removes and returns the greatest term.
  std::pair<Word, Scalar> pop_leading();
  /// Appends a term below every word already present (no merging).
  void push_smallest(Word w, Scalar c) { terms_.emplace_hint(terms_.begin(), std::move(w), std::move(c)); }

  /// Greatest word of the support; DomainError on zero.
  const Word& leading_word() const;
  const Scalar& leading_coeff() const;
  std::pair<Word, Scalar> leading() const { return {leading_word(), leading_coeff()}; }
  /// |leading word|; -1 for zero.
  int degree() const;
  /// hat(f) - lc^{-1} f, so f = lc * (hat(f) - bar(f)).
  Poly bar() const;
  /// f / lc(f). Requires an invertible (parameter-free) leading coefficient.
  Poly monic() const;

  /// Words of maximal length in the support.
  std::vector<Word> top_words() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& f, const Poly& g);
  Poly operator-() const;

  /// Conjugate-linear anti-automorphism: c w -> conj(c) w*.
  Poly star() const;
  /// p * this * q.
  Poly sandwich(const Word& p, const Word& q) const;
  /// Substitutes a = value in every coefficient.
  Poly instantiate(const Rational& value) const;
  /// True when no coefficient depends on the parameter.
  bool parameter_free() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

inline Poly star_poly(const Poly& f) { return f.star(); }

}  // namespace stargb
