#pragma once

// The sesquilinear form on basis words, the inductive weight choice that makes
// its Gram matrix positive definite, and exact positivity certificates.
//
// <u, v> = sum of coeff * weight(h) over the positive words h h* occurring in
// R_S(u v*), and <u, u> = weight(u). With weight(h) = a_phi(h) this is the
// form of the representation theorem; other weights (moments) plug in the same
// way.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stargb/groebner.hpp"

namespace stargb {

/// A weight needed by an off-diagonal entry is not available yet, i.e. some
/// half-word h has phi(h) >= max(phi(u), phi(v)). This is evidence that the
/// basis is not non-expanding.
class WeightUnavailable : public std::runtime_error {
 public:
  WeightUnavailable(const std::string& msg, Word u, Word v, Word h)
      : std::runtime_error(msg), u(std::move(u)), v(std::move(v)), h(std::move(h)) {}
  Word u, v, h;
};

/// g_ij != conj(g_ji).
class NonHermitianGram : public std::runtime_error {
 public:
  NonHermitianGram(const std::string& msg, std::size_t i, std::size_t j)
      : std::runtime_error(msg), i(i), j(j) {}
  std::size_t i, j;  // 0-based
};

/// Positive words of p with their half-words: (h, coeff of h h*).
std::vector<std::pair<Word, Scalar>> half_words(const Poly& p);

using WeightFn = std::function<Rational(const Word& h)>;

/// <u, v> for an arbitrary weight on half-words. Requires a parameter-free basis.
GaussRational form_entry(const Word& u, const Word& v, const GroebnerBasis& gb, const WeightFn& weight);

struct WeightSequence {
  std::vector<Rational> a;  // a[k] is a_{k+1}
  std::string rule;

  std::size_t size() const { return a.size(); }
  /// 1-based access.
  const Rational& operator()(std::size_t phi) const { return a.at(phi - 1); }
};

/// Entry with weight(h) = a_phi(h). Off-diagonal entries may only use weights
/// with phi(h) < max(phi(u), phi(v)); anything else throws WeightUnavailable.
GaussRational gram_entry(const Word& u, const Word& v, const GroebnerBasis& gb, const BWEnumeration& bw,
                         const WeightSequence& weights);

class GramMatrix {
 public:
  GramMatrix() = default;
  GramMatrix(BWEnumeration bw, std::vector<std::vector<GaussRational>> g);

  std::size_t size() const { return g_.size(); }
  const BWEnumeration& enumeration() const { return bw_; }
  /// 0-based.
  const GaussRational& operator()(std::size_t i, std::size_t j) const { return g_[i][j]; }
  const std::vector<std::vector<GaussRational>>& rows() const { return g_; }
  /// Entry for two enumerated words.
  const GaussRational& entry(const Word& u, const Word& v) const;
  /// <f, g> for f, g in the span of the enumerated words (linear in f).
  GaussRational inner(const Poly& f, const Poly& g) const;

  /// First (i, j) with g_ij != conj(g_ji).
  std::optional<std::pair<std::size_t, std::size_t>> hermitian_defect() const;

  std::vector<Rational> minors;  // leading principal minors, when computed

 private:
  BWEnumeration bw_;
  std::vector<std::vector<GaussRational>> g_;
};

/// The leading block on the enumerated words of length <= cap, as a Gram
/// matrix whose enumeration has that cap. Those words must form a prefix.
GramMatrix gram_block(const GramMatrix& g, std::size_t cap);

/// Gram matrix of an arbitrary weight over the first `n` enumerated words.
GramMatrix assemble_gram(const GroebnerBasis& gb, const BWEnumeration& bw, std::size_t n, const WeightFn& weight);

struct WeightChoice {
  WeightSequence weights;
  GramMatrix gram;
};

/// Chooses a_1, ..., a_n one at a time: with p_m the m-th leading minor at
/// a_m = 0, a_m = (1 + |p_m|) / Delta_{m-1}, so Delta_m = 1 + |p_m| + p_m >= 1.
/// Throws WeightUnavailable or NonHermitianGram.
WeightChoice choose_weights(const GroebnerBasis& gb, const BWEnumeration& bw, std::size_t n);

struct PositivityCertificate {
  bool positive = false;
  std::vector<Rational> minors;  // Delta_1, ..., Delta_n
};

/// Sylvester's criterion with exact fraction-free (Bareiss) elimination.
/// Throws NonHermitianGram on non-Hermitian input.
PositivityCertificate verify_positive(const GramMatrix& g);
PositivityCertificate verify_positive(const std::vector<std::vector<GaussRational>>& g);

nlohmann::ordered_json gram_to_json(const GramMatrix& g, const WeightSequence* weights, const Signature& sig);

}  // namespace stargb
