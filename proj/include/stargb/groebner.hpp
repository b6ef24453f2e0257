#pragma once

// Noncommutative Groebner bases in the free *-algebra: overlap compositions,
// the rewriting normal form R_S, Buchberger-style completion with a degree
// cap, basis-word enumeration and the product on normal forms.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "stargb/poly.hpp"
#include "stargb/presentation.hpp"

namespace stargb {

/// Raised when completion meets a leading coefficient that depends on the
/// parameter; dividing by it would require a case split on the parameter.
class DegenerateLeadingCoefficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// hat(left) = x y, hat(right) = y z with x, y, z nonempty and w = x y z.
/// result = beta * left * z - alpha * x * right, where alpha and beta are the
/// leading coefficients of left and right.
struct Composition {
  Poly left;
  Poly right;
  Word overlap;  // w
  Word left_cofactor;   // x: result subtracts x * right
  Word right_cofactor;  // z: result adds left * z
  Poly result;
};

std::vector<Composition> find_compositions(const Poly& f, const Poly& g);

/// True when hat(f) occurs inside hat(g) (the inclusion case, not a composition).
bool leading_included(const Poly& f, const Poly& g);

/// One rewrite p * hat(s) * q -> p * bar(s) * q, recorded as "subtract
/// coeff * p * s * q" with s the monic relation at `relation`.
struct RewriteStep {
  Scalar coeff;
  Word left;
  std::size_t relation;
  Word right;
};

/// R_S. Relations need not be monic (they are normalized internally). Always
/// rewrites the greatest reducible word at the leftmost occurrence of the
/// first matching relation.
Poly reduce(const Poly& f, const std::vector<Poly>& relations);
/// Same, also returning the rewrite certificate: f - R_S(f) = sum coeff * p * monic(s) * q.
Poly reduce(const Poly& f, const std::vector<Poly>& relations, std::vector<RewriteStep>* certificate);

enum class BasisStatus { Complete, Truncated };

struct CompositionLogEntry {
  std::size_t left;   // element ids (insertion indices)
  std::size_t right;
  Word overlap;
  enum class Outcome { Zero, Adjoined, Dropped } outcome;
  std::size_t adjoined_id = 0;  // when Adjoined
};

/// Linear combination sum coeff * p * input[relation] * q.
using IdealCertificate = std::vector<RewriteStep>;

struct CompletionOptions {
  std::size_t degree_cap = 8;
  /// Track, for each output element, its expression in the input relations.
  bool track_certificates = false;
};

struct GroebnerBasis {
  Signature signature;
  std::vector<Poly> elements;  // monic, reduced, sorted by leading word
  std::vector<std::size_t> ids;  // insertion index of each element
  BasisStatus status = BasisStatus::Complete;
  std::size_t degree_cap = 0;
  std::vector<CompositionLogEntry> log;
  /// Leading words of remainders that exceeded the cap and were not adjoined.
  std::vector<Word> dropped;
  std::vector<IdealCertificate> certificates;  // parallel to elements, when tracked

  bool complete() const { return status == BasisStatus::Complete; }
  std::vector<Word> leading_words() const;
  Poly reduce(const Poly& f) const { return stargb::reduce(f, elements); }
  /// S* = S as sets (after monic normalization).
  bool star_closed() const;
};

/// Buchberger-Bokut completion. Throws std::invalid_argument if the cap is
/// below the maximal input degree, DegenerateLeadingCoefficient as described.
GroebnerBasis complete(const Presentation& input, const CompletionOptions& opts);
inline GroebnerBasis complete(const Presentation& input, std::size_t degree_cap) {
  return complete(input, CompletionOptions{degree_cap, false});
}

/// Wraps already-known relations without completing them (they are only
/// normalized and sorted). Status is Complete iff every composition reduces to 0.
GroebnerBasis basis_from_relations(const Presentation& input, std::size_t degree_cap);

/// Ascending list of basis words up to a length cap with the rank map phi
/// (1-based, phi(u) > phi(v) whenever u > v for the default enumeration).
class BWEnumeration {
 public:
  BWEnumeration() = default;
  /// Custom enumeration: `words` in the chosen order, phi(words[k]) = k + 1.
  BWEnumeration(std::vector<Word> words, std::size_t degree_cap);

  std::size_t size() const { return words_.size(); }
  std::size_t degree_cap() const { return cap_; }
  const std::vector<Word>& words() const { return words_; }
  const Word& word(std::size_t phi) const { return words_.at(phi - 1); }
  /// 1-based index, nullopt for words outside the enumeration.
  std::optional<std::size_t> phi(const Word& w) const;
  bool contains(const Word& w) const { return index_.count(w) != 0; }
  /// First n words (keeps the cap).
  BWEnumeration truncated(std::size_t n) const;

 private:
  std::vector<Word> words_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::size_t cap_ = 0;
};

/// All words of length <= cap avoiding every leading word, sorted ascending.
BWEnumeration enumerate_bw(const GroebnerBasis& gb, std::size_t degree_cap);
/// Same over explicit leading words.
BWEnumeration enumerate_bw(const Signature& sig, const std::vector<Word>& leading, std::size_t degree_cap);

/// Product in the quotient: R_S(f g). Refuses truncated bases unless
/// `allow_truncated`.
Poly diamond(const Poly& f, const Poly& g, const GroebnerBasis& gb, bool allow_truncated = false);

struct MembershipResult {
  bool member;
  /// False when the basis is truncated and deg(f) exceeds its cap.
  bool reliable;
};
MembershipResult ideal_member(const Poly& f, const GroebnerBasis& gb);

std::string to_string(BasisStatus s);

}  // namespace stargb
