#pragma once

// Involution-compatibility conditions on Groebner bases of *-algebras.
//
// Each check returns a CheckReport. A failing report always carries at least
// one witness naming the relations and words involved; feeding the witness
// back into the corresponding single-item predicate reproduces the failure.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stargb/groebner.hpp"

namespace stargb {

enum class Verdict { Pass, Fail, PassUpToCap };
std::string to_string(Verdict v);

struct Witness {
  std::string kind;
  std::vector<std::size_t> elements;  // indices into GroebnerBasis::elements
  std::vector<std::pair<std::string, Word>> words;  // named words (u, a, d1, ...)
  std::vector<std::size_t> positions;

  const Word* word(std::string_view name) const;
};

struct CheckReport {
  std::string condition;
  Verdict verdict = Verdict::Pass;
  std::vector<Witness> witnesses;
  std::optional<std::size_t> cap;
  std::vector<std::pair<std::string, Verdict>> parts;
  std::vector<std::string> notes;

  bool passed() const { return verdict != Verdict::Fail; }
  std::optional<Verdict> part(std::string_view name) const;
};

/// w is not d* d u nor u d* d for any nonempty d.
bool is_unshrinkable(const Word& w);
/// Length of the shortest d with w = d* d u or w = u d* d; nullopt if unshrinkable.
/// The bool is true for the prefix form.
std::optional<std::pair<std::size_t, bool>> shrinking_split(const Word& w);

/// Pass iff every R_S(s*) vanishes (the ideal is *-invariant).
CheckReport is_symmetric(const GroebnerBasis& gb);

/// The syntactic "strictly appropriate" conditions on top-degree words.
/// Here and in the next two checks a non-symmetric ideal is only noted.
CheckReport check_strictly_appropriate(const GroebnerBasis& gb);
/// Top words unshrinkable and, besides the leading word, starting with a
/// letter different from the leading word's first letter.
CheckReport check_corollary_simple(const GroebnerBasis& gb);
/// Top words unshrinkable and no non-leading top word overlaps any leading word.
CheckReport check_theorem_kir(const GroebnerBasis& gb);
/// Leading and top words live entirely in the unstarred or entirely in the
/// starred letters, consistently per relation. Requires a symmetric ideal.
CheckReport check_stardouble(const GroebnerBasis& gb);
/// Direct verification of non-expanding (part "nonexpanding") and its strict
/// form dd* in BW (part "strict") over basis words with |u| + |v| <= cap.
CheckReport check_nonexpanding_bounded(const GroebnerBasis& gb, std::size_t cap);

/// Re-validates a single witness of check_nonexpanding_bounded: true when
/// w w* occurs in R_S(u v*) with w >= max(u, v).
bool nonexpanding_violation(const GroebnerBasis& gb, const Word& u, const Word& v, const Word& w);

nlohmann::ordered_json report_to_json(const CheckReport& r, const Signature& sig);

}  // namespace stargb
