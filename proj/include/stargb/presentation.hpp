#pragma once

// Finitely presented *-algebras: generator table, letter order, optional
// scalar parameter and defining relations, plus the text format
//
//   generators: x, y;
//   order: x* > y* > x > y;
//   ordering: deglex;        # optional; or stardouble
//   parameters: a;
//   relations:
//   x*x - 1, y y - a y
//
// Juxtaposition multiplies, a postfix `*` applies the involution to the
// preceding atom, `^k` takes powers, `i` is the imaginary unit and numbers may
// be integers or p/q. `#` starts a comment.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stargb/poly.hpp"

namespace stargb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Everything needed to read and print words and scalars.
struct Signature {
  std::vector<std::string> generators;
  GenOrder order;
  std::optional<std::string> parameter;

  std::size_t size() const { return generators.size(); }
  WordOrder word_order() const { return WordOrder(order); }
  std::string_view parameter_name() const { return parameter ? std::string_view(*parameter) : "a"; }
  /// Letter for `name` or `name*`; nullopt if unknown.
  std::optional<Letter> letter(std::string_view name) const;
  std::string letter_name(Letter l) const;
  /// All 2n letters in code order.
  std::vector<Letter> letters() const;

  /// Letters separated by spaces; the empty word prints as "1".
  std::string word_text(const Word& w) const;
  /// Inverse of word_text.
  Word parse_word(std::string_view text) const;
  std::string poly_text(const Poly& f) const;
  std::string scalar_text(const Scalar& c) const { return c.text(parameter_name()); }
  Poly parse_poly(std::string_view text) const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Presentation {
  Signature signature;
  std::vector<Poly> relations;

  /// Replaces the parameter by a rational value in every relation.
  Presentation instantiate(const Rational& value) const;
  bool parameter_free() const;
};

Presentation parse_presentation(std::string_view text);
std::string print_presentation(const Presentation& p);

/// {"generators": [...], "order": [...], "parameters": [...], "relations": [...]}
nlohmann::ordered_json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

nlohmann::ordered_json signature_to_json(const Signature& s);
Signature signature_from_json(const nlohmann::json& j);

/// Reads either format, choosing JSON when the text starts with '{'.
Presentation load_presentation(std::string_view text);

}  // namespace stargb
