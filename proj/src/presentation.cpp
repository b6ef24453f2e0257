#include "stargb/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace stargb {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::optional<Letter> Signature::letter(std::string_view name) const {
  bool starred = false;
  if (!name.empty() && name.back() == '*') {
    starred = true;
    name.remove_suffix(1);
  }
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g] == name) return Letter(g, starred);
  }
  return std::nullopt;
}

std::string Signature::letter_name(Letter l) const {
  std::string s = generators.at(l.generator());
  if (l.starred()) s += "*";
  return s;
}

std::vector<Letter> Signature::letters() const {
  std::vector<Letter> out;
  for (std::size_t code = 0; code < 2 * generators.size(); ++code) {
    out.push_back(Letter::from_code(static_cast<std::uint16_t>(code)));
  }
  return out;
}

std::string Signature::word_text(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += letter_name(w[k]);
  }
  return s;
}

Word Signature::parse_word(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok == "1") continue;
    auto l = letter(tok);
    if (!l) throw std::invalid_argument("unknown letter '" + tok + "'");
    w.push_back(*l);
  }
  return w;
}

std::string Signature::poly_text(const Poly& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    std::string term;
    if (w.empty()) {
      term = scalar_text(c);
    } else if (c.is_one()) {
      term = word_text(w);
    } else if (c == Scalar(-1)) {
      term = "-" + word_text(w);
    } else {
      term = scalar_text(c) + " " + word_text(w);
    }
    if (first) {
      out = term;
      first = false;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

namespace {

enum class Tok { Ident, Number, Plus, Minus, LParen, RParen, Star, Caret, Comma, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::size_t line0) : src_(src), line_(line0) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    int depth = 0;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        // A newline only separates relations at top level after a complete
        // operand.
        bool continues = depth > 0 || out.empty();
        if (!out.empty()) {
          Tok k = out.back().kind;
          continues = continues || k == Tok::Plus || k == Tok::Minus || k == Tok::Caret || k == Tok::LParen ||
                      k == Tok::Comma || k == Tok::Newline;
        }
        if (!continues) out.push_back({Tok::Newline, "\\n", line_, col()});
        ++pos_;
        ++line_;
        line_start_ = pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c)) || c == ';') {
        ++pos_;
        continue;
      }
      std::size_t column = col();
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t b = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          ++pos_;
        }
        out.push_back({Tok::Ident, std::string(src_.substr(b, pos_ - b)), line_, column});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t b = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ + 1 < src_.size() && src_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
          ++pos_;
          while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        }
        out.push_back({Tok::Number, std::string(src_.substr(b, pos_ - b)), line_, column});
        continue;
      }
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '(': k = Tok::LParen; ++depth; break;
        case ')': k = Tok::RParen; --depth; break;
        case '*': k = Tok::Star; break;
        case '^': k = Tok::Caret; break;
        case ',': k = Tok::Comma; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line_, column);
      }
      out.push_back({k, std::string(1, c), line_, column});
      ++pos_;
    }
    out.push_back({Tok::End, "", line_, col()});
    return out;
  }

 private:
  std::size_t col() const { return pos_ - line_start_ + 1; }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t line_start_ = 0;
};

class ExprParser {
 public:
  ExprParser(const Signature& sig, std::vector<Token> toks) : sig_(sig), order_(sig.word_order()), toks_(std::move(toks)) {}

  std::vector<Poly> relation_list() {
    std::vector<Poly> out;
    while (true) {
      while (peek().kind == Tok::Comma || peek().kind == Tok::Newline) ++pos_;
      if (peek().kind == Tok::End) break;
      out.push_back(expr());
      Tok k = peek().kind;
      if (k != Tok::Comma && k != Tok::Newline && k != Tok::End) fail("expected ',' or end of relation");
    }
    return out;
  }

  Poly single() {
    while (peek().kind == Tok::Newline) ++pos_;
    Poly p = expr();
    while (peek().kind == Tok::Newline) ++pos_;
    if (peek().kind != Tok::End) fail("trailing input");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + (t.kind == Tok::End ? "" : " near '" + t.text + "'"), t.line, t.column);
  }

  Poly expr() {
    Poly acc(order_);
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      negate = peek().kind == Tok::Minus;
      ++pos_;
    }
    Poly t = term();
    acc += negate ? -t : t;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      negate = peek().kind == Tok::Minus;
      ++pos_;
      t = term();
      acc += negate ? -t : t;
    }
    return acc;
  }

  bool starts_factor() const {
    Tok k = peek().kind;
    return k == Tok::Ident || k == Tok::Number || k == Tok::LParen;
  }

  Poly term() {
    if (!starts_factor()) fail("expected an operand");
    Poly acc = factor();
    while (starts_factor()) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    while (true) {
      if (peek().kind == Tok::Star) {
        ++pos_;
        base = base.star();
      } else if (peek().kind == Tok::Caret) {
        ++pos_;
        if (peek().kind != Tok::Number || peek().text.find('/') != std::string::npos) fail("exponent must be a non-negative integer");
        unsigned long k = std::stoul(peek().text);
        ++pos_;
        Poly r = Poly::constant(order_, 1);
        for (unsigned long e = 0; e < k; ++e) r = r * base;
        base = std::move(r);
      } else {
        return base;
      }
    }
  }

  Poly atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number:
        ++pos_;
        return Poly::constant(order_, Scalar(GaussRational(parse_rational(t.text))));
      case Tok::LParen: {
        ++pos_;
        Poly inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        ++pos_;
        return inner;
      }
      case Tok::Ident: {
        ++pos_;
        if (t.text == "i") return Poly::constant(order_, Scalar(GaussRational::i()));
        if (sig_.parameter && t.text == *sig_.parameter) return Poly::constant(order_, Scalar::parameter());
        if (auto l = sig_.letter(t.text)) return Poly(order_, Word{*l});
        throw ParseError("unknown generator '" + t.text + "'", t.line, t.column);
      }
      default:
        fail("expected an operand");
    }
  }

  const Signature& sig_;
  WordOrder order_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && (std::isspace(static_cast<unsigned char>(s[e - 1])) || s[e - 1] == ';')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t b = 0;
  while (true) {
    std::size_t e = s.find(sep, b);
    std::string piece = trim(s.substr(b, e == std::string_view::npos ? std::string_view::npos : e - b));
    if (!piece.empty()) out.push_back(piece);
    if (e == std::string_view::npos) break;
    b = e + 1;
  }
  return out;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void check_names(const Signature& sig, std::size_t line) {
  std::vector<std::string> seen;
  for (const auto& g : sig.generators) {
    if (!valid_identifier(g)) throw ParseError("invalid generator name '" + g + "'", line, 1);
    if (g == "i") throw ParseError("'i' is reserved for the imaginary unit", line, 1);
    if (std::find(seen.begin(), seen.end(), g) != seen.end()) throw ParseError("generator '" + g + "' declared twice", line, 1);
    seen.push_back(g);
  }
  if (sig.parameter) {
    if (!valid_identifier(*sig.parameter) || *sig.parameter == "i") {
      throw ParseError("invalid parameter name '" + *sig.parameter + "'", line, 1);
    }
    if (std::find(seen.begin(), seen.end(), *sig.parameter) != seen.end()) {
      throw ParseError("parameter '" + *sig.parameter + "' clashes with a generator", line, 1);
    }
  }
}

GenOrder order_from_names(const Signature& sig, const std::vector<std::string>& names, std::size_t line) {
  std::vector<Letter> desc;
  for (const auto& n : names) {
    if (sig.parameter && (n == *sig.parameter || n == *sig.parameter + "*")) {
      throw ParseError("parameter '" + *sig.parameter + "' is a scalar and cannot be ordered", line, 1);
    }
    auto l = sig.letter(n);
    if (!l) throw ParseError("unknown generator '" + n + "' in order", line, 1);
    desc.push_back(*l);
  }
  // Listing only unstarred letters means: the starred copies, in the same
  // relative order, sit above all of them.
  if (desc.size() == sig.size() && std::all_of(desc.begin(), desc.end(), [](Letter l) { return !l.starred(); })) {
    std::vector<Letter> full;
    for (Letter l : desc) full.push_back(l.star());
    full.insert(full.end(), desc.begin(), desc.end());
    desc = std::move(full);
  }
  try {
    return GenOrder::from_descending(sig.size(), desc);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line, 1);
  }
}

}  // namespace

Poly Signature::parse_poly(std::string_view text) const {
  return ExprParser(*this, Lexer(text, 1).run()).single();
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::optional<std::vector<std::string>> gens;
  std::optional<std::vector<std::string>> order_names;
  GenOrder::Kind kind = GenOrder::Kind::Deglex;
  std::size_t order_line = 0, gen_line = 0;
  std::vector<std::string> params;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::optional<std::pair<std::size_t, std::size_t>> body;  // (offset, first line)

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    std::string content = trim(line.substr(0, line.find('#')));
    auto colon = content.find(':');
    std::string key = colon == std::string::npos ? "" : trim(content.substr(0, colon));
    std::string rest = colon == std::string::npos ? "" : content.substr(colon + 1);
    if (!content.empty()) {
      if (key == "generators") {
        gens = split(rest, ',');
        gen_line = line_no;
      } else if (key == "order") {
        order_names = split(rest, '>');
        order_line = line_no;
      } else if (key == "ordering") {
        try {
          kind = parse_order_kind(trim(rest.substr(0, rest.find(';'))));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line_no, 1);
        }
      } else if (key == "parameters") {
        params = split(rest, ',');
        if (params.size() > 1) throw ParseError("at most one parameter is supported", line_no, 1);
      } else if (key == "relations") {
        std::size_t rel = line.find(':');
        body = {pos + rel + 1, line_no};
        break;
      } else {
        throw ParseError("expected a header line (generators/order/ordering/parameters/relations)", line_no, 1);
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (!gens) throw ParseError("missing 'generators:' line", 1, 1);
  p.signature.generators = *gens;
  if (!params.empty()) p.signature.parameter = params[0];
  check_names(p.signature, gen_line);
  p.signature.order = order_names ? order_from_names(p.signature, *order_names, order_line)
                                  : GenOrder::starred_first(gens->size());
  p.signature.order = p.signature.order.with_kind(kind);
  if (body) {
    Lexer lex(text.substr(body->first), body->second);
    p.relations = ExprParser(p.signature, lex.run()).relation_list();
  }
  return p;
}

std::string print_presentation(const Presentation& p) {
  const Signature& s = p.signature;
  std::ostringstream out;
  out << "generators: ";
  for (std::size_t g = 0; g < s.size(); ++g) out << (g ? ", " : "") << s.generators[g];
  out << ";\norder: ";
  auto desc = s.order.descending();
  for (std::size_t k = 0; k < desc.size(); ++k) out << (k ? " > " : "") << s.letter_name(desc[k]);
  out << ";\n";
  if (s.order.kind() != GenOrder::Kind::Deglex) out << "ordering: " << to_string(s.order.kind()) << ";\n";
  if (s.parameter) out << "parameters: " << *s.parameter << ";\n";
  out << "relations:\n";
  for (const auto& r : p.relations) out << s.poly_text(r) << "\n";
  return out.str();
}

Presentation Presentation::instantiate(const Rational& value) const {
  Presentation out = *this;
  for (auto& r : out.relations) r = r.instantiate(value);
  return out;
}

bool Presentation::parameter_free() const {
  return std::all_of(relations.begin(), relations.end(), [](const Poly& r) { return r.parameter_free(); });
}

nlohmann::ordered_json signature_to_json(const Signature& s) {
  nlohmann::ordered_json j;
  j["generators"] = s.generators;
  std::vector<std::string> ord;
  for (Letter l : s.order.descending()) ord.push_back(s.letter_name(l));
  j["order"] = ord;
  if (s.order.kind() != GenOrder::Kind::Deglex) j["ordering"] = to_string(s.order.kind());
  j["parameters"] = s.parameter ? std::vector<std::string>{*s.parameter} : std::vector<std::string>{};
  return j;
}

Signature signature_from_json(const nlohmann::json& j) {
  Signature s;
  s.generators = j.at("generators").get<std::vector<std::string>>();
  if (j.contains("parameters")) {
    auto ps = j.at("parameters").get<std::vector<std::string>>();
    if (ps.size() > 1) throw ParseError("at most one parameter is supported", 1, 1);
    if (!ps.empty()) s.parameter = ps[0];
  }
  check_names(s, 1);
  s.order = j.contains("order") ? order_from_names(s, j.at("order").get<std::vector<std::string>>(), 1)
                                : GenOrder::starred_first(s.size());
  if (j.contains("ordering")) {
    try {
      s.order = s.order.with_kind(parse_order_kind(j.at("ordering").get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 1, 1);
    }
  }
  return s;
}

nlohmann::ordered_json presentation_to_json(const Presentation& p) {
  nlohmann::ordered_json j = signature_to_json(p.signature);
  std::vector<std::string> rels;
  for (const auto& r : p.relations) rels.push_back(p.signature.poly_text(r));
  j["relations"] = rels;
  return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
  Presentation p;
  p.signature = signature_from_json(j);
  for (const auto& r : j.at("relations")) p.relations.push_back(p.signature.parse_poly(r.get<std::string>()));
  return p;
}

Presentation load_presentation(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b != std::string_view::npos && text[b] == '{') return presentation_from_json(nlohmann::json::parse(text));
  return parse_presentation(text);
}

}  // namespace stargb
