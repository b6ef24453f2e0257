#include "stargb/presets.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "stargb/starcheck.hpp"

namespace stargb {

namespace {

Signature signature(std::vector<std::string> names, std::optional<std::string> parameter = std::nullopt) {
  Signature s;
  s.order = GenOrder::starred_first(names.size());
  s.generators = std::move(names);
  s.parameter = std::move(parameter);
  return s;
}

Word gen(std::size_t i, bool starred = false) { return Word{Letter(i, starred)}; }

const char* kT3 = R"(generators: q1, q2;
order: q2 > q1;
parameters: alpha;
relations:
  q1^3 - q1,
  q2^3 - q2,
  (alpha - q1 - q2)^3 - (alpha - q1 - q2)
)";

const char* kB4 = R"(generators: q1, q2, q3;
order: q3 > q2 > q1;
parameters: alpha;
relations:
  q1^2 - q1,
  q2^2 - q2,
  q3^2 - q3,
  (alpha - q1 - q2 - q3)^2 - (alpha - q1 - q2 - q3)
)";

const char* kQ4Half = R"(generators: q1, q2, q3, q4;
order: q4 > q3 > q2 > q1;
parameters: alpha;
relations:
  q1^2 - q1,
  q2^2 - q2,
  q3^2 - q3,
  q4^2 - q4,
  q1 + q2 + q3 + q4 - alpha
)";

const char* kC2 = R"(generators: e, f;
order: e > f;
relations:
  e^2 - e,
  f^2 - f,
  e f,
  f e
)";

Presentation with_alpha(Presentation p, const std::optional<Rational>& alpha) {
  return alpha ? p.instantiate(*alpha) : p;
}

StructureConstants zero_constants(std::size_t n) {
  return StructureConstants(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0)));
}

void set_bracket(StructureConstants& c, std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  c[i][j][k] = v;
  c[j][i][k] = -v;
}

}  // namespace

Presentation make_stardouble(const Presentation& p) {
  Presentation out{p.signature, {}};
  out.signature.order = out.signature.order.with_kind(GenOrder::Kind::StarDouble);
  const WordOrder ord = out.signature.word_order();
  for (const Poly& r : p.relations) {
    Poly s(ord);
    for (const auto& [w, c] : r.terms()) {
      if (!w.all_unstarred()) throw std::invalid_argument("*-double: relation mentions a starred letter");
      s.add_term(w, c);
    }
    out.relations.push_back(std::move(s));
  }
  for (std::size_t k = 0, n = out.relations.size(); k < n; ++k) {
    Poly s = out.relations[k].star();
    if (std::find(out.relations.begin(), out.relations.end(), s) == out.relations.end()) out.relations.push_back(s);
  }
  return out;
}

Presentation make_monomial(std::string_view words) {
  struct Token {
    char name;
    bool starred;
  };
  std::vector<std::vector<Token>> parsed(1);
  std::set<char> names;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const char c = words[k];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      parsed.emplace_back();
    } else if (std::isalpha(static_cast<unsigned char>(c)) && c != 'i') {
      names.insert(c);
      parsed.back().push_back({c, false});
    } else if (c == '*' && !parsed.back().empty()) {
      parsed.back().back().starred = !parsed.back().back().starred;
    } else if (c == '^' && !parsed.back().empty()) {
      std::size_t e = 0, end = k + 1;
      while (end < words.size() && std::isdigit(static_cast<unsigned char>(words[end]))) e = e * 10 + (words[end++] - '0');
      if (end == k + 1 || e == 0) throw std::invalid_argument("monomial: bad exponent");
      const Token t = parsed.back().back();
      for (std::size_t r = 1; r < e; ++r) parsed.back().push_back(t);
      k = end - 1;
    } else {
      throw std::invalid_argument(std::string("monomial: unexpected character '") + c + "'");
    }
  }
  std::vector<std::string> gens;
  for (char c : names) gens.emplace_back(1, c);
  Presentation p{signature(gens), {}};
  const WordOrder ord = p.signature.word_order();
  for (const auto& tokens : parsed) {
    if (tokens.empty()) throw std::invalid_argument("monomial: empty word");
    Word w;
    for (const Token& t : tokens) {
      const auto idx = static_cast<std::size_t>(std::distance(names.begin(), names.find(t.name)));
      w.push_back(Letter(idx, t.starred));
    }
    for (const Word& x : {w, star_word(w)}) {
      Poly r(ord, x);
      if (std::find(p.relations.begin(), p.relations.end(), r) == p.relations.end()) p.relations.push_back(r);
    }
  }
  return p;
}

Presentation make_uea(const StructureConstants& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) throw std::invalid_argument("structure constants: not an n x n x n array");
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i][j].size() != n) throw std::invalid_argument("structure constants: not an n x n x n array");
      for (std::size_t k = 0; k < n; ++k) {
        if (c[i][j][k] != -c[j][i][k]) {
          throw std::invalid_argument("structure constants are not antisymmetric at (" + std::to_string(i + 1) + ", " +
                                      std::to_string(j + 1) + ", " + std::to_string(k + 1) + ")");
        }
      }
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  Presentation p{signature(names), {}};
  const WordOrder ord = p.signature.word_order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly r(ord, gen(i) * gen(j));
      r.add_term(gen(j) * gen(i), -1);
      for (std::size_t k = 0; k < n; ++k) r.add_term(gen(k), Scalar(GaussRational(-c[i][j][k])));
      p.relations.push_back(r);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Poly r(ord, gen(j, true));
    r.add_term(gen(j), 1);
    p.relations.push_back(r);
  }
  return p;
}

WickSpec::WickSpec(std::size_t n)
    : n(n),
      T(n, std::vector<std::vector<std::vector<GaussRational>>>(
               n, std::vector<std::vector<GaussRational>>(n, std::vector<GaussRational>(n)))) {}

std::optional<std::array<std::size_t, 4>> WickSpec::symmetry_defect() const {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          if (!(T[i][j][k][l] == T[j][i][l][k].conj())) return std::array<std::size_t, 4>{i, j, k, l};
        }
      }
    }
  }
  return std::nullopt;
}

Presentation make_wick(const WickSpec& spec) {
  if (auto d = spec.symmetry_defect()) {
    throw std::invalid_argument("Wick coefficients violate T_ij^kl = conj(T_ji^lk) at (" + std::to_string((*d)[0] + 1) +
                                ", " + std::to_string((*d)[1] + 1) + ", " + std::to_string((*d)[2] + 1) + ", " +
                                std::to_string((*d)[3] + 1) + ")");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < spec.n; ++i) names.push_back("a" + std::to_string(i + 1));
  Presentation p{signature(names), {}};
  const WordOrder ord = p.signature.word_order();
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = 0; j < spec.n; ++j) {
      if (i == j) continue;
      Poly r(ord, gen(i, true) * gen(j));
      for (std::size_t k = 0; k < spec.n; ++k) {
        for (std::size_t l = 0; l < spec.n; ++l) {
          if (k != l) r.add_term(gen(l) * gen(k, true), Scalar(-spec.T[i][j][k][l]));
        }
      }
      p.relations.push_back(r);
    }
  }
  return p;
}

std::vector<std::string> preset_names() {
  return {"A_x2", "monomial:<words>", "uea-heisenberg", "uea-so3", "wick2", "wick3",
          "B4",   "Q4",               "T3",             "T3double", "double-c2"};
}

Preset preset(std::string_view name, const std::optional<Rational>& alpha) {
  Preset out;
  out.name = std::string(name);
  if (name == "A_x2") {
    out.presentation = make_monomial("x^2");
    out.claims = {"kir", "appropriate", "nonexpanding"};
    out.left_side = true;
  } else if (name.substr(0, 9) == "monomial:") {
    out.presentation = make_monomial(name.substr(9));
    const auto& rels = out.presentation.relations;
    if (std::all_of(rels.begin(), rels.end(), [](const Poly& r) { return is_unshrinkable(r.leading_word()); })) {
      out.claims = {"kir"};
    }
  } else if (name == "uea-heisenberg") {
    StructureConstants c = zero_constants(3);
    set_bracket(c, 0, 1, 2, 1);
    out.presentation = make_uea(c);
    out.claims = {"corollary", "appropriate"};
  } else if (name == "uea-so3") {
    StructureConstants c = zero_constants(3);
    set_bracket(c, 0, 1, 2, 1);
    set_bracket(c, 1, 2, 0, 1);
    set_bracket(c, 2, 0, 1, 1);
    out.presentation = make_uea(c);
    out.claims = {"corollary", "appropriate"};
  } else if (name == "wick2") {
    WickSpec s(2);
    s.at(0, 1, 0, 1) = Rational(1, 2);
    s.at(1, 0, 1, 0) = Rational(1, 2);
    s.at(0, 1, 1, 0) = GaussRational(0, Rational(1, 3));
    s.at(1, 0, 0, 1) = GaussRational(0, Rational(-1, 3));
    out.presentation = make_wick(s);
    out.claims = {"corollary", "appropriate", "nonexpanding"};
  } else if (name == "wick3") {
    WickSpec s(3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        s.at(i, j, j, i) = Rational(1, 2);
        s.at(i, j, i, j) = GaussRational(0, Rational(i < j ? 1 : -1, 4));
      }
    }
    s.at(0, 1, 2, 0) = Rational(1, 5);
    s.at(1, 0, 0, 2) = Rational(1, 5);
    out.presentation = make_wick(s);
    out.claims = {"corollary", "appropriate", "nonexpanding"};
  } else if (name == "B4") {
    out.presentation = with_alpha(parse_presentation(kB4), alpha);
  } else if (name == "Q4") {
    out.presentation = with_alpha(make_stardouble(parse_presentation(kQ4Half)), alpha);
    out.claims = {"stardouble", "nonexpanding"};
    if (alpha && *alpha == 0) out.flags.push_back("no nonzero bounded representation");
  } else if (name == "T3") {
    out.presentation = with_alpha(parse_presentation(kT3), alpha);
  } else if (name == "T3double") {
    out.presentation = with_alpha(make_stardouble(parse_presentation(kT3)), alpha);
    out.claims = {"stardouble", "nonexpanding"};
  } else if (name == "double-c2") {
    out.presentation = make_stardouble(parse_presentation(kC2));
    out.claims = {"stardouble", "nonexpanding"};
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  }
  return out;
}

}  // namespace stargb
