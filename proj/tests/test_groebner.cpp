#include <doctest.h>

#include <random>
#include <set>

#include "stargb/groebner.hpp"
#include "stargb/presets.hpp"
#include "stargb/repr.hpp"
#include "stargb/x2.hpp"
#include "support.hpp"

using namespace stargb;

namespace {

Presentation parse(const char* text) { return parse_presentation(text); }

std::set<std::string> lead_texts(const GroebnerBasis& gb) {
  std::set<std::string> out;
  for (const Word& w : gb.leading_words()) out.insert(gb.signature.word_text(w));
  return out;
}

// Brute force: every proper suffix of a that is a proper prefix of b.
std::size_t overlap_count(const Word& a, const Word& b) {
  std::size_t n = 0;
  for (std::size_t len = 1; len < std::min(a.size(), b.size()) + 1; ++len) {
    if (len == a.size() || len == b.size()) continue;
    if (a.suffix(len) == b.prefix(len)) ++n;
  }
  return n;
}

Poly certified(const GroebnerBasis& gb, std::size_t k, const Presentation& input) {
  Poly sum(gb.signature.word_order());
  for (const RewriteStep& st : gb.certificates[k]) sum.add_scaled(st.coeff, st.left, input.relations[st.relation], st.right);
  return sum;
}

}  // namespace

TEST_CASE("compositions of x^2 with itself") {
  const Presentation p = preset("A_x2").presentation;
  const Poly& x2 = p.relations[0];
  const auto cs = find_compositions(x2, x2);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].overlap == p.signature.parse_word("x x x"));
  CHECK(cs[0].result.is_zero());
}

TEST_CASE("T3 cube overlaps") {
  // With q1 > q2 the reduced third relation has leading word q1 q1 q2.
  Presentation p = parse(
      "generators: q1, q2;\norder: q1 > q2;\nparameters: alpha;\nrelations:\n"
      "  q1^3 - q1, q2^3 - q2, (alpha - q1 - q2)^3 - (alpha - q1 - q2)\n");
  const Poly third = reduce(p.relations[2], {p.relations[0], p.relations[1]});
  CHECK(p.signature.word_text(third.leading_word()) == "q1 q1 q2");
  const auto cs = find_compositions(p.relations[0], third);
  REQUIRE(cs.size() == 2);
  std::set<std::string> overlaps;
  for (const auto& c : cs) overlaps.insert(p.signature.word_text(c.overlap));
  CHECK(overlaps == std::set<std::string>{"q1 q1 q1 q2", "q1 q1 q1 q1 q2"});
}

TEST_CASE("Lie bracket overlap") {
  const Presentation p = parse(
      "generators: e1, e2, e3;\nrelations:\n e1 e2 - e2 e1 - e3, e2 e3 - e3 e2 - 2 e1\n");
  const auto cs = find_compositions(p.relations[0], p.relations[1]);
  REQUIRE(cs.size() == overlap_count(p.relations[0].leading_word(), p.relations[1].leading_word()));
  REQUIRE(cs.size() == 1);
  CHECK(p.signature.word_text(cs[0].overlap) == "e1 e2 e3");
  // Every word of the result lies below w.
  for (const auto& [w, c] : cs[0].result.terms()) CHECK(p.signature.word_order()(w, cs[0].overlap));
}

TEST_CASE("compositions agree with a brute-force overlap count") {
  std::mt19937_64 rng(9);
  const Signature sig = preset("monomial:xy").presentation.signature;
  std::uniform_int_distribution<std::uint16_t> code(0, 3);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  for (int t = 0; t < 300; ++t) {
    Word a, b;
    for (std::size_t k = len(rng); k > 0; --k) a.push_back(Letter::from_code(code(rng)));
    for (std::size_t k = len(rng); k > 0; --k) b.push_back(Letter::from_code(code(rng)));
    const Poly f(sig.word_order(), a), g(sig.word_order(), b);
    CHECK(find_compositions(f, g).size() == overlap_count(a, b));
  }
}

TEST_CASE("reduction examples") {
  const Presentation c = parse("generators: x, y;\norder: x > y;\nrelations:\n x y - y x\n");
  const Signature& s = c.signature;
  CHECK(reduce(s.parse_poly("x y"), c.relations) == s.parse_poly("y x"));

  const Presentation a = preset("A_x2").presentation;
  const Signature& t = a.signature;
  CHECK(reduce(t.parse_poly("x x* x x"), a.relations).is_zero());
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t l = 0; l < 4; ++l) {
      const Word uk = x2_word(X2Family::U, k), ul = x2_word(X2Family::U, l);
      CHECK(reduce(Poly(t.word_order(), uk * star_word(ul)), a.relations) ==
            Poly(t.word_order(), x2_word(X2Family::A, k + l + 1)));
    }
  }
}

TEST_CASE("reduce is idempotent and certified") {
  std::mt19937_64 rng(21);
  for (const char* name : {"uea-so3", "wick2", "T3double"}) {
    const GroebnerBasis gb = complete(preset(name, Rational(1)).presentation, 8);
    const BWEnumeration all = enumerate_bw(gb.signature, {}, 4);
    for (int t = 0; t < 40; ++t) {
      const Poly f = random_combination(all, gb.signature.word_order(), rng, 5);
      std::vector<RewriteStep> cert;
      const Poly r = reduce(f, gb.elements, &cert);
      CHECK(gb.reduce(r) == r);
      Poly sum(gb.signature.word_order());
      for (const auto& st : cert) sum.add_scaled(st.coeff, st.left, gb.elements[st.relation].monic(), st.right);
      CHECK(f - r == sum);
      // Words of the normal form never exceed the leading word of f.
      if (!r.is_zero()) CHECK_FALSE(gb.signature.word_order()(f.leading_word(), r.leading_word()));
    }
  }
}

TEST_CASE("commutator basis is already complete") {
  const Presentation c = parse("generators: x, y;\norder: x > y;\nrelations:\n x y - y x\n");
  const GroebnerBasis gb = complete(c, 6);
  CHECK(gb.complete());
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0] == c.relations[0]);
}

TEST_CASE("T3 basis") {
  const GroebnerBasis gb = complete(preset("T3").presentation, 8);
  CHECK(gb.complete());
  CHECK(lead_texts(gb) == std::set<std::string>{"q1 q1 q1", "q2 q2 q2", "q2 q2 q1", "q2 q1 q2 q1 q1"});
}

TEST_CASE("B4 basis") {
  const GroebnerBasis gb = complete(preset("B4").presentation, 8);
  CHECK(gb.complete());
  CHECK(lead_texts(gb) == std::set<std::string>{"q1 q1", "q2 q2", "q3 q3", "q3 q2", "q3 q1 q2"});
}

TEST_CASE("completion is minimal, reduced and closed") {
  for (const std::string& name : testing::corpus_names()) {
    CAPTURE(name);
    const GroebnerBasis gb = complete(preset(name, Rational(1)).presentation, 8);
    REQUIRE(gb.complete());
    const auto leads = gb.leading_words();
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
      for (std::size_t j = 0; j < gb.elements.size(); ++j) {
        if (i != j) CHECK_FALSE(leads[j].contains(leads[i]));
        for (const auto& c : find_compositions(gb.elements[i], gb.elements[j])) CHECK(gb.reduce(c.result).is_zero());
      }
      std::vector<Poly> others = gb.elements;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK(reduce(gb.elements[i], others) == gb.elements[i]);
    }
  }
}

TEST_CASE("completion preserves the ideal") {
  for (const char* name : {"T3", "B4", "uea-heisenberg", "double-c2"}) {
    CAPTURE(name);
    const Presentation p = preset(name, Rational(2)).presentation;
    const GroebnerBasis gb = complete(p, CompletionOptions{8, true});
    REQUIRE(gb.certificates.size() == gb.elements.size());
    for (const Poly& r : p.relations) CHECK(gb.reduce(r).is_zero());
    for (std::size_t k = 0; k < gb.elements.size(); ++k) CHECK(certified(gb, k, p) == gb.elements[k]);
  }
}

TEST_CASE("braid relation does not terminate") {
  const Presentation p = parse("generators: a, b;\norder: a > b;\nrelations:\n a b a - b a b\n");
  const GroebnerBasis gb = complete(p, 6);
  CHECK_FALSE(gb.complete());
  CHECK_FALSE(gb.dropped.empty());
  CHECK_THROWS_AS(complete(p, 2), std::invalid_argument);
  CHECK_THROWS_AS(diamond(p.relations[0], p.relations[0], gb), std::logic_error);
}

TEST_CASE("parameter-dependent leading coefficient") {
  const Presentation p = parse("generators: x;\nparameters: a;\nrelations:\n a x x - x\n");
  CHECK_THROWS_AS(complete(p, 4), DegenerateLeadingCoefficient);
}

TEST_CASE("basis words") {
  const GroebnerBasis ax2 = complete(preset("A_x2").presentation, 4);
  const Signature& s = ax2.signature;
  std::vector<std::string> got;
  const BWEnumeration three = enumerate_bw(ax2, 3);
  for (const Word& w : three.words()) got.push_back(s.word_text(w));
  CHECK(got == std::vector<std::string>{"1", "x", "x*", "x x*", "x* x", "x x* x", "x* x x*"});

  // Brute force: filter all words by the leading-word subword test.
  const auto leads = ax2.leading_words();
  std::size_t count = 0;
  for (const Word& w : testing::all_words(s.letters(), 6)) {
    bool ok = true;
    for (const Word& l : leads) ok = ok && !w.contains(l);
    count += ok;
  }
  const BWEnumeration bw = enumerate_bw(ax2, 6);
  CHECK(bw.size() == count);
  for (std::size_t k = 1; k < bw.size(); ++k) CHECK(s.word_order()(bw.word(k), bw.word(k + 1)));
  for (const Word& w : bw.words()) {
    if (!w.empty()) CHECK(x2_classify(w).has_value());
  }

  Signature c;
  c.generators = {"x", "y"};
  const Letter desc[] = {Letter(0, true), Letter(1, true), Letter(0, false), Letter(1, false)};
  c.order = GenOrder::from_descending(2, desc);
  const Word xy = c.parse_word("x y");
  std::vector<std::string> unstarred;
  const BWEnumeration two = enumerate_bw(c, {xy}, 2);
  for (const Word& w : two.words()) {
    if (w.all_unstarred()) unstarred.push_back(c.word_text(w));
  }
  CHECK(unstarred == std::vector<std::string>{"1", "y", "x", "y y", "y x", "x x"});
}

TEST_CASE("diamond product") {
  const GroebnerBasis gb = complete(preset("A_x2").presentation, 4);
  const Signature& s = gb.signature;
  const WordOrder ord = s.word_order();
  CHECK(diamond(s.parse_poly("x"), s.parse_poly("x"), gb).is_zero());
  for (std::size_t m = 1; m < 4; ++m) {
    for (std::size_t n = 1; n < 4; ++n) {
      CHECK(diamond(Poly(ord, x2_word(X2Family::A, m)), Poly(ord, x2_word(X2Family::A, n)), gb) ==
            Poly(ord, x2_word(X2Family::A, m + n)));
    }
  }
  const Poly f = s.parse_poly("x x* + 2 x*");
  CHECK(diamond(f, Poly::constant(ord, 1), gb) == f);
  CHECK(diamond(Poly::constant(ord, 1), f, gb) == f);
}

TEST_CASE("ideal membership") {
  const Presentation p = preset("T3", Rational(1)).presentation;
  const GroebnerBasis gb = complete(p, 8);
  for (const Poly& r : p.relations) CHECK(ideal_member(r, gb).member);
  const GroebnerBasis ax2 = complete(preset("A_x2").presentation, 4);
  const MembershipResult x = ideal_member(ax2.signature.parse_poly("x"), ax2);
  CHECK_FALSE(x.member);
  CHECK(x.reliable);
}

TEST_CASE("random rewrite strategies agree") {
  std::mt19937_64 rng(4);
  for (const std::string& name : testing::corpus_names()) {
    CAPTURE(name);
    const GroebnerBasis gb = complete(preset(name, Rational(1)).presentation, 8);
    const BWEnumeration all = enumerate_bw(gb.signature, {}, 4);
    for (int t = 0; t < 25; ++t) {
      const Poly f = random_combination(all, gb.signature.word_order(), rng, 4);
      const Poly nf = gb.reduce(f);
      for (int k = 0; k < 4; ++k) CHECK(testing::random_reduce(f, gb.elements, rng) == nf);
    }
  }
}

TEST_CASE("basis words count the quotient") {
  const testing::ModP F(1000000009);
  for (const char* name : {"A_x2", "uea-heisenberg", "wick2", "double-c2", "monomial:xyx*"}) {
    CAPTURE(name);
    const GroebnerBasis gb = complete(preset(name, Rational(1)).presentation, 8);
    const auto dims = testing::quotient_dims_mod_p(gb.signature, gb.elements, 4, F);
    REQUIRE_FALSE(dims.empty());
    CHECK(dims == testing::bw_cumulative(enumerate_bw(gb, 4), 4));
  }
}
