#include <doctest.h>

#include <random>

#include "stargb/presets.hpp"
#include "stargb/starcheck.hpp"
#include "support.hpp"

using namespace stargb;

namespace {

GroebnerBasis basis(const char* text, std::size_t cap = 6) { return complete(parse_presentation(text), cap); }

bool has_kind(const CheckReport& r, const std::string& kind) {
  for (const auto& w : r.witnesses) {
    if (w.kind == kind) return true;
  }
  return false;
}

bool shrinks_by(const Word& u, const Word& d) {
  const Word dd = star_word(d) * d;
  return !d.empty() && (u.starts_with(dd) || u.ends_with(dd));
}

bool overlaps(const Word& a, const Word& b) {
  for (std::size_t len = 1; len < std::min(a.size(), b.size()); ++len) {
    if (a.suffix(len) == b.prefix(len)) return true;
  }
  return false;
}

// Re-checks a witness from its named words alone.
void revalidate(const CheckReport& r, const GroebnerBasis& gb) {
  for (const Witness& w : r.witnesses) {
    CAPTURE(w.kind);
    if (w.kind == "top word shrinkable") {
      CHECK(shrinks_by(*w.word("u"), *w.word("d")));
    } else if (w.kind == "same first letter") {
      CHECK((*w.word("u"))[0] == (*w.word("lead"))[0]);
    } else if (w.kind == "top word overlaps leading word") {
      CHECK(overlaps(*w.word("u"), *w.word("lead2")));
    } else if (w.kind == "leading word overlaps top word") {
      CHECK(overlaps(*w.word("lead2"), *w.word("u")));
    } else if (w.kind == "leading word contains top word") {
      CHECK(w.word("lead1")->contains(*w.word("u")));
    } else if (w.kind == "forbidden overlap") {
      const Word& a = *w.word("a");
      CHECK(gb.elements[w.elements[1]].leading_word() == *w.word("d1") * a * *w.word("d2"));
      CHECK(*w.word("u") == a * *w.word("d2") * *w.word("d3"));
    } else if (w.kind == "positive word not below max(u, v)") {
      CHECK(nonexpanding_violation(gb, *w.word("u"), *w.word("v"), *w.word("w")));
    } else if (w.kind == "d d* not a basis word") {
      const Word& d = *w.word("d");
      const Word dd = d * star_word(d);
      CHECK(gb.reduce(Poly(gb.signature.word_order(), dd)) != Poly(gb.signature.word_order(), dd));
    } else if (w.kind == "leading word mixes starred and unstarred letters") {
      const Word& l = *w.word("lead");
      CHECK_FALSE((l.all_starred() || l.all_unstarred()));
    }
  }
}

}  // namespace

TEST_CASE("unshrinkable words") {
  const Signature s = preset("A_x2").presentation.signature;
  CHECK(is_unshrinkable(s.parse_word("x x")));
  CHECK_FALSE(is_unshrinkable(s.parse_word("x x* x")));
  CHECK(is_unshrinkable(s.parse_word("x")));
  CHECK(is_unshrinkable(Word{}));
  const auto split = shrinking_split(s.parse_word("x x* x"));
  REQUIRE(split.has_value());
  CHECK(split->first == 1);
}

TEST_CASE("unshrinkable is star symmetric") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint16_t> code(0, 3);
  std::uniform_int_distribution<std::size_t> len(0, 8);
  for (int t = 0; t < 3000; ++t) {
    Word w;
    for (std::size_t k = len(rng); k > 0; --k) w.push_back(Letter::from_code(code(rng)));
    CHECK(is_unshrinkable(w) == is_unshrinkable(star_word(w)));
    // Brute force over all splits.
    bool shrinkable = false;
    for (std::size_t l = 1; 2 * l <= w.size(); ++l) {
      const Word pre = w.prefix(2 * l), suf = w.suffix(2 * l);
      shrinkable = shrinkable || pre == star_word(pre.suffix(l)) * pre.suffix(l) ||
                   suf == star_word(suf.suffix(l)) * suf.suffix(l);
    }
    CHECK(is_unshrinkable(w) == !shrinkable);
  }
}

TEST_CASE("symmetric sets") {
  const GroebnerBasis ax2 = complete(preset("A_x2").presentation, 6);
  const CheckReport a = is_symmetric(ax2);
  CHECK(a.verdict == Verdict::Pass);
  CHECK(ax2.star_closed());
  CHECK(is_symmetric(complete(preset("uea-heisenberg").presentation, 6)).verdict == Verdict::Pass);
  const CheckReport c = is_symmetric(basis("generators: x, y;\norder: x > y;\nrelations:\n x y - y x\n"));
  CHECK(c.verdict == Verdict::Fail);
  CHECK_FALSE(c.witnesses.empty());
  CHECK(is_symmetric(basis("generators: a, b;\norder: a > b;\nrelations:\n a b a - b a b\n", 5)).verdict ==
        Verdict::Fail);
}

TEST_CASE("strictly appropriate") {
  for (const char* name : {"wick2", "uea-heisenberg", "uea-so3", "A_x2", "monomial:xyx*"}) {
    CAPTURE(name);
    CHECK(check_strictly_appropriate(complete(preset(name).presentation, 8)).verdict == Verdict::Pass);
  }
  const GroebnerBasis gb = basis("generators: x;\nrelations:\n x* x - x x*\n");
  const CheckReport r = check_strictly_appropriate(gb);
  CHECK(r.verdict == Verdict::Fail);
  REQUIRE(has_kind(r, "top word shrinkable"));
  bool found = false;
  for (const auto& w : r.witnesses) {
    found = found || (*w.word("u") == gb.signature.parse_word("x* x") && *w.word("d") == gb.signature.parse_word("x"));
  }
  CHECK(found);
  revalidate(r, gb);
}

TEST_CASE("corollary test") {
  for (const char* name : {"uea-heisenberg", "uea-so3", "wick2"}) {
    CAPTURE(name);
    CHECK(check_corollary_simple(complete(preset(name).presentation, 8)).verdict == Verdict::Pass);
  }
  const GroebnerBasis gb = basis("generators: x, y;\nrelations:\n x* x y - x* y x, y* x* x - x* y* x\n");
  const CheckReport r = check_corollary_simple(gb);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(has_kind(r, "same first letter"));
  revalidate(r, gb);
}

TEST_CASE("kir conditions") {
  CHECK(check_theorem_kir(complete(preset("monomial:xyx*,y^2").presentation, 8)).verdict == Verdict::Pass);
  const GroebnerBasis x2 = basis_from_relations(parse_presentation("generators: x;\nrelations:\n x x\n"), 4);
  const CheckReport solo = check_theorem_kir(x2);
  CHECK(solo.verdict == Verdict::Pass);
  CHECK_FALSE(solo.notes.empty());
  const GroebnerBasis t3 = complete(preset("T3").presentation, 8);
  const CheckReport r = check_theorem_kir(t3);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(has_kind(r, "top word overlaps leading word"));
  revalidate(r, t3);
}

TEST_CASE("*-double split") {
  const GroebnerBasis c2 = complete(preset("double-c2").presentation, 8);
  CHECK(check_stardouble(c2).verdict == Verdict::Pass);
  const GroebnerBasis q4 = complete(preset("Q4", Rational(1)).presentation, 8);
  CHECK(check_stardouble(q4).verdict == Verdict::Pass);
  const GroebnerBasis mixed = basis("generators: x;\nrelations:\n x* x - 1\n");
  const CheckReport r = check_stardouble(mixed);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(has_kind(r, "leading word mixes starred and unstarred letters"));
  revalidate(r, mixed);
}

TEST_CASE("bounded non-expanding") {
  const GroebnerBasis ax2 = complete(preset("A_x2").presentation, 8);
  const CheckReport a = check_nonexpanding_bounded(ax2, 8);
  CHECK(a.verdict == Verdict::PassUpToCap);
  CHECK(a.cap == 8u);

  Presentation empty = parse_presentation("generators: x, y;\nrelations:\n x - x\n");
  empty.relations.clear();
  const CheckReport e = check_nonexpanding_bounded(complete(empty, 4), 4);
  CHECK(e.verdict == Verdict::PassUpToCap);

  // With y* > x* but x > y, R(x y*) = x x* and x = max(x, y).
  const GroebnerBasis bad = basis("generators: x, y;\norder: y* > x* > x > y;\nrelations:\n x y* - x x*\n");
  const CheckReport r = check_nonexpanding_bounded(bad, 4);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.part("nonexpanding") == Verdict::Fail);
  const Signature& s = bad.signature;
  CHECK(nonexpanding_violation(bad, s.parse_word("x"), s.parse_word("y"), s.parse_word("x")));
  revalidate(r, bad);
}

TEST_CASE("non-expanding scan agrees with the definition") {
  // Direct quantification over all pairs, no pruning.
  for (const char* name : {"A_x2", "wick2", "uea-heisenberg", "double-c2", "monomial:xx*x"}) {
    CAPTURE(name);
    const GroebnerBasis gb = complete(preset(name).presentation, 8);
    const std::size_t cap = 4;
    const BWEnumeration bw = enumerate_bw(gb, cap);
    const WordOrder ord = gb.signature.word_order();
    bool violated = false;
    for (const Word& u : bw.words()) {
      for (const Word& v : bw.words()) {
        if (u == v || u.size() + v.size() > cap) continue;
        const Poly r = gb.reduce(Poly(ord, u * star_word(v)));
        for (const auto& [w, c] : r.terms()) {
          const auto h = half_word(w);
          if (h && !ord(*h, ord.max(u, v))) violated = true;
        }
      }
    }
    const CheckReport rep = check_nonexpanding_bounded(gb, cap);
    CHECK((rep.part("nonexpanding") == Verdict::Fail) == violated);
    revalidate(rep, gb);
  }
}

TEST_CASE("sufficient conditions imply non-expanding on the corpus") {
  for (const std::string& name : testing::corpus_names()) {
    CAPTURE(name);
    const GroebnerBasis gb = complete(preset(name, Rational(1)).presentation, 8);
    const bool closed = gb.star_closed();
    const CheckReport cor = check_corollary_simple(gb), app = check_strictly_appropriate(gb);
    const CheckReport kir = check_theorem_kir(gb), dbl = check_stardouble(gb);
    const bool ne = check_nonexpanding_bounded(gb, 6).passed();
    if (cor.passed()) CHECK(app.passed());
    if (app.passed() && closed) CHECK(ne);
    if (kir.passed() && closed) CHECK(ne);
    if (dbl.passed()) CHECK(ne);
    for (const CheckReport* r : {&cor, &app, &kir, &dbl}) revalidate(*r, gb);
  }
}

TEST_CASE("report json") {
  const GroebnerBasis gb = basis("generators: x;\nrelations:\n x* x - x x*\n");
  const auto j = report_to_json(check_strictly_appropriate(gb), gb.signature);
  CHECK(j["verdict"] == "fail");
  CHECK(j["witnesses"].size() >= 1);
  CHECK(j["witnesses"][0]["words"].is_object());
}
