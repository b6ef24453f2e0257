// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stargb/gram.hpp"
#include "stargb/presets.hpp"
#include "stargb/repr.hpp"
#include "stargb/starcheck.hpp"
#include "stargb/x2.hpp"
#include "support.hpp"

using namespace stargb;

namespace {

// The bases as printed, with "+ -" written as "-". One relation per line.
const char* kPrintedT3 =
    "generators: q1, q2;\n"
    "order: q2 > q1;\n"
    "parameters: alpha;\n"
    "relations:\n"
    "  q1^3 - q1,\n"
    "  -q2^2 q1 + 3 alpha q1^2 + 3 alpha q2^2 + alpha^3 + q1(-1 - 3 alpha^2) + q2(-1 - 3 alpha^2) + 3 alpha q1 q2 "
    "- q1 q2^2 - q1^2 q2 + 3 alpha q2 q1 - q2 q1^2 - q1 q2 q1 - q2 q1 q2,\n"
    "  q2^3 - q2,\n"
    "  -q2 q1 q2 q1^2 - alpha^3 + 9 alpha^5 - q1^2(-3 alpha - 37 alpha^3) - q2^2(3 alpha - 27 alpha^3) "
    "- q2(-1 + 6 alpha^2 + 27 alpha^4) - q1(18 alpha^2 + 30 alpha^4) - (-12 alpha - 45 alpha^3) q1 q2 "
    "- 27 alpha^2 q1 q2^2 - (1 + 30 alpha^2) q1^2 q2 + 9 alpha q1^2 q2^2 - (6 alpha - 18 alpha^3) q2 q1 "
    "- (1 + 3 alpha^2) q2 q1^2 - (-2 + 15 alpha^2) q1 q2 q1 + 3 alpha q1 q2 q1^2 + 3 alpha q1^2 q2 q1 "
    "- q1^2 q2 q1^2 - (-1 + 9 alpha^2) q2 q1 q2 + 6 alpha q1 q2 q1 q2 - q1^2 q2 q1 q2 - 3 alpha q2 q1 q2 q1 "
    "+ q1 q2 q1 q2 q1\n";

const char* kPrintedB4 =
    "generators: q1, q2, q3;\n"
    "order: q3 > q2 > q1;\n"
    "parameters: alpha;\n"
    "relations:\n"
    "  q1 q1 - q1,\n"
    "  q2 q2 - q2,\n"
    "  -q3 q2 - 2 q1 - 2 q2 - 2 q3 + alpha + 2 alpha q1 + 2 alpha q2 + 2 alpha q3 - alpha^2 - q1 q2 - q1 q3 "
    "- q2 q1 - q2 q3 - q3 q1,\n"
    "  q3 q3 - q3,\n"
    "  -q3 q1 q2 - 3 alpha + 5 alpha^2 - 2 alpha^3 + q2(6 - 10 alpha + 4 alpha^2) + q3(6 - 10 alpha + 4 alpha^2) "
    "+ q1(8 - 13 alpha + 5 alpha^2) + (3 - 2 alpha) q1 q2 + (6 - 4 alpha) q1 q3 + (6 - 4 alpha) q2 q1 "
    "+ (6 - 4 alpha) q2 q3 + (3 - 2 alpha) q3 q1 + q1 q2 q1 + q1 q2 q3 + q1 q3 q1 + q2 q1 q3 + q2 q3 q1\n";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Line {
  std::ostringstream detail;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    detail << "    " << (cond ? "ok   " : "FAIL ") << what << "\n";
    ok = ok && cond;
  }
  void note(const std::string& what) { detail << "    " << what << "\n"; }
};

int failures = 0;

void report(int n, const std::string& title, Line& l) {
  std::cout << "criterion " << n << ": " << (l.ok ? "PASS" : "FAIL") << "  " << title << "\n" << l.detail.str() << std::flush;
  failures += !l.ok;
}

std::set<std::string> leading_texts(const GroebnerBasis& gb) {
  std::set<std::string> out;
  for (const Word& w : gb.leading_words()) out.insert(gb.signature.word_text(w));
  return out;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ", ") + x;
  return "{" + out + "}";
}

bool all_members(const std::vector<Poly>& fs, const GroebnerBasis& gb) {
  for (const Poly& f : fs) {
    if (!ideal_member(f, gb).member) return false;
  }
  return true;
}

// Coefficient differences between printed and computed elements sharing a
// leading word, both made monic.
std::size_t coefficient_diff(Line& l, const Presentation& printed, const GroebnerBasis& gb) {
  std::size_t diffs = 0;
  const Signature& s = gb.signature;
  for (const Poly& raw : printed.relations) {
    const Poly p = raw.monic();
    for (const Poly& e : gb.elements) {
      if (e.leading_word() != p.leading_word()) continue;
      const Poly d = p - e.monic();
      for (const auto& [w, c] : d.terms()) {
        ++diffs;
        l.note("diff at " + s.word_text(p.leading_word()) + ": " + s.word_text(w) + " printed " +
               p.coefficient(w).text(s.parameter_name()) + ", computed " +
               e.monic().coefficient(w).text(s.parameter_name()));
      }
    }
  }
  return diffs;
}

void regression(Line& l, const std::string& name, const char* printed_text, const std::set<std::string>& expected,
                double budget) {
  const auto t0 = Clock::now();
  const GroebnerBasis gb = complete(preset(name).presentation, 8);
  const double secs = seconds_since(t0);
  l.require(secs < budget, name + " symbolic completion in " + std::to_string(secs) + " s");
  l.require(gb.complete(), name + " status " + to_string(gb.status));
  l.require(leading_texts(gb) == expected, name + " leading words " + join(leading_texts(gb)));

  const Presentation printed = parse_presentation(printed_text);
  l.note("coefficient differences against the printed basis: " + std::to_string(coefficient_diff(l, printed, gb)));
  for (int a : {0, 1, 2}) {
    const GroebnerBasis computed = complete(preset(name, Rational(a)).presentation, 8);
    const Presentation p = printed.instantiate(Rational(a));
    const GroebnerBasis printed_gb = complete(p, 10);
    const bool fwd = all_members(p.relations, computed);
    const bool back = printed_gb.complete() && all_members(computed.elements, printed_gb);
    l.require(fwd && back, name + " alpha=" + std::to_string(a) + ": printed in computed ideal " + (fwd ? "yes" : "no") +
                               ", computed in printed ideal " + (back ? "yes" : "no"));
  }
}

struct Algebra {
  std::string label;
  Presentation presentation;
};

std::vector<Algebra> corpus() {
  std::vector<Algebra> out;
  auto add = [&](const std::string& name, std::optional<Rational> a = std::nullopt) {
    out.push_back({name + (a ? "(" + a->get_str() + ")" : ""), preset(name, a).presentation});
  };
  for (const char* m : {"A_x2", "monomial:xyx*", "monomial:xx*x", "monomial:xy,yx*", "monomial:xyx*,y^2", "monomial:x^3"}) {
    add(m);
  }
  add("uea-heisenberg");
  add("uea-so3");
  add("wick2");
  add("wick3");
  add("double-c2");
  add("Q4", Rational(0));
  add("Q4", Rational(1));
  add("T3double", Rational(1));
  return out;
}

void criterion1() {
  Line l;
  regression(l, "T3", kPrintedT3, {"q1 q1 q1", "q2 q2 q2", "q2 q2 q1", "q2 q1 q2 q1 q1"}, 60);
  // Diagnosis: compare the printed set with the basis of q3^3 = 0 in place of q3^3 = q3.
  const GroebnerBasis variant = complete(parse_presentation("generators: q1, q2;\norder: q2 > q1;\nparameters: alpha;\n"
                                                            "relations:\n q1^3 - q1, q2^3 - q2, (alpha - q1 - q2)^3\n"),
                                         8);
  Line scratch;
  const std::size_t d = coefficient_diff(scratch, parse_presentation(kPrintedT3), variant);
  l.note("coefficient differences against the basis with (alpha - q1 - q2)^3 = 0: " + std::to_string(d) +
         (variant.elements.size() == 4 ? "" : " (basis size differs)"));
  report(1, "T3 regression", l);
}

void criterion2() {
  Line l;
  regression(l, "B4", kPrintedB4, {"q1 q1", "q2 q2", "q3 q3", "q3 q2", "q3 q1 q2"}, 60);
  for (int a : {0, 1, 2}) {
    const GroebnerBasis q4 = complete(preset("Q4", Rational(a)).presentation, 8);
    l.require(q4.complete() && check_stardouble(q4).verdict == Verdict::Pass,
              "Q4 alpha=" + std::to_string(a) + " passes the *-double split");
  }
  const GroebnerBasis q4s = complete(preset("Q4").presentation, 8);
  l.require(q4s.complete() && check_stardouble(q4s).verdict == Verdict::Pass, "Q4 symbolic passes the *-double split");
  report(2, "B4/Q4 regression", l);
}

void criterion3() {
  Line l;
  std::size_t counterexamples = 0, premises = 0;
  for (const Algebra& a : corpus()) {
    const GroebnerBasis gb = complete(a.presentation, 8);
    if (!gb.complete()) {
      l.require(false, a.label + " did not complete");
      continue;
    }
    const bool closed = gb.star_closed();
    const bool cor = check_corollary_simple(gb).passed(), app = check_strictly_appropriate(gb).passed();
    const bool kir = check_theorem_kir(gb).passed(), dbl = check_stardouble(gb).passed();
    std::string line = a.label + ":";
    line += std::string(" corollary=") + (cor ? "pass" : "fail") + " appropriate=" + (app ? "pass" : "fail") +
            " kir=" + (kir ? "pass" : "fail") + " stardouble=" + (dbl ? "pass" : "fail") +
            " S*=S " + (closed ? "yes" : "no");
    if (cor) {
      ++premises;
      counterexamples += !app;
    }
    for (std::size_t cap : {6, 8}) {
      const CheckReport ne = check_nonexpanding_bounded(gb, cap);
      line += " ne@" + std::to_string(cap) + "=" + to_string(ne.verdict);
      for (bool premise : {app && closed, kir && closed, dbl}) {
        if (!premise) continue;
        ++premises;
        counterexamples += !ne.passed();
      }
    }
    l.note(line);
  }
  l.require(counterexamples == 0, std::to_string(premises) + " implication instances, " +
                                      std::to_string(counterexamples) + " counterexamples");
  report(3, "sufficient conditions imply non-expanding", l);
}

void criterion4() {
  Line l;
  for (const auto& [name, n] : std::vector<std::pair<std::string, std::size_t>>{{"A_x2", 16}, {"uea-heisenberg", 12}}) {
    const auto t0 = Clock::now();
    const GroebnerBasis gb = complete(preset(name).presentation, 8);
    BWEnumeration bw;
    for (std::size_t cap = 0; bw.size() < n; ++cap) bw = enumerate_bw(gb, cap);
    const WeightChoice wc = choose_weights(gb, bw, n);
    const PositivityCertificate cert = verify_positive(wc.gram);
    const double secs = seconds_since(t0);
    bool ge1 = cert.minors.size() == n;
    for (const Rational& d : cert.minors) ge1 = ge1 && d >= 1;
    l.require(cert.positive && ge1, name + " N=" + std::to_string(n) + ": all minors >= 1");
    l.require(secs < 120, name + " in " + std::to_string(secs) + " s");
  }
  report(4, "Gram construction", l);
}

void criterion5() {
  Line l;
  std::mt19937_64 rng(2024);
  for (const Algebra& a : corpus()) {
    const GroebnerBasis gb = complete(a.presentation, 8);
    const WordOrder ord = gb.signature.word_order();
    const BWEnumeration bw = enumerate_bw(gb, 6);
    std::size_t found = 0, samples = 0;
    while (samples < 200) {
      const Poly f = random_combination(bw, ord, rng);
      if (gb.reduce(f).is_zero()) continue;
      ++samples;
      found += faithfulness_probe(f, gb, bw).found;
    }
    l.require(found == samples, a.label + ": " + std::to_string(found) + "/" + std::to_string(samples) + " witnesses");

    // Adjoint identity on the largest region of at most 40 words.
    std::size_t cap = 0;
    while (cap < 6 && enumerate_bw(gb, cap + 1).size() <= 40) ++cap;
    const bool strict = check_nonexpanding_bounded(gb, cap).passed();
    const BWEnumeration region = enumerate_bw(gb, cap);
    const WeightChoice wc = choose_weights(gb, region, region.size());
    std::size_t passed = 0;
    for (Letter x : gb.signature.letters()) passed += adjoint_check(Poly(ord, Word{x}), gb, wc.gram).passed();
    const std::string msg = a.label + ": adjoint identity for " + std::to_string(passed) + "/" +
                            std::to_string(gb.signature.letters().size()) + " letters up to length " + std::to_string(cap);
    if (strict) {
      l.require(passed == gb.signature.letters().size(), msg);
    } else {
      l.note("not strictly non-expanding, outside the theorem: " + msg);
    }
  }
  report(5, "faithfulness and adjoint identity", l);
}

void criterion6() {
  Line l;
  const MomentModel model = moment_weights({Rational(1)}, 30);
  bool exact = true;
  for (std::size_t m = 0; m <= 30; ++m) exact = exact && model.moment(m) == Rational(1, m + 2);
  l.require(exact, "alpha_m = 1/(m+2) for m <= 30");
  const StudyReport blocks = x2_block_structure(4, model, 8);
  for (const char* c : {"hankel_A_positive", "hankel_A_shifted_positive", "gram_block_diagonal", "gram_blocks_hankel",
                        "product_table", "cross_family_not_positive"}) {
    l.require(blocks.check(c), c);
  }
  const StudyReport bounded = x2_boundedness(model, 4, 10);
  for (const auto& [name, ok] : bounded.checks) l.require(ok, name);
  l.note("truncated norm " + bounded.data.value("norm", nlohmann::ordered_json()).dump());
  report(6, "A_x2 boundedness", l);
}

void criterion7() {
  Line l;
  std::mt19937_64 rng(7);
  const testing::ModP p1(1000000009), p2(998244353);
  for (const Algebra& a : corpus()) {
    const GroebnerBasis gb = complete(a.presentation, 8);
    const WordOrder ord = gb.signature.word_order();
    const std::vector<Letter> letters = gb.signature.letters();
    std::uniform_int_distribution<std::size_t> len(0, 5), pick(0, letters.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::size_t agree = 0;
    for (int t = 0; t < 1000; ++t) {
      Poly f(ord);
      for (int k = 0; k < 3; ++k) {
        Word w;
        for (std::size_t n = len(rng); n > 0; --n) w.push_back(letters[pick(rng)]);
        f.add_term(w, Scalar(GaussRational(coeff(rng), coeff(rng))));
      }
      agree += testing::random_reduce(f, gb.elements, rng) == gb.reduce(f);
    }
    l.require(agree == 1000, a.label + ": " + std::to_string(agree) + "/1000 strategies agree");

    const auto t0 = Clock::now();
    const std::vector<std::size_t> bw = testing::bw_cumulative(enumerate_bw(gb, 5), 5);
    bool match = true;
    for (const testing::ModP* F : {&p1, &p2}) {
      const auto dims = testing::quotient_dims_mod_p(gb.signature, a.presentation.relations, 5, *F);
      match = match && dims == bw;
    }
    std::string counts;
    for (std::size_t d : bw) counts += " " + std::to_string(d);
    l.require(match, a.label + ": |BW<=d| =" + counts + " matches the rank oracle mod two primes (" +
                         std::to_string(seconds_since(t0)) + " s)");
  }
  report(7, "confluence and rank oracle", l);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      std::cout << "criterion: FAIL  exception: " << e.what() << "\n";
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "all criteria pass" : "failed criteria: " + std::to_string(failures)) << "\n";
  return failures;
}
