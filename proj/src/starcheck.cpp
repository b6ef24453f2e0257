#include "stargb/starcheck.hpp"

#include <algorithm>

namespace stargb {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::PassUpToCap: return "pass_up_to_cap";
  }
  return "?";
}

const Word* Witness::word(std::string_view name) const {
  for (const auto& [n, w] : words) {
    if (n == name) return &w;
  }
  return nullptr;
}

std::optional<Verdict> CheckReport::part(std::string_view name) const {
  for (const auto& [n, v] : parts) {
    if (n == name) return v;
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, bool>> shrinking_split(const Word& w) {
  // d* d as a prefix (resp. suffix) is a positive word of length 2|d|.
  for (std::size_t d = 1; 2 * d <= w.size(); ++d) {
    if (is_positive(w.prefix(2 * d))) return std::make_pair(d, true);
    if (is_positive(w.suffix(2 * d))) return std::make_pair(d, false);
  }
  return std::nullopt;
}

bool is_unshrinkable(const Word& w) { return !shrinking_split(w).has_value(); }

namespace {

void add_fail(CheckReport& r, Witness w) {
  r.verdict = Verdict::Fail;
  r.witnesses.push_back(std::move(w));
}

// Finalizes the verdict: a passing check on a truncated basis only holds up
// to the cap.
void settle(CheckReport& r, const GroebnerBasis& gb) {
  if (r.verdict == Verdict::Pass && !gb.complete()) {
    r.verdict = Verdict::PassUpToCap;
    r.cap = gb.degree_cap;
    r.notes.push_back("basis is truncated; closure only holds up to the cap");
  }
}

// Non-fatal: the sufficient conditions are syntactic, and the implications
// to non-expanding are stated together with S* = S. Only noted.
void require_symmetric(CheckReport& r, const GroebnerBasis& gb, bool fatal) {
  CheckReport sym = is_symmetric(gb);
  if (sym.verdict == Verdict::Fail && !fatal) {
    r.notes.push_back("precondition not met: the ideal is not *-invariant (" + std::to_string(sym.witnesses.size()) +
                      " relations)");
  } else if (sym.verdict == Verdict::Fail) {
    for (auto w : sym.witnesses) {
      w.kind = "precondition: " + w.kind;
      add_fail(r, std::move(w));
    }
  }
}

void require_reduced(CheckReport& r, const GroebnerBasis& gb) {
  const auto leads = gb.leading_words();
  for (std::size_t s = 0; s < gb.elements.size(); ++s) {
    for (const auto& [w, c] : gb.elements[s].terms()) {
      if (w == gb.elements[s].leading_word()) continue;
      for (std::size_t t = 0; t < leads.size(); ++t) {
        if (w.contains(leads[t])) {
          add_fail(r, {"precondition: not reduced", {s, t}, {{"u", w}, {"lead", leads[t]}}, {}});
        }
      }
    }
  }
}

void check_top_words_unshrinkable(CheckReport& r, const GroebnerBasis& gb) {
  for (std::size_t s = 0; s < gb.elements.size(); ++s) {
    for (const Word& u : gb.elements[s].top_words()) {
      if (auto split = shrinking_split(u)) {
        add_fail(r, {"top word shrinkable", {s}, {{"u", u}, {"d", split->second ? u.sub(split->first, split->first) : u.suffix(split->first)}},
                     {split->second ? 0u : 1u}});
      }
    }
  }
}

// Proper overlap: a nonempty suffix of `left` equals a prefix of `right`,
// leaving both remainders nonempty.
std::vector<std::size_t> proper_overlaps(const Word& left, const Word& right) {
  std::vector<std::size_t> out;
  for (std::size_t len = 1; len < left.size() && len < right.size(); ++len) {
    if (left.suffix(len) == right.prefix(len)) out.push_back(len);
  }
  return out;
}

std::size_t common_prefix(const Word& a, const Word& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return k;
}

}  // namespace

CheckReport is_symmetric(const GroebnerBasis& gb) {
  CheckReport r;
  r.condition = "symmetric";
  for (std::size_t s = 0; s < gb.elements.size(); ++s) {
    Poly residue = gb.reduce(gb.elements[s].star());
    if (!residue.is_zero()) {
      add_fail(r, {"star of relation not in ideal", {s}, {{"residue_lead", residue.leading_word()}}, {}});
    }
  }
  if (r.verdict == Verdict::Pass && gb.star_closed()) r.notes.push_back("S* = S");
  settle(r, gb);
  return r;
}

CheckReport check_strictly_appropriate(const GroebnerBasis& gb) {
  CheckReport r;
  r.condition = "strictly_appropriate";
  require_symmetric(r, gb, false);
  require_reduced(r, gb);
  check_top_words_unshrinkable(r, gb);

  const auto& S = gb.elements;
  std::vector<bool> has_other_top(S.size());
  for (std::size_t k = 0; k < S.size(); ++k) has_other_top[k] = S[k].top_words().size() > 1;

  for (std::size_t s = 0; s < S.size(); ++s) {
    const Word& lead = S[s].leading_word();
    for (const Word& u : S[s].top_words()) {
      if (u == lead) continue;
      const std::size_t shared = common_prefix(u, lead);
      if (shared == 0) continue;
      for (std::size_t s1 = 0; s1 < S.size(); ++s1) {
        if (!has_other_top[s1]) continue;
        const Word& lead1 = S[s1].leading_word();
        if (auto pos = lead1.find(u)) {
          add_fail(r, {"leading word contains top word", {s, s1}, {{"u", u}, {"lead1", lead1}}, {*pos}});
        }
        // lead1 = d1 a d2 and u = a d2 d3 with d1, d2, d3 nonempty.
        for (std::size_t alen = 1; alen <= shared; ++alen) {
          const Word a = u.prefix(alen);
          for (std::size_t pos : lead1.occurrences(a)) {
            if (pos == 0) continue;
            const std::size_t d2len = lead1.size() - pos - alen;
            if (d2len == 0 || alen + d2len >= u.size()) continue;
            const Word d2 = lead1.suffix(d2len);
            if (u.sub(alen, d2len) != d2) continue;
            add_fail(r, {"forbidden overlap",
                         {s, s1},
                         {{"u", u},
                          {"a", a},
                          {"b", lead.suffix(lead.size() - alen)},
                          {"c", u.suffix(u.size() - alen)},
                          {"d1", lead1.prefix(pos)},
                          {"d2", d2},
                          {"d3", u.suffix(u.size() - alen - d2len)}},
                         {pos}});
          }
        }
      }
    }
  }
  settle(r, gb);
  return r;
}

CheckReport check_corollary_simple(const GroebnerBasis& gb) {
  CheckReport r;
  r.condition = "corollary";
  require_symmetric(r, gb, false);
  check_top_words_unshrinkable(r, gb);
  for (std::size_t s = 0; s < gb.elements.size(); ++s) {
    const Word& lead = gb.elements[s].leading_word();
    for (const Word& u : gb.elements[s].top_words()) {
      if (u == lead || u.empty()) continue;
      if (u[0] == lead[0]) add_fail(r, {"same first letter", {s}, {{"u", u}, {"lead", lead}}, {}});
    }
  }
  settle(r, gb);
  return r;
}

CheckReport check_theorem_kir(const GroebnerBasis& gb) {
  CheckReport r;
  r.condition = "kir";
  require_symmetric(r, gb, false);
  check_top_words_unshrinkable(r, gb);
  const auto& S = gb.elements;
  for (std::size_t s1 = 0; s1 < S.size(); ++s1) {
    const Word& lead1 = S[s1].leading_word();
    for (const Word& u : S[s1].top_words()) {
      if (u == lead1) continue;
      for (std::size_t s2 = 0; s2 < S.size(); ++s2) {
        const Word& lead2 = S[s2].leading_word();
        for (std::size_t len : proper_overlaps(u, lead2)) {
          add_fail(r, {"top word overlaps leading word", {s1, s2}, {{"u", u}, {"lead2", lead2}}, {len, 0}});
        }
        for (std::size_t len : proper_overlaps(lead2, u)) {
          add_fail(r, {"leading word overlaps top word", {s1, s2}, {{"u", u}, {"lead2", lead2}}, {len, 1}});
        }
      }
    }
  }
  settle(r, gb);
  return r;
}

CheckReport check_stardouble(const GroebnerBasis& gb) {
  CheckReport r;
  r.condition = "stardouble";
  require_symmetric(r, gb, true);
  for (std::size_t s = 0; s < gb.elements.size(); ++s) {
    const Word& lead = gb.elements[s].leading_word();
    const bool in_g = lead.all_unstarred();
    const bool in_gstar = lead.all_starred();
    if (!in_g && !in_gstar) {
      add_fail(r, {"leading word mixes starred and unstarred letters", {s}, {{"lead", lead}}, {}});
      continue;
    }
    for (const Word& u : gb.elements[s].top_words()) {
      const bool same = (in_g && u.all_unstarred()) || (in_gstar && u.all_starred());
      if (!same) add_fail(r, {"top word outside the leading word's semigroup", {s}, {{"u", u}, {"lead", lead}}, {}});
    }
  }
  settle(r, gb);
  return r;
}

bool nonexpanding_violation(const GroebnerBasis& gb, const Word& u, const Word& v, const Word& w) {
  if (u == v) return false;
  const WordOrder ord = gb.signature.word_order();
  Poly nf = gb.reduce(Poly(ord, u * star_word(v)));
  if (!nf.contains(w * star_word(w))) return false;
  return !ord(w, ord.max(u, v));
}

CheckReport check_nonexpanding_bounded(const GroebnerBasis& gb, std::size_t cap) {
  CheckReport r;
  r.condition = "nonexpanding";
  r.cap = cap;
  const WordOrder ord = gb.signature.word_order();
  const auto leads = gb.leading_words();
  const BWEnumeration bw = enumerate_bw(gb, cap);
  auto irreducible = [&](const Word& w) {
    return std::none_of(leads.begin(), leads.end(), [&](const Word& l) { return w.contains(l); });
  };
  // Some leading word straddles the junction of u v*.
  auto crosses = [&](const Word& u, const Word& v) {
    for (const Word& l : leads) {
      for (std::size_t s = 1; s < l.size(); ++s) {
        if (s > u.size() || l.size() - s > v.size()) continue;
        bool match = true;
        for (std::size_t t = 0; t < s && match; ++t) match = u[u.size() - s + t] == l[t];
        for (std::size_t t = 0; s + t < l.size() && match; ++t) match = v[v.size() - 1 - t].star() == l[s + t];
        if (match) return true;
      }
    }
    return false;
  };

  std::vector<std::vector<const Word*>> by_len(cap + 1);
  for (const Word& w : bw.words()) by_len[w.size()].push_back(&w);

  // If |u| != |v|, every w w* in R_S(u v*) has 2|w| <= |u| + |v| < 2 max(|u|, |v|),
  // so only equal lengths can fail. There, an irreducible u v* is positive only
  // when u = v.
  Verdict nonexp = Verdict::Pass;
  for (std::size_t len = 1; 2 * len <= cap; ++len) {
    std::vector<bool> star_irreducible;
    for (const Word* v : by_len[len]) star_irreducible.push_back(irreducible(star_word(*v)));
    for (const Word* u : by_len[len]) {
      for (std::size_t k = 0; k < by_len[len].size(); ++k) {
        const Word* v = by_len[len][k];
        if (*u == *v || (star_irreducible[k] && !crosses(*u, *v))) continue;
        const Word& top = ord.max(*u, *v);
        const Poly nf = gb.reduce(Poly(ord, *u * star_word(*v)));
        for (const auto& [x, c] : nf.terms()) {
          if (x.size() != 2 * len) continue;
          auto h = half_word(x);
          if (h && !ord(*h, top)) {
            nonexp = Verdict::Fail;
            add_fail(r, {"positive word not below max(u, v)", {}, {{"u", *u}, {"v", *v}, {"w", *h}}, {}});
          }
        }
      }
    }
  }

  Verdict strict = Verdict::Pass;
  for (const Word& d : bw.words()) {
    if (2 * d.size() > cap) continue;
    if (!irreducible(d * star_word(d))) {
      strict = Verdict::Fail;
      add_fail(r, {"d d* not a basis word", {}, {{"d", d}}, {}});
    }
  }
  if (!gb.complete()) r.notes.push_back("basis is truncated; normal forms only trusted up to the cap");
  r.parts = {{"nonexpanding", nonexp == Verdict::Pass ? Verdict::PassUpToCap : Verdict::Fail},
             {"strict", strict == Verdict::Pass ? Verdict::PassUpToCap : Verdict::Fail}};
  if (r.verdict != Verdict::Fail) r.verdict = Verdict::PassUpToCap;
  return r;
}

nlohmann::ordered_json report_to_json(const CheckReport& r, const Signature& sig) {
  nlohmann::ordered_json j;
  j["condition"] = r.condition;
  j["verdict"] = to_string(r.verdict);
  j["cap"] = r.cap ? nlohmann::ordered_json(*r.cap) : nlohmann::ordered_json(nullptr);
  if (!r.parts.empty()) {
    nlohmann::ordered_json parts = nlohmann::ordered_json::object();
    for (const auto& [n, v] : r.parts) parts[n] = to_string(v);
    j["parts"] = parts;
  }
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json jw;
    jw["kind"] = w.kind;
    jw["elements"] = w.elements;
    nlohmann::ordered_json words = nlohmann::ordered_json::object();
    for (const auto& [n, word] : w.words) words[n] = sig.word_text(word);
    jw["words"] = words;
    jw["positions"] = w.positions;
    ws.push_back(jw);
  }
  j["witnesses"] = ws;
  j["notes"] = r.notes;
  return j;
}

}  // namespace stargb
