#pragma once

// Independent oracles for the tests: a rewriter with random strategy, a
// brute-force word filter and a modular rank count of quotient dimensions.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "stargb/groebner.hpp"
#include "stargb/presets.hpp"

namespace testing {

using namespace stargb;

/// Rewrites a random reducible word at a random occurrence of a random
/// applicable relation until nothing is reducible.
inline Poly random_reduce(Poly f, const std::vector<Poly>& rels, std::mt19937_64& rng) {
  std::vector<Poly> monic;
  for (const Poly& s : rels) monic.push_back(s.monic());
  while (true) {
    struct Site {
      Word w;
      std::size_t rel;
      std::size_t pos;
    };
    std::vector<Site> sites;
    for (const auto& [w, c] : f.terms()) {
      for (std::size_t r = 0; r < monic.size(); ++r) {
        for (std::size_t pos : w.occurrences(monic[r].leading_word())) sites.push_back({w, r, pos});
      }
    }
    if (sites.empty()) return f;
    const Site& s = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    const Scalar c = f.coefficient(s.w);
    const std::size_t len = monic[s.rel].leading_word().size();
    f.add_scaled(-c, s.w.prefix(s.pos), monic[s.rel], s.w.suffix(s.w.size() - s.pos - len));
  }
}

/// Every word over `letters` of length <= cap.
inline std::vector<Word> all_words(const std::vector<Letter>& letters, std::size_t cap) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= cap; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (Letter l : letters) out.push_back(out[k] * Word{l});
    }
    begin = end;
  }
  return out;
}

/// Reduction of a Gaussian rational modulo p with p = 1 mod 4, sending i to a
/// fixed square root of -1.
class ModP {
 public:
  explicit ModP(std::uint64_t p) : p_(p) {
    for (std::uint64_t g = 2;; ++g) {
      const std::uint64_t r = pow(g, (p - 1) / 4);
      if (mul(r, r) == p - 1) {
        i_ = r;
        break;
      }
    }
  }
  std::uint64_t p() const { return p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return static_cast<unsigned __int128>(a) * b % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (a %= p_; e; e >>= 1, a = mul(a, a)) {
      if (e & 1) r = mul(r, a);
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }
  /// nullopt when p divides a denominator.
  std::optional<std::uint64_t> of(const Rational& q) const {
    const mpz_class pp(std::to_string(p_));
    const mpz_class den = q.get_den() % pp;
    if (den == 0) return std::nullopt;
    mpz_class num = q.get_num() % pp;
    if (num < 0) num += pp;
    return mul(num.get_ui(), inv(den.get_ui()));
  }
  std::optional<std::uint64_t> of(const GaussRational& z) const {
    const auto re = of(z.re()), im = of(z.im());
    if (!re || !im) return std::nullopt;
    return add(*re, mul(*im, i_));
  }

 private:
  std::uint64_t p_;
  std::uint64_t i_ = 0;
};

/// dim of F_{<=d} / span{p s q : |p| + deg s + |q| <= d}, over F_p, for each
/// d <= cap. Needs parameter-free relations. Returns an empty vector when p
/// divides a coefficient denominator.
inline std::vector<std::size_t> quotient_dims_mod_p(const Signature& sig, const std::vector<Poly>& rels, std::size_t cap,
                                                    const ModP& F) {
  const std::vector<Word> words = all_words(sig.letters(), cap);
  const WordOrder ord = sig.word_order();
  // Column index: words in descending order so pivots are leading words.
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end(), [&](const Word& a, const Word& b) { return ord(b, a); });
  std::unordered_map<Word, std::size_t, WordHash> col;
  for (std::size_t k = 0; k < sorted.size(); ++k) col[sorted[k]] = k;

  using Row = std::map<std::size_t, std::uint64_t>;
  std::unordered_map<std::size_t, Row> pivots;  // pivot column -> normalized row
  std::vector<std::size_t> rank_by_degree(cap + 1, 0);
  const std::vector<Word> letters_words = all_words(sig.letters(), cap);

  auto insert = [&](Row row) -> bool {
    while (!row.empty()) {
      const auto [c, v] = *row.begin();
      auto it = pivots.find(c);
      if (it == pivots.end()) {
        const std::uint64_t iv = F.inv(v);
        for (auto& [k, x] : row) x = F.mul(x, iv);
        pivots.emplace(c, std::move(row));
        return true;
      }
      for (const auto& [k, x] : it->second) {
        auto& slot = row[k];
        slot = F.add(slot, F.p() - F.mul(v, x));
        if (slot == 0) row.erase(k);
      }
    }
    return false;
  };

  std::vector<std::size_t> out;
  std::size_t rank = 0;
  for (std::size_t d = 0; d <= cap; ++d) {
    for (const Poly& s : rels) {
      const int ds = s.degree();
      if (ds < 0 || static_cast<std::size_t>(ds) > d) continue;
      const std::size_t rest = d - static_cast<std::size_t>(ds);
      // Multiples of total degree exactly d; smaller ones were added earlier.
      for (const Word& p : letters_words) {
        if (p.size() > rest) continue;
        for (const Word& q : letters_words) {
          if (p.size() + q.size() != rest) continue;
          Row row;
          for (const auto& [w, c] : s.terms()) {
            const auto v = F.of(c.constant());
            if (!v) return {};
            if (*v) row[col.at(p * w * q)] = *v;
          }
          rank += insert(std::move(row));
        }
      }
    }
    std::size_t total = 0;
    for (const Word& w : words) total += w.size() <= d;
    out.push_back(total - rank);
  }
  return out;
}

/// Cumulative BW counts |BW_{<=d}| for d <= cap.
inline std::vector<std::size_t> bw_cumulative(const BWEnumeration& bw, std::size_t cap) {
  std::vector<std::size_t> out(cap + 1, 0);
  for (const Word& w : bw.words()) {
    for (std::size_t d = w.size(); d <= cap; ++d) ++out[d];
  }
  return out;
}

/// The corpus used by the property tests, instantiated at alpha = 1.
inline std::vector<std::string> corpus_names() {
  return {"A_x2", "monomial:xyx*", "monomial:xx*x", "monomial:xy,yx*", "uea-heisenberg", "uea-so3",
          "wick2", "double-c2",   "T3double",      "Q4"};
}

}  // namespace testing
