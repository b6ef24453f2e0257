#include "stargb/x2.hpp"

#include "stargb/presets.hpp"

namespace stargb {

namespace {

using RPoly = std::vector<Rational>;  // low degree first

void trim(RPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Rational eval(const RPoly& p, const Rational& t) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
  return v;
}

RPoly derivative(const RPoly& p) {
  RPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  trim(d);
  return d;
}

RPoly remainder(RPoly a, const RPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_changes(const std::vector<RPoly>& seq, const Rational& t) {
  int changes = 0, last = 0;
  for (const RPoly& p : seq) {
    const int s = sgn(eval(p, t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<std::vector<GaussRational>> complexify(const std::vector<std::vector<Rational>>& m) {
  std::vector<std::vector<GaussRational>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

// Exact division by t - r, assuming r is a root.
RPoly divide_root(const RPoly& p, const Rational& r) {
  RPoly q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t k = p.size() - 1; k > 0; --k) {
    carry = carry * r + p[k];
    q[k - 1] = carry;
  }
  return q;
}

Word rep(const Word& unit, std::size_t times) {
  Word w;
  for (std::size_t k = 0; k < times; ++k) w *= unit;
  return w;
}

}  // namespace

std::vector<std::vector<Rational>> MomentModel::hankel(std::size_t n, bool shifted) const {
  std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) h[i - 1][j - 1] = moment(i + j - 1 + (shifted ? 1 : 0));
  }
  return h;
}

bool positive_on_unit_interval(const std::vector<Rational>& f) {
  RPoly p = f;
  trim(p);
  if (p.empty()) return false;
  if (sgn(eval(p, 0)) <= 0 || sgn(eval(p, 1)) <= 0) return false;
  std::vector<RPoly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    RPoly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  return sign_changes(seq, 0) == sign_changes(seq, 1);
}

bool admissible_density(const std::vector<Rational>& f) {
  RPoly p = f;
  trim(p);
  if (p.empty()) return false;
  // Strip endpoint roots; t - 1 flips the sign, so track it.
  bool flip = false;
  for (const int r : {0, 1}) {
    while (p.size() > 1 && sgn(eval(p, r)) == 0) {
      p = divide_root(p, r);
      if (r == 1) flip = !flip;
    }
  }
  if (flip) {
    for (auto& c : p) c = -c;
  }
  return positive_on_unit_interval(p);
}

MomentModel moment_weights(const std::vector<Rational>& f, std::size_t m_max) {
  if (!admissible_density(f)) throw DomainError("density is not positive on (0, 1)");
  MomentModel m;
  m.density = f;
  for (std::size_t k = 0; k <= m_max; ++k) {
    Rational a = 0;
    for (std::size_t d = 0; d < f.size(); ++d) a += f[d] / Rational(static_cast<long>(k + d + 2));
    a.canonicalize();
    m.alpha.push_back(a);
  }
  return m;
}

std::string to_string(X2Family f) {
  switch (f) {
    case X2Family::U: return "u";
    case X2Family::A: return "a";
    case X2Family::V: return "v";
    case X2Family::B: return "b";
  }
  return "?";
}

Word x2_word(X2Family f, std::size_t index) {
  const Word x{Letter(0, false)}, xs{Letter(0, true)};
  switch (f) {
    case X2Family::U: return x * rep(xs * x, index);
    case X2Family::V: return xs * rep(x * xs, index);
    case X2Family::A: return rep(x * xs, index);
    case X2Family::B: return rep(xs * x, index);
  }
  return {};
}

std::optional<std::pair<X2Family, std::size_t>> x2_classify(const Word& w) {
  if (w.empty() || w[0].generator() != 0) return std::nullopt;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].generator() != 0 || w[k].starred() != (w[0].starred() != (k % 2 == 1))) return std::nullopt;
  }
  const bool first = w[0].starred(), last = w[w.size() - 1].starred();
  const std::size_t n = w.size();
  if (!first && !last) return std::make_pair(X2Family::U, (n - 1) / 2);
  if (first && last) return std::make_pair(X2Family::V, (n - 1) / 2);
  if (!first) return std::make_pair(X2Family::A, n / 2);
  return std::make_pair(X2Family::B, n / 2);
}

BWEnumeration x2_block_enumeration(std::size_t cap) {
  std::vector<Word> words;
  for (X2Family f : {X2Family::U, X2Family::A, X2Family::V, X2Family::B}) {
    const bool odd = f == X2Family::U || f == X2Family::V;
    for (std::size_t k = odd ? 0 : 1;; ++k) {
      Word w = x2_word(f, k);
      if (w.size() > cap) break;
      words.push_back(std::move(w));
    }
  }
  return BWEnumeration(std::move(words), cap);
}

GroebnerBasis x2_basis() { return complete(preset("A_x2").presentation, 4); }

WeightFn x2_moment_weight(const MomentModel& model) {
  return [&model](const Word& h) -> Rational {
    if (h.size() >= model.alpha.size()) throw std::out_of_range("moment model too short");
    return model.moment(h.size());
  };
}

bool StudyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

bool StudyReport::check(const std::string& n) const {
  for (const auto& [k, v] : checks) {
    if (k == n) return v;
  }
  throw std::out_of_range("no check named " + n);
}

nlohmann::ordered_json StudyReport::to_json() const {
  nlohmann::ordered_json j;
  j["study"] = name;
  j["ok"] = ok();
  nlohmann::ordered_json cs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : checks) cs[k] = v;
  j["checks"] = cs;
  j["notes"] = notes;
  j["data"] = data;
  return j;
}

StudyReport x2_block_structure(std::size_t k_max, const MomentModel& model, std::size_t hankel_n) {
  StudyReport rep;
  rep.name = "x2_block_structure";
  const GroebnerBasis gb = x2_basis();
  const WordOrder ord = gb.signature.word_order();
  auto R = [&](const Word& w) { return gb.reduce(Poly(ord, w)); };
  auto is_word = [&](const Poly& p, const Word& w) { return p == Poly(ord, w); };
  using F = X2Family;

  bool table = true;
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t t = 0; t <= k_max; ++t) {
      table = table && is_word(R(x2_word(F::U, k) * star_word(x2_word(F::U, t))), x2_word(F::A, k + t + 1));
      table = table && is_word(R(x2_word(F::V, k) * star_word(x2_word(F::V, t))), x2_word(F::B, k + t + 1));
    }
  }
  for (std::size_t m = 1; m <= k_max; ++m) {
    for (std::size_t n = 1; n <= k_max; ++n) {
      table = table && is_word(R(x2_word(F::A, m) * star_word(x2_word(F::A, n))), x2_word(F::A, m + n));
      table = table && is_word(R(x2_word(F::B, m) * star_word(x2_word(F::B, n))), x2_word(F::B, m + n));
    }
  }
  rep.checks.emplace_back("product_table", table);

  bool cross = true;
  const std::vector<F> fams{F::U, F::A, F::V, F::B};
  for (F f : fams) {
    for (F g : fams) {
      if (f == g) continue;
      for (std::size_t k = 0; k <= k_max; ++k) {
        for (std::size_t t = 0; t <= k_max; ++t) {
          const std::size_t kk = (f == F::A || f == F::B) ? k + 1 : k;
          const std::size_t tt = (g == F::A || g == F::B) ? t + 1 : t;
          const Poly nf = R(x2_word(f, kk) * star_word(x2_word(g, tt)));
          if (nf.is_zero()) continue;
          cross = cross && nf.size() == 1 && !is_positive(nf.leading_word());
        }
      }
    }
  }
  rep.checks.emplace_back("cross_family_not_positive", cross);

  const auto A = model.hankel(hankel_n, false);
  const auto Ap = model.hankel(hankel_n, true);
  const auto certA = verify_positive(complexify(A));
  const auto certAp = verify_positive(complexify(Ap));
  rep.checks.emplace_back("hankel_A_positive", certA.positive);
  rep.checks.emplace_back("hankel_A_shifted_positive", certAp.positive);
  nlohmann::ordered_json minors;
  for (const auto& d : certA.minors) minors["A"].push_back(rational_text(d));
  for (const auto& d : certAp.minors) minors["A_shifted"].push_back(rational_text(d));
  rep.data["hankel_minors"] = minors;

  const std::size_t cap = 2 * k_max + 2;
  const BWEnumeration bw = x2_block_enumeration(cap);
  const WeightFn weight = x2_moment_weight(model);
  const GramMatrix G = assemble_gram(gb, bw, bw.size(), weight);
  bool diagonal = true, blocks = true;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const auto fi = *x2_classify(bw.word(i + 1));
    for (std::size_t j = 0; j < G.size(); ++j) {
      const auto fj = *x2_classify(bw.word(j + 1));
      if (fi.first != fj.first) {
        diagonal = diagonal && G(i, j).is_zero();
        continue;
      }
      // u, v blocks: alpha_{k+t+1} = A_{k+1, t+1}; a, b blocks: alpha_{m+n} = A'_{m, n}.
      const bool odd = fi.first == F::U || fi.first == F::V;
      const std::size_t idx = odd ? fi.second + fj.second + 1 : fi.second + fj.second;
      blocks = blocks && G(i, j) == GaussRational(model.moment(idx));
    }
  }
  rep.checks.emplace_back("gram_block_diagonal", diagonal);
  rep.checks.emplace_back("gram_blocks_hankel", blocks);
  nlohmann::ordered_json words = nlohmann::ordered_json::array();
  for (const Word& w : bw.words()) {
    const auto c = *x2_classify(w);
    words.push_back(to_string(c.first) + "_" + std::to_string(c.second));
  }
  rep.data["enumeration"] = words;

  const GaussRational unit = form_entry(Word{}, x2_word(F::A, 1), gb, weight);
  rep.notes.push_back("empty word excluded from the block enumeration: <1, a_1> = " + unit.text() +
                      " couples it to the a-family");
  return rep;
}

StudyReport x2_boundedness(const MomentModel& model, std::size_t k_max, std::size_t cap) {
  StudyReport rep;
  rep.name = "x2_boundedness";
  if (model.alpha.size() < std::max(cap, 2 * k_max + 2) + 1) throw std::invalid_argument("moment model too short");
  using F = X2Family;
  const GroebnerBasis gb = x2_basis();
  const WordOrder ord = gb.signature.word_order();
  const WeightFn weight = x2_moment_weight(model);

  bool monotone = true;
  for (std::size_t m = 0; m <= 2 * k_max + 1; ++m) monotone = monotone && model.moment(m + 1) <= model.moment(m);
  rep.checks.emplace_back("moments_monotone", monotone);

  const Poly x(ord, Word{Letter(0, false)});
  bool products = true, ratios = true, printed = true;
  auto norm2 = [&](const Poly& p) { return form_entry(p.leading_word(), p.leading_word(), gb, weight); };
  for (std::size_t k = 0; k <= k_max; ++k) {
    const Poly xv = diamond(x, Poly(ord, x2_word(F::V, k)), gb);
    products = products && xv == Poly(ord, x2_word(F::A, k + 1));
    const GaussRational nxv = norm2(xv), nv = norm2(Poly(ord, x2_word(F::V, k)));
    ratios = ratios && nxv == GaussRational(model.moment(2 * k + 2)) && nv == GaussRational(model.moment(2 * k + 1)) &&
             nxv.re() <= nv.re();
    if (k >= 1) {
      const Poly xb = diamond(x, Poly(ord, x2_word(F::B, k)), gb);
      products = products && xb == Poly(ord, x2_word(F::U, k));
      const GaussRational nxb = norm2(xb), nb = norm2(Poly(ord, x2_word(F::B, k)));
      ratios = ratios && nxb == GaussRational(model.moment(2 * k + 1)) && nb == GaussRational(model.moment(2 * k)) &&
               nxb.re() <= nb.re();
      // The inequality as printed indexes alpha_{2k-1} on the right.
      printed = printed && model.moment(2 * k + 2) <= model.moment(2 * k - 1);
    }
    products = products && diamond(x, Poly(ord, x2_word(F::U, k)), gb).is_zero();
    if (k >= 1) products = products && diamond(x, Poly(ord, x2_word(F::A, k)), gb).is_zero();
  }
  rep.checks.emplace_back("left_products", products);
  rep.checks.emplace_back("norm_ratios", ratios);
  rep.checks.emplace_back("printed_index_inequality", printed);

  const BWEnumeration bw = x2_block_enumeration(cap);
  const GramMatrix G = assemble_gram(gb, bw, bw.size(), weight);
  const RepMatrix M = regular_matrix(x, gb, bw, Side::Left);
  const NormReport nr = norm_estimate(M, G);
  rep.checks.emplace_back("norm_at_most_one", nr.norm <= 1 + 1e-9);
  rep.checks.emplace_back("norm_residual", nr.residual <= 1e-10);
  rep.data["norm"] = nr.norm;
  rep.data["residual"] = nr.residual;
  rep.data["dimension"] = nr.dimension;
  rep.data["cap"] = cap;
  return rep;
}

}  // namespace stargb
