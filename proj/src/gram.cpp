#include "stargb/gram.hpp"

namespace stargb {

std::vector<std::pair<Word, Scalar>> half_words(const Poly& p) {
  std::vector<std::pair<Word, Scalar>> out;
  for (const auto& [w, c] : p.terms()) {
    if (auto h = half_word(w)) out.emplace_back(std::move(*h), c);
  }
  return out;
}

namespace {

GaussRational numeric(const Scalar& c) {
  if (!c.is_constant()) throw DomainError("Gram entries need a numeric parameter; instantiate it first");
  return c.constant();
}

std::string word_list(const GroebnerBasis& gb, std::initializer_list<const Word*> ws) {
  std::string s;
  for (const Word* w : ws) {
    if (!s.empty()) s += ", ";
    s += gb.signature.word_text(*w);
  }
  return s;
}

// Determinant with row pivoting over Q(i).
GaussRational determinant(std::vector<std::vector<GaussRational>> m) {
  const std::size_t n = m.size();
  GaussRational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    const GaussRational inv = m[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      const GaussRational f = m[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

Rational real_minor(const GaussRational& d) {
  if (!d.is_real()) throw std::logic_error("leading minor of a Hermitian matrix is not real");
  return d.re();
}

}  // namespace

GaussRational form_entry(const Word& u, const Word& v, const GroebnerBasis& gb, const WeightFn& weight) {
  if (u == v) return weight(u);
  const WordOrder ord = gb.signature.word_order();
  GaussRational sum;
  for (const auto& [h, c] : half_words(gb.reduce(Poly(ord, u * star_word(v))))) {
    sum += numeric(c) * weight(h);
  }
  return sum;
}

GaussRational gram_entry(const Word& u, const Word& v, const GroebnerBasis& gb, const BWEnumeration& bw,
                         const WeightSequence& weights) {
  const auto pu = bw.phi(u);
  const auto pv = bw.phi(v);
  if (!pu || !pv) throw std::invalid_argument("gram_entry: word outside the enumeration");
  if (u == v) {
    if (*pu > weights.size()) throw WeightUnavailable("diagonal weight not chosen yet: " + word_list(gb, {&u}), u, v, u);
    return weights(*pu);
  }
  const std::size_t bound = std::max(*pu, *pv);
  return form_entry(u, v, gb, [&](const Word& h) -> Rational {
    const auto ph = bw.phi(h);
    if (!ph || *ph >= bound || *ph > weights.size()) {
      throw WeightUnavailable("half-word not below max(u, v): " + word_list(gb, {&u, &v, &h}), u, v, h);
    }
    return weights(*ph);
  });
}

GramMatrix::GramMatrix(BWEnumeration bw, std::vector<std::vector<GaussRational>> g)
    : bw_(std::move(bw)), g_(std::move(g)) {}

const GaussRational& GramMatrix::entry(const Word& u, const Word& v) const {
  const auto pu = bw_.phi(u);
  const auto pv = bw_.phi(v);
  if (!pu || !pv || *pu > size() || *pv > size()) throw std::out_of_range("Gram entry outside the matrix");
  return g_[*pu - 1][*pv - 1];
}

GaussRational GramMatrix::inner(const Poly& f, const Poly& g) const {
  GaussRational sum;
  for (const auto& [u, c] : f.terms()) {
    for (const auto& [v, d] : g.terms()) {
      const GaussRational& e = entry(u, v);
      if (!e.is_zero()) sum += numeric(c) * numeric(d).conj() * e;
    }
  }
  return sum;
}

std::optional<std::pair<std::size_t, std::size_t>> GramMatrix::hermitian_defect() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i; j < size(); ++j) {
      if (!(g_[i][j] == g_[j][i].conj())) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

GramMatrix assemble_gram(const GroebnerBasis& gb, const BWEnumeration& bw, std::size_t n, const WeightFn& weight) {
  if (n > bw.size()) throw std::invalid_argument("Gram size exceeds the enumeration");
  std::vector<std::vector<GaussRational>> g(n, std::vector<GaussRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = form_entry(bw.word(i + 1), bw.word(j + 1), gb, weight);
  }
  return GramMatrix(bw.truncated(n), std::move(g));
}

WeightChoice choose_weights(const GroebnerBasis& gb, const BWEnumeration& bw, std::size_t n) {
  if (n > bw.size()) throw std::invalid_argument("Gram size exceeds the enumeration");
  WeightChoice out;
  out.weights.rule = "a_m = (1 + |p_m|) / Delta_{m-1}";
  std::vector<std::vector<GaussRational>> g(n, std::vector<GaussRational>(n));
  // G_{m-1} = L D L* with L unit lower triangular.
  std::vector<std::vector<GaussRational>> L(n);
  std::vector<Rational> D;
  Rational delta = 1;

  for (std::size_t m = 0; m < n; ++m) {
    const Word& wm = bw.word(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
      const Word& wi = bw.word(i + 1);
      g[i][m] = gram_entry(wi, wm, gb, bw, out.weights);
      g[m][i] = gram_entry(wm, wi, gb, bw, out.weights);
      if (!(g[i][m] == g[m][i].conj())) {
        throw NonHermitianGram("Gram matrix is not Hermitian at (" + std::to_string(i + 1) + ", " +
                                   std::to_string(m + 1) + "): " + word_list(gb, {&wi, &wm}),
                               i, m);
      }
    }
    // Solve L z = r for the new column; c = r* G^{-1} r = sum |z_j|^2 / D_j.
    std::vector<GaussRational> z(m);
    Rational c = 0;
    for (std::size_t k = 0; k < m; ++k) {
      GaussRational acc = g[k][m];
      for (std::size_t j = 0; j < k; ++j) {
        if (!L[k][j].is_zero() && !z[j].is_zero()) acc -= L[k][j] * z[j];
      }
      z[k] = acc;
      c += acc.norm2() / D[k];
    }
    L[m].resize(m);
    for (std::size_t j = 0; j < m; ++j) L[m][j] = z[j].conj() / GaussRational(D[j]);

    if (sgn(delta) <= 0) throw std::logic_error("leading minor lost positivity during weight choice");
    const Rational p = -delta * c;
    Rational a = (1 + abs(p)) / delta;
    a.canonicalize();
    g[m][m] = a;
    out.weights.a.push_back(a);
    Rational dm = a - c;
    dm.canonicalize();
    D.push_back(dm);
    delta *= dm;
    delta.canonicalize();
    out.gram.minors.push_back(delta);
  }
  std::vector<Rational> minors = std::move(out.gram.minors);
  out.gram = GramMatrix(bw.truncated(n), std::move(g));
  out.gram.minors = std::move(minors);
  return out;
}

PositivityCertificate verify_positive(const std::vector<std::vector<GaussRational>>& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!(g[i][j] == g[j][i].conj())) {
        throw NonHermitianGram("matrix is not Hermitian at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")",
                               i, j);
      }
    }
  }
  PositivityCertificate cert;
  auto m = g;
  GaussRational prev = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    if (m[k][k].is_zero()) break;
    cert.minors.push_back(real_minor(m[k][k]));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  // A vanishing minor stops Bareiss; the rest are computed directly.
  for (; k < n; ++k) {
    std::vector<std::vector<GaussRational>> block(k + 1);
    for (std::size_t i = 0; i <= k; ++i) block[i].assign(g[i].begin(), g[i].begin() + static_cast<long>(k + 1));
    cert.minors.push_back(real_minor(determinant(std::move(block))));
  }
  cert.positive = true;
  for (const Rational& d : cert.minors) cert.positive = cert.positive && sgn(d) > 0;
  return cert;
}

PositivityCertificate verify_positive(const GramMatrix& g) { return verify_positive(g.rows()); }

nlohmann::ordered_json gram_to_json(const GramMatrix& g, const WeightSequence* weights, const Signature& sig) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json words = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < g.size(); ++k) words.push_back(sig.word_text(g.enumeration().word(k + 1)));
  j["enumeration"] = words;
  if (weights) {
    j["weight_rule"] = weights->rule;
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const auto& a : weights->a) ws.push_back(rational_text(a));
    j["weights"] = ws;
  } else {
    j["weights"] = nullptr;
  }
  nlohmann::ordered_json minors = nlohmann::ordered_json::array();
  for (const auto& d : g.minors) minors.push_back(rational_text(d));
  j["minors"] = minors;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (!g(r, c).is_zero()) entries.push_back({r + 1, c + 1, g(r, c).text()});
    }
  }
  j["entries"] = entries;
  return j;
}

GramMatrix gram_block(const GramMatrix& g, std::size_t cap) {
  const BWEnumeration& bw = g.enumeration();
  std::vector<Word> words;
  for (std::size_t k = 0; k < g.size() && bw.word(k + 1).size() <= cap; ++k) words.push_back(bw.word(k + 1));
  const std::size_t n = words.size();
  for (std::size_t k = n; k < g.size(); ++k) {
    if (bw.word(k + 1).size() <= cap) throw std::invalid_argument("gram block: words of length <= cap are not a prefix");
  }
  std::vector<std::vector<GaussRational>> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i].assign(g.rows()[i].begin(), g.rows()[i].begin() + static_cast<std::ptrdiff_t>(n));
  GramMatrix out(BWEnumeration(std::move(words), cap), std::move(rows));
  if (g.minors.size() >= n) out.minors.assign(g.minors.begin(), g.minors.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

}  // namespace stargb
