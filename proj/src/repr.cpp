#include "stargb/repr.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace stargb {

namespace {

GaussRational numeric(const Scalar& c) {
  if (!c.is_constant()) throw DomainError("representation matrices need a numeric parameter; instantiate it first");
  return c.constant();
}

using Dense = std::vector<std::vector<GaussRational>>;

}  // namespace

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

GaussRational RepMatrix::at(std::size_t row, std::size_t col) const {
  for (const auto& [r, v] : columns[col]) {
    if (r == row) return v;
  }
  return 0;
}

std::vector<std::size_t> RepMatrix::unmasked() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (!masked[j]) out.push_back(j);
  }
  return out;
}

RepMatrix regular_matrix(const Poly& z, const GroebnerBasis& gb, const BWEnumeration& bw, Side side) {
  if (!gb.complete()) throw std::logic_error("regular representation needs a complete basis");
  RepMatrix m;
  m.z = gb.reduce(z);
  m.side = side;
  m.bw = bw;
  m.columns.resize(bw.size());
  m.masked.assign(bw.size(), false);
  const WordOrder ord = gb.signature.word_order();
  const std::size_t dz = z.is_zero() ? 0 : static_cast<std::size_t>(z.degree());
  for (std::size_t j = 0; j < bw.size(); ++j) {
    const Word& b = bw.word(j + 1);
    if (b.size() + dz > bw.degree_cap()) {
      m.masked[j] = true;
      continue;
    }
    const Poly pb(ord, b);
    const Poly img = side == Side::Right ? diamond(pb, z, gb) : diamond(z, pb, gb);
    for (const auto& [w, c] : img.terms()) {
      const auto row = bw.phi(w);
      if (!row) throw std::logic_error("image word outside the enumeration: " + gb.signature.word_text(w));
      m.columns[j].emplace_back(*row - 1, numeric(c));
    }
    std::sort(m.columns[j].begin(), m.columns[j].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return m;
}

Poly random_combination(const BWEnumeration& bw, const WordOrder& ord, std::mt19937_64& rng, std::size_t max_terms) {
  if (bw.size() == 0) throw std::invalid_argument("random combination over an empty enumeration");
  std::uniform_int_distribution<std::size_t> count(1, max_terms), pick(1, bw.size());
  std::uniform_int_distribution<int> part(-3, 3);
  Poly f(ord);
  while (f.is_zero()) {
    const std::size_t n = count(rng);
    for (std::size_t k = 0; k < n; ++k) {
      const Word& w = bw.word(pick(rng));
      const int re = part(rng), im = part(rng);
      f.add_term(w, Scalar(GaussRational(Rational(re), Rational(im))));
    }
  }
  return f;
}

ProbeResult faithfulness_probe(const Poly& f, const GroebnerBasis& gb, const BWEnumeration& bw) {
  const Poly fr = gb.reduce(f);
  if (fr.is_zero()) throw std::invalid_argument("faithfulness probe: f is zero in the quotient");
  const WordOrder ord = gb.signature.word_order();
  ProbeResult out;

  const Word& w1 = fr.leading_word();
  const Word b1 = star_word(w1);
  if (bw.contains(b1)) {
    Poly img = diamond(Poly(ord, b1), fr, gb);
    const Word top = b1 * w1;
    if (img.coefficient(top) == fr.leading_coeff()) {
      out.found = true;
      out.standard_witness = true;
      out.witness = b1;
      out.output_word = top;
      out.output_coeff = numeric(fr.leading_coeff());
      out.image = std::move(img);
      return out;
    }
  }
  for (const Word& b : bw.words()) {
    Poly img = diamond(Poly(ord, b), fr, gb);
    if (img.is_zero()) continue;
    out.found = true;
    out.witness = b;
    out.output_word = img.leading_word();
    out.output_coeff = numeric(img.leading_coeff());
    out.image = std::move(img);
    return out;
  }
  return out;
}

CheckReport adjoint_check(const Poly& z, const GroebnerBasis& gb, const GramMatrix& gram) {
  CheckReport r;
  r.condition = "adjoint";
  const BWEnumeration& bw = gram.enumeration();
  const std::size_t cap = bw.degree_cap();
  r.cap = cap;
  const std::size_t dz = z.is_zero() ? 0 : static_cast<std::size_t>(z.degree());
  const WordOrder ord = gb.signature.word_order();
  const Poly zs = z.star();

  std::vector<const Word*> region;
  std::vector<Poly> uz, vzs;
  for (std::size_t k = 0; k < gram.size(); ++k) {
    const Word& w = bw.word(k + 1);
    if (w.size() + dz > cap) continue;
    region.push_back(&w);
    uz.push_back(diamond(Poly(ord, w), z, gb));
    vzs.push_back(diamond(Poly(ord, w), zs, gb));
  }
  for (std::size_t i = 0; i < region.size(); ++i) {
    for (std::size_t j = 0; j < region.size(); ++j) {
      const GaussRational lhs = gram.inner(uz[i], Poly(ord, *region[j]));
      const GaussRational rhs = gram.inner(Poly(ord, *region[i]), vzs[j]);
      if (!(lhs == rhs)) {
        r.verdict = Verdict::Fail;
        r.witnesses.push_back({"adjoint identity fails", {}, {{"u", *region[i]}, {"v", *region[j]}}, {}});
        if (r.notes.size() < 8) {
          r.notes.push_back("<" + gb.signature.word_text(*region[i]) + " z, " + gb.signature.word_text(*region[j]) +
                            "> = " + lhs.text() + " but <u, v z*> = " + rhs.text());
        }
      }
    }
  }
  if (r.verdict == Verdict::Pass) r.verdict = Verdict::PassUpToCap;
  return r;
}

NormReport norm_estimate(const RepMatrix& m, const GramMatrix& gram) {
  if (gram.size() != m.size()) throw std::invalid_argument("norm estimate: Gram and matrix sizes differ");
  const std::vector<std::size_t> U = m.unmasked();
  if (U.empty()) throw std::invalid_argument("norm estimate: every column is masked");
  const std::size_t n = m.size(), k = U.size();

  // With <x, y> = sum x_i conj(y_j) g_ij, |y|^2 = y^* P y for P = conj(G).
  auto P = [&](std::size_t i, std::size_t j) { return gram(i, j).conj(); };

  // K = M_U^* P M_U, the Gram matrix of the images.
  Dense PM(n, std::vector<GaussRational>(k));
  for (std::size_t b = 0; b < k; ++b) {
    for (const auto& [row, v] : m.columns[U[b]]) {
      for (std::size_t i = 0; i < n; ++i) {
        const GaussRational p = P(i, row);
        if (!p.is_zero()) PM[i][b] += p * v;
      }
    }
  }
  Dense K(k, std::vector<GaussRational>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (const auto& [row, v] : m.columns[U[a]]) {
      const GaussRational cv = v.conj();
      for (std::size_t b = 0; b < k; ++b) {
        if (!PM[row][b].is_zero()) K[a][b] += cv * PM[row][b];
      }
    }
  }

  // P_U = L D L^*, exactly.
  Dense L(k, std::vector<GaussRational>(k));
  std::vector<Rational> D(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      GaussRational s = P(U[i], U[j]);
      for (std::size_t t = 0; t < j; ++t) {
        if (!L[i][t].is_zero() && !L[j][t].is_zero()) s -= L[i][t] * GaussRational(D[t]) * L[j][t].conj();
      }
      if (i == j) {
        if (!s.is_real() || sgn(s.re()) <= 0) throw DomainError("norm estimate: Gram block is not positive definite");
        D[i] = s.re();
        L[i][i] = 1;
      } else {
        L[i][j] = s / GaussRational(D[j]);
      }
    }
  }
  // C = L^{-1} K L^{-*}: solve L X = K, then L C = X^*.
  auto forward = [&](Dense rhs) {
    for (std::size_t col = 0; col < k; ++col) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t t = 0; t < i; ++t) {
          if (!L[i][t].is_zero() && !rhs[t][col].is_zero()) rhs[i][col] -= L[i][t] * rhs[t][col];
        }
      }
    }
    return rhs;
  };
  Dense X = forward(std::move(K));
  Dense Xh(k, std::vector<GaussRational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) Xh[i][j] = X[j][i].conj();
  }
  const Dense C = forward(std::move(Xh));

  // Weights can outgrow double range; scale in multiprecision floating point.
  std::vector<mpf_class> root(k);
  for (std::size_t i = 0; i < k; ++i) root[i] = sqrt(mpf_class(D[i], 256));
  Eigen::MatrixXcd B(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const mpf_class scale = root[i] * root[j];
      const mpf_class re = mpf_class(C[i][j].re(), 256) / scale, im = mpf_class(C[i][j].im(), 256) / scale;
      B(i, j) = std::complex<double>(re.get_d(), im.get_d());
    }
  }
  if (!B.allFinite()) throw std::runtime_error("norm estimate: entries out of double range");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(B);
  if (es.info() != Eigen::Success) throw std::runtime_error("norm estimate: eigenvalue iteration did not converge");
  const Eigen::Index top = k - 1;
  const double lambda = std::max(0.0, es.eigenvalues()(top));
  const Eigen::VectorXcd v = es.eigenvectors().col(top);
  NormReport out;
  out.norm = std::sqrt(lambda);
  out.residual = (B * v - es.eigenvalues()(top) * v).norm();
  out.dimension = k;
  return out;
}

nlohmann::ordered_json rep_to_json(const RepMatrix& m, const Signature& sig, const NormReport* norm) {
  nlohmann::ordered_json j;
  j["operator"] = sig.poly_text(m.z);
  j["side"] = to_string(m.side);
  j["cap"] = m.bw.degree_cap();
  nlohmann::ordered_json words = nlohmann::ordered_json::array();
  for (const Word& w : m.bw.words()) words.push_back(sig.word_text(w));
  j["enumeration"] = words;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < m.size(); ++c) {
    for (const auto& [r, v] : m.columns[c]) entries.push_back({r + 1, c + 1, v.text()});
  }
  j["entries"] = entries;
  nlohmann::ordered_json mask = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (m.masked[c]) mask.push_back(c + 1);
  }
  j["mask"] = mask;
  if (norm) {
    j["norm"] = {{"value", norm->norm}, {"residual", norm->residual}, {"dimension", norm->dimension}};
  } else {
    j["norm"] = nullptr;
  }
  return j;
}

}  // namespace stargb
