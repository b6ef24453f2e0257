#include "stargb/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace stargb {

namespace {

// Overlap lengths |y| with hat(f) = x y, hat(g) = y z, x and z nonempty.
std::vector<std::size_t> overlap_lengths(const Word& fl, const Word& gl) {
  std::vector<std::size_t> out;
  const std::size_t m = std::min(fl.size(), gl.size());
  for (std::size_t len = 1; len < m + 1; ++len) {
    if (len >= fl.size() || len >= gl.size()) break;
    if (std::equal(fl.end() - static_cast<std::ptrdiff_t>(len), fl.end(), gl.begin())) out.push_back(len);
  }
  return out;
}

// Normal form against monic relations. The greatest reducible word is
// rewritten first, at its leftmost occurrence of the first matching relation.
Poly reduce_monic(const Poly& f, const std::vector<const Poly*>& rels, std::vector<RewriteStep>* cert) {
  Poly work = f;
  Poly done(f.order());
  while (!work.is_zero()) {
    auto [w, c] = work.pop_leading();
    bool rewritten = false;
    for (std::size_t k = 0; k < rels.size() && !rewritten; ++k) {
      const Poly& s = *rels[k];
      const Word& lead = s.leading_word();
      auto pos = w.find(lead);
      if (!pos) continue;
      Word p = w.prefix(*pos);
      Word q = w.suffix(w.size() - *pos - lead.size());
      auto it = s.terms().rbegin();
      for (++it; it != s.terms().rend(); ++it) work.add_term(p * it->first * q, -(c * it->second));
      if (cert) cert->push_back({c, std::move(p), k, std::move(q)});
      rewritten = true;
    }
    if (!rewritten) done.push_smallest(std::move(w), std::move(c));
  }
  return done;
}

struct CertKey {
  Word p;
  std::size_t rel;
  Word q;
  friend bool operator==(const CertKey&, const CertKey&) = default;
};

struct CertKeyHash {
  std::size_t operator()(const CertKey& k) const noexcept {
    WordHash h;
    return h(k.p) * 31 + k.rel * 1000003 + h(k.q) * 7;
  }
};

// Sparse certificate with merged duplicate (p, input, q) triples.
class CertAccumulator {
 public:
  void add(const Scalar& c, const Word& p, std::size_t rel, const Word& q) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(CertKey{p, rel, q}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  // this += c * p * other * q
  void add_scaled(const Scalar& c, const Word& p, const CertAccumulator& other, const Word& q) {
    for (const auto& [k, d] : other.terms_) add(c * d, p * k.p, k.rel, k.q * q);
  }
  void scale(const Scalar& c) {
    for (auto& [k, d] : terms_) d *= c;
  }
  IdealCertificate steps(const WordOrder& ord) const {
    IdealCertificate out;
    for (const auto& [k, c] : terms_) out.push_back({c, k.p, k.rel, k.q});
    std::sort(out.begin(), out.end(), [&](const RewriteStep& a, const RewriteStep& b) {
      if (a.relation != b.relation) return a.relation < b.relation;
      if (a.left != b.left) return ord(a.left, b.left);
      return ord(a.right, b.right);
    });
    return out;
  }

 private:
  std::unordered_map<CertKey, Scalar, CertKeyHash> terms_;
};

class Completer {
 public:
  Completer(const Presentation& input, const CompletionOptions& opts)
      : sig_(input.signature), order_(sig_.word_order()), opts_(opts), pending_(PendingLess{order_}) {}

  GroebnerBasis run(const Presentation& input) {
    std::vector<std::pair<Poly, std::size_t>> seeds;
    for (std::size_t i = 0; i < input.relations.size(); ++i) {
      if (!input.relations[i].is_zero()) seeds.emplace_back(input.relations[i], i);
    }
    int max_deg = 0;
    for (const auto& [p, i] : seeds) max_deg = std::max(max_deg, p.degree());
    if (static_cast<int>(opts_.degree_cap) < max_deg) {
      throw std::invalid_argument("degree cap " + std::to_string(opts_.degree_cap) +
                                  " is below the maximal input degree " + std::to_string(max_deg));
    }
    std::stable_sort(seeds.begin(), seeds.end(),
                     [&](const auto& a, const auto& b) { return order_(a.first.leading_word(), b.first.leading_word()); });
    for (auto& [p, i] : seeds) {
      CertAccumulator cert;
      if (opts_.track_certificates) cert.add(1, Word{}, i, Word{});
      adjoin(std::move(p), std::move(cert));
    }

    while (true) {
      drain_queue();
      if (!verify_closure()) break;
    }
    return finish();
  }

 private:
  struct Element {
    Poly poly;
    CertAccumulator cert;
    bool alive = true;
  };

  struct Pending {
    Word overlap;
    std::size_t seq;
    std::size_t left;
    std::size_t right;
    std::size_t left_cofactor_len;
  };

  struct PendingLess {
    WordOrder ord;
    bool operator()(const Pending& a, const Pending& b) const {
      auto c = ord.compare(a.overlap, b.overlap);
      if (c != 0) return c < 0;
      return a.seq < b.seq;
    }
  };

  std::vector<const Poly*> alive_polys(std::vector<std::size_t>* ids = nullptr) const {
    std::vector<const Poly*> out;
    for (std::size_t id = 0; id < elems_.size(); ++id) {
      if (!elems_[id].alive) continue;
      out.push_back(&elems_[id].poly);
      if (ids) ids->push_back(id);
    }
    return out;
  }

  // Reduces h (an ideal element) and, if nonzero, makes it a basis element.
  // Returns the new element id.
  std::optional<std::size_t> adjoin(Poly h, CertAccumulator cert) {
    std::vector<std::size_t> ids;
    auto rels = alive_polys(&ids);
    std::vector<RewriteStep> steps;
    Poly r = reduce_monic(h, rels, opts_.track_certificates ? &steps : nullptr);
    if (r.is_zero()) return std::nullopt;
    for (const auto& st : steps) cert.add_scaled(-st.coeff, st.left, elems_[ids[st.relation]].cert, st.right);
    const Scalar& lc = r.leading_coeff();
    if (!lc.is_constant()) {
      throw DegenerateLeadingCoefficient("parameter-degenerate leading coefficient " + sig_.scalar_text(lc) +
                                         " on " + sig_.word_text(r.leading_word()));
    }
    Scalar inv = lc.inverse();
    r *= inv;
    cert.scale(inv);
    if (r.degree() > static_cast<int>(opts_.degree_cap)) {
      truncated_ = true;
      dropped_.push_back(r.leading_word());
      return std::nullopt;
    }

    const std::size_t id = elems_.size();
    std::vector<std::size_t> displaced;
    for (std::size_t e : ids) {
      if (elems_[e].poly.leading_word().contains(r.leading_word())) {
        elems_[e].alive = false;
        displaced.push_back(e);
      }
    }
    elems_.push_back({std::move(r), std::move(cert), true});
    enqueue_pairs(id);
    for (std::size_t e : displaced) adjoin(elems_[e].poly, elems_[e].cert);
    return id;
  }

  void enqueue(std::size_t left, std::size_t right) {
    const Word& fl = elems_[left].poly.leading_word();
    const Word& gl = elems_[right].poly.leading_word();
    for (std::size_t len : overlap_lengths(fl, gl)) {
      Word w = fl * gl.suffix(gl.size() - len);
      pending_.insert({std::move(w), seq_++, left, right, fl.size() - len});
    }
  }

  void enqueue_pairs(std::size_t id) {
    enqueue(id, id);
    for (std::size_t e = 0; e < id; ++e) {
      if (!elems_[e].alive) continue;
      enqueue(id, e);
      enqueue(e, id);
    }
  }

  std::pair<Poly, CertAccumulator> composition(std::size_t left, std::size_t right, const Word& w,
                                               std::size_t xlen) const {
    const Element& f = elems_[left];
    const Element& g = elems_[right];
    Word x = w.prefix(xlen);
    Word z = w.suffix(w.size() - f.poly.leading_word().size());
    Poly res(order_);
    res.add_scaled(1, Word{}, f.poly, z);
    res.add_scaled(-1, x, g.poly, Word{});
    CertAccumulator cert;
    if (opts_.track_certificates) {
      cert.add_scaled(1, Word{}, f.cert, z);
      cert.add_scaled(-1, x, g.cert, Word{});
    }
    return {std::move(res), std::move(cert)};
  }

  void drain_queue() {
    while (!pending_.empty()) {
      Pending p = *pending_.begin();
      pending_.erase(pending_.begin());
      if (!elems_[p.left].alive || !elems_[p.right].alive) continue;
      auto [res, cert] = composition(p.left, p.right, p.overlap, p.left_cofactor_len);
      const std::size_t dropped_before = dropped_.size();
      auto id = adjoin(std::move(res), std::move(cert));
      CompositionLogEntry entry{p.left, p.right, p.overlap, CompositionLogEntry::Outcome::Zero, 0};
      if (id) {
        entry.outcome = CompositionLogEntry::Outcome::Adjoined;
        entry.adjoined_id = *id;
      } else if (dropped_.size() != dropped_before) {
        entry.outcome = CompositionLogEntry::Outcome::Dropped;
      }
      log_.push_back(std::move(entry));
    }
  }

  // Re-checks every composition of the current basis; returns true if
  // anything new was adjoined.
  bool verify_closure() {
    std::vector<std::size_t> ids;
    alive_polys(&ids);
    bool changed = false;
    for (std::size_t a : ids) {
      for (std::size_t b : ids) {
        if (!elems_[a].alive || !elems_[b].alive) continue;
        const Word& fl = elems_[a].poly.leading_word();
        const Word& gl = elems_[b].poly.leading_word();
        for (std::size_t len : overlap_lengths(fl, gl)) {
          Word w = fl * gl.suffix(gl.size() - len);
          auto [res, cert] = composition(a, b, w, fl.size() - len);
          if (adjoin(std::move(res), std::move(cert))) changed = true;
        }
      }
    }
    return changed;
  }

  GroebnerBasis finish() {
    std::vector<std::size_t> ids;
    alive_polys(&ids);
    // Tail interreduction; leading words form an antichain already.
    for (std::size_t k = 0; k < ids.size(); ++k) {
      std::vector<const Poly*> others;
      std::vector<std::size_t> other_ids;
      for (std::size_t j = 0; j < ids.size(); ++j) {
        if (j == k) continue;
        others.push_back(&elems_[ids[j]].poly);
        other_ids.push_back(ids[j]);
      }
      std::vector<RewriteStep> steps;
      Poly r = reduce_monic(elems_[ids[k]].poly, others, opts_.track_certificates ? &steps : nullptr);
      for (const auto& st : steps) {
        elems_[ids[k]].cert.add_scaled(-st.coeff, st.left, elems_[other_ids[st.relation]].cert, st.right);
      }
      elems_[ids[k]].poly = std::move(r);
    }
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      return order_(elems_[a].poly.leading_word(), elems_[b].poly.leading_word());
    });
    GroebnerBasis gb;
    gb.signature = sig_;
    gb.degree_cap = opts_.degree_cap;
    gb.status = truncated_ ? BasisStatus::Truncated : BasisStatus::Complete;
    gb.log = std::move(log_);
    for (auto& w : dropped_) {
      if (std::find(gb.dropped.begin(), gb.dropped.end(), w) == gb.dropped.end()) gb.dropped.push_back(std::move(w));
    }
    for (std::size_t id : ids) {
      gb.elements.push_back(elems_[id].poly);
      gb.ids.push_back(id);
      if (opts_.track_certificates) gb.certificates.push_back(elems_[id].cert.steps(order_));
    }
    return gb;
  }

  Signature sig_;
  WordOrder order_;
  CompletionOptions opts_;
  std::vector<Element> elems_;
  std::set<Pending, PendingLess> pending_;
  std::size_t seq_ = 0;
  bool truncated_ = false;
  std::vector<Word> dropped_;
  std::vector<CompositionLogEntry> log_;
};

std::vector<const Poly*> monic_view(const std::vector<Poly>& relations, std::vector<Poly>& storage) {
  storage.clear();
  storage.reserve(relations.size());
  std::vector<std::size_t> slots(relations.size(), SIZE_MAX);
  for (std::size_t k = 0; k < relations.size(); ++k) {
    if (relations[k].is_zero()) throw DomainError("zero relation in reduction set");
    if (!relations[k].leading_coeff().is_one()) {
      slots[k] = storage.size();
      storage.push_back(relations[k].monic());
    }
  }
  std::vector<const Poly*> out;
  for (std::size_t k = 0; k < relations.size(); ++k) {
    out.push_back(slots[k] == SIZE_MAX ? &relations[k] : &storage[slots[k]]);
  }
  return out;
}

}  // namespace

std::vector<Composition> find_compositions(const Poly& f, const Poly& g) {
  const Word& fl = f.leading_word();
  const Word& gl = g.leading_word();
  std::vector<Composition> out;
  for (std::size_t len : overlap_lengths(fl, gl)) {
    Composition c;
    c.left = f;
    c.right = g;
    c.overlap = fl * gl.suffix(gl.size() - len);
    c.left_cofactor = c.overlap.prefix(fl.size() - len);
    c.right_cofactor = gl.suffix(gl.size() - len);
    c.result = Poly(f.order());
    c.result.add_scaled(g.leading_coeff(), Word{}, f, c.right_cofactor);
    c.result.add_scaled(-f.leading_coeff(), c.left_cofactor, g, Word{});
    out.push_back(std::move(c));
  }
  return out;
}

bool leading_included(const Poly& f, const Poly& g) { return g.leading_word().contains(f.leading_word()); }

Poly reduce(const Poly& f, const std::vector<Poly>& relations) { return reduce(f, relations, nullptr); }

Poly reduce(const Poly& f, const std::vector<Poly>& relations, std::vector<RewriteStep>* certificate) {
  std::vector<Poly> storage;
  auto view = monic_view(relations, storage);
  return reduce_monic(f, view, certificate);
}

std::vector<Word> GroebnerBasis::leading_words() const {
  std::vector<Word> out;
  for (const auto& e : elements) out.push_back(e.leading_word());
  return out;
}

bool GroebnerBasis::star_closed() const {
  for (const auto& e : elements) {
    Poly s = e.star().monic();
    if (std::find(elements.begin(), elements.end(), s) == elements.end()) return false;
  }
  return true;
}

GroebnerBasis complete(const Presentation& input, const CompletionOptions& opts) {
  return Completer(input, opts).run(input);
}

GroebnerBasis basis_from_relations(const Presentation& input, std::size_t degree_cap) {
  GroebnerBasis gb;
  gb.signature = input.signature;
  gb.degree_cap = degree_cap;
  WordOrder ord = input.signature.word_order();
  for (const auto& r : input.relations) {
    if (!r.is_zero()) gb.elements.push_back(r.monic());
  }
  std::stable_sort(gb.elements.begin(), gb.elements.end(),
                   [&](const Poly& a, const Poly& b) { return ord(a.leading_word(), b.leading_word()); });
  for (std::size_t k = 0; k < gb.elements.size(); ++k) gb.ids.push_back(k);
  bool closed = true;
  for (std::size_t a = 0; a < gb.elements.size() && closed; ++a) {
    for (std::size_t b = 0; b < gb.elements.size() && closed; ++b) {
      if (a != b && leading_included(gb.elements[a], gb.elements[b])) closed = false;
      for (const auto& c : find_compositions(gb.elements[a], gb.elements[b])) {
        if (!reduce(c.result, gb.elements).is_zero()) {
          closed = false;
          break;
        }
      }
    }
  }
  gb.status = closed ? BasisStatus::Complete : BasisStatus::Truncated;
  return gb;
}

BWEnumeration::BWEnumeration(std::vector<Word> words, std::size_t degree_cap)
    : words_(std::move(words)), cap_(degree_cap) {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (!index_.emplace(words_[k], k + 1).second) throw std::invalid_argument("duplicate word in enumeration");
  }
}

std::optional<std::size_t> BWEnumeration::phi(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BWEnumeration BWEnumeration::truncated(std::size_t n) const {
  if (n > words_.size()) throw std::invalid_argument("enumeration has fewer than " + std::to_string(n) + " words");
  return BWEnumeration(std::vector<Word>(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(n)), cap_);
}

BWEnumeration enumerate_bw(const Signature& sig, const std::vector<Word>& leading, std::size_t degree_cap) {
  std::vector<Word> all{Word{}};
  std::vector<Word> frontier{Word{}};
  const auto letters = sig.letters();
  for (std::size_t len = 1; len <= degree_cap; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Letter l : letters) {
        Word c = w;
        c.push_back(l);
        // Every proper prefix already avoids the leading words, so only
        // suffixes can match.
        bool ok = std::none_of(leading.begin(), leading.end(), [&](const Word& lw) { return c.ends_with(lw); });
        if (ok) next.push_back(std::move(c));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  WordOrder ord = sig.word_order();
  std::sort(all.begin(), all.end(), ord);
  return BWEnumeration(std::move(all), degree_cap);
}

BWEnumeration enumerate_bw(const GroebnerBasis& gb, std::size_t degree_cap) {
  return enumerate_bw(gb.signature, gb.leading_words(), degree_cap);
}

Poly diamond(const Poly& f, const Poly& g, const GroebnerBasis& gb, bool allow_truncated) {
  if (!gb.complete() && !allow_truncated) {
    throw std::logic_error("diamond product needs a complete basis (basis is truncated)");
  }
  return gb.reduce(f * g);
}

MembershipResult ideal_member(const Poly& f, const GroebnerBasis& gb) {
  bool member = gb.reduce(f).is_zero();
  bool reliable = gb.complete() || f.degree() <= static_cast<int>(gb.degree_cap);
  return {member, reliable};
}

std::string to_string(BasisStatus s) { return s == BasisStatus::Complete ? "complete" : "truncated"; }

}  // namespace stargb
