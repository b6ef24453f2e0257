#include "stargb/poly.hpp"

namespace stargb {

Poly::Poly(WordOrder order, const Word& w, Scalar c) : terms_(std::move(order)) {
  if (!c.is_zero()) terms_.emplace(w, std::move(c));
}

Scalar Poly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void Poly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Poly::add_scaled(const Scalar& c, const Word& p, const Poly& f, const Word& q) {
  if (c.is_zero()) return;
  for (const auto& [w, d] : f.terms_) add_term(p * w * q, c * d);
}

std::pair<Word, Scalar> Poly::pop_leading() {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  auto node = terms_.extract(std::prev(terms_.end()));
  return {std::move(node.key()), std::move(node.mapped())};
}

const Word& Poly::leading_word() const {
  if (terms_.empty()) throw DomainError("leading word of the zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& Poly::leading_coeff() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

int Poly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

Poly Poly::bar() const {
  Scalar inv = leading_coeff().inverse();
  Poly r(order(), leading_word());
  r -= *this * inv;
  return r;
}

Poly Poly::monic() const { return *this * leading_coeff().inverse(); }

std::vector<Word> Poly::top_words() const {
  std::vector<Word> out;
  const int d = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend() && static_cast<int>(it->first.size()) == d; ++it) {
    out.push_back(it->first);
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  // Q(i)[a] has no zero divisors, so no term can vanish here.
  for (auto& [w, d] : terms_) d *= c;
  return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
  Poly r(f.order());
  for (const auto& [u, c] : f.terms_) {
    for (const auto& [v, d] : g.terms_) r.add_term(u * v, c * d);
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::star() const {
  Poly r(order());
  for (const auto& [w, c] : terms_) r.terms_.emplace(star_word(w), c.conj());
  return r;
}

Poly Poly::sandwich(const Word& p, const Word& q) const {
  Poly r(order());
  for (const auto& [w, c] : terms_) r.terms_.emplace(p * w * q, c);
  return r;
}

Poly Poly::instantiate(const Rational& value) const {
  Poly r(order());
  for (const auto& [w, c] : terms_) r.add_term(w, Scalar(c.evaluate(value)));
  return r;
}

bool Poly::parameter_free() const {
  for (const auto& [w, c] : terms_) {
    if (!c.is_constant()) return false;
  }
  return true;
}

}  // namespace stargb
