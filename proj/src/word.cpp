#include "stargb/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace stargb {

Word Word::sub(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::starts_with(const Word& p) const {
  return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
}

bool Word::ends_with(const Word& s) const {
  return s.size() <= size() && std::equal(s.begin(), s.end(), end() - static_cast<std::ptrdiff_t>(s.size()));
}

std::optional<std::size_t> Word::find(const Word& w, std::size_t from) const {
  if (w.size() + from > size()) return std::nullopt;
  auto it = std::search(begin() + static_cast<std::ptrdiff_t>(from), end(), w.begin(), w.end());
  if (it == end() && !w.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - begin());
}

std::vector<std::size_t> Word::occurrences(const Word& w) const {
  std::vector<std::size_t> out;
  if (w.empty() || w.size() > size()) return out;
  for (std::size_t p = 0; p + w.size() <= size(); ++p) {
    if (std::equal(w.begin(), w.end(), begin() + static_cast<std::ptrdiff_t>(p))) out.push_back(p);
  }
  return out;
}

bool Word::all_unstarred() const {
  return std::none_of(begin(), end(), [](Letter l) { return l.starred(); });
}

bool Word::all_starred() const {
  return std::all_of(begin(), end(), [](Letter l) { return l.starred(); });
}

Word star_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->star());
  return Word(std::move(out));
}

std::optional<Word> half_word(const Word& w) {
  if (w.size() % 2 != 0) return std::nullopt;
  const std::size_t h = w.size() / 2;
  for (std::size_t k = 0; k < h; ++k) {
    if (w[h + k] != w[h - 1 - k].star()) return std::nullopt;
  }
  return w.prefix(h);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : w) {
    h ^= l.code() + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

GenOrder GenOrder::starred_first(std::size_t generators) {
  GenOrder o;
  o.rank_.resize(2 * generators);
  const int n = static_cast<int>(generators);
  for (int i = 0; i < n; ++i) {
    o.rank_[Letter(static_cast<std::size_t>(i), true).code()] = 2 * n - 1 - i;
    o.rank_[Letter(static_cast<std::size_t>(i), false).code()] = n - 1 - i;
  }
  return o;
}

GenOrder GenOrder::from_descending(std::size_t generators, std::span<const Letter> descending) {
  if (descending.size() != 2 * generators) {
    throw std::invalid_argument("generator order must list all " + std::to_string(2 * generators) + " letters");
  }
  GenOrder o;
  o.rank_.assign(2 * generators, -1);
  int r = static_cast<int>(descending.size());
  for (Letter l : descending) {
    if (l.code() >= o.rank_.size()) throw std::invalid_argument("letter outside the alphabet in order");
    if (o.rank_[l.code()] != -1) throw std::invalid_argument("letter listed twice in order");
    o.rank_[l.code()] = --r;
  }
  return o;
}

std::vector<Letter> GenOrder::descending() const {
  std::vector<Letter> out(rank_.size());
  for (std::size_t code = 0; code < rank_.size(); ++code) {
    out[rank_.size() - 1 - static_cast<std::size_t>(rank_[code])] = Letter::from_code(static_cast<std::uint16_t>(code));
  }
  return out;
}

std::string to_string(GenOrder::Kind k) { return k == GenOrder::Kind::Deglex ? "deglex" : "stardouble"; }

GenOrder::Kind parse_order_kind(std::string_view text) {
  if (text == "deglex") return GenOrder::Kind::Deglex;
  if (text == "stardouble") return GenOrder::Kind::StarDouble;
  throw std::invalid_argument("unknown ordering '" + std::string(text) + "' (expected deglex or stardouble)");
}

namespace {

std::strong_ordering stardouble_compare(const Word& u, const Word& v, const GenOrder& ord) {
  const std::size_t n = u.size();
  std::size_t cu = 0, cv = 0;
  for (std::size_t i = 0; i < n; ++i) {
    cu += u[i].starred() ? 0 : 1;
    cv += v[i].starred() ? 0 : 1;
  }
  if (cu != cv) return cu <=> cv;
  // Unstarred letters, left to right.
  for (std::size_t i = 0, j = 0;; ++i, ++j) {
    while (i < n && u[i].starred()) ++i;
    while (j < n && v[j].starred()) ++j;
    if (i == n || j == n) break;
    if (u[i] != v[j]) return ord.rank(u[i]) <=> ord.rank(v[j]);
  }
  // Starred letters, right to left.
  for (std::size_t i = n, j = n;;) {
    while (i > 0 && !u[i - 1].starred()) --i;
    while (j > 0 && !v[j - 1].starred()) --j;
    if (i == 0 || j == 0) break;
    --i;
    --j;
    if (u[i] != v[j]) return ord.rank(u[i]) <=> ord.rank(v[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].starred() != v[i].starred()) return u[i].starred() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering word_compare(const Word& u, const Word& v, const GenOrder& ord) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  if (ord.kind() == GenOrder::Kind::StarDouble) return stardouble_compare(u, v, ord);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return ord.rank(u[i]) <=> ord.rank(v[i]);
  }
  return std::strong_ordering::equal;
}

}  // namespace stargb
