#pragma once

// The algebra A_{x^2} = <x, x* | x^2 = 0, x*^2 = 0> in detail: the word
// families u_k, v_k, a_m, b_m, the moment model of the inner product, the
// block-diagonal Gram matrix and the boundedness of left multiplication by x.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stargb/gram.hpp"
#include "stargb/repr.hpp"

namespace stargb {

/// f(t) = sum density[k] t^k, and alpha[m] = integral_0^1 t^{m+1} f(t) dt.
struct MomentModel {
  std::vector<Rational> density;
  std::vector<Rational> alpha;

  const Rational& moment(std::size_t m) const { return alpha.at(m); }
  /// n x n Hankel block: alpha_{i+j-1} (1-based i, j), or alpha_{i+j} when shifted.
  std::vector<std::vector<Rational>> hankel(std::size_t n, bool shifted) const;
};

/// Exact Sturm-sequence test that f > 0 on [0, 1].
bool positive_on_unit_interval(const std::vector<Rational>& f);
/// f = t^j (1 - t)^k g with g > 0 on [0, 1]: zeros only at the endpoints.
bool admissible_density(const std::vector<Rational>& f);
/// Moments alpha_0 .. alpha_{m_max}. Throws DomainError unless the density is admissible.
MomentModel moment_weights(const std::vector<Rational>& f, std::size_t m_max);

enum class X2Family { U, A, V, B };
std::string to_string(X2Family f);

/// u_k = x (x* x)^k, v_k = x* (x x*)^k (k >= 0); a_m = (x x*)^m, b_m = (x* x)^m (m >= 1).
Word x2_word(X2Family f, std::size_t index);
/// Family and index of a nonempty basis word of A_{x^2}.
std::optional<std::pair<X2Family, std::size_t>> x2_classify(const Word& w);
/// u_0 < u_1 < ... < a_1 < ... < v_0 < ... < b_1 < ..., all words up to `cap`.
/// The empty word is not included.
BWEnumeration x2_block_enumeration(std::size_t cap);
GroebnerBasis x2_basis();
/// weight(h) = mu(h h*) with mu(a_m) = mu(b_m) = alpha_m; positive words of
/// A_{x^2} are exactly a_m, b_m with m = |h|.
WeightFn x2_moment_weight(const MomentModel& model);

struct StudyReport {
  std::string name;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> notes;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  bool ok() const;
  bool check(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
};

/// Product table, cross-family products, Hankel positivity up to `hankel_n`
/// and the block-diagonal Gram matrix on words of length <= 2 k_max + 2.
StudyReport x2_block_structure(std::size_t k_max, const MomentModel& model, std::size_t hankel_n = 8);
/// Moment monotonicity, the norm ratios of x v_k and x b_k and the operator
/// norm of left multiplication by x on the words of length <= cap.
StudyReport x2_boundedness(const MomentModel& model, std::size_t k_max, std::size_t cap);

}  // namespace stargb
