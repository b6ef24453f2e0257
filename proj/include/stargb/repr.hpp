#pragma once

// Truncated regular representation on basis words: multiplication matrices
// with an overflow mask, the faithfulness probe, the exact adjoint identity
// and operator-norm estimates in the Gram inner product.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stargb/gram.hpp"
#include "stargb/starcheck.hpp"

namespace stargb {

/// Right: b -> b z (the representation L_z). Left: b -> z b.
enum class Side { Left, Right };
std::string to_string(Side s);

struct RepMatrix {
  Poly z;
  Side side = Side::Right;
  BWEnumeration bw;
  /// columns[j] is the sparse image of bw.word(j + 1): (row index, value), 0-based.
  std::vector<std::vector<std::pair<std::size_t, GaussRational>>> columns;
  /// Column j overflows the cap; its image is not recorded.
  std::vector<bool> masked;

  std::size_t size() const { return columns.size(); }
  GaussRational at(std::size_t row, std::size_t col) const;
  std::vector<std::size_t> unmasked() const;
};

/// Mask: exactly the words b with |b| + deg(z) > cap of the enumeration.
RepMatrix regular_matrix(const Poly& z, const GroebnerBasis& gb, const BWEnumeration& bw, Side side);

struct ProbeResult {
  bool found = false;
  bool standard_witness = false;  // the witness is w1* for w1 the leading word of f
  Word witness;
  Poly image;  // witness * f in the quotient
  Word output_word;
  GaussRational output_coeff;
};

/// Random combination of 1..max_terms enumerated words with nonzero
/// Gaussian-integer coefficients of modulus at most 3 per part.
Poly random_combination(const BWEnumeration& bw, const WordOrder& ord, std::mt19937_64& rng, std::size_t max_terms = 4);

/// Looks for a basis word b with b f != 0 in the quotient. Throws
/// std::invalid_argument when f reduces to zero. found = false means the
/// enumeration ran out, not that the representation is not faithful.
ProbeResult faithfulness_probe(const Poly& f, const GroebnerBasis& gb, const BWEnumeration& bw);

/// <u z, v> = <u, v z*> for all enumerated u, v with |u|, |v| <= cap - deg(z).
/// The Gram matrix must cover every basis word up to its enumeration's cap.
CheckReport adjoint_check(const Poly& z, const GroebnerBasis& gb, const GramMatrix& gram);

struct NormReport {
  double norm = 0;
  double residual = 0;
  std::size_t dimension = 0;  // unmasked columns
};

/// Operator norm of the unmasked block with respect to the Gram inner product.
/// The Gram-orthonormalization is exact; only the final Hermitian eigenvalue
/// problem is solved in double precision.
NormReport norm_estimate(const RepMatrix& m, const GramMatrix& gram);

nlohmann::ordered_json rep_to_json(const RepMatrix& m, const Signature& sig, const NormReport* norm);

}  // namespace stargb
