#pragma once

// Ready-made presentations: monomial algebras, A_{x^2}, enveloping algebras of
// Lie algebras, Wick-type relations, *-doubles, B_4, Q_4 and T_3.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stargb/presentation.hpp"

namespace stargb {

struct Preset {
  std::string name;
  Presentation presentation;
  /// Conditions this algebra is expected to satisfy ("kir", "corollary",
  /// "appropriate", "stardouble", "nonexpanding").
  std::vector<std::string> claims;
  /// Informational metadata, e.g. "no nonzero bounded representation".
  std::vector<std::string> flags;
  /// Default multiplication side for representation matrices.
  bool left_side = false;
};

/// Names: A_x2, monomial:<w1>,<w2>,..., uea-heisenberg, uea-so3, wick2, wick3,
/// B4, Q4, T3, T3double, double-c2. `alpha` instantiates the parameter of
/// B4/Q4/T3/T3double (nullopt keeps it symbolic); other presets ignore it.
/// Throws std::invalid_argument for unknown names.
Preset preset(std::string_view name, const std::optional<Rational>& alpha = std::nullopt);
std::vector<std::string> preset_names();

/// S u S* for relations over unstarred letters only; std::invalid_argument if
/// a starred letter occurs.
Presentation make_stardouble(const Presentation& p);

/// Monomial *-algebra with relations S u S*. Words use one-character
/// generator names, `*` for the involution and `^k` for powers: "xyx*,x^3".
Presentation make_monomial(std::string_view words);

/// Real structure constants [e_i, e_j] = sum_k c[i][j][k] e_k, with e_j* = -e_j.
/// Throws std::invalid_argument unless c is real and antisymmetric.
using StructureConstants = std::vector<std::vector<std::vector<Rational>>>;
Presentation make_uea(const StructureConstants& c);

/// Coefficients T[i][j][k][l] = T_ij^kl of a_i* a_j = sum_{k != l} T_ij^kl a_l a_k*
/// for i != j.
struct WickSpec {
  std::size_t n = 0;
  std::vector<std::vector<std::vector<std::vector<GaussRational>>>> T;

  explicit WickSpec(std::size_t n);
  GaussRational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) { return T[i][j][k][l]; }
  /// First (i, j, k, l) violating T_ij^kl = conj(T_ji^lk), 0-based.
  std::optional<std::array<std::size_t, 4>> symmetry_defect() const;
};
/// Throws std::invalid_argument on a symmetry defect.
Presentation make_wick(const WickSpec& spec);

}  // namespace stargb
