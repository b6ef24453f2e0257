#pragma once

// Exact coefficients: Gaussian rationals Q(i) and polynomials over them in a
// single commuting real parameter (written `a` by default).

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stargb {

using Rational = mpq_class;

/// Thrown for operations outside their mathematical domain (leading word of
/// zero, inverse of zero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::string rational_text(const Rational& q);
Rational parse_rational(std::string_view text);

class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  /// |z|^2 as an exact rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "3", "-1/2", "2i", "-i", "(1/2+3i)".
  std::string text() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Element of Q(i)[a]. coeffs()[k] multiplies a^k; no trailing zeros are kept,
/// so zero is the empty vector and equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : Scalar(GaussRational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(GaussRational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  explicit Scalar(std::vector<GaussRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The parameter a itself.
  static Scalar parameter() { return Scalar(std::vector<GaussRational>{0, 1}); }

  const std::vector<GaussRational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == GaussRational(1); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree in the parameter; -1 for zero.
  int param_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Constant term as a Gaussian rational; throws unless is_constant().
  GaussRational constant() const;

  /// Conjugation maps i to -i and fixes the (real) parameter.
  Scalar conj() const;
  /// Inverse of a nonzero constant; parameter-dependent values are not units.
  Scalar inverse() const;
  /// Substitutes a = value.
  GaussRational evaluate(const Rational& value) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  /// Canonical text; `param` names the parameter. Compound values are wrapped
  /// in parentheses so the text can be juxtaposed with a word.
  std::string text(std::string_view param = "a") const;
  /// True when text() starts with a minus sign that can be factored out.
  bool is_negative_simple() const;

 private:
  void trim();
  std::vector<GaussRational> coeffs_;
};

}  // namespace stargb
