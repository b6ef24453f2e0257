#include "stargb/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace stargb {

std::string rational_text(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Rational n = norm2();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRational::text() const {
  if (sgn(im_) == 0) return rational_text(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_text(im_) + "i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + rational_text(re_);
  if (imag[0] != '-') out += "+";
  return out + imag + ")";
}

void Scalar::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussRational Scalar::constant() const {
  if (!is_constant()) throw DomainError("scalar depends on the parameter");
  return coeffs_.empty() ? GaussRational() : coeffs_[0];
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = c.conj();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (!is_constant()) throw DomainError("parameter-dependent scalar is not invertible");
  return Scalar(coeffs_[0].inverse());
}

GaussRational Scalar::evaluate(const Rational& value) const {
  GaussRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= GaussRational(value);
    acc += *it;
  }
  return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Scalar(std::move(out));
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

std::string power_text(std::string_view param, std::size_t k) {
  std::string s(param);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

// One term c a^k, k >= 1, without surrounding parentheses.
std::string param_term_text(const GaussRational& c, std::string_view param, std::size_t k) {
  if (c == GaussRational(1)) return power_text(param, k);
  if (c == GaussRational(-1)) return "-" + power_text(param, k);
  return c.text() + " " + power_text(param, k);
}

}  // namespace

std::string Scalar::text(std::string_view param) const {
  if (coeffs_.empty()) return "0";
  std::vector<std::string> parts;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    parts.push_back(k == 0 ? coeffs_[k].text() : param_term_text(coeffs_[k], param, k));
  }
  if (parts.size() == 1) return parts[0];
  std::string out = "(" + parts[0];
  for (std::size_t p = 1; p < parts.size(); ++p) {
    if (parts[p][0] == '-') {
      out += " - " + parts[p].substr(1);
    } else {
      out += " + " + parts[p];
    }
  }
  return out + ")";
}

bool Scalar::is_negative_simple() const {
  std::string t = text();
  return !t.empty() && t[0] == '-';
}

}  // namespace stargb
