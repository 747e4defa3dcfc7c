#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace spherelab {

using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" into a canonical rational. Decimal points are
/// rejected; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text (or "p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Exact square root when q >= 0 is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Exact Gaussian rational re + i*im.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re) : re_(std::move(re)), im_(0) {  // NOLINT
    re_.canonicalize();
  }
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar conj() const { return {re_, -im_}; }
  /// |x|^2, always an exact rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error on zero.
  ExactScalar inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  ExactScalar& operator+=(const ExactScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses "a", "bi", "a+bi", "a-bi" (a, b rationals; "i" alone means 1i).
ExactScalar parse_scalar(std::string_view text);
std::string to_string(const ExactScalar& x);

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

}  // namespace spherelab
