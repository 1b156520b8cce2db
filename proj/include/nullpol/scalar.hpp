#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace nullpol {

enum class ScalarMode { rational, complex };

/// Exact element of Q(i). Both parts are canonical GMP rationals, so equality
/// is structural. A real scalar simply has a zero imaginary part.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar fraction(long num, long den);
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Accepts "p", "p/q", "a+bi", "a-bi", "bi", "i", "-i".
  static Scalar parse(std::string_view text);

  const mpq_class& real() const noexcept { return re_; }
  const mpq_class& imag() const noexcept { return im_; }

  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;
  /// |z|^2, always rational.
  mpq_class norm_squared() const { return re_ * re_ + im_ * im_; }

  /// Sign of a real scalar; throws ComplexScalar otherwise.
  int sign() const;

  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Square root of a non-negative rational, if it is a perfect square.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

/// Square root in the field selected by `mode`: Q for rational mode (real
/// input only), Q(i) for complex mode. Empty when the root leaves the field.
std::optional<Scalar> exact_sqrt(const Scalar& s, ScalarMode mode);

std::string to_string(ScalarMode mode);

}  // namespace nullpol
