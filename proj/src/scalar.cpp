#include "nullpol/scalar.hpp"

#include <cctype>

#include "nullpol/errors.hpp"

namespace nullpol {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpq_class parse_rational(std::string_view text) {
  std::string s(trim(text));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw ParseError("empty rational literal");
  const auto slash = s.find('/');
  const auto valid_int = [](std::string_view d) {
    if (!d.empty() && d.front() == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("invalid rational literal '" + s + "'");
  } else {
    std::string_view num(s.data(), slash);
    std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
    if (!valid_int(num) || den.empty() || !valid_int(den) || den.front() == '-')
      throw ParseError("invalid rational literal '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("invalid rational literal '" + s + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

mpq_class parse_imaginary_coefficient(std::string_view s) {
  s = trim(s);
  if (s.empty() || s == "+") return mpq_class(1);
  if (s == "-") return mpq_class(-1);
  return parse_rational(s);
}

}  // namespace

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty scalar literal");
  if (s.back() != 'i') return Scalar(parse_rational(s));

  const std::string_view body = s.substr(0, s.size() - 1);
  // The real/imaginary split is the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(mpq_class(0), parse_imaginary_coefficient(body));
  return Scalar(parse_rational(body.substr(0, split)),
                parse_imaginary_coefficient(body.substr(split)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (is_real()) return Scalar(mpq_class(1) / re_);
  const mpq_class n = norm_squared();
  return Scalar(re_ / n, -im_ / n);
}

int Scalar::sign() const {
  if (!is_real()) throw ComplexScalar("sign of a non-real scalar " + str());
  return sgn(re_);
}

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  std::string out = re_.get_str();
  out += sgn(im_) < 0 ? '-' : '+';
  out += mpq_class(abs(im_)).get_str();
  out += 'i';
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (!o.is_real()) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (!o.is_real()) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    if (!is_real()) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return std::nullopt;
  mpz_class num = sqrt(q.get_num());
  mpz_class den = sqrt(q.get_den());
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Scalar> exact_sqrt(const Scalar& s, ScalarMode mode) {
  if (mode == ScalarMode::rational) {
    if (!s.is_real()) return std::nullopt;
    if (auto r = rational_sqrt(s.real())) return Scalar(*r);
    return std::nullopt;
  }
  const mpq_class& a = s.real();
  const mpq_class& b = s.imag();
  if (sgn(b) == 0) {
    if (auto r = rational_sqrt(a)) return Scalar(*r);
    if (auto r = rational_sqrt(-a)) return Scalar(mpq_class(0), *r);
    return std::nullopt;
  }
  // (x + iy)^2 = a + ib  =>  x^2 = (|z| + a)/2, y^2 = (|z| - a)/2, 2xy = b.
  const auto modulus = rational_sqrt(a * a + b * b);
  if (!modulus) return std::nullopt;
  const auto x = rational_sqrt((*modulus + a) / 2);
  const auto y = rational_sqrt((*modulus - a) / 2);
  if (!x || !y) return std::nullopt;
  mpq_class yy = *y;
  if (sgn(b) < 0) yy = -yy;
  return Scalar(*x, yy);
}

std::string to_string(ScalarMode mode) {
  return mode == ScalarMode::rational ? "rational" : "complex";
}

}  // namespace nullpol
