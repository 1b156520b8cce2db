#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nullpol/algebra.hpp"

namespace nullpol {

/// Sparse multivector over a shared algebra. No zero coefficients are stored.
class Multivector {
 public:
  using Terms = std::map<BladeMask, Scalar>;

  explicit Multivector(AlgebraPtr algebra);
  Multivector(AlgebraPtr algebra, Terms terms);

  static Multivector scalar(AlgebraPtr algebra, const Scalar& s);
  static Multivector blade(AlgebraPtr algebra, BladeMask mask, const Scalar& coeff = 1);
  /// Grade-1 element sum_i coords[i] e_{i+1}.
  static Multivector vector(AlgebraPtr algebra, std::span<const Scalar> coords);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Terms& terms() const noexcept { return terms_; }
  Scalar coeff(BladeMask m) const;
  Scalar scalar_part() const { return coeff(0); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_scalar() const;
  bool is_real() const;
  /// Highest grade present, -1 for zero.
  int max_grade() const;
  /// Grade of a homogeneous nonzero element; empty otherwise.
  std::optional<int> homogeneous_grade() const;
  /// Grade-1 coordinates (length dim); throws GradeOutOfRange if other grades
  /// are present.
  std::vector<Scalar> vector_coords() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Scalar& s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Scalar& s) { return a *= s; }
  friend Multivector operator*(const Scalar& s, Multivector a) { return a *= s; }
  Multivector operator-() const { return *this * Scalar(-1); }

  /// Exact term-wise equality within the same algebra.
  friend bool operator==(const Multivector& a, const Multivector& b);

  /// e.g. "7 + 6*e12 - 6*e13"; terms ordered by grade, then index list.
  std::string str() const;

 private:
  void check_same(const Multivector& o) const;

  AlgebraPtr algebra_;
  Terms terms_;
};

Multivector geometric_product(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) { return geometric_product(a, b); }

/// Generalized outer product, [A_k B_l]_{k+l} summed over grade pairs.
Multivector outer_product(const Multivector& a, const Multivector& b);
/// Generalized inner product, [A_k B_l]_{|k-l|} summed over grade pairs.
Multivector inner_product(const Multivector& a, const Multivector& b);

Multivector grade_project(const Multivector& a, int k);
/// Anti-involution with e_i* = -e_i.
Multivector conjugate(const Multivector& a);
/// Automorphism alpha: sign (-1)^k on grade k.
Multivector main_involution(const Multivector& a);

/// b(a, c) for grade-1 a, c.
Scalar bilinear(const Multivector& a, const Multivector& c);
inline Scalar quadratic(const Multivector& a) { return bilinear(a, a); }

/// Top-grade wedge blade e_1 ^ ... ^ e_n. Throws DegenerateForm for r != 0.
Multivector pseudoscalar(const AlgebraPtr& algebra);
/// a J.
Multivector dual(const Multivector& a);

/// Basis of the center of the algebra (or of its even part), following the
/// parity of n. Throws DegenerateForm for degenerate forms, whose center is
/// larger.
std::vector<Multivector> center_basis(const AlgebraPtr& algebra, bool even_only);

enum class Parity { even, odd };

/// A product of invertible vectors, stored projectively (N(g) is not
/// normalized). Construction only enforces parity homogeneity; use
/// is_versor() for the full Clifford-group test.
class Versor {
 public:
  explicit Versor(Multivector value);
  Versor(Multivector value, std::vector<Multivector> witness);
  static Versor from_vectors(const AlgebraPtr& algebra, std::span<const Multivector> vectors);

  const Multivector& value() const noexcept { return value_; }
  Parity parity() const noexcept { return parity_; }
  const std::optional<std::vector<Multivector>>& witness() const noexcept { return witness_; }

 private:
  Multivector value_;
  Parity parity_;
  std::optional<std::vector<Multivector>> witness_;
};

/// N(v) = v v*. Throws NotAVersor when the product is not a scalar.
Scalar norm(const Versor& v);
/// v* / N(v). Throws NullVersor when N(v) = 0.
Versor versor_inverse(const Versor& v);
/// alpha(g) x g*. Defined for any g, invertible or not.
Multivector sandwich(const Multivector& g, const Multivector& x);
inline Multivector sandwich(const Versor& g, const Multivector& x) { return sandwich(g.value(), x); }

/// Parity homogeneous, N(g) a nonzero scalar, and alpha(g) e_i g* is a vector
/// for every generator.
bool is_versor(const Multivector& g);

/// Product of the given vectors, left to right (scalar 1 for an empty list).
Multivector product_of(const AlgebraPtr& algebra, std::span<const Multivector> factors);

}  // namespace nullpol
