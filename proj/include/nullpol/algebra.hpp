#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nullpol/matrix.hpp"
#include "nullpol/scalar.hpp"

namespace nullpol {

/// Bit i set <=> generator e_{i+1} is present. The mask names the wedge
/// monomial e_{i1} ^ ... ^ e_{ik} with ascending indices.
using BladeMask = std::uint32_t;

struct BladeTerm {
  BladeMask mask;
  Scalar coeff;
};

inline int grade_of(BladeMask m) noexcept { return __builtin_popcount(m); }

struct Signature {
  int p = 0;
  int q = 0;
  int r = 0;
};

/// Sign of reordering e_a ^ e_b into ascending order; 0 if they share a
/// generator.
int wedge_sign(BladeMask a, BladeMask b) noexcept;

/// Inertia of a real symmetric matrix, by rational congruence diagonalization.
Signature inertia(const Matrix& form);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// The Clifford algebra of a real symmetric bilinear form b, e_i e_j + e_j e_i
/// = 2 b(e_i, e_j). Storage is in the wedge basis, so every term is pure
/// grade even for a non-orthogonal form.
class Algebra {
 public:
  static constexpr std::size_t max_dim = 16;

  /// Throws DimensionMismatch unless `form` is square, real, symmetric and of
  /// dimension at most max_dim.
  static AlgebraPtr create(Matrix form);
  /// Diagonal form with p entries +1, then q entries -1, then r zeros.
  static AlgebraPtr diagonal(int p, int q, int r = 0);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t blade_count() const noexcept { return std::size_t{1} << dim_; }
  BladeMask full_mask() const noexcept { return static_cast<BladeMask>(blade_count() - 1); }
  const Matrix& form() const noexcept { return form_; }
  const Scalar& metric(std::size_t i, std::size_t j) const { return form_(i, j); }
  bool is_diagonal() const noexcept { return diagonal_; }

  /// Inertia of the form, by rational congruence diagonalization.
  Signature signature() const noexcept { return signature_; }
  bool is_degenerate() const noexcept { return signature_.r != 0; }

  /// e_a e_b expanded in the wedge basis.
  std::vector<BladeTerm> blade_product(BladeMask a, BladeMask b) const;

  /// Calls fn(mask, coeff) for each term of e_a e_b without copying.
  template <class Fn>
  void for_each_product_term(BladeMask a, BladeMask b, Fn&& fn) const {
    if (diagonal_) {
      const Scalar c = diagonal_product_coeff(a, b);
      if (!c.is_zero()) fn(a ^ b, c);
      return;
    }
    if (!table_.empty()) {
      for (const auto& t : table_[(std::size_t{a} << dim_) | b]) fn(t.mask, t.coeff);
      return;
    }
    for (const auto& t : compute_product(a, b)) fn(t.mask, t.coeff);
  }

  std::string blade_name(BladeMask m) const;

  bool same_as(const Algebra& o) const noexcept {
    return this == &o || (dim_ == o.dim_ && form_ == o.form_);
  }

 private:
  explicit Algebra(Matrix form);

  Scalar diagonal_product_coeff(BladeMask a, BladeMask b) const;
  std::vector<BladeTerm> compute_product(BladeMask a, BladeMask b) const;
  std::vector<BladeTerm> vector_times_blade(std::size_t i, BladeMask m) const;
  std::vector<BladeTerm> contract_vector(std::size_t i, BladeMask m) const;
  void build_table();

  std::size_t dim_;
  Matrix form_;
  bool diagonal_;
  Signature signature_;
  // Indexed by (a << dim) | b; filled for non-diagonal forms with dim <= 8.
  std::vector<std::vector<BladeTerm>> table_;
};

}  // namespace nullpol
