#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "nullpol/scalar.hpp"

namespace nullpol {

using Column = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::span<const Column> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> entries() const noexcept { return data_; }
  Column column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_real() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
Column mat_vec(const Matrix& a, std::span<const Scalar> v);

/// Basis of the kernel. Each vector has integer entries with content 1 and a
/// positive first nonzero entry (for complex entries: the first nonzero entry
/// is a positive integer and the gcd of all integer parts is 1).
std::vector<Column> nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Fraction-free (Bareiss) elimination.
Scalar determinant(const Matrix& m);

/// s with a == s * b, if one exists and b is nonzero.
std::optional<Scalar> proportionality(const Matrix& a, const Matrix& b);
std::optional<Scalar> proportionality(std::span<const Scalar> a, std::span<const Scalar> b);

/// Index of the first nonzero entry in row-major order.
std::optional<std::size_t> first_nonzero(std::span<const Scalar> v);

/// Scales a nonzero vector to integer entries with content 1 and a positive
/// first nonzero entry.
Column normalize_integral(std::span<const Scalar> v);

}  // namespace nullpol
