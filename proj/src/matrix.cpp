#include "nullpol/matrix.hpp"

#include <utility>

#include "nullpol/errors.hpp"

namespace nullpol {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const Column> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Column Matrix::column(std::size_t c) const {
  Column out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto& s : data_)
    if (!s.is_real()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Matrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("inner dimensions differ: " + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

Column mat_vec(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Column out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

namespace {

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form; the pivot in each column is the first nonzero
// entry at or below the current row.
Echelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

std::vector<Column> nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Column> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Column v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(normalize_integral(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

Scalar determinant(const Matrix& input) {
  if (!input.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  Matrix m = input;
  Scalar prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

std::optional<std::size_t> first_nonzero(std::span<const Scalar> v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) return k;
  return std::nullopt;
}

std::optional<Scalar> proportionality(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) return std::nullopt;
  const auto k = first_nonzero(b);
  if (!k) return std::nullopt;
  const Scalar s = a[*k] / b[*k];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != s * b[i]) return std::nullopt;
  return s;
}

std::optional<Scalar> proportionality(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  return proportionality(a.entries(), b.entries());
}

Column normalize_integral(std::span<const Scalar> v) {
  const auto k = first_nonzero(v);
  if (!k) throw std::domain_error("cannot normalize the zero vector");
  const Scalar lead = v[*k].inverse();
  Column out(v.begin(), v.end());
  mpz_class den_lcm = 1;
  for (auto& x : out) {
    x *= lead;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.real().get_den_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.imag().get_den_mpz_t());
  }
  mpz_class content = 0;
  for (auto& x : out) {
    x *= Scalar(mpq_class(den_lcm));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.real().get_num_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.imag().get_num_mpz_t());
  }
  if (content != 1) {
    const Scalar inv(mpq_class(mpz_class(1), content));
    for (auto& x : out) x *= inv;
  }
  return out;
}

}  // namespace nullpol
