#include "nullpol/blade.hpp"

#include <map>

#include "nullpol/errors.hpp"

namespace nullpol {
namespace {

// Null space of the linear map v -> op(e_i, B) over the grade-1 coordinates.
template <class Op>
std::vector<Multivector> solve_null_space(const Multivector& b, Op op) {
  const auto& alg = b.algebra();
  const std::size_t n = alg->dim();
  std::vector<Multivector> images;
  std::map<BladeMask, std::size_t> row_of;
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(op(Multivector::blade(alg, BladeMask{1} << i), b));
    for (const auto& [m, c] : images.back().terms()) row_of.try_emplace(m, 0);
  }
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;

  Matrix map(row_of.size(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [m, c] : images[i].terms()) map(row_of.at(m), i) = c;

  std::vector<Multivector> out;
  for (const auto& v : nullspace(map)) out.push_back(Multivector::vector(alg, v));
  return out;
}

}  // namespace

Blade::Blade(Multivector value) : value_(std::move(value)) {
  const auto g = value_.homogeneous_grade();
  if (!g) throw NotABlade(value_.is_zero() ? "zero is not a blade" : "inhomogeneous element " + value_.str());
  grade_ = *g;
  if (grade_ <= 3 && !is_blade(value_)) throw NotABlade("not a wedge of vectors: " + value_.str());
}

std::vector<Multivector> opns(const Blade& b) { return solve_null_space(b.value(), outer_product); }

std::vector<Multivector> ipns(const Blade& b) { return solve_null_space(b.value(), inner_product); }

bool is_blade(const Multivector& m) {
  const auto g = m.homogeneous_grade();
  if (!g) return false;
  return static_cast<int>(solve_null_space(m, outer_product).size()) == *g;
}

bool is_null_blade(const Blade& b) { return (b.value() * b.value()).is_zero(); }

bool satisfies_plucker_relation(const Blade& b) {
  if (b.grade() != 2) throw GradeOutOfRange("the Plucker relation check applies to 2-blades");
  return outer_product(b.value(), b.value()).is_zero();
}

Blade max_grade_part(const Multivector& g) {
  if (g.is_zero()) throw NotABlade("zero has no maximal grade part");
  return Blade(grade_project(g, g.max_grade()));
}

Matrix vectors_as_columns(std::span<const Multivector> vectors) {
  std::vector<Column> cols;
  std::size_t n = 0;
  for (const auto& v : vectors) {
    cols.push_back(v.vector_coords());
    n = cols.back().size();
  }
  return Matrix::from_columns(cols, n);
}

}  // namespace nullpol
