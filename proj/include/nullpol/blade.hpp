#pragma once

#include <vector>

#include "nullpol/multivector.hpp"

namespace nullpol {

/// A nonzero homogeneous k-vector that factors as a k-fold wedge of vectors.
/// Factorability is checked on construction for k <= 3 (dim NO(B) == k);
/// higher grades are trusted, since the pipeline only builds them as
/// max-grade parts of versors.
class Blade {
 public:
  explicit Blade(Multivector value);

  const Multivector& value() const noexcept { return value_; }
  int grade() const noexcept { return grade_; }

 private:
  Multivector value_;
  int grade_;
};

/// Outer product null space {v : v ^ B = 0}, as a basis of vectors.
std::vector<Multivector> opns(const Blade& b);
/// Inner product null space {v : v . B = 0}, as a basis of vectors.
std::vector<Multivector> ipns(const Blade& b);

/// dim NO(m) == grade(m); works for any grade.
bool is_blade(const Multivector& m);
bool is_null_blade(const Blade& b);
/// B ^ B == 0, the quadratic relation every 2-blade satisfies.
bool satisfies_plucker_relation(const Blade& b);

/// Highest nonzero grade component of g.
Blade max_grade_part(const Multivector& g);
inline Blade max_grade_part(const Versor& g) { return max_grade_part(g.value()); }

/// Coordinates of the vectors as columns of a dim x count matrix.
Matrix vectors_as_columns(std::span<const Multivector> vectors);

}  // namespace nullpol
