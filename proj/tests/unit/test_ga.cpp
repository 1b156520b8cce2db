#include <doctest.h>

#include "nullpol/errors.hpp"
#include "test_support.hpp"

using namespace nullpol;
using support::kblade;
using support::kvec;

namespace {

const AlgebraPtr& K() { return klein::algebra(); }
Multivector e(std::size_t i) { return Multivector::blade(K(), BladeMask{1} << (i - 1)); }
Multivector one() { return Multivector::scalar(K(), 1); }
Multivector num(const Scalar& s) { return Multivector::scalar(K(), s); }

}  // namespace

TEST_CASE("algebra construction") {
  CHECK(K()->dim() == 6);
  CHECK(K()->blade_count() == 64);
  CHECK(K()->signature().p == 3);
  CHECK(K()->signature().q == 3);
  CHECK(K()->metric(0, 3) == Scalar::fraction(1, 2));
  CHECK(K()->metric(0, 0).is_zero());
  const auto lie = Algebra::diagonal(4, 2);
  CHECK(lie->is_diagonal());
  CHECK(lie->signature().p == 4);
  CHECK(lie->signature().q == 2);
  CHECK(Algebra::diagonal(2, 1, 1)->is_degenerate());
  CHECK_THROWS_AS(Algebra::create(Matrix{{0, 1}, {0, 0}}), DimensionMismatch);
  CHECK_THROWS_AS(Algebra::create(Matrix(2, 3)), DimensionMismatch);
  CHECK(K()->blade_name(0b101001) == "e146");
}

TEST_CASE("geometric product examples") {
  CHECK((e(1) * e(1)).is_zero());
  CHECK(e(1) * e(2) == kblade("12"));
  CHECK(e(1) * e(4) == num(Scalar::fraction(1, 2)) + kblade("14"));
  CHECK(e(4) * e(1) == num(Scalar::fraction(1, 2)) - kblade("14"));
  CHECK_THROWS_AS(e(1) * Multivector::blade(Algebra::diagonal(3, 3), 1), AlgebraMismatch);
}

TEST_CASE("outer product examples") {
  CHECK(outer_product(e(1), e(1)).is_zero());
  CHECK(outer_product(e(1), e(4)) == kblade("14"));
  CHECK(outer_product(e(1) + e(4), e(2) + e(5)) == kblade("12") + kblade("15") - kblade("24") + kblade("45"));
}

TEST_CASE("inner product examples") {
  CHECK(inner_product(e(1), e(4)) == num(Scalar::fraction(1, 2)));
  CHECK(inner_product(e(1), e(2)).is_zero());
  const Multivector c = inner_product(e(1), kblade("123456"));
  CHECK(c.homogeneous_grade() == 5);
  CHECK(c == kblade("12356", Scalar::fraction(-1, 2)));
}

TEST_CASE("grade projection") {
  const Multivector a = num(5) + kblade("12", 3);
  CHECK(grade_project(a, 0) == num(5));
  CHECK(grade_project(a, 2) == kblade("12", 3));
  CHECK(grade_project(a, 1).is_zero());
  CHECK_THROWS_AS(grade_project(a, 7), GradeOutOfRange);

  const Multivector g = klein::from_table_coordinates(support::listing_coords(support::paper_g_plus()), Parity::even);
  CHECK(g.max_grade() == 6);
  const Multivector top = grade_project(g, 6);
  const auto ratio = top.coeff(K()->full_mask()) / kblade("123456", -1).coeff(K()->full_mask());
  CHECK(ratio.sign() > 0);
  CHECK(klein::table_coordinates(top, Parity::even)[32] == Scalar(-1));
}

TEST_CASE("conjugation and main involution") {
  CHECK(conjugate(num(5)) == num(5));
  CHECK(conjugate(e(1)) == -e(1));
  CHECK(conjugate(kblade("12")) == -kblade("12"));
  CHECK(main_involution(e(1)) == -e(1));
  CHECK(main_involution(kblade("12")) == kblade("12"));
  CHECK(main_involution(one() + e(1) + kblade("12")) == one() - e(1) + kblade("12"));
  // Non-orthogonal pair: e4 e1 reversed.
  CHECK(conjugate(e(1) * e(4)) == e(4) * e(1));
}

TEST_CASE("norm, inverse, sandwich examples") {
  CHECK(norm(Versor(one())) == Scalar(1));
  CHECK(norm(Versor(e(1))).is_zero());
  CHECK(norm(Versor(e(1) + e(4))) == Scalar(-1));

  CHECK(versor_inverse(Versor(one())).value() == one());
  // (e1+e4)^2 = 1, so the vector is its own inverse.
  CHECK(versor_inverse(Versor(e(1) + e(4))).value() == e(1) + e(4));
  CHECK((e(1) + e(4)) * versor_inverse(Versor(e(1) + e(4))).value() == one());
  CHECK_THROWS_AS(versor_inverse(Versor(e(1))), NullVersor);
  CHECK_THROWS_AS(Versor(one() + e(1)), NotAVersor);

  CHECK(sandwich(e(1) + e(4), e(1)) == e(4));
  CHECK(sandwich(e(1) + e(4), e(2)) == -e(2));
  const Multivector x = kblade("135", 3) + one();
  CHECK(sandwich(one(), x) == x);
}

TEST_CASE("pseudoscalar and dual") {
  CHECK(pseudoscalar(K()) == kblade("123456"));
  CHECK(pseudoscalar(lie::algebra()) == Multivector::blade(lie::algebra(), 0b111111));
  CHECK_THROWS_AS(pseudoscalar(Algebra::diagonal(2, 2, 1)), DegenerateForm);
  CHECK(dual(one()) == kblade("123456"));

  support::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Multivector> vs;
    const int k = static_cast<int>(rng.integer(1, 5));
    Multivector b = one();
    for (int i = 0; i < k; ++i) b = outer_product(b, rng.vector(K()));
    if (b.is_zero()) continue;
    CHECK(support::proportional(dual(dual(b)), b));
  }
}

TEST_CASE("center basis printed cases") {
  const auto scalar_only = [](const std::vector<Multivector>& c) { return c.size() == 1 && c[0].is_scalar(); };
  CHECK(scalar_only(center_basis(K(), false)));
  const auto even6 = center_basis(K(), true);
  REQUIRE(even6.size() == 2);
  CHECK(even6[1] == kblade("123456"));
  const auto a3 = Algebra::diagonal(2, 1);
  const auto c3 = center_basis(a3, false);
  REQUIRE(c3.size() == 2);
  CHECK(c3[1] == Multivector::blade(a3, 0b111));
  CHECK_THROWS_AS(center_basis(Algebra::diagonal(2, 1, 1), false), DegenerateForm);
}

TEST_CASE("center basis commutes with every basis blade and spans the commutant") {
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto alg = Algebra::diagonal(static_cast<int>((n + 1) / 2), static_cast<int>(n / 2));
    for (bool even_only : {false, true}) {
      const auto c = center_basis(alg, even_only);
      for (const auto& z : c)
        for (BladeMask m = 0; m <= alg->full_mask(); ++m) {
          if (even_only && grade_of(m) % 2 != 0) continue;
          const Multivector b = Multivector::blade(alg, m);
          CHECK(z * b == b * z);
        }
      CHECK(support::commutant(alg, even_only).size() == c.size());
    }
  }
  const auto klein_even = support::commutant(K(), true);
  CHECK(klein_even.size() == 2);
}

TEST_CASE("generator relations") {
  for (const auto& alg : {K(), lie::algebra()})
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        const Multivector a = Multivector::blade(alg, BladeMask{1} << i), b = Multivector::blade(alg, BladeMask{1} << j);
        CHECK(a * b + b * a == Multivector::scalar(alg, Scalar(2) * alg->metric(i, j)));
      }
}

TEST_CASE("algebra properties on random elements") {
  support::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Multivector a = rng.multivector(K(), 4), b = rng.multivector(K(), 4), c = rng.multivector(K(), 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(conjugate(a * b) == conjugate(b) * conjugate(a));
    CHECK(main_involution(a * b) == main_involution(a) * main_involution(b));
    CHECK(main_involution(conjugate(a)) == conjugate(main_involution(a)));
    CHECK(a * b == support::orthogonal_basis_product(a, b));

    const Multivector v = rng.vector(K()), w = rng.vector(K());
    CHECK(v * v == Multivector::scalar(K(), quadratic(v)));
    if (!v.is_zero()) CHECK(norm(Versor(v)) == -quadratic(v));
    CHECK(v * w == inner_product(v, w) + outer_product(v, w));
  }
}

TEST_CASE("versor recognition") {
  support::Rng rng(23);
  for (int k = 1; k <= 4; ++k) CHECK(is_versor(rng.versor(K(), k).value()));
  CHECK_FALSE(is_versor(one() + e(1)));
  CHECK_FALSE(is_versor(e(1)));
  CHECK(is_versor(one() + kblade("12")));
}
