#include <doctest.h>

#include "nullpol/errors.hpp"
#include "test_support.hpp"

using namespace nullpol;
using support::kblade;
using support::kvec;

namespace {

const AlgebraPtr& K() { return klein::algebra(); }

// Dimension of the span of vs together with ws equals that of each alone.
bool same_span(const std::vector<Multivector>& vs, const std::vector<Multivector>& ws) {
  if (vs.size() != ws.size()) return false;
  if (vs.empty()) return true;
  std::vector<Multivector> all = vs;
  all.insert(all.end(), ws.begin(), ws.end());
  return rank(vectors_as_columns(all)) == vs.size() && rank(vectors_as_columns(vs)) == vs.size();
}

Multivector random_blade(support::Rng& rng, int k) {
  for (;;) {
    Multivector b = Multivector::scalar(K(), 1);
    for (int i = 0; i < k; ++i) b = outer_product(b, rng.vector(K()));
    if (!b.is_zero()) return b;
  }
}

Multivector paper_g() {
  return klein::from_table_coordinates(support::listing_coords(support::paper_g_plus()), Parity::even);
}

}  // namespace

TEST_CASE("blade construction") {
  CHECK(Blade(kblade("12")).grade() == 2);
  CHECK_THROWS_AS(Blade(Multivector(K())), NotABlade);
  CHECK_THROWS_AS(Blade(kblade("12") + kblade("1")), NotABlade);
  CHECK_THROWS_AS(Blade(kblade("12") + kblade("34")), NotABlade);
  CHECK(is_blade(kblade("12") + kblade("13")));
  CHECK_FALSE(is_blade(kblade("12") + kblade("34")));
}

TEST_CASE("opns examples") {
  CHECK(opns(Blade(kblade("123456"))).size() == 6);
  CHECK(same_span(opns(Blade(kblade("12"))), {kvec({1, 0, 0, 0, 0, 0}), kvec({0, 1, 0, 0, 0, 0})}));

  const Multivector g1 = paper_g() * support::paper_vectors()[0];
  const Blade top = max_grade_part(g1);
  REQUIRE(top.grade() == 5);
  const auto space = opns(top);
  CHECK(space.size() == 5);
  for (const auto& v : space) {
    const auto a = v.vector_coords();
    CHECK(a[0] - a[1] - Scalar(3) * a[2] + Scalar(4) * a[4] + Scalar(4) * a[5] == Scalar(0));
  }
}

TEST_CASE("max grade part examples") {
  const Blade g6 = max_grade_part(paper_g());
  CHECK(g6.grade() == 6);
  CHECK(support::proportional(g6.value(), kblade("123456", -1)));

  const Multivector expected = kblade("23456") - kblade("12345", 4) + kblade("12346", 4) - kblade("12456", 3) + kblade("13456");
  CHECK(support::proportional(max_grade_part(paper_g() * support::paper_vectors()[0]).value(), expected));

  const Blade seven = max_grade_part(Multivector::scalar(K(), 7));
  CHECK(seven.grade() == 0);
  CHECK(seven.value() == Multivector::scalar(K(), 7));
}

TEST_CASE("ipns examples") {
  CHECK(ipns(Blade(kblade("123456"))).empty());
  CHECK(same_span(ipns(Blade(kblade("1"))), {kvec({1, 0, 0, 0, 0, 0}), kvec({0, 1, 0, 0, 0, 0}), kvec({0, 0, 1, 0, 0, 0}),
                                             kvec({0, 0, 0, 0, 1, 0}), kvec({0, 0, 0, 0, 0, 1})}));
}

TEST_CASE("null blades") {
  CHECK(is_null_blade(Blade(kblade("12"))));
  CHECK_FALSE(is_null_blade(Blade(outer_product(kvec({1, 0, 0, 1, 0, 0}), kvec({0, 1, 0, 0, 1, 0})))));
  CHECK(is_null_blade(Blade(kblade("1"))));
  CHECK(satisfies_plucker_relation(Blade(kblade("12") + kblade("13"))));
  CHECK_THROWS_AS(satisfies_plucker_relation(Blade(kblade("123"))), GradeOutOfRange);
}

TEST_CASE("null spaces of random blades") {
  support::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = static_cast<int>(rng.integer(1, 5));
    const Blade b(random_blade(rng, k));
    const auto o = opns(b), i = ipns(b);
    CHECK(o.size() == static_cast<std::size_t>(k));
    CHECK(i.size() == static_cast<std::size_t>(6 - k));
    for (const auto& v : o) CHECK(outer_product(v, b.value()).is_zero());
    for (const auto& v : i) CHECK(inner_product(v, b.value()).is_zero());
    CHECK(same_span(i, opns(Blade(dual(b.value())))));
  }
}

TEST_CASE("max grade of a product of independent vectors") {
  support::Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = static_cast<int>(rng.integer(1, 6));
    std::vector<Multivector> vs;
    for (int i = 0; i < k; ++i) vs.push_back(rng.invertible_vector(K()));
    if (rank(vectors_as_columns(vs)) != static_cast<std::size_t>(k)) continue;
    const Versor g = Versor::from_vectors(K(), vs);
    CHECK(max_grade_part(g).grade() == k);
  }
}
