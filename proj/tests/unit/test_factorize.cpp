#include <doctest.h>

#include "nullpol/errors.hpp"
#include "nullpol/io.hpp"
#include "test_support.hpp"

using namespace nullpol;
using namespace nullpol::klein;
using support::kblade;
using support::kvec;

namespace {

const AlgebraPtr& K() { return algebra(); }

Multivector paper_g() { return from_table_coordinates(support::listing_coords(support::paper_g_plus()), Parity::even); }

Multivector table_multivector(std::initializer_list<std::pair<const char*, long>> terms) {
  Multivector m(K());
  for (const auto& [name, c] : terms) m += kblade(name, c);
  return m;
}

bool spans_equal(const std::vector<Multivector>& a, const std::vector<Multivector>& b) {
  std::vector<Multivector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  const auto r = rank(vectors_as_columns(all));
  return r == rank(vectors_as_columns(a)) && r == rank(vectors_as_columns(b));
}

// The paper's chain as a factorization result of K (rightmost factor v1 acts on points).
FactorizationResult paper_chain() {
  auto vs = support::paper_vectors();
  std::reverse(vs.begin(), vs.end());
  FactorizationResult r;
  r.factors = vs;
  r.polarities = polarity_chain(vs, Action::points);
  return r;
}

}  // namespace

TEST_CASE("the worked descent passes through the printed intermediates") {
  const auto vs = support::paper_vectors();
  const Multivector g1 = paper_g() * vs[0];
  const Multivector g2 = g1 * vs[1];
  const Multivector g3 = g2 * vs[2];
  const Multivector g4 = g3 * vs[3];

  // Printed in the table convention; grade-homogeneous, so proportionality carries over.
  const Multivector printed4 = table_multivector({{"2356", 1}, {"1234", -12}, {"2345", 5}, {"1236", -4}, {"1235", 4},
                                                  {"1245", 1}, {"1345", 1}, {"2346", -8}, {"2456", 4}, {"3456", -1},
                                                  {"1246", 8}, {"1256", -3}, {"1346", -4}, {"1356", 1}, {"1456", 1}});
  CHECK(g2.max_grade() == 4);
  CHECK(support::proportional(grade_project(g2, 4), printed4));

  CHECK(spans_equal(opns(max_grade_part(g2)),
                    {kvec({1, 5, 0, 0, 0, 1}), kvec({4, 8, 0, 0, 1, 0}), kvec({1, 1, 0, 1, 0, 0}), kvec({1, 4, -1, 0, 0, 0})}));
  // The printed first basis vector reads e1+4e2-3e3; only e1+4e2-e3 lies in the space.
  CHECK(spans_equal(opns(max_grade_part(g3)),
                    {kvec({1, 4, -1, 0, 0, 0}), kvec({3, 7, 0, -1, 1, 0}), kvec({0, 4, 0, -1, 0, 1})}));
  CHECK_FALSE(outer_product(kvec({1, 4, -3, 0, 0, 0}), grade_project(g3, 3)).is_zero());
  CHECK(vs[3] == kvec({0, 4, 0, -1, 0, 1}) - kvec({1, 4, -1, 0, 0, 0}));
  CHECK(spans_equal(opns(max_grade_part(g4)), {kvec({2, 3, 1, -1, 1, 0}), kvec({0, 4, 0, -1, 0, 1})}));
  CHECK(quadratic(kvec({0, 4, 0, -1, 0, 1})).is_zero());
  CHECK(support::proportional(g4 * vs[4], vs[5]));
}

TEST_CASE("choosing non-null vectors") {
  const Blade top = max_grade_part(paper_g() * support::paper_vectors()[0]);
  const auto space = opns(top);
  const Multivector pick = choose_nonnull_vector(space);
  CHECK_FALSE(quadratic(pick).is_zero());
  CHECK(outer_product(pick, top.value()).is_zero());
  const Multivector v2 = support::paper_vectors()[1];
  CHECK(quadratic(v2) == Scalar(4));
  CHECK(outer_product(v2, top.value()).is_zero());

  // Step 4: the printed v4 lies in NO([g3]_3) and is non-null.
  const auto vs = support::paper_vectors();
  const Multivector g3 = paper_g() * vs[0] * vs[1] * vs[2];
  CHECK(outer_product(vs[3], grade_project(g3, 3)).is_zero());
  CHECK_FALSE(quadratic(vs[3]).is_zero());

  // A span whose basis is null but whose sums are not.
  const std::vector<Multivector> iso{kvec({1, 0, 0, 0, 0, 0}), kvec({0, 0, 0, 1, 0, 0})};
  CHECK(choose_nonnull_vector(iso) == kvec({1, 0, 0, 1, 0, 0}));
  CHECK_THROWS_AS(choose_nonnull_vector(std::vector<Multivector>{kvec({1, 0, 0, 0, 0, 0})}), NoNonNullVector);
  CHECK_THROWS_AS(choose_nonnull_vector(std::vector<Multivector>{kvec({1, 0, 0, 0, 0, 0}), kvec({0, 1, 0, 0, 0, 0})}),
                  NoNonNullVector);
  CHECK(nonnull_candidates(space, 3).size() == 3);
}

TEST_CASE("factorize_versor examples") {
  const auto f = factorize_versor(Versor(paper_g()));
  CHECK(f.size() == 6);
  CHECK(support::proportional(product_of(K(), f), paper_g()));

  CHECK(factorize_versor(Versor(Multivector::scalar(K(), 3))).empty());

  const Multivector g = kvec({1, 0, 0, 1, 0, 0}) * kvec({0, 4, 0, 0, 1, 0});
  const auto two = factorize_versor(Versor(g));
  CHECK(two.size() == 2);
  CHECK(support::proportional(product_of(K(), two), g));

  const Multivector iso = Multivector::scalar(K(), 1) + kblade("12");
  const auto four = factorize_versor(Versor(iso));
  CHECK(four.size() <= 6);
  CHECK(four.size() % 2 == 0);
  CHECK(support::proportional(product_of(K(), four), iso));

  CHECK_THROWS_AS(factorize_versor(Versor(kvec({1, 0, 0, 0, 0, 0}))), NullVersor);
}

TEST_CASE("random versors factorize within six vectors") {
  support::Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = static_cast<int>(rng.integer(1, 6));
    const Versor g = rng.versor(K(), k);
    if (norm(g).is_zero()) continue;
    const auto f = factorize_versor(g);
    CHECK(f.size() <= 6);
    CHECK(f.size() % 2 == static_cast<std::size_t>(k % 2));
    CHECK(support::proportional(product_of(K(), f), g.value()));
    for (const auto& v : f) CHECK_FALSE(quadratic(v).is_zero());
  }
}

TEST_CASE("the paper's chain verifies against K") {
  auto r = paper_chain();
  const auto ms = support::paper_matrices();
  REQUIRE(r.polarities.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(r.polarities[i].matrix == ms[5 - i]);
  CHECK(r.polarities.back().action == Action::points);
  CHECK(r.polarities.front().action == Action::planes);
  CHECK(chain_product(r.polarities) == Scalar(-4) * support::paper_k());
  CHECK(verify_factorization(r, {support::paper_k()}));
  CHECK(r.scale == Scalar(-4));
  CHECK(r.residual.is_zero());

  auto swapped = paper_chain();
  std::swap(swapped.polarities[1], swapped.polarities[3]);
  swapped.factors.clear();
  CHECK_FALSE(verify_factorization(swapped, {support::paper_k()}));
  CHECK_FALSE(swapped.residual.is_zero());

  auto perturbed = paper_chain();
  perturbed.polarities[2].matrix(0, 1) += Scalar(1);
  perturbed.polarities[2].matrix(1, 0) -= Scalar(1);
  perturbed.factors.clear();
  CHECK_FALSE(verify_factorization(perturbed, {support::paper_k()}));

  auto wrong_action = paper_chain();
  CHECK_FALSE(verify_factorization(wrong_action, {support::paper_k(), TransformKind::collineation, Action::planes}));

  FactorizationResult empty;
  CHECK(verify_factorization(empty, {Matrix::identity(4)}));
  CHECK(empty.scale == Scalar(1));
  CHECK_FALSE(verify_factorization(empty, {support::paper_k()}));
}

TEST_CASE("factorize_matrix examples") {
  const auto r = factorize_matrix({support::paper_k()});
  CHECK(r.verified);
  CHECK(r.polarities.size() <= 6);
  CHECK(r.polarities.size() % 2 == 0);
  CHECK_FALSE(r.scale.is_zero());
  for (const auto& p : r.polarities) CHECK(p.matrix.is_skew_symmetric());
  CHECK(chain_product(r.polarities) == r.scale * support::paper_k());

  const auto id = factorize_matrix({Matrix::identity(4)});
  CHECK(id.verified);
  CHECK(id.factors.empty());
  CHECK(id.scale == Scalar(1));

  const Matrix s{{0, 1, 2, 0}, {-1, 0, 0, 3}, {-2, 0, 0, 1}, {0, -3, -1, 0}};
  REQUIRE_FALSE(determinant(s).is_zero());
  const auto one = factorize_matrix({s, TransformKind::correlation, Action::points});
  CHECK(one.verified);
  REQUIRE(one.polarities.size() == 1);
  CHECK(support::proportional(one.polarities[0].matrix, s));
  CHECK(one.scale * s == one.polarities[0].matrix);

  CHECK_THROWS_AS(factorize_matrix({support::paper_k_prime()}), ComplexRequired);
  const auto c = factorize_matrix({support::paper_k_prime()}, ScalarMode::complex);
  CHECK(c.verified);
  CHECK(c.polarities.size() <= 6);
  CHECK(chain_product(c.polarities) == c.scale * support::paper_k_prime());
}

TEST_CASE("random liftable transforms factorize and verify") {
  support::Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = rng.liftable_matrix();
    const auto kind = trial % 2 == 0 ? TransformKind::collineation : TransformKind::correlation;
    const auto action = trial % 4 < 2 ? Action::points : Action::planes;
    const ProjTransform4 t{m, kind, action};
    const auto r = factorize_matrix(t);
    CHECK(r.verified);
    CHECK(r.polarities.size() <= 6);
    CHECK((r.polarities.size() % 2 == 0) == (kind == TransformKind::collineation));
    for (const auto& p : r.polarities) CHECK(p.matrix.is_skew_symmetric());
    CHECK(verify_factorization(r, t));
    // Stable under re-serialization.
    const auto back = io::factorization_from_json(io::parse(io::to_json(r).dump()));
    CHECK(verify_factorization(back, t));
  }
}
