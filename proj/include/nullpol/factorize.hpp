#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nullpol/klein.hpp"

namespace nullpol {

/// Non-null vectors of span(space) in probe order: basis vectors, pairwise
/// sums, then three-term combinations with coefficients in {1, -1, 2}. At most
/// `limit` are returned.
std::vector<Multivector> nonnull_candidates(std::span<const Multivector> space, std::size_t limit);

/// First probe of nonnull_candidates. Throws NoNonNullVector.
Multivector choose_nonnull_vector(std::span<const Multivector> space);

/// Vectors v_k, ..., v_1 (leftmost first) with v_k ... v_1 proportional to g,
/// found by the descent g <- g v with v non-null in NO([g]_max). When the
/// OPNS is totally isotropic, two extra vectors are spent on a detour; the
/// search backtracks over probe choices to stay within dim factors.
/// Throws NullVersor for N(g) = 0 and NotAVersor when vv* is not scalar.
std::vector<Multivector> factorize_versor(const Versor& g);

}  // namespace nullpol

namespace nullpol::klein {

struct FactorizationResult {
  /// Leftmost first.
  std::vector<Multivector> factors;
  std::vector<NullPolarity> polarities;
  Scalar scale = 1;
  /// Polarity product minus scale * t.matrix.
  Matrix residual;
  bool verified = false;
};

/// One null polarity per factor. The rightmost factor acts with `innermost`,
/// and actions alternate outwards.
std::vector<NullPolarity> polarity_chain(std::span<const Multivector> factors, Action innermost);

/// Product of the polarity matrices, left to right (identity when empty).
Matrix chain_product(std::span<const NullPolarity> chain);

/// Lift, descend, map each factor to its polarity and verify exactly.
/// Throws SingularTransform, ComplexRequired, NotLiftable.
FactorizationResult factorize_matrix(const ProjTransform4& t, ScalarMode mode = ScalarMode::rational);

/// Recomputes scale and residual of r against t. True iff the chain product
/// equals scale * t.matrix exactly with scale != 0, every polarity is skew,
/// actions alternate ending in t.action, the factor count is at most six with
/// the parity of t.kind, and factors (when present) match their polarities.
bool verify_factorization(FactorizationResult& r, const ProjTransform4& t);
bool verify_factorization(const FactorizationResult& r, const ProjTransform4& t);

}  // namespace nullpol::klein
