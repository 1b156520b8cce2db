#pragma once

#include <array>
#include <variant>
#include <vector>

#include "nullpol/multivector.hpp"

// Cl(4,2) model of Lie sphere geometry for n = 3. Generators e1..e6 carry the
// coordinates x0..x5 with form diag(-1, 1, 1, 1, 1, -1).
namespace nullpol::lie {

using Vec3 = std::array<Scalar, 3>;

struct Point {
  Vec3 u;
};
struct Infinity {};
struct Sphere {
  Vec3 center;
  /// Signed radius; the sign is the orientation.
  Scalar radius;
};
/// Oriented plane u . normal = offset. The normal need not be a unit vector,
/// but its length must be rational to encode exactly.
struct Plane {
  Vec3 normal;
  Scalar offset;
};

using LieElement = std::variant<Point, Infinity, Sphere, Plane>;

struct LieCoordinate {
  std::array<Scalar, 6> coords;

  Multivector to_vector() const;
  static LieCoordinate from_vector(const Multivector& v);
};

const AlgebraPtr& algebra();

/// l(a, b) = -a0 b0 + a1 b1 + a2 b2 + a3 b3 + a4 b4 - a5 b5.
Scalar lie_form(const LieCoordinate& a, const LieCoordinate& b);
bool on_quadric(const LieCoordinate& c);

/// Lie coordinates of an element. Throws OffQuadric for a plane whose normal
/// has irrational length.
LieCoordinate lie_encode(const LieElement& e);
/// Euclidean element of a quadric point. Decoded planes have unit normals.
/// Throws OffQuadric.
LieElement lie_decode(const LieCoordinate& c);

/// Homogeneous equality of two coordinate tuples.
bool proportional(const LieCoordinate& a, const LieCoordinate& b);

/// l(s1, s2) == 0. Throws OffQuadric.
bool oriented_contact(const LieCoordinate& s1, const LieCoordinate& s2);

/// alpha(a) x a*. Throws NullVersor for a null a, AlgebraMismatch otherwise.
Multivector lie_inversion_sandwich(const Multivector& a, const Multivector& x);

/// a1 + a2 for a vector a (coefficients of e1 and e2).
Scalar laguerre_defect(const Multivector& a);
bool is_laguerre(const Multivector& a);

/// Grade descent in Cl(4,2); at most six factors.
std::vector<Multivector> factorize_lie_versor(const Versor& g);

}  // namespace nullpol::lie
