#include "nullpol/lie.hpp"

#include <algorithm>

#include "nullpol/errors.hpp"
#include "nullpol/factorize.hpp"

namespace nullpol::lie {
namespace {

Scalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 scaled(const LieCoordinate& c, const Scalar& inv) { return {c.coords[2] * inv, c.coords[3] * inv, c.coords[4] * inv}; }

void require_vector_of_lie(const Multivector& v) {
  if (!v.algebra()->same_as(*algebra())) throw AlgebraMismatch();
}

}  // namespace

const AlgebraPtr& algebra() {
  static const AlgebraPtr alg = [] {
    Matrix form(6, 6);
    const std::array<int, 6> d{-1, 1, 1, 1, 1, -1};
    for (std::size_t i = 0; i < 6; ++i) form(i, i) = d[i];
    return Algebra::create(form);
  }();
  return alg;
}

Multivector LieCoordinate::to_vector() const { return Multivector::vector(algebra(), coords); }

LieCoordinate LieCoordinate::from_vector(const Multivector& v) {
  require_vector_of_lie(v);
  const auto c = v.vector_coords();
  LieCoordinate out;
  std::copy(c.begin(), c.end(), out.coords.begin());
  return out;
}

Scalar lie_form(const LieCoordinate& a, const LieCoordinate& b) {
  const auto& x = a.coords;
  const auto& y = b.coords;
  return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3] + x[4] * y[4] - x[5] * y[5];
}

bool on_quadric(const LieCoordinate& c) { return lie_form(c, c).is_zero(); }

LieCoordinate lie_encode(const LieElement& e) {
  const Scalar half = Scalar::fraction(1, 2);
  return std::visit(
      [&](const auto& v) -> LieCoordinate {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Point>) {
          const Scalar uu = dot(v.u, v.u);
          return {{half * (Scalar(1) + uu), half * (Scalar(1) - uu), v.u[0], v.u[1], v.u[2], 0}};
        } else if constexpr (std::is_same_v<T, Infinity>) {
          return {{1, -1, 0, 0, 0, 0}};
        } else if constexpr (std::is_same_v<T, Sphere>) {
          const Scalar pp = dot(v.center, v.center);
          const Scalar rr = v.radius * v.radius;
          return {{half * (Scalar(1) + pp - rr), half * (Scalar(1) - pp + rr), v.center[0], v.center[1],
                   v.center[2], v.radius}};
        } else {
          const Scalar nn = dot(v.normal, v.normal);
          if (nn.is_zero()) throw OffQuadric("plane normal is zero");
          const auto len = rational_sqrt(nn.real());
          if (!len) throw OffQuadric("plane normal has irrational length; no exact Lie coordinates");
          // (h, -h, N, 1) for the unit normal N/|N|, scaled by |N|.
          return {{v.offset, -v.offset, v.normal[0], v.normal[1], v.normal[2], Scalar(*len)}};
        }
      },
      e);
}

LieElement lie_decode(const LieCoordinate& c) {
  if (!on_quadric(c)) throw OffQuadric("coordinates are not on Lie's quadric");
  const auto& x = c.coords;
  const Scalar s = x[0] + x[1];
  if (s.is_zero()) {
    if (x[5].is_zero()) return Infinity{};
    const Scalar inv = x[5].inverse();
    return Plane{scaled(c, inv), x[0] * inv};
  }
  const Scalar inv = s.inverse();
  if (x[5].is_zero()) return Point{scaled(c, inv)};
  return Sphere{scaled(c, inv), x[5] * inv};
}

bool proportional(const LieCoordinate& a, const LieCoordinate& b) {
  return proportionality(std::span<const Scalar>(a.coords), std::span<const Scalar>(b.coords)).has_value();
}

bool oriented_contact(const LieCoordinate& s1, const LieCoordinate& s2) {
  if (!on_quadric(s1) || !on_quadric(s2)) throw OffQuadric("oriented contact needs points of Lie's quadric");
  return lie_form(s1, s2).is_zero();
}

Multivector lie_inversion_sandwich(const Multivector& a, const Multivector& x) {
  require_vector_of_lie(a);
  require_vector_of_lie(x);
  if (quadratic(a).is_zero()) throw NullVersor("Lie inversions need a non-null vector");
  return sandwich(a, x);
}

Scalar laguerre_defect(const Multivector& a) {
  require_vector_of_lie(a);
  return a.coeff(0b1) + a.coeff(0b10);
}

bool is_laguerre(const Multivector& a) { return laguerre_defect(a).is_zero(); }

std::vector<Multivector> factorize_lie_versor(const Versor& g) {
  require_vector_of_lie(g.value());
  return factorize_versor(g);
}

}  // namespace nullpol::lie
